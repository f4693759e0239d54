#include "lmflat/localmodel.hpp"

#include "lmflat/linalg.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace lmflat::local {

using poly::PrimeField;
using Element = PrimeField::Element;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

std::string to_string(Fibre f) {
  switch (f) {
  case Fibre::Variable: return "variable";
  case Fibre::Special: return "special";
  case Fibre::Generic: return "generic";
  }
  return "?";
}

Fibre parse_fibre(std::string_view tag) {
  if (tag == "variable" || tag == "pi") return Fibre::Variable;
  if (tag == "special" || tag == "0") return Fibre::Special;
  if (tag == "generic" || tag == "1") return Fibre::Generic;
  throw std::invalid_argument("unknown fibre '" + std::string(tag) + "'");
}

std::string IdealPresentation::to_text() const {
  std::ostringstream os;
  os << "# " << name << "\n# variables:";
  for (const auto& v : ring->names()) os << ' ' << v;
  os << "\n";
  for (std::size_t k = 0; k < generators.size(); ++k)
    os << generators[k].to_text() << "    # " << notes[k] << "\n";
  return os.str();
}

nlohmann::json IdealPresentation::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t k = 0; k < generators.size(); ++k)
    gens.push_back({{"text", generators[k].to_text()}, {"terms", generators[k].to_json()},
                    {"note", notes[k]}});
  return {{"name", name},
          {"prime", ring->field().modulus()},
          {"order", poly::to_string(ring->order())},
          {"variables", ring->names()},
          {"generators", gens}};
}

namespace {

PolyMatrix zeros(const RingPtr& R, int rows, int cols) {
  return PolyMatrix(rows, std::vector<Polynomial>(cols, Polynomial(R)));
}

PolyMatrix mul(const RingPtr& R, const PolyMatrix& X, const PolyMatrix& Y) {
  const int n = static_cast<int>(X.size());
  const int k = n ? static_cast<int>(X[0].size()) : 0;
  const int m = Y.empty() ? 0 : static_cast<int>(Y[0].size());
  PolyMatrix Z = zeros(R, n, m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < k; ++c)
        if (!X[a][c].is_zero() && !Y[c][b].is_zero()) Z[a][b] += X[a][c] * Y[c][b];
  return Z;
}

PolyMatrix transpose(const RingPtr& R, const PolyMatrix& X) {
  const int n = static_cast<int>(X.size());
  const int m = n ? static_cast<int>(X[0].size()) : 0;
  PolyMatrix T = zeros(R, m, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b) T[b][a] = X[a][b];
  return T;
}

PolyMatrix block(const PolyMatrix& X, int r0, int rows, int c0, int cols) {
  PolyMatrix out;
  for (int a = 0; a < rows; ++a)
    out.emplace_back(X[r0 + a].begin() + c0, X[r0 + a].begin() + c0 + cols);
  return out;
}

// Standard symplectic form of size n = 2m: [[0, J], [-J, 0]], J antidiagonal.
std::vector<std::vector<int>> symplectic_form(int n) {
  const int m = n / 2;
  std::vector<std::vector<int>> J(n, std::vector<int>(n, 0));
  for (int p = 0; p < m; ++p) {
    J[p][n - 1 - p] = 1;
    J[n - 1 - p][p] = -1;
  }
  return J;
}

PolyMatrix as_poly(const RingPtr& R, const std::vector<std::vector<int>>& M) {
  PolyMatrix out = zeros(R, static_cast<int>(M.size()), static_cast<int>(M.size()));
  for (std::size_t a = 0; a < M.size(); ++a)
    for (std::size_t b = 0; b < M.size(); ++b)
      if (M[a][b] != 0) out[a][b] = Polynomial::constant(R, M[a][b]);
  return out;
}

std::string entry_name(const std::string& what, int a, int b) {
  return what + "[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]";
}

void push_entries(IdealPresentation& P, const PolyMatrix& M, const std::string& what) {
  for (std::size_t a = 0; a < M.size(); ++a)
    for (std::size_t b = 0; b < M[a].size(); ++b)
      if (!M[a][b].is_zero()) {
        P.generators.push_back(M[a][b]);
        P.notes.push_back(entry_name(what, static_cast<int>(a), static_cast<int>(b)));
      }
}

std::string var_name(int mu, int nu) { return "a_" + std::to_string(mu) + "_" + std::to_string(nu); }

// The matrices A, B of a chart over a ring holding some of the a-variables;
// absent variables read as zero.
struct Chart {
  ChartLayout L;
  RingPtr ring;
  Polynomial pi;
  PolyMatrix A, B;

  PolyMatrix A4() const { return block(A, 0, L.t, 0, L.t); }
  PolyMatrix A3() const { return block(A, 0, L.t, L.t, L.s); }
  PolyMatrix A1() const { return block(A, L.t, L.s, 0, L.t); }
  PolyMatrix A2() const { return block(A, L.t, L.s, L.t, L.s); }
  PolyMatrix B2() const { return block(B, 0, L.s, 0, L.s); }
  PolyMatrix B3() const { return block(B, 0, L.s, L.s, L.t); }
  PolyMatrix B1() const { return block(B, L.s, L.t, 0, L.s); }
  PolyMatrix B4() const { return block(B, L.s, L.t, L.s, L.t); }

  PolyMatrix pi_identity(int n) const {
    PolyMatrix I = zeros(ring, n, n);
    for (int a = 0; a < n; ++a) I[a][a] = pi;
    return I;
  }
};

PolyMatrix combine(const PolyMatrix& X, const PolyMatrix& Y, int sign) {
  PolyMatrix Z = X;
  for (std::size_t a = 0; a < X.size(); ++a)
    for (std::size_t b = 0; b < X[a].size(); ++b)
      Z[a][b] = sign > 0 ? X[a][b] + Y[a][b] : X[a][b] - Y[a][b];
  return Z;
}

Chart make_chart(int r, int i, Fibre fibre, std::uint32_t prime, bool block_only) {
  Chart C{chart_layout(r, i), nullptr, Polynomial(nullptr), {}, {}};
  const auto& L = C.L;
  auto in_ring = [&](int mu, int nu) { return !block_only || (mu <= L.t && nu <= L.t); };
  std::vector<std::string> names;
  for (int mu = 1; mu <= r; ++mu)
    for (int nu = 1; nu <= r; ++nu)
      if (in_ring(mu, nu)) names.push_back(var_name(mu, nu));
  if (fibre == Fibre::Variable) names.push_back("pi");
  C.ring = poly::make_ring(names, prime);
  C.pi = fibre == Fibre::Variable ? Polynomial::variable(C.ring, "pi")
                                  : Polynomial::constant(C.ring, fibre == Fibre::Generic ? 1 : 0);
  C.A = zeros(C.ring, r, r);
  for (int mu = 1; mu <= r; ++mu)
    for (int nu = 1; nu <= r; ++nu)
      if (in_ring(mu, nu)) C.A[mu - 1][nu - 1] = Polynomial::variable(C.ring, var_name(mu, nu));
  C.B = zeros(C.ring, r, r);
  for (int mu = 1; mu <= r; ++mu)
    for (int nu = 1; nu <= r; ++nu) {
      const Polynomial& a = C.A[r - nu][r - mu];
      C.B[mu - 1][nu - 1] = epsilon(L, mu, nu) > 0 ? a : -a;
    }
  return C;
}

std::string chart_title(const ChartLayout& L, Fibre fibre, const char* what) {
  std::ostringstream os;
  os << what << " r=" << L.r << " i=" << L.i;
  if (L.h != L.i) os << " (layout of i=" << L.h << ")";
  os << " fibre=" << to_string(fibre);
  return os.str();
}

} // namespace

IdealPresentation ring_R(int m, std::uint32_t prime) {
  if (m < 1) throw std::invalid_argument("ring_R needs m >= 1");
  const int n = 2 * m;
  std::vector<std::string> names;
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = 1; nu <= n; ++nu) names.push_back("c_" + std::to_string(mu) + "_" + std::to_string(nu));
  RingPtr R = poly::make_ring(names, prime);
  PolyMatrix C = zeros(R, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) C[a][b] = Polynomial::variable(R, a * n + b);
  PolyMatrix J = as_poly(R, symplectic_form(n));
  PolyMatrix Ct = transpose(R, C);
  IdealPresentation P{"R_" + std::to_string(m), R, {}, {}};
  for (const auto& [M, what] : {std::pair{mul(R, mul(R, C, J), Ct), std::string("C*J*C^t")},
                                std::pair{mul(R, mul(R, Ct, J), C), std::string("C^t*J*C")}})
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!M[a][b].is_zero()) {
          P.generators.push_back(M[a][b]);
          P.notes.push_back(entry_name(what, a, b));
        }
  return P;
}

ChartLayout chart_layout(int r, int i) {
  if (r < 2 || i < 1 || i > r - 1)
    throw std::out_of_range("chart index must satisfy 1 <= i <= r-1");
  ChartLayout L;
  L.r = r;
  L.i = i;
  L.h = std::max(i, r - i);
  L.s = 2 * L.h - r;
  L.t = 2 * (r - L.h);
  return L;
}

int epsilon(const ChartLayout& L, int mu, int nu) {
  bool low = mu <= L.h && nu <= L.h;
  bool high = mu >= L.h + 1 && nu >= L.h + 1;
  return low || high ? 1 : -1;
}

IdealPresentation chart_ideal(int r, int i, Fibre fibre, std::uint32_t prime) {
  Chart C = make_chart(r, i, fibre, prime, false);
  IdealPresentation P{chart_title(C.L, fibre, "chart"), C.ring, {}, {}};
  const auto A4 = C.A4(), B4 = C.B4();
  push_entries(P, combine(mul(C.ring, B4, A4), C.pi_identity(C.L.t), -1), "B4*A4 - pi");
  push_entries(P, combine(mul(C.ring, A4, B4), C.pi_identity(C.L.t), -1), "A4*B4 - pi");
  push_entries(P, combine(combine(C.B2(), C.A2(), -1), mul(C.ring, C.B3(), C.A3()), 1),
               "B2 - A2 + B3*A3");
  push_entries(P, combine(C.A1(), mul(C.ring, C.B3(), A4), -1), "A1 - B3*A4");
  return P;
}

IdealPresentation redundant_equations(int r, int i, std::uint32_t prime) {
  Chart C = make_chart(r, i, Fibre::Variable, prime, false);
  IdealPresentation P{chart_title(C.L, Fibre::Variable, "implied equations"), C.ring, {}, {}};
  const RingPtr& R = C.ring;
  auto scaled_pi = [&](const PolyMatrix& X) {
    PolyMatrix Y = X;
    for (auto& row : Y)
      for (auto& e : row) e = e * C.pi;
    return Y;
  };
  push_entries(P, combine(C.B1(), mul(R, C.B4(), C.A3()), 1), "B1 + B4*A3");
  push_entries(P, combine(combine(scaled_pi(C.B2()), mul(R, C.A1(), C.B1()), -1), scaled_pi(C.A2()), -1),
               "pi*B2 - A1*B1 - pi*A2");
  push_entries(P, combine(scaled_pi(C.B3()), mul(R, C.A1(), C.B4()), -1), "pi*B3 - A1*B4");
  push_entries(P, combine(scaled_pi(C.A3()), mul(R, C.A4(), C.B1()), 1), "pi*A3 + A4*B1");
  return P;
}

IdealPresentation singular_block(int r, int i, Fibre fibre, std::uint32_t prime) {
  Chart C = make_chart(r, i, fibre, prime, true);
  IdealPresentation P{chart_title(C.L, fibre, "singular block"), C.ring, {}, {}};
  const auto A4 = C.A4(), B4 = C.B4();
  push_entries(P, combine(mul(C.ring, B4, A4), C.pi_identity(C.L.t), -1), "B4*A4 - pi");
  push_entries(P, combine(mul(C.ring, A4, B4), C.pi_identity(C.L.t), -1), "A4*B4 - pi");
  return P;
}

IdealPresentation grassmannian_chart(int r, int index, std::uint32_t prime) {
  if (r < 1 || (index != 0 && index != r))
    throw std::out_of_range("Grassmannian chart index must be 0 or r");
  std::vector<std::string> names;
  for (int mu = 1; mu <= r; ++mu)
    for (int nu = 1; nu <= r; ++nu) names.push_back(var_name(mu, nu));
  RingPtr R = poly::make_ring(names, prime);
  IdealPresentation P{"isotropic Grassmannian chart r=" + std::to_string(r) +
                          " index=" + std::to_string(index),
                      R, {}, {}};
  for (int mu = 1; mu <= r; ++mu)
    for (int nu = 1; nu <= r; ++nu) {
      int pm = r - nu + 1, pn = r - mu + 1;
      if ((pm - 1) * r + pn <= (mu - 1) * r + nu) continue;
      P.generators.push_back(Polynomial::variable(R, var_name(mu, nu)) -
                             Polynomial::variable(R, var_name(pm, pn)));
      P.notes.push_back(var_name(mu, nu) + " = " + var_name(pm, pn));
    }
  return P;
}

PolyMatrix symplectic_adjoint(const PolyMatrix& A) {
  if (A.empty()) return A;
  const RingPtr& R = A[0][0].ring();
  const int n = static_cast<int>(A.size());
  if (n % 2 != 0) throw std::invalid_argument("symplectic adjoint needs even size");
  PolyMatrix J = as_poly(R, symplectic_form(n));
  PolyMatrix M = mul(R, mul(R, J, transpose(R, A)), J);
  for (auto& row : M)
    for (auto& e : row) e = -e;
  return M;
}

bool FibreReport::dimensions_agree() const {
  return dim_special == dim_generic && dim_special == layout.chart_dimension() &&
         block_dim_special == block_dim_generic && block_dim_special == layout.block_dimension();
}

nlohmann::ordered_json FibreReport::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = layout.r;
  j["i"] = layout.i;
  j["chart_dimension"] = layout.chart_dimension();
  j["dim_special"] = dim_special;
  j["dim_generic"] = dim_generic;
  j["affine_factor"] = layout.affine_factor();
  j["affine_factor_alt"] = affine_factor_alt;
  j["block_dimension"] = layout.block_dimension();
  j["block_dim_special"] = block_dim_special;
  j["block_dim_generic"] = block_dim_generic;
  j["hilbert_special"] = hilbert_special;
  return j;
}

namespace {

int dimension_of(const IdealPresentation& P) {
  return poly::krull_dimension(poly::buchberger(P.ring, P.generators));
}

} // namespace

FibreReport fibre_report(int r, int i, unsigned max_degree, std::uint32_t prime) {
  FibreReport rep;
  rep.layout = chart_layout(r, i);
  auto chart = chart_ideal(r, i, Fibre::Special, prime);
  auto special = poly::buchberger(chart.ring, chart.generators);
  rep.dim_special = poly::krull_dimension(special);
  rep.dim_generic = dimension_of(chart_ideal(r, i, Fibre::Generic, prime));
  rep.block_dim_special = dimension_of(singular_block(r, i, Fibre::Special, prime));
  rep.block_dim_generic = dimension_of(singular_block(r, i, Fibre::Generic, prime));
  const int d = 2 * i - r;
  rep.affine_factor_alt = 2 * (i - r) * d + d * (d + 1) / 2;
  for (unsigned k = 0; k <= max_degree; ++k) rep.hilbert_special.push_back(poly::hilbert_function(special, k));
  return rep;
}

FibreReport grassmannian_fibre_report(int r, int index, unsigned max_degree, std::uint32_t prime) {
  FibreReport rep;
  rep.layout.r = r;
  rep.layout.i = index;
  rep.layout.h = r;
  rep.layout.s = r;
  rep.layout.t = 0;
  // The chart does not involve pi: both fibres are the same linear space.
  auto chart = grassmannian_chart(r, index, prime);
  auto G = poly::buchberger(chart.ring, chart.generators);
  rep.dim_special = rep.dim_generic = poly::krull_dimension(G);
  rep.block_dim_special = rep.block_dim_generic = 0;
  rep.affine_factor_alt = rep.layout.affine_factor();
  for (unsigned k = 0; k <= max_degree; ++k) rep.hilbert_special.push_back(poly::hilbert_function(G, k));
  return rep;
}

nlohmann::ordered_json SampleReport::to_json() const {
  nlohmann::ordered_json j;
  j["trials"] = trials;
  j["vanishing"] = vanishing;
  j["corank_ok"] = corank_ok;
  j["expected_corank"] = expected_corank;
  if (!failures.empty()) j["failures"] = failures;
  return j;
}

namespace {

using Dense = std::vector<std::vector<Element>>;

Dense dense_mul(const PrimeField& F, const Dense& X, const Dense& Y) {
  const std::size_t n = X.size(), k = Y.size(), m = k ? Y[0].size() : 0;
  Dense Z(n, std::vector<Element>(m, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < k; ++c)
      if (X[a][c] != 0)
        for (std::size_t b = 0; b < m; ++b) Z[a][b] = F.add(Z[a][b], F.mul(X[a][c], Y[c][b]));
  return Z;
}

// Coordinates (row-major a_{mu nu}) of a point of the generic fibre.
std::vector<Element> solve_point(const PrimeField& F, const ChartLayout& L, const Dense& A4,
                                 const Dense& A3, const Dense& A2upper) {
  const int r = L.r, s = L.s, t = L.t;
  Dense A(r, std::vector<Element>(r, 0));
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) A[a][b] = A4[a][b];
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < s; ++b) A[a][t + b] = A3[a][b];
  // B3 reads only A3.
  Dense B3(s, std::vector<Element>(t, 0));
  for (int mu = 1; mu <= s; ++mu)
    for (int nu = s + 1; nu <= r; ++nu) {
      Element v = A[r - nu][r - mu];
      B3[mu - 1][nu - s - 1] = epsilon(L, mu, nu) > 0 ? v : F.neg(v);
    }
  Dense BA = dense_mul(F, B3, A3);
  for (int p = 0; p < s; ++p)
    for (int q = 0; q < s; ++q)
      if (p + q <= s - 1) A[t + p][t + q] = A2upper[p][q];
  // B2 is the antitranspose of A2, so B2 = A2 - B3 A3 fixes the entries
  // below the secondary diagonal.
  for (int p = 0; p < s; ++p)
    for (int q = 0; q < s; ++q)
      if (p + q > s - 1) A[t + p][t + q] = F.add(A[t + s - 1 - q][t + s - 1 - p], BA[p][q]);
  Dense A1 = dense_mul(F, B3, A4);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < t; ++b) A[t + a][b] = A1[a][b];
  std::vector<Element> x;
  for (const auto& row : A) x.insert(x.end(), row.begin(), row.end());
  return x;
}

Dense identity(int n) {
  Dense I(n, std::vector<Element>(n, 0));
  for (int a = 0; a < n; ++a) I[a][a] = 1;
  return I;
}

} // namespace

std::vector<Element> base_point(int r, int i, std::uint32_t prime) {
  PrimeField F(prime);
  ChartLayout L = chart_layout(r, i);
  Dense A3(L.t, std::vector<Element>(L.s, 0));
  Dense A2(L.s, std::vector<Element>(L.s, 0));
  return solve_point(F, L, identity(L.t), A3, A2);
}

SampleReport generic_point_sample(int r, int i, int trials, std::uint64_t seed, std::uint32_t prime,
                                  std::optional<std::size_t> corrupt, int transvections) {
  PrimeField F(prime);
  ChartLayout L = chart_layout(r, i);
  IdealPresentation P = chart_ideal(r, i, Fibre::Generic, prime);
  if (corrupt) {
    if (*corrupt >= P.generators.size()) throw std::out_of_range("corrupt index out of range");
    P.generators[*corrupt] = P.generators[*corrupt] + Polynomial::constant(P.ring, 1);
  }
  const std::size_t nv = P.ring->num_vars();
  std::vector<std::vector<Polynomial>> jac(P.generators.size());
  for (std::size_t g = 0; g < P.generators.size(); ++g)
    for (std::size_t v = 0; v < nv; ++v) jac[g].push_back(P.generators[g].derivative(v));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> coin(0, prime - 1);
  const auto form = symplectic_form(L.t);

  SampleReport rep;
  rep.expected_corank = L.chart_dimension();
  for (int trial = 0; trial < trials; ++trial) {
    Dense A4 = identity(L.t);
    for (int k = 0; k < transvections; ++k) {
      std::vector<Element> v(L.t);
      for (auto& e : v) e = coin(rng);
      Element c = coin(rng);
      // T = 1 + c v v^t J
      std::vector<Element> vJ(L.t, 0);
      for (int b = 0; b < L.t; ++b)
        for (int a = 0; a < L.t; ++a)
          if (form[a][b] != 0) vJ[b] = F.add(vJ[b], F.mul(v[a], F.from_int(form[a][b])));
      Dense T = identity(L.t);
      for (int a = 0; a < L.t; ++a)
        for (int b = 0; b < L.t; ++b) T[a][b] = F.add(T[a][b], F.mul(c, F.mul(v[a], vJ[b])));
      A4 = dense_mul(F, T, A4);
    }
    Dense A3(L.t, std::vector<Element>(L.s));
    for (auto& row : A3)
      for (auto& e : row) e = coin(rng);
    Dense A2(L.s, std::vector<Element>(L.s, 0));
    for (int p = 0; p < L.s; ++p)
      for (int q = 0; q + p <= L.s - 1; ++q) A2[p][q] = coin(rng);
    auto x = solve_point(F, L, A4, A3, A2);

    ++rep.trials;
    bool vanish = true;
    for (std::size_t g = 0; g < P.generators.size() && vanish; ++g)
      if (P.generators[g].evaluate(x) != 0) {
        vanish = false;
        rep.failures.push_back("trial " + std::to_string(trial) + ": generator " + std::to_string(g) +
                               " (" + P.notes[g] + ") does not vanish");
      }
    if (vanish) ++rep.vanishing;

    std::vector<linalg::SparseRow> rows;
    for (const auto& grads : jac) {
      linalg::SparseRow row;
      for (std::size_t v = 0; v < nv; ++v)
        if (Element e = grads[v].evaluate(x); e != 0) row.emplace_back(v, e);
      rows.push_back(std::move(row));
    }
    int corank = static_cast<int>(nv - linalg::rank(F, rows));
    if (corank == rep.expected_corank) {
      ++rep.corank_ok;
    } else {
      rep.failures.push_back("trial " + std::to_string(trial) + ": Jacobian corank " +
                             std::to_string(corank));
    }
  }
  return rep;
}

} // namespace lmflat::local
