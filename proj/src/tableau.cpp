#include "lmflat/tableau.hpp"

#include "lmflat/linalg.hpp"
#include "lmflat/localmodel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lmflat::tableau {

bool set_leq(const IndexSet& A, const IndexSet& B) {
  if (A.size() < B.size()) return false;
  for (std::size_t m = 0; m < B.size(); ++m)
    if (A[m] > B[m]) return false;
  return true;
}

namespace {

IndexSet set_minus(const IndexSet& A, const IndexSet& B) {
  IndexSet out;
  std::set_difference(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
  return out;
}

IndexSet set_union(const IndexSet& A, const IndexSet& B) {
  IndexSet out;
  std::set_union(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
  return out;
}

IndexSet mirrored(const IndexSet& A, int n) {
  IndexSet out;
  for (int a : A) out.push_back(n + 1 - a);
  std::sort(out.begin(), out.end());
  return out;
}

bool valid_subset(const IndexSet& A, int r) {
  for (std::size_t k = 0; k < A.size(); ++k) {
    if (A[k] < 1 || A[k] > r) return false;
    if (k && A[k - 1] >= A[k]) return false;
  }
  return true;
}

} // namespace

Admissibility is_admissible(const IndexSet& I, const IndexSet& J, int r) {
  if (!valid_subset(I, r) || !valid_subset(J, r)) throw std::invalid_argument("index sets must be sorted subsets of {1..r}");
  Admissibility out;
  std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(out.Gamma));
  IndexSet used = set_union(I, J);
  std::vector<bool> taken(r + 1, false);
  for (int u : used) taken[u] = true;
  for (int g : out.Gamma) {
    int pick = g;
    while (pick <= r && taken[pick]) ++pick;
    if (pick > r) {
      out.Lambda.clear();
      return out;
    }
    taken[pick] = true;
    out.Lambda.push_back(pick);
  }
  out.admissible = true;
  return out;
}

std::optional<IndexData> make_index_data(const IndexSet& I, const IndexSet& J, int r) {
  Admissibility adm = is_admissible(I, J, r);
  if (!adm.admissible) return std::nullopt;
  const int n = 2 * r;
  IndexData D{I, J, adm.Gamma, adm.Lambda, {}, {}, {}};
  IndexSet It = set_minus(I, adm.Gamma);
  IndexSet Jt = set_minus(J, adm.Gamma);
  IndexSet Iprime = set_union(It, adm.Lambda);
  IndexSet Jprime = set_union(Jt, adm.Lambda);
  D.top = set_union(I, mirrored(Jprime, n));
  D.bottom = set_union(Iprime, mirrored(J, n));
  for (int j : Jt) D.expanded.push_back(n + 1 - j);
  for (auto it = It.rbegin(); it != It.rend(); ++it) D.expanded.push_back(*it);
  for (auto it = adm.Gamma.rbegin(); it != adm.Gamma.rend(); ++it) {
    D.expanded.push_back(n + 1 - *it);
    D.expanded.push_back(*it);
  }
  return D;
}

std::optional<IndexData> index_data_of(const IndexSet& indices, int r) {
  const int n = 2 * r;
  IndexSet I, J;
  for (int x : indices) {
    if (x < 1 || x > n) throw std::invalid_argument("index out of range");
    if (x <= r) I.push_back(x);
    else J.push_back(n + 1 - x);
  }
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  return make_index_data(I, J, r);
}

std::vector<int> MinorSpec::col_tuple() const {
  return {cols.expanded.rbegin(), cols.expanded.rend()};
}

std::string MinorSpec::to_string() const {
  std::ostringstream os;
  os << '(';
  auto rt = row_tuple();
  for (std::size_t k = 0; k < rt.size(); ++k) os << (k ? "," : "") << rt[k];
  os << '|';
  auto ct = col_tuple();
  for (std::size_t k = 0; k < ct.size(); ++k) os << (k ? "," : "") << ct[k];
  os << ')';
  return os.str();
}

nlohmann::ordered_json MinorSpec::to_json() const {
  nlohmann::ordered_json j;
  j["minor"] = to_string();
  j["rows_top"] = rows.top;
  j["rows_bottom"] = rows.bottom;
  j["cols_top"] = cols.top;
  j["cols_bottom"] = cols.bottom;
  return j;
}

MinorSpec f_minor(int r) {
  IndexSet all(r);
  std::iota(all.begin(), all.end(), 1);
  auto d = make_index_data(all, {}, r);
  return MinorSpec{r, *d, *d};
}

namespace {

// Admissible index data of size k, sorted by index set.
std::vector<IndexData> admissible_sides(int r, int k) {
  const int n = 2 * r;
  std::vector<IndexData> out;
  if (k < 1 || k > n) return out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    if (auto d = index_data_of(pick, r)) out.push_back(std::move(*d));
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int q = pos + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
  }
  return out;
}

} // namespace

std::vector<MinorSpec> enumerate_doubly_admissible(int r, int k) {
  if (r < 1) throw std::invalid_argument("rank must be positive");
  auto sides = admissible_sides(r, k);
  std::vector<MinorSpec> out;
  for (const auto& rows : sides)
    for (const auto& cols : sides) out.push_back(MinorSpec{r, rows, cols});
  return out;
}

bool tableau_leq(const MinorSpec& P, const MinorSpec& Q) {
  return set_leq(P.rows.bottom, Q.rows.top) && set_leq(P.cols.bottom, Q.cols.top);
}

MinorPoset::MinorPoset(int r) : r_(r) {
  for (int k = 1; k <= r; ++k) {
    auto m = enumerate_doubly_admissible(r, k);
    minors_.insert(minors_.end(), m.begin(), m.end());
  }
  const std::size_t N = minors_.size();
  leq_.assign(N * N, 0);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) leq_[a * N + b] = tableau_leq(minors_[a], minors_[b]);
}

std::uint64_t MinorPoset::count(unsigned d) const {
  const std::size_t N = minors_.size();
  // G[rem][a]: chains continuing after minor a with total size rem.
  std::vector<std::vector<std::uint64_t>> G(d + 1, std::vector<std::uint64_t>(N, 0));
  for (std::size_t a = 0; a < N; ++a) G[0][a] = 1;
  for (unsigned rem = 1; rem <= d; ++rem)
    for (std::size_t a = 0; a < N; ++a) {
      std::uint64_t sum = 0;
      for (std::size_t b = 0; b < N; ++b) {
        unsigned k = static_cast<unsigned>(minors_[b].size());
        if (k <= rem && leq(a, b)) sum += G[rem - k][b];
      }
      G[rem][a] = sum;
    }
  if (d == 0) return 1;
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < N; ++a) {
    unsigned k = static_cast<unsigned>(minors_[a].size());
    if (k <= d) total += G[d - k][a];
  }
  return total;
}

std::vector<std::vector<std::size_t>> MinorPoset::tableaux(unsigned d) const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self, unsigned rem) -> void {
    if (rem == 0) {
      out.push_back(chain);
      return;
    }
    for (std::size_t b = 0; b < minors_.size(); ++b) {
      unsigned k = static_cast<unsigned>(minors_[b].size());
      if (k > rem || (!chain.empty() && !leq(chain.back(), b))) continue;
      chain.push_back(b);
      self(self, rem - k);
      chain.pop_back();
    }
  };
  extend(extend, d);
  return out;
}

std::uint64_t count_tableaux(int r, unsigned d) { return MinorPoset(r).count(d); }

Polynomial evaluate(const MinorSpec& P, const RingPtr& ring) {
  const int n = 2 * P.r;
  if (ring->num_vars() != static_cast<std::size_t>(n * n))
    throw std::invalid_argument("ring does not match the 2r x 2r matrix");
  auto rows = P.row_tuple();
  auto cols = P.col_tuple();
  const int k = static_cast<int>(rows.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(ring);
  do {
    int inversions = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) inversions += perm[a] > perm[b];
    Polynomial term = Polynomial::constant(ring, inversions % 2 ? -1 : 1);
    for (int a = 0; a < k; ++a)
      term = term * Polynomial::variable(ring, static_cast<std::size_t>((rows[a] - 1) * n + cols[perm[a]] - 1));
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Polynomial phi(const std::vector<MinorSpec>& T, const RingPtr& ring) {
  Polynomial out = Polynomial::constant(ring, 1);
  for (const auto& P : T) out = out * evaluate(P, ring);
  return out;
}

nlohmann::ordered_json BasisReport::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = r;
  j["d"] = d;
  j["tableaux"] = tableaux;
  j["hilbert"] = hilbert;
  j["rank"] = rank;
  if (!dependent.empty()) j["dependent"] = dependent;
  return j;
}

BasisReport verify_basis(const MinorPoset& poset, const poly::GroebnerBasis& G, unsigned d) {
  BasisReport rep;
  rep.r = poset.rank();
  rep.d = d;
  rep.tableaux = poset.count(d);
  rep.hilbert = poly::hilbert_function(G, d);
  const RingPtr& ring = G.ring();
  const auto& minors = poset.minors();
  std::vector<Polynomial> evaluated;
  for (const auto& P : minors) evaluated.push_back(evaluate(P, ring));
  auto chains = poset.tableaux(d);
  std::vector<Polynomial> products;
  products.reserve(chains.size());
  for (const auto& chain : chains) {
    Polynomial p = Polynomial::constant(ring, 1);
    for (std::size_t a : chain) p = p * evaluated[a];
    products.push_back(std::move(p));
  }
  auto rows = poly::standard_coordinates(products, G, d);
  const poly::PrimeField& F = ring->field();
  rep.rank = linalg::rank(F, rows);
  if (rep.rank < chains.size()) {
    if (auto dep = linalg::find_dependency(F, rows)) {
      for (std::size_t idx : *dep) {
        std::string s;
        for (std::size_t a : chains[idx]) s += minors[a].to_string();
        rep.dependent.push_back(s.empty() ? "()" : s);
      }
    }
  }
  return rep;
}

BasisReport verify_basis(int r, unsigned d, std::uint32_t prime) {
  MinorPoset poset(r);
  auto R = local::ring_R(r, prime);
  return verify_basis(poset, poly::buchberger(R.ring, R.generators), d);
}

bool NzdReport::passed() const {
  if (!f_is_minimum) return false;
  for (const auto& m : ranks)
    if (!m.injective()) return false;
  return true;
}

nlohmann::ordered_json NzdReport::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = r;
  nlohmann::ordered_json ranks_json = nlohmann::ordered_json::array();
  for (std::size_t d = 0; d < ranks.size(); ++d)
    ranks_json.push_back({{"d", d}, {"domain", ranks[d].domain_dim}, {"rank", ranks[d].rank}});
  j["ranks"] = std::move(ranks_json);
  j["f_is_minimum"] = f_is_minimum;
  if (!witnesses.empty()) j["witnesses"] = witnesses;
  return j;
}

NzdReport verify_nzd(const MinorPoset& poset, const poly::GroebnerBasis& G, unsigned d_max) {
  NzdReport rep;
  rep.r = poset.rank();
  MinorSpec f = f_minor(rep.r);
  Polynomial fv = evaluate(f, G.ring());
  for (unsigned d = 0; d <= d_max; ++d) {
    rep.ranks.push_back(poly::mult_map_rank(fv, G, d));
    if (!rep.ranks.back().injective())
      rep.witnesses.push_back("multiplication by f not injective in degree " + std::to_string(d));
  }
  rep.f_is_minimum = true;
  for (const auto& P : poset.minors())
    if (!tableau_leq(f, P)) {
      rep.f_is_minimum = false;
      rep.witnesses.push_back("f <= " + P.to_string() + " fails");
    }
  return rep;
}

NzdReport verify_nzd(int r, unsigned d_max, std::uint32_t prime) {
  MinorPoset poset(r);
  auto R = local::ring_R(r, prime);
  return verify_nzd(poset, poly::buchberger(R.ring, R.generators), d_max);
}

} // namespace lmflat::tableau
