#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lmflat/alcove.hpp"
#include "lmflat/groebner.hpp"
#include "lmflat/localmodel.hpp"

#include <set>

using namespace lmflat;
using namespace lmflat::local;
using poly::buchberger;

namespace {

std::set<std::string> monic_texts(const std::vector<Polynomial>& gens, const poly::RingPtr& ring) {
  std::set<std::string> out;
  for (const auto& g : gens)
    if (!g.is_zero()) out.insert(g.reinterpret(ring).monic().to_text());
  return out;
}

std::vector<std::vector<Polynomial>> square(const poly::RingPtr& R, int n, int first_var) {
  std::vector<std::vector<Polynomial>> A(n, std::vector<Polynomial>(n, Polynomial(R)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) A[a][b] = Polynomial::variable(R, first_var + a * n + b);
  return A;
}

std::vector<std::vector<Polynomial>> product(const std::vector<std::vector<Polynomial>>& A,
                                             const std::vector<std::vector<Polynomial>>& B) {
  std::size_t n = A.size();
  std::vector<std::vector<Polynomial>> C(n, std::vector<Polynomial>(n, Polynomial(A[0][0].ring())));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) C[a][b] += A[a][k] * B[k][b];
  return C;
}

} // namespace

TEST_CASE("fibre tags") {
  CHECK(parse_fibre("special") == Fibre::Special);
  CHECK(to_string(Fibre::Generic) == "generic");
  CHECK_THROWS(parse_fibre("closed"));
}

TEST_CASE("ring R_1") {
  auto P = ring_R(1);
  REQUIRE(P.generators.size() == 2);
  CHECK(P.generators[0].monic() == P.generators[1].monic());
  auto det = Polynomial::parse_text(P.ring, "c_1_1*c_2_2 - c_1_2*c_2_1");
  CHECK(P.generators[0].monic() == det.monic());
  auto G = buchberger(P.generators);
  CHECK(poly::krull_dimension(G) == 3);
  CHECK(P.notes.size() == P.generators.size());
}

TEST_CASE("ring R_2 counts") {
  auto P = ring_R(2);
  CHECK(P.ring->num_vars() == 16);
  CHECK(P.generators.size() == 12);  // 6 strictly upper entries of each product
  auto G = buchberger(P.generators);
  CHECK(G.basis().size() == 18);
  CHECK(poly::krull_dimension(G) == 10);
}

TEST_CASE("chart layouts") {
  auto L = chart_layout(3, 2);
  CHECK(L.h == 2);
  CHECK(L.s == 1);
  CHECK(L.t == 2);
  CHECK(L.affine_factor() == 3);
  CHECK(L.block_dimension() == 3);
  auto M = chart_layout(3, 1);
  CHECK(M.h == L.h);
  CHECK(M.s == L.s);
  CHECK(chart_layout(4, 2).affine_factor() == 0);
  CHECK(chart_layout(4, 1).affine_factor() == 7);
  CHECK_THROWS_AS(chart_layout(3, 0), std::out_of_range);
  CHECK_THROWS_AS(chart_layout(3, 3), std::out_of_range);
}

TEST_CASE("epsilon is symmetric and constant on blocks") {
  for (int r = 2; r <= 5; ++r)
    for (int i = 1; i < r; ++i) {
      auto L = chart_layout(r, i);
      for (int mu = 1; mu <= r; ++mu)
        for (int nu = 1; nu <= r; ++nu) {
          CHECK(epsilon(L, mu, nu) * epsilon(L, nu, mu) == 1);
          bool same = (mu <= L.h) == (nu <= L.h);
          CHECK(epsilon(L, mu, nu) == (same ? 1 : -1));
        }
    }
}

TEST_CASE("symplectic adjoint") {
  auto R = poly::make_ring({"a", "b", "c", "d"}, 101);
  auto A = square(R, 2, 0);
  auto B = symplectic_adjoint(A);
  // in size 2 it is the classical adjugate
  auto det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
  auto BA = product(B, A);
  CHECK(BA[0][0] == det);
  CHECK(BA[1][1] == det);
  CHECK(BA[0][1].is_zero());
  CHECK(BA[1][0].is_zero());
  CHECK(symplectic_adjoint(B) == A);
}

TEST_CASE("the singular block uses the symplectic adjoint") {
  for (auto [r, i] : {std::pair{2, 1}, std::pair{4, 2}}) {
    auto P = chart_ideal(r, i, Fibre::Variable);
    int n = 2 * i;
    auto A = square(P.ring, n, 0);
    auto BA = product(symplectic_adjoint(A), A);
    auto AB = product(A, symplectic_adjoint(A));
    auto pi = Polynomial::variable(P.ring, "pi");
    std::vector<Polynomial> expected;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        expected.push_back(BA[a][b] - (a == b ? pi : Polynomial(P.ring)));
        expected.push_back(AB[a][b] - (a == b ? pi : Polynomial(P.ring)));
      }
    auto got = monic_texts(P.generators, P.ring);
    for (const auto& t : monic_texts(expected, P.ring)) CHECK(got.count(t) == 1);
  }
}

TEST_CASE("chart at pi = 0 with r = 2i is ring R of rank r - i") {
  for (auto [r, i] : {std::pair{2, 1}, std::pair{4, 2}}) {
    auto chart = chart_ideal(r, i, Fibre::Special);
    auto R = ring_R(r - i);
    REQUIRE(chart.ring->num_vars() == R.ring->num_vars());
    auto renamed = poly::make_ring(R.ring->names(), R.ring->field().modulus());
    std::vector<Polynomial> moved;
    for (const auto& g : chart.generators) moved.push_back(g.reinterpret(renamed));
    auto a = buchberger(moved);
    auto b = buchberger(R.generators);
    REQUIRE(a.basis().size() == b.basis().size());
    for (std::size_t k = 0; k < a.basis().size(); ++k) CHECK(a.basis()[k].to_text() == b.basis()[k].to_text());
  }
}

TEST_CASE("implied chart equations follow from the retained ones") {
  for (int r = 2; r <= 4; ++r)
    for (int i = 1; i < r; ++i) {
      auto P = chart_ideal(r, i, Fibre::Variable);
      auto Q = redundant_equations(r, i);
      auto G = buchberger(P.generators);
      for (const auto& g : Q.generators) CHECK(poly::normal_form(g, G).is_zero());
    }
}

TEST_CASE("fibre dimensions") {
  for (int r = 2; r <= 4; ++r)
    for (int i = 1; i < r; ++i) {
      auto rep = fibre_report(r, i, 3);
      CAPTURE(r);
      CAPTURE(i);
      CHECK(rep.dimensions_agree());
      CHECK(rep.dim_special == r * (r + 1) / 2);
      CHECK(rep.block_dim_special == rep.layout.block_dimension());
    }
  auto rep = fibre_report(2, 1, 3);
  CHECK(rep.dim_generic == 3);
  CHECK(rep.hilbert_special == std::vector<std::size_t>{1, 4, 9, 16});
  CHECK(fibre_report(3, 2, 3).dim_generic == 6);

  // frozen special-fibre Hilbert values
  using V = std::vector<std::size_t>;
  CHECK(fibre_report(3, 1, 3).hilbert_special == V{1, 9, 40, 125});
  CHECK(fibre_report(3, 2, 3).hilbert_special == V{1, 9, 40, 125});
  CHECK(fibre_report(4, 1, 3).hilbert_special == V{1, 16, 121, 611});
  CHECK(fibre_report(4, 2, 3).hilbert_special == V{1, 16, 125, 656});
  CHECK(fibre_report(4, 3, 3).hilbert_special == V{1, 16, 121, 611});

  CHECK(fibre_report(3, 2, 1).affine_factor_alt == -1);
  CHECK(fibre_report(3, 1, 1).affine_factor_alt == 4);
  CHECK(fibre_report(4, 1, 1).affine_factor_alt == 13);
}

TEST_CASE("fibre dimensions agree across primes") {
  for (int i = 1; i < 3; ++i) {
    auto a = fibre_report(3, i, 3, kDefaultPrime);
    auto b = fibre_report(3, i, 3, kSecondaryPrime);
    CHECK(a.dim_special == b.dim_special);
    CHECK(a.dim_generic == b.dim_generic);
    CHECK(a.hilbert_special == b.hilbert_special);
  }
}

TEST_CASE("generic fibre at r = 2, i = 1") {
  auto P = chart_ideal(2, 1, Fibre::Generic);
  CHECK(poly::krull_dimension(buchberger(P.generators)) == 3);
}

TEST_CASE("grassmannian charts are smooth of dimension r(r+1)/2") {
  for (int r = 1; r <= 3; ++r) {
    auto rep = grassmannian_fibre_report(r, 0, 2);
    CHECK(rep.dim_special == r * (r + 1) / 2);
    CHECK(rep.dim_generic == rep.dim_special);
  }
  CHECK(grassmannian_chart(3, 0).ring->num_vars() == 9);
  CHECK(grassmannian_chart(3, 0).generators.size() == 3);
  CHECK_THROWS(grassmannian_chart(3, 1));
}

TEST_CASE("generic point sampling") {
  auto base = base_point(2, 1);
  auto P = chart_ideal(2, 1, Fibre::Generic);
  for (const auto& g : P.generators) CHECK(g.evaluate(base) == 0);

  auto ok = generic_point_sample(2, 1, 100, 0);
  CHECK(ok.passed());
  CHECK(ok.trials == 100);
  CHECK(ok.expected_corank == 3);
  auto again = generic_point_sample(2, 1, 100, 0);
  CHECK(again.to_json().dump() == ok.to_json().dump());

  CHECK(generic_point_sample(3, 2, 100, 0).passed());
  CHECK(generic_point_sample(3, 1, 20, 5).passed());
  CHECK(generic_point_sample(4, 1, 20, 5).passed());

  auto bad = generic_point_sample(2, 1, 10, 0, kDefaultPrime, 0);
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.failures.empty());
}

TEST_CASE("cyclic intervals") {
  CHECK_FALSE(in_cyclic_interval(2, 3, 3, 6));
  CHECK(in_cyclic_interval(3, 3, 4, 6));
  CHECK_FALSE(in_cyclic_interval(4, 3, 4, 6));
  CHECK(in_cyclic_interval(5, 5, 1, 6));
  CHECK(in_cyclic_interval(0, 5, 1, 6));
  CHECK_FALSE(in_cyclic_interval(1, 5, 1, 6));
}

TEST_CASE("extreme charts") {
  for (int r = 2; r <= 4; ++r)
    for (const auto& x : alcove::extreme_alcoves(r)) {
      auto rep = extreme_chart(r, x);
      CAPTURE(rep.to_json().dump());
      CHECK(rep.passed());
      CHECK(rep.free_orbits == r * (r + 1) / 2);
      CHECK(rep.pairing_lemma);
      CHECK(rep.substitution_zero);
      CHECK(rep.step_cases_once);
      CHECK(rep.I.size() == static_cast<std::size_t>(r));
    }
  auto not_extreme = alcove::alcove_of(weyl::tau(2));
  CHECK_THROWS_AS(extreme_chart(2, not_extreme), std::invalid_argument);
}

TEST_CASE("presentations serialize deterministically") {
  auto P = chart_ideal(3, 2, Fibre::Variable);
  CHECK(P.to_json().dump() == chart_ideal(3, 2, Fibre::Variable).to_json().dump());
  CHECK(P.to_text().find("pi") != std::string::npos);
  auto rep = fibre_report(2, 1, 2);
  auto j = rep.to_json();
  CHECK(j.begin().key() == "r");
}
