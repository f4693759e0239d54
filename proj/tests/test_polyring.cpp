#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lmflat/groebner.hpp"
#include "lmflat/linalg.hpp"
#include "lmflat/localmodel.hpp"

#include <random>

using namespace lmflat;
using namespace lmflat::poly;

namespace {

RingPtr ring_xy(std::uint32_t p = 101) { return make_ring({"x", "y"}, p); }

RingPtr ring_c(std::uint32_t p = 101) { return make_ring({"c_1_1", "c_1_2", "c_2_1", "c_2_2"}, p); }

Polynomial det2(const RingPtr& R) {
  return Polynomial::parse_text(R, "c_1_1*c_2_2 - c_1_2*c_2_1");
}

Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, unsigned max_deg, int terms) {
  std::vector<Term> t;
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, R->num_vars() - 1);
  std::uniform_int_distribution<std::uint32_t> coef(1, R->field().modulus() - 1);
  for (int k = 0; k < terms; ++k) {
    Monomial m(R->num_vars());
    unsigned d = deg(rng);
    for (unsigned e = 0; e < d; ++e) m = m * Monomial::variable(R->num_vars(), var(rng));
    t.push_back({coef(rng), m});
  }
  return Polynomial::from_terms(R, std::move(t));
}

} // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField F(101);
  CHECK(F.mul(F.inv(7), 7) == 1);
  CHECK(F.from_int(-1) == 100);
  CHECK(F.to_signed(100) == -1);
  CHECK(F.pow(3, 100) == 1);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
  CHECK_THROWS_AS(PrimeField(100), std::invalid_argument);
  CHECK_NOTHROW(PrimeField(32003));
}

TEST_CASE("polynomial arithmetic and text round trip") {
  auto R = ring_xy();
  auto x = Polynomial::variable(R, "x");
  auto y = Polynomial::variable(R, "y");
  auto f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  CHECK(f.to_text() == "x^2 - y^2");
  CHECK(Polynomial::parse_text(R, f.to_text()) == f);
  CHECK(Polynomial::from_json(R, f.to_json()) == f);
  CHECK((f - f).is_zero());
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK_FALSE((f + x).is_homogeneous());
  CHECK(f.derivative(0) == x.scaled(2));
  std::vector<PrimeField::Element> pt{3, 5};
  CHECK(f.evaluate(pt) == R->field().from_int(9 - 25));
}

TEST_CASE("term orders") {
  Monomial a({2, 0, 1}), b({1, 2, 0});
  CHECK(compare(MonomialOrder::Lex, a, b) > 0);
  CHECK(compare(MonomialOrder::DegLex, a, b) > 0);
  // degrevlex: equal degree, smaller power of the last variable wins.
  CHECK(compare(MonomialOrder::DegRevLex, a, b) < 0);
  CHECK(parse_order("deglex") == MonomialOrder::DegLex);
  CHECK_THROWS(parse_order("banana"));
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(count_monomials_of_degree(3, 2) == 6);
}

TEST_CASE("buchberger on small examples") {
  auto R = ring_xy();
  auto x = Polynomial::variable(R, 0);
  auto y = Polynomial::variable(R, 1);
  auto G = buchberger({x, y});
  CHECK(G.basis().size() == 2);
  CHECK(krull_dimension(G) == 0);

  auto C = ring_c();
  auto G1 = buchberger({det2(C)});
  REQUIRE(G1.basis().size() == 1);
  CHECK(G1.basis()[0] == det2(C).monic());
  CHECK(krull_dimension(G1) == 3);

  auto empty = buchberger(R, {});
  CHECK(krull_dimension(empty) == 2);
  CHECK(hilbert_function(empty, 3) == 4);

  auto unit = buchberger({Polynomial::constant(R, 5)});
  CHECK(unit.is_unit_ideal());
  CHECK(krull_dimension(unit) == -1);
}

TEST_CASE("twisted cubic and cyclic-4 bases are reduced and closed under S-pairs") {
  auto R = make_ring({"a", "b", "c", "d"}, 32003);
  std::vector<std::vector<Polynomial>> systems{
      {Polynomial::parse_text(R, "a*c - b^2"), Polynomial::parse_text(R, "b*d - c^2"),
       Polynomial::parse_text(R, "a*d - b*c")},
      {Polynomial::parse_text(R, "a + b + c + d"), Polynomial::parse_text(R, "a*b + b*c + c*d + d*a"),
       Polynomial::parse_text(R, "a*b*c + b*c*d + c*d*a + d*a*b"), Polynomial::parse_text(R, "a*b*c*d - 1")}};
  for (const auto& gens : systems) {
    auto G = buchberger(gens);
    for (const auto& g : gens) CHECK(normal_form(g, G).is_zero());
    const auto& B = G.basis();
    for (std::size_t i = 0; i < B.size(); ++i) {
      CHECK(B[i].leading_term().coef == 1);
      for (std::size_t j = i + 1; j < B.size(); ++j) CHECK(normal_form(s_polynomial(B[i], B[j]), G).is_zero());
    }
  }
  auto cubic = buchberger(systems[0]);
  CHECK(krull_dimension(cubic) == 2);
  for (unsigned d = 0; d <= 5; ++d) CHECK(hilbert_function(cubic, d) == 3 * d + 1);
}

TEST_CASE("ring R_1 examples") {
  auto C = ring_c();
  auto G = buchberger({det2(C)});
  auto c11 = Polynomial::variable(C, "c_1_1");
  auto c12 = Polynomial::variable(C, "c_1_2");
  CHECK(normal_form(c11 * det2(C) + c12, G) == c12);
  CHECK(normal_form(Polynomial(C), G).is_zero());
  std::vector<std::size_t> expected{1, 4, 9, 16};
  for (unsigned d = 0; d < expected.size(); ++d) {
    CHECK(hilbert_function(G, d) == expected[d]);
    CHECK(brute_force_degree_piece(C, {det2(C)}, d) == expected[d]);
  }
  CHECK(standard_monomials(G, 2).size() == 9);
  for (unsigned d = 0; d <= 3; ++d) {
    CHECK(mult_map_rank(c11, G, d).injective());
    CHECK(mult_map_rank(Polynomial::constant(C, 1), G, d).injective());
    CHECK(mult_map_rank(det2(C), G, d).rank == 0);
  }
}

TEST_CASE("normal form is idempotent and multiplicative") {
  auto P = local::ring_R(2);
  auto G = buchberger(P.generators);
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    auto f = random_poly(P.ring, rng, 3, 5);
    auto g = random_poly(P.ring, rng, 3, 5);
    auto nf = normal_form(f, G);
    CHECK(normal_form(nf, G) == nf);
    CHECK(normal_form(f * g, G) == normal_form(nf * normal_form(g, G), G));
  }
}

TEST_CASE("hilbert function equals brute force and is prime independent") {
  for (int m : {1, 2}) {
    auto A = local::ring_R(m, 101);
    auto B = local::ring_R(m, 32003);
    auto GA = buchberger(A.generators);
    auto GB = buchberger(B.generators);
    for (unsigned d = 0; d <= (m == 1 ? 5u : 3u); ++d) {
      auto h = hilbert_function(GA, d);
      CHECK(h == hilbert_function(GB, d));
      CHECK(h == brute_force_degree_piece(A.ring, A.generators, d));
    }
  }
}

TEST_CASE("brute force respects its entry cap") {
  auto P = local::ring_R(2);
  CHECK_THROWS_AS(brute_force_degree_piece(P.ring, P.generators, 3, 1000), std::length_error);
}

TEST_CASE("row echelon rank and dependency witness") {
  PrimeField F(101);
  std::vector<linalg::SparseRow> rows{{{0, 1}, {1, 2}}, {{1, 1}}, {{0, 1}, {1, 3}}, {{2, 5}}};
  CHECK(linalg::rank(F, rows) == 3);
  auto dep = linalg::find_dependency(F, rows);
  REQUIRE(dep.has_value());
  CHECK(*dep == std::vector<std::size_t>{0, 1, 2});
  rows.pop_back();
  rows.pop_back();
  CHECK_FALSE(linalg::find_dependency(F, rows).has_value());
}
