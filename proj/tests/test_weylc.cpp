#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lmflat/oracles.hpp"
#include "lmflat/weylc.hpp"

#include <algorithm>
#include <set>

using namespace lmflat;
using namespace lmflat::weyl;

namespace {

WeylElement from_word(const std::vector<int>& word, const WeylElement& tail) {
  WeylElement w = WeylElement::identity(tail.rank());
  for (int i : word) w = compose(w, simple_reflection(i, tail.rank()));
  return compose(w, tail);
}

} // namespace

TEST_CASE("group laws") {
  for (int r : {1, 2, 3}) {
    auto e = WeylElement::identity(r);
    for (const auto& w : ball(r, 3, 1)) {
      CHECK(compose(e, w) == w);
      CHECK(compose(w, e) == w);
      CHECK(compose(w, inverse(w)).is_identity());
    }
    for (int i = 0; i <= r; ++i) {
      auto s = simple_reflection(i, r);
      CHECK(compose(s, s).is_identity());
      CHECK(length(s) == 1);
      CHECK(reduced_word(s).letters == std::vector<int>{i});
      CHECK(reduced_word(s).remainder.is_identity());
    }
    CHECK(length(e) == 0);
    CHECK(reduced_word(e).letters.empty());
    CHECK(length(tau(r)) == 0);
    CHECK(compose(tau(r), tau(r)) == translation(std::vector<int>(2 * r, 1)));
  }
  CHECK_THROWS_AS(simple_reflection(3, 2), std::out_of_range);
}

TEST_CASE("translations") {
  std::vector<int> lam{1, 1, 0, 0}, nu{2, -1, 3, 0}, zero(4, 0);
  auto sum = lam;
  for (int k = 0; k < 4; ++k) sum[k] += nu[k];
  CHECK(translation(zero).is_identity());
  CHECK(compose(translation(lam), translation(nu)) == translation(sum));
  CHECK(compose(translation(lam), translation(lam)) == power(translation(lam), 2));
  CHECK(translation(lam).is_translation());
  CHECK_THROWS_AS(translation({1, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(WeylElement(2, {1, 0, 2, 3}, {0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("lengths of the examples") {
  CHECK(length(translation({1, 1, 0, 0})) == 3);
  CHECK(length(compose(simple_reflection(0, 2), simple_reflection(1, 2))) == 2);
  CHECK(length(parse_element("t:1,1,0,0", 2)) == 3);
  // extreme translations all have length r(r+1)/2
  for (int r = 1; r <= 4; ++r)
    for (const auto& lam : finite_orbit([&] {
           std::vector<int> v(2 * r, 0);
           std::fill(v.begin(), v.begin() + r, 1);
           return v;
         }()))
      CHECK(length(translation(lam)) == r * (r + 1) / 2);
}

TEST_CASE("finite orbits") {
  CHECK(finite_orbit({1, 0}) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(finite_orbit({1, 1, 0, 0}).size() == 4);
  CHECK(finite_orbit({0, 0, 0, 0, 0, 0}).size() == 1);
  CHECK(finite_orbit({1, 1, 1, 0, 0, 0}).size() == 8);
}

TEST_CASE("length changes by one under simple reflections") {
  for (int r : {2, 3})
    for (int coset : {0, 1})
      for (const auto& w : ball(r, 6, coset))
        for (int i = 0; i <= r; ++i) {
          int d = length(compose(simple_reflection(i, r), w)) - length(w);
          CHECK((d == 1 || d == -1));
        }
}

TEST_CASE("hyperplane length equals BFS length") {
  for (int r : {1, 2, 3})
    for (int coset : {0, 1}) {
      auto bfs = oracle::bfs_lengths(r, 6, coset);
      for (const auto& [w, l] : bfs) CHECK(length(w) == l);
    }
  // frozen ball sizes
  CHECK(ball(1, 6).size() == 13);
  CHECK(ball(2, 6).size() == 57);
  CHECK(ball(3, 6).size() == 161);
}

TEST_CASE("reduced words multiply back") {
  for (int r : {2, 3})
    for (int coset : {0, 1})
      for (const auto& w : ball(r, 6, coset)) {
        auto rw = reduced_word(w);
        CHECK(static_cast<int>(rw.letters.size()) == length(w));
        CHECK(length(rw.remainder) == 0);
        CHECK(from_word(rw.letters, rw.remainder) == w);
      }
  auto rw = reduced_word(translation({1, 1, 0, 0}));
  CHECK(rw.letters == std::vector<int>{2, 1, 2});
}

TEST_CASE("bruhat order agrees with the subword property") {
  for (int r : {1, 2, 3}) {
    int radius = r == 3 ? 4 : 6;
    for (int coset : {0, 1}) {
      auto B = ball(r, radius, coset);
      for (const auto& w : B) {
        auto rw = reduced_word(w);
        auto below = oracle::subword_products(rw.letters, rw.remainder);
        std::set<WeylElement> lower(below.begin(), below.end());
        for (const auto& u : B) CHECK(bruhat_leq(u, w) == (lower.count(u) > 0));
      }
    }
  }
}

TEST_CASE("bruhat order is a partial order") {
  auto B = ball(2, 4, 0);
  for (const auto& u : B) {
    CHECK(bruhat_leq(u, u));
    CHECK(bruhat_leq(WeylElement::identity(2), u));
    for (const auto& v : B) {
      if (u != v && bruhat_leq(u, v)) CHECK_FALSE(bruhat_leq(v, u));
      if (!bruhat_leq(u, v)) continue;
      for (const auto& w : B)
        if (bruhat_leq(v, w)) CHECK(bruhat_leq(u, w));
    }
  }
  auto t = tau(2);
  for (const auto& w : ball(2, 4, 0)) CHECK(bruhat_leq(t, compose(w, t)));
  CHECK_FALSE(bruhat_leq(WeylElement::identity(2), t));
}

TEST_CASE("descents and parsing") {
  auto w = parse_element("s0*s1", 2);
  CHECK(w == compose(simple_reflection(0, 2), simple_reflection(1, 2)));
  CHECK(left_descents(w) == std::vector<int>{0});
  CHECK(parse_element("e", 3).is_identity());
  CHECK(parse_element("tau*tau", 2) == translation({1, 1, 1, 1}));
  CHECK_THROWS(parse_element("s9", 2));
  CHECK_THROWS(parse_element("x1", 2));
  auto j = translation({1, 1, 0, 0}).to_json();
  CHECK(j["c"] == 1);
  CHECK(WeylElement::from_json(j) == translation({1, 1, 0, 0}));
}
