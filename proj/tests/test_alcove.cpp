#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lmflat/alcove.hpp"
#include "lmflat/oracles.hpp"

#include <numeric>
#include <set>

using namespace lmflat;
using namespace lmflat::alcove;

namespace {

std::set<Alcove> image_of(const std::vector<WeylElement>& ws) {
  std::set<Alcove> out;
  for (const auto& w : ws) out.insert(alcove_of(w));
  return out;
}

} // namespace

TEST_CASE("standard chain") {
  for (int r = 1; r <= 4; ++r) {
    auto s = standard_alcove(r);
    CHECK(s.levels[0] == omega(r, 0));
    CHECK(s.levels[1] == omega(r, 1));
    CHECK(satisfies_chain(s));
    CHECK(is_selfdual(s));
    CHECK(dual_alcove(s) == s);
  }
}

TEST_CASE("alcove of the length-zero element") {
  for (int r = 1; r <= 4; ++r) {
    auto a = alcove_of(weyl::tau(r));
    CHECK(is_permissible(a));
    CHECK(a.similitude() == 1);
    // y_0 = (0^r, 1^r): the rotated standard chain
    std::vector<int> y0(2 * r, 0);
    std::fill(y0.begin() + r, y0.end(), 1);
    CHECK(a.levels[0] == y0);
  }
  CHECK_THROWS_AS(alcove_of(WeylElement::identity(2)), std::domain_error);
}

TEST_CASE("extreme alcoves") {
  for (int r = 1; r <= 4; ++r) {
    auto ext = extreme_alcoves(r);
    CHECK(ext.size() == (1u << r));
    auto tr = extreme_translations(r);
    REQUIRE(tr.size() == ext.size());
    for (std::size_t k = 0; k < ext.size(); ++k) {
      CHECK(alcove_of(tr[k]) == ext[k]);
      CHECK(is_permissible(ext[k]));
      CHECK(dual_alcove(ext[k]) == ext[k]);
      auto x0 = ext[k].kr_vector(0);
      for (int i = 0; i < 2 * r; ++i) CHECK(x0[i] + x0[2 * r - 1 - i] == 1);
    }
  }
}

TEST_CASE("permissible set against the exhaustive oracle") {
  for (int r : {1, 2}) {
    auto fast = enumerate_permissible(r);
    auto slow = oracle::brute_force_permissible(r);
    CHECK(fast == slow);
  }
  CHECK_THROWS_AS(oracle::brute_force_permissible(3), std::length_error);
}

TEST_CASE("admissible equals permissible") {
  // frozen after agreement of the two enumerations
  const std::size_t expected[] = {0, 3, 13, 79};
  for (int r = 1; r <= 3; ++r) {
    auto adm = enumerate_admissible(r);
    auto perm = enumerate_permissible(r);
    auto img = image_of(adm);
    CHECK(adm.size() == expected[r]);
    CHECK(perm.size() == expected[r]);
    CHECK(img.size() == adm.size());  // injective
    CHECK(img == std::set<Alcove>(perm.begin(), perm.end()));
  }
}

TEST_CASE("admissible set at rank 4") {
  auto adm = enumerate_admissible(4);
  CHECK(adm.size() == 633);
  CHECK(enumerate_permissible(4).size() == 633);
}

TEST_CASE("permissible alcoves are selfdual and normalized") {
  for (int r = 1; r <= 3; ++r)
    for (const auto& a : enumerate_permissible(r)) {
      CHECK(dual_alcove(a) == a);
      CHECK(dual_alcove(dual_alcove(a)) == a);
      CHECK(std::accumulate(a.levels[0].begin(), a.levels[0].end(), 0) == r);
      CHECK(satisfies_box(a));
      CHECK(satisfies_rank(a));
    }
}

TEST_CASE("dual is an involution on arbitrary chains") {
  for (int r = 1; r <= 3; ++r)
    for (const auto& w : weyl::ball(r, 4, 0)) {
      Alcove a{r, {}};
      for (int i = 0; i < 2 * r; ++i) a.levels.push_back(w.apply(omega(r, i)));
      CHECK(dual_alcove(dual_alcove(a)) == a);
    }
}

TEST_CASE("bruhat intervals are down-sets") {
  auto adm = enumerate_admissible(2);
  std::set<WeylElement> A(adm.begin(), adm.end());
  for (const auto& w : adm)
    for (const auto& v : bruhat_interval(w)) CHECK(A.count(v) == 1);
  for (const auto& t : extreme_translations(2)) CHECK(bruhat_interval(t).size() >= 4);
}

TEST_CASE("json round trip") {
  auto a = extreme_alcoves(2).front();
  CHECK(Alcove::from_json(a.to_json()) == a);
  CHECK(a.to_json()["r"] == 2);
  CHECK_THROWS(Alcove::from_json(nlohmann::json{{"r", 2}, {"levels", {{0, 0}}}}));
}
