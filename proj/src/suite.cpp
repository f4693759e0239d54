#include "lmflat/suite.hpp"

#include "lmflat/alcove.hpp"
#include "lmflat/oracles.hpp"
#include "lmflat/tableau.hpp"
#include "lmflat/weylc.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

namespace lmflat::suite {

namespace {

std::string rank_tag(int r) { return "r=" + std::to_string(r); }
std::string degree_tag(unsigned d) { return "d≤" + std::to_string(d); }

CheckResult start(std::string name, std::string anchor) {
  CheckResult c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  return c;
}

void fail(CheckResult& c, Json w) {
  c.pass = false;
  c.witness.push_back(std::move(w));
}

} // namespace

Json CheckResult::to_json(bool timings) const {
  Json j;
  j["name"] = name;
  j["anchor"] = anchor;
  j["status"] = pass ? "pass" : "fail";
  j["detail"] = detail;
  if (!witness.empty()) j["witness"] = witness;
  if (timings) j["ms"] = ms;
  return j;
}

CheckResult adm_perm(int r, bool corrupt) {
  auto c = start("Adm=Perm " + rank_tag(r), "the admissible and the permissible alcoves coincide");
  auto adm = alcove::enumerate_admissible(r);
  auto perm = alcove::enumerate_permissible(r);
  if (corrupt) adm.pop_back();
  std::set<alcove::Alcove> image;
  c.pass = true;
  for (const auto& w : adm) {
    try {
      if (!image.insert(alcove::alcove_of(w)).second) fail(c, {{"not injective at", w.to_json()}});
    } catch (const std::domain_error& e) {
      fail(c, {{"admissible but not permissible", w.to_json()}, {"reason", e.what()}});
    }
  }
  std::set<alcove::Alcove> perm_set(perm.begin(), perm.end());
  if (image != perm_set) {
    for (const auto& a : perm_set)
      if (!image.count(a)) {
        fail(c, {{"permissible, not admissible", a.to_json()}});
        break;
      }
    for (const auto& a : image)
      if (!perm_set.count(a)) {
        fail(c, {{"admissible, not permissible", a.to_json()}});
        break;
      }
    if (c.pass) fail(c, "image differs from permissible set");
  }
  c.detail["admissible"] = adm.size();
  c.detail["permissible"] = perm.size();
  c.detail["extreme"] = alcove::extreme_alcoves(r).size();
  return c;
}

CheckResult de_concini(int r, unsigned d_max, const Primes& primes, bool corrupt) {
  auto c = start("deConcini " + rank_tag(r) + " " + degree_tag(d_max),
                 "doubly symplectic standard tableaux map to a basis of R");
  c.pass = true;
  tableau::MinorPoset poset(r);
  Json reference;
  for (std::uint32_t p : primes) {
    auto R = local::ring_R(r, p);
    auto G = poly::buchberger(R.ring, R.generators);
    Json per_degree = Json::array();
    for (unsigned d = 0; d <= d_max; ++d) {
      auto rep = tableau::verify_basis(poset, G, d);
      if (corrupt && d == d_max) ++rep.tableaux;
      if (!rep.passed()) fail(c, {{"prime", p}, {"report", rep.to_json()}});
      per_degree.push_back({{"d", d}, {"tableaux", rep.tableaux}, {"hilbert", rep.hilbert}, {"rank", rep.rank}});
    }
    if (reference.is_null()) {
      reference = per_degree;
    } else if (reference != per_degree) {
      fail(c, {{"prime", p}, {"differs from first prime", per_degree}});
    }
    c.detail["p=" + std::to_string(p)] = std::move(per_degree);
  }
  return c;
}

CheckResult nonzero_divisor(int r, unsigned d_max, const Primes& primes, bool corrupt) {
  auto c = start("NZD " + rank_tag(r) + " " + degree_tag(d_max),
                 "f = (r..1|1..r) is not a zero divisor in R");
  c.pass = true;
  tableau::MinorPoset poset(r);
  for (std::uint32_t p : primes) {
    auto R = local::ring_R(r, p);
    auto G = poly::buchberger(R.ring, R.generators);
    tableau::NzdReport rep;
    if (corrupt) {
      // Multiplication by a generator, which is zero in R.
      rep.r = r;
      rep.f_is_minimum = true;
      for (unsigned d = 0; d <= d_max; ++d) rep.ranks.push_back(poly::mult_map_rank(R.generators[0], G, d));
    } else {
      rep = tableau::verify_nzd(poset, G, d_max);
    }
    if (!rep.passed()) fail(c, {{"prime", p}, {"report", rep.to_json()}});
    c.detail["p=" + std::to_string(p)] = rep.to_json();
  }
  return c;
}

CheckResult chart_equations(int r, const Primes& primes, bool corrupt) {
  auto c = start("chart equations " + rank_tag(r), "the four retained chart equations imply the others");
  c.pass = true;
  for (std::uint32_t p : primes)
    for (int i = 1; i < r; ++i) {
      auto kept = local::chart_ideal(r, i, local::Fibre::Variable, p);
      auto implied = local::redundant_equations(r, i, p);
      if (corrupt) {
        implied.generators.push_back(poly::Polynomial::variable(implied.ring, 0));
        implied.notes.push_back("corrupted");
      }
      auto G = poly::buchberger(kept.ring, kept.generators);
      std::size_t nonzero = 0;
      for (std::size_t k = 0; k < implied.generators.size(); ++k)
        if (auto nf = poly::normal_form(implied.generators[k], G); !nf.is_zero()) {
          ++nonzero;
          fail(c, {{"prime", p}, {"i", i}, {"equation", implied.notes[k]}, {"normal form", nf.to_text()}});
        }
      c.detail["i=" + std::to_string(i) + " p=" + std::to_string(p)] =
          Json{{"retained", kept.generators.size()}, {"implied", implied.generators.size()},
               {"basis", G.basis().size()}, {"nonzero", nonzero}};
    }
  return c;
}

CheckResult fibre_dimensions(int r, unsigned d_max, const Primes& primes, bool corrupt) {
  auto c = start("fibre dimensions " + rank_tag(r),
                 "special and generic fibres of every chart have the same dimension");
  c.pass = true;
  for (std::uint32_t p : primes) {
    for (int i = 1; i < r; ++i) {
      auto rep = local::fibre_report(r, i, d_max, p);
      if (corrupt && i == 1) {
        auto special = local::chart_ideal(r, i, local::Fibre::Special, p);
        special.generators.push_back(poly::Polynomial::variable(special.ring, 0));
        rep.dim_special = poly::krull_dimension(poly::buchberger(special.ring, special.generators));
      }
      auto j = rep.to_json();
      j["extreme_chart_dimension"] = r * (r + 1) / 2;
      if (!rep.dimensions_agree()) fail(c, {{"prime", p}, {"report", j}});
      c.detail["i=" + std::to_string(i) + " p=" + std::to_string(p)] = std::move(j);
    }
    auto g = local::grassmannian_fibre_report(r, 0, std::min(d_max, 2u), p);
    if (g.dim_special != g.dim_generic || g.dim_special != r * (r + 1) / 2)
      fail(c, {{"prime", p}, {"grassmannian", g.to_json()}});
    c.detail["grassmannian p=" + std::to_string(p)] = Json{{"dim_special", g.dim_special}, {"dim_generic", g.dim_generic}};
  }
  return c;
}

CheckResult extreme_charts(int r, bool corrupt) {
  auto c = start("extreme charts " + rank_tag(r),
                 "each extreme chart is an affine space of dimension r(r+1)/2");
  c.pass = true;
  std::size_t count = 0;
  std::vector<int> orbits;
  for (const auto& x : alcove::extreme_alcoves(r)) {
    auto rep = local::extreme_chart(r, x);
    if (corrupt && count == 0) rep.free_orbits += 1;
    if (!rep.passed()) fail(c, rep.to_json());
    orbits.push_back(rep.free_orbits);
    ++count;
  }
  c.detail["extreme_alcoves"] = count;
  c.detail["free_orbits"] = orbits;
  c.detail["expected"] = r * (r + 1) / 2;
  return c;
}

CheckResult hilbert_brute_force(const local::IdealPresentation& ideal, unsigned d_max, bool corrupt) {
  auto c = start("Hilbert=brute force " + ideal.name + " " + degree_tag(d_max) + " p=" +
                     std::to_string(ideal.ring->field().modulus()),
                 "staircase count equals the rank computation on each graded piece");
  c.pass = true;
  auto G = poly::buchberger(ideal.ring, ideal.generators);
  auto gens = ideal.generators;
  // Killing every variable leaves only the constants.
  if (corrupt)
    for (std::size_t v = 0; v < ideal.ring->num_vars(); ++v) gens.push_back(poly::Polynomial::variable(ideal.ring, v));
  Json values = Json::array();
  for (unsigned d = 0; d <= d_max; ++d) {
    std::size_t hf = poly::hilbert_function(G, d);
    std::size_t bf = poly::brute_force_degree_piece(ideal.ring, gens, d);
    if (hf != bf) fail(c, {{"d", d}, {"hilbert", hf}, {"brute_force", bf}});
    values.push_back(hf);
  }
  c.detail["hilbert"] = std::move(values);
  c.detail["prime"] = ideal.ring->field().modulus();
  return c;
}

CheckResult length_bfs(int r, int radius, bool corrupt) {
  auto c = start("length=BFS " + rank_tag(r), "hyperplane-count length equals the word length");
  c.pass = true;
  std::size_t elements = 0;
  for (int coset = 0; coset <= 1; ++coset) {
    auto dist = oracle::bfs_lengths(r, radius, coset);
    auto ball = weyl::ball(r, radius, coset);
    for (const auto& w : ball) {
      int expected = dist.at(w) + (corrupt && elements == ball.size() / 2 ? 1 : 0);
      if (weyl::length(w) != expected) fail(c, {{"element", w.to_json()}, {"length", weyl::length(w)}, {"bfs", expected}});
      ++elements;
    }
  }
  c.detail["elements"] = elements;
  c.detail["radius"] = radius;
  return c;
}

CheckResult bruhat_subword(int r, int radius, bool corrupt) {
  auto c = start("Bruhat=subword " + rank_tag(r), "the Bruhat recursion agrees with the subword property");
  c.pass = true;
  std::size_t pairs = 0;
  bool pending = corrupt;
  for (int coset = 0; coset <= 1; ++coset) {
    auto ball = weyl::ball(r, radius, coset);
    for (const auto& w : ball) {
      auto rw = weyl::reduced_word(w);
      auto below = oracle::subword_products(rw.letters, rw.remainder);
      if (pending && below.size() > 1) {
        below.erase(below.begin());
        pending = false;
      }
      for (const auto& u : ball) {
        bool rec = weyl::bruhat_leq(u, w);
        bool sub = std::binary_search(below.begin(), below.end(), u);
        if (rec != sub && c.witness.size() < 5)
          fail(c, {{"u", u.to_json()}, {"w", w.to_json()}, {"recursion", rec}, {"subword", sub}});
        else if (rec != sub)
          c.pass = false;
        ++pairs;
      }
    }
  }
  c.detail["pairs"] = pairs;
  c.detail["radius"] = radius;
  return c;
}

CheckResult generic_points(int r, int i, int trials, std::uint64_t seed, std::uint32_t prime, bool corrupt) {
  auto c = start("generic points " + rank_tag(r) + " i=" + std::to_string(i),
                 "random generic-fibre points satisfy the chart equations and are smooth");
  auto rep = local::generic_point_sample(r, i, trials, seed, prime,
                                         corrupt ? std::optional<std::size_t>(0) : std::nullopt);
  c.pass = rep.passed();
  c.detail = rep.to_json();
  c.detail["seed"] = seed;
  c.detail["prime"] = prime;
  if (!c.pass)
    for (std::size_t k = 0; k < rep.failures.size() && k < 5; ++k) c.witness.push_back(rep.failures[k]);
  return c;
}

std::vector<CheckResult> run_jobs(const std::vector<Job>& jobs, int workers, const std::string& corrupt) {
  std::vector<CheckResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const auto& job = jobs[k];
      bool bad = !corrupt.empty() && job.name.starts_with(corrupt);
      auto t0 = std::chrono::steady_clock::now();
      try {
        results[k] = job.run(bad);
      } catch (const std::exception& e) {
        results[k] = CheckResult{};
        results[k].name = job.name;
        results[k].witness.push_back(std::string("exception: ") + e.what());
      }
      results[k].ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  workers = std::clamp(workers, 1, static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::vector<Job> verify_plan(const VerifyConfig& cfg) {
  const int r = cfg.rank;
  const unsigned d = cfg.max_degree;
  const unsigned nzd = d == 0 ? 0 : d - 1;
  std::vector<Job> jobs;
  auto add = [&jobs](std::string name, std::function<CheckResult(bool)> f) {
    jobs.push_back({std::move(name), std::move(f)});
  };
  add("Adm=Perm " + rank_tag(r), [r](bool x) { return adm_perm(r, x); });
  add("deConcini " + rank_tag(r), [=](bool x) { return de_concini(r, d, cfg.primes, x); });
  add("NZD " + rank_tag(r), [=](bool x) { return nonzero_divisor(r, nzd, cfg.primes, x); });
  if (r >= 2) {
    add("chart equations " + rank_tag(r), [=](bool x) { return chart_equations(r, cfg.primes, x); });
    add("fibre dimensions " + rank_tag(r), [=](bool x) { return fibre_dimensions(r, d, cfg.primes, x); });
  }
  add("extreme charts " + rank_tag(r), [r](bool x) { return extreme_charts(r, x); });
  for (std::uint32_t p : cfg.primes)
    add("Hilbert=brute force R_" + std::to_string(r) + " p=" + std::to_string(p),
        [=](bool x) { return hilbert_brute_force(local::ring_R(r, p), d, x); });
  add("length=BFS " + rank_tag(r), [=](bool x) { return length_bfs(r, cfg.radius, x); });
  add("Bruhat=subword " + rank_tag(r), [=](bool x) { return bruhat_subword(r, cfg.radius, x); });
  for (int i = 1; i < r; ++i)
    add("generic points " + rank_tag(r) + " i=" + std::to_string(i),
        [=](bool x) { return generic_points(r, i, cfg.trials, cfg.seed, cfg.primes.front(), x); });
  return jobs;
}

} // namespace lmflat::suite
