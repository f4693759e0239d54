#pragma once

#include "lmflat/localmodel.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lmflat::suite {

using Json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;
  /// The claim being checked, in words.
  std::string anchor;
  bool pass = false;
  /// Computed values (cardinalities, dimensions, ranks).
  Json detail = Json::object();
  /// Counterexamples; empty on success.
  Json witness = Json::array();
  double ms = 0;

  Json to_json(bool timings) const;
};

using Primes = std::vector<std::uint32_t>;

// Each check recomputes its claim from scratch. With `corrupt` set, the
// check perturbs one of its inputs so that it must fail; this exercises the
// failure path of the harness.

/// alcove_of(Adm) == Perm.
CheckResult adm_perm(int r, bool corrupt = false);
/// Tableau count == Hilbert function of ring_R(r) and full rank, d <= d_max,
/// with identical numbers for every prime.
CheckResult de_concini(int r, unsigned d_max, const Primes& primes, bool corrupt = false);
/// f acts injectively on R_d, d <= d_max, and f <= P for every minor P.
CheckResult nonzero_divisor(int r, unsigned d_max, const Primes& primes, bool corrupt = false);
/// Implied equations reduce to 0 modulo the retained four, all 1 <= i < r.
CheckResult chart_equations(int r, const Primes& primes, bool corrupt = false);
/// Dimensions at pi = 0 and pi = 1 agree, for the charts and their singular
/// blocks, all 1 <= i < r, plus the Grassmannian chart.
CheckResult fibre_dimensions(int r, unsigned d_max, const Primes& primes, bool corrupt = false);
/// Every extreme alcove: r(r+1)/2 free orbits, pairing lemma, substitution.
CheckResult extreme_charts(int r, bool corrupt = false);
/// hilbert_function == brute_force_degree_piece for the given ideal.
CheckResult hilbert_brute_force(const local::IdealPresentation& ideal, unsigned d_max, bool corrupt = false);
/// Hyperplane-count length == BFS word length on both cosets.
CheckResult length_bfs(int r, int radius, bool corrupt = false);
/// bruhat_leq == subword oracle on all pairs of the ball.
CheckResult bruhat_subword(int r, int radius, bool corrupt = false);
CheckResult generic_points(int r, int i, int trials, std::uint64_t seed, std::uint32_t prime,
                           bool corrupt = false);

struct Job {
  std::string name;
  std::function<CheckResult(bool corrupt)> run;
};

/// Runs jobs on up to `workers` threads; results keep job order. A job
/// whose name starts with `corrupt` (non-empty) runs corrupted. Exceptions
/// become failed checks.
std::vector<CheckResult> run_jobs(const std::vector<Job>& jobs, int workers, const std::string& corrupt = {});

struct VerifyConfig {
  int rank = 2;
  unsigned max_degree = 3;
  Primes primes{local::kDefaultPrime, local::kSecondaryPrime};
  int trials = 100;
  std::uint64_t seed = 0;
  int radius = 6;
};

std::vector<Job> verify_plan(const VerifyConfig& cfg);

} // namespace lmflat::suite
