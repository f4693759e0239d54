// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// --verbose also prints every underlying check.

#include "lmflat/localmodel.hpp"
#include "lmflat/suite.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <thread>

using namespace lmflat;
using suite::CheckResult;
using suite::Job;

namespace {

const suite::Primes kPrimes{local::kDefaultPrime, local::kSecondaryPrime};

struct Criterion {
  int number;
  std::string title;
  std::vector<Job> jobs;
  // Extra condition on the finished checks (frozen values).
  std::function<std::string(const std::vector<CheckResult>&)> extra;
};

Job job(std::string name, std::function<CheckResult()> f) {
  return {std::move(name), [f = std::move(f)](bool) { return f(); }};
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;

  Criterion c1{1, "Adm = Perm for r = 1, 2, 3", {}, nullptr};
  for (int r = 1; r <= 3; ++r) c1.jobs.push_back(job("adm", [r] { return suite::adm_perm(r); }));
  c1.extra = [](const std::vector<CheckResult>& res) -> std::string {
    const std::size_t frozen[] = {3, 13, 79};
    for (std::size_t k = 0; k < res.size(); ++k) {
      std::size_t n = res[k].detail.value("admissible", std::size_t{0});
      if (n != frozen[k]) return "size " + std::to_string(n) + " differs from frozen " + std::to_string(frozen[k]);
    }
    return "";
  };
  out.push_back(std::move(c1));

  out.push_back({2, "tableau basis of R (r=1 d<=6, r=2 d<=3, p=101 and 32003)",
                 {job("dc1", [] { return suite::de_concini(1, 6, kPrimes); }),
                  job("dc2", [] { return suite::de_concini(2, 3, kPrimes); })},
                 nullptr});

  out.push_back({3, "f is a non-zero-divisor (r=1 d<=4, r=2 d<=2) and the minimum",
                 {job("nzd1", [] { return suite::nonzero_divisor(1, 4, kPrimes); }),
                  job("nzd2", [] { return suite::nonzero_divisor(2, 2, kPrimes); })},
                 nullptr});

  out.push_back({4, "implied chart equations reduce to zero (r = 2, 3)",
                 {job("ce2", [] { return suite::chart_equations(2, kPrimes); }),
                  job("ce3", [] { return suite::chart_equations(3, kPrimes); })},
                 nullptr});

  out.push_back({5, "special and generic fibre dimensions agree (r = 2, 3)",
                 {job("fd2", [] { return suite::fibre_dimensions(2, 3, kPrimes); }),
                  job("fd3", [] { return suite::fibre_dimensions(3, 3, kPrimes); })},
                 nullptr});

  out.push_back({6, "extreme charts are affine of dimension r(r+1)/2 (r = 2, 3, 4)",
                 {job("ec2", [] { return suite::extreme_charts(2); }),
                  job("ec3", [] { return suite::extreme_charts(3); }),
                  job("ec4", [] { return suite::extreme_charts(4); })},
                 nullptr});

  Criterion c7{7, "kernel self-consistency (Hilbert, length, Bruhat, generic points)", {}, nullptr};
  for (std::uint32_t p : kPrimes) {
    c7.jobs.push_back(job("h", [p] { return suite::hilbert_brute_force(local::ring_R(1, p), 6); }));
    c7.jobs.push_back(job("h", [p] { return suite::hilbert_brute_force(local::ring_R(2, p), 3); }));
    // Homogeneous ideals among the chart computations.
    c7.jobs.push_back(job("h", [p] { return suite::hilbert_brute_force(local::chart_ideal(2, 1, local::Fibre::Special, p), 3); }));
    for (int r = 2; r <= 3; ++r) {
      for (int i = 1; i < r; ++i)
        c7.jobs.push_back(job("h", [=] { return suite::hilbert_brute_force(local::singular_block(r, i, local::Fibre::Special, p), 3); }));
      c7.jobs.push_back(job("h", [=] { return suite::hilbert_brute_force(local::grassmannian_chart(r, 0, p), 2); }));
    }
  }
  for (int r = 1; r <= 3; ++r) {
    c7.jobs.push_back(job("l", [r] { return suite::length_bfs(r, 6); }));
    c7.jobs.push_back(job("b", [r] { return suite::bruhat_subword(r, 6); }));
  }
  c7.jobs.push_back(job("g", [] { return suite::generic_points(2, 1, 100, 0, local::kDefaultPrime); }));
  c7.jobs.push_back(job("g", [] { return suite::generic_points(3, 2, 100, 0, local::kDefaultPrime); }));
  out.push_back(std::move(c7));
  return out;
}

} // namespace

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::strcmp(argv[1], "--verbose") == 0;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool all = true;
  for (auto& c : criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    auto results = suite::run_jobs(c.jobs, workers);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = true;
    std::string why;
    for (const auto& r : results)
      if (!r.pass) {
        ok = false;
        if (why.empty()) why = r.name + ": " + r.witness.dump();
      }
    if (ok && c.extra) {
      why = c.extra(results);
      ok = why.empty();
    }
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << "  " << c.title << "  ("
              << results.size() << " checks, " << static_cast<long long>(s * 1000) << " ms)\n";
    if (!ok) std::cout << "      " << why << "\n";
    if (verbose)
      for (const auto& r : results)
        std::cout << "      " << (r.pass ? "pass " : "FAIL ") << r.name << "  " << r.detail.dump() << "\n";
  }
  return all ? 0 : 1;
}
