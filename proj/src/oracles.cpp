#include "lmflat/oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace lmflat::oracle {

std::unordered_map<WeylElement, int, weyl::WeylHash> bfs_lengths(int rank, int radius, int coset) {
  std::unordered_map<WeylElement, int, weyl::WeylHash> dist;
  WeylElement start = weyl::power(weyl::tau(rank), coset);
  dist.emplace(start, 0);
  std::deque<WeylElement> queue{start};
  while (!queue.empty()) {
    WeylElement x = queue.front();
    queue.pop_front();
    int d = dist.at(x);
    if (d == radius) continue;
    for (int i = 0; i <= rank; ++i) {
      WeylElement y = weyl::compose(weyl::simple_reflection(i, rank), x);
      if (dist.emplace(y, d + 1).second) queue.push_back(std::move(y));
    }
  }
  return dist;
}

std::vector<WeylElement> subword_products(const std::vector<int>& word, const WeylElement& remainder) {
  const std::size_t k = word.size();
  if (k > 24) throw std::length_error("word too long for subword enumeration");
  std::set<WeylElement> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    WeylElement x = remainder;
    for (std::size_t p = k; p-- > 0;)
      if (mask >> p & 1u) x = weyl::compose(weyl::simple_reflection(word[p], remainder.rank()), x);
    out.insert(std::move(x));
  }
  return {out.begin(), out.end()};
}

std::vector<alcove::Alcove> brute_force_permissible(int rank) {
  if (rank > 2) throw std::length_error("brute force permissible enumeration is limited to r <= 2");
  const int n = 2 * rank;
  // Candidate levels: omega_i plus a 0/1 vector with r ones.
  std::vector<std::vector<std::vector<int>>> choices(n);
  for (int i = 0; i < n; ++i)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto y = alcove::omega(rank, i);
      for (int j = 0; j < n; ++j) y[j] += (mask >> j) & 1u;
      choices[i].push_back(std::move(y));
    }
  std::vector<alcove::Alcove> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    alcove::Alcove a{rank, {}};
    for (int i = 0; i < n; ++i) a.levels.push_back(choices[i][idx[i]]);
    if (alcove::is_permissible(a)) out.push_back(std::move(a));
    int p = 0;
    while (p < n && ++idx[p] == choices[p].size()) idx[p++] = 0;
    if (p == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<tableau::IndexSet> brute_force_lambda(const tableau::IndexSet& I, const tableau::IndexSet& J,
                                                    int r) {
  tableau::IndexSet Gamma;
  std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(Gamma));
  std::optional<tableau::IndexSet> best;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    tableau::IndexSet T;
    bool ok = true;
    for (int x = 1; x <= r && ok; ++x)
      if (mask >> (x - 1) & 1u) {
        if (std::binary_search(I.begin(), I.end(), x) || std::binary_search(J.begin(), J.end(), x)) ok = false;
        T.push_back(x);
      }
    if (!ok || T.size() != Gamma.size()) continue;
    for (std::size_t m = 0; m < T.size() && ok; ++m) ok = Gamma[m] <= T[m];
    if (ok && (!best || T < *best)) best = T;
  }
  return best;
}

std::size_t brute_force_admissible_sides(int r, int k) {
  const int n = 2 * r;
  std::size_t count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    tableau::IndexSet I, J;
    for (int x = 1; x <= n; ++x)
      if (mask >> (x - 1) & 1u) (x <= r ? I : J).push_back(x <= r ? x : n + 1 - x);
    std::sort(J.begin(), J.end());
    if (brute_force_lambda(I, J, r)) ++count;
  }
  return count;
}

} // namespace lmflat::oracle
