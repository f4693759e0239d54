#include "lmflat/alcove.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lmflat::alcove {

std::vector<int> Alcove::kr_vector(int i) const {
  std::vector<int> x = levels.at(i);
  for (int& v : x) v = 1 - v;
  return x;
}

int Alcove::similitude() const {
  int s = 0;
  for (int v : levels.at(0)) s += v;
  if (s % rank != 0) throw std::domain_error("sum of y_0 is not a multiple of r");
  return s / rank;
}

nlohmann::json Alcove::to_json() const {
  nlohmann::json j;
  j["r"] = rank;
  j["levels"] = levels;
  return j;
}

Alcove Alcove::from_json(const nlohmann::json& j) {
  Alcove a{j.at("r").get<int>(), j.at("levels").get<std::vector<std::vector<int>>>()};
  if (a.rank < 1 || static_cast<int>(a.levels.size()) != 2 * a.rank)
    throw std::invalid_argument("alcove needs 2r levels");
  for (const auto& y : a.levels)
    if (static_cast<int>(y.size()) != 2 * a.rank)
      throw std::invalid_argument("alcove level needs 2r entries");
  return a;
}

std::string Alcove::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    os << (i ? " " : "") << "(";
    for (std::size_t j = 0; j < levels[i].size(); ++j) os << (j ? "," : "") << levels[i][j];
    os << ")";
  }
  return os.str();
}

std::vector<int> omega(int rank, int i) {
  std::vector<int> w(2 * rank, 0);
  for (int j = 0; j < i; ++j) w[j] = -1;
  return w;
}

namespace {

bool well_formed(const Alcove& a) {
  if (a.rank < 1 || static_cast<int>(a.levels.size()) != 2 * a.rank) return false;
  for (const auto& y : a.levels)
    if (static_cast<int>(y.size()) != 2 * a.rank) return false;
  return true;
}

// Level i for any integer i, via y_{i+2r} = y_i - 1.
std::vector<int> level(const Alcove& a, int i) {
  const int n = 2 * a.rank;
  int q = i >= 0 ? i / n : -((-i + n - 1) / n);
  std::vector<int> y = a.levels[i - q * n];
  for (int& v : y) v -= q;
  return y;
}

} // namespace

bool satisfies_box(const Alcove& a) {
  if (!well_formed(a)) return false;
  for (int i = 0; i < 2 * a.rank; ++i) {
    auto w = omega(a.rank, i);
    for (int j = 0; j < 2 * a.rank; ++j) {
      int d = a.levels[i][j] - w[j];
      if (d != 0 && d != 1) return false;
    }
  }
  return true;
}

bool satisfies_rank(const Alcove& a) {
  if (!well_formed(a)) return false;
  for (int i = 0; i < 2 * a.rank; ++i) {
    auto w = omega(a.rank, i);
    int zeros = 0;
    for (int j = 0; j < 2 * a.rank; ++j) zeros += a.levels[i][j] == w[j];
    if (zeros != a.rank) return false;
  }
  return true;
}

bool satisfies_chain(const Alcove& a) {
  if (!well_formed(a)) return false;
  const int n = 2 * a.rank;
  for (int i = 0; i < n; ++i) {
    auto lo = level(a, i + 1);
    const auto& hi = a.levels[i];
    int drop = 0;
    for (int j = 0; j < n; ++j) {
      int d = hi[j] - lo[j];
      if (d < 0 || d > 1) return false;
      drop += d;
    }
    if (drop != 1) return false;
  }
  return true;
}

Alcove dual_alcove(const Alcove& a) {
  if (!well_formed(a)) throw std::invalid_argument("malformed alcove");
  const int n = 2 * a.rank;
  const int c = a.similitude();
  Alcove out{a.rank, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int i = 0; i < n; ++i) {
    auto y = level(a, n - i);
    for (int k = 0; k < n; ++k) out.levels[i][k] = -y[n - 1 - k] - (1 - c);
  }
  return out;
}

bool is_selfdual(const Alcove& a) {
  if (!well_formed(a)) return false;
  int s = 0;
  for (int v : a.levels[0]) s += v;
  if (s % a.rank != 0) return false;
  return dual_alcove(a) == a;
}

bool is_permissible(const Alcove& a) {
  return satisfies_box(a) && satisfies_rank(a) && satisfies_chain(a) && is_selfdual(a);
}

Alcove standard_alcove(int rank) {
  Alcove a{rank, {}};
  for (int i = 0; i < 2 * rank; ++i) a.levels.push_back(omega(rank, i));
  return a;
}

Alcove alcove_of(const WeylElement& w) {
  if (w.similitude() != 1) throw std::domain_error("not permissible: similitude must be 1");
  Alcove a{w.rank(), {}};
  for (int i = 0; i < w.dim(); ++i) a.levels.push_back(w.apply(omega(w.rank(), i)));
  if (!satisfies_box(a)) throw std::domain_error("not permissible: box condition fails");
  return a;
}

std::vector<WeylElement> extreme_translations(int rank) {
  std::vector<int> mu(2 * rank, 0);
  for (int j = 0; j < rank; ++j) mu[j] = 1;
  std::vector<WeylElement> out;
  for (const auto& lambda : weyl::finite_orbit(mu)) out.push_back(weyl::translation(lambda));
  return out;
}

std::vector<Alcove> extreme_alcoves(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  const int n = 2 * rank;
  std::vector<Alcove> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> x0(n);
    for (int i = 0; i < rank; ++i) {
      x0[i] = (mask >> i) & 1u;
      x0[n - 1 - i] = 1 - x0[i];
    }
    Alcove a{rank, {}};
    for (int i = 0; i < n; ++i) {
      std::vector<int> y(n);
      for (int j = 0; j < n; ++j) y[j] = 1 - (x0[j] + (j < i ? 1 : 0));
      a.levels.push_back(std::move(y));
    }
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Alcove> enumerate_permissible(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  const int n = 2 * rank;
  std::vector<Alcove> out;
  Alcove cur{rank, std::vector<std::vector<int>>(n)};

  // Levels 1..n-1 are reached from y_0 by removing one unit per step while
  // staying inside the box; the last step must land on y_0 - 1.
  auto descend = [&](auto&& self, int i) -> void {
    if (i == n) {
      auto last = cur.levels[n - 1];
      auto target = cur.levels[0];
      int drop = 0;
      for (int j = 0; j < n; ++j) {
        int d = last[j] - (target[j] - 1);
        if (d < 0 || d > 1) return;
        drop += d;
      }
      if (drop == 1 && is_selfdual(cur)) out.push_back(cur);
      return;
    }
    auto w = omega(rank, i);
    for (int k = 0; k < n; ++k) {
      std::vector<int> y = cur.levels[i - 1];
      --y[k];
      if (y[k] - w[k] != 0 && y[k] - w[k] != 1) continue;
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) ok = y[j] - w[j] == 0 || y[j] - w[j] == 1;
      if (!ok) continue;
      cur.levels[i] = std::move(y);
      self(self, i + 1);
    }
  };

  // y_0 = omega_0 + (0/1 vector with exactly r ones).
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != rank) continue;
    std::vector<int> y0(n);
    for (int j = 0; j < n; ++j) y0[j] = (mask >> j) & 1u;
    cur.levels[0] = y0;
    descend(descend, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Interval = std::vector<WeylElement>;
using Memo = std::unordered_map<WeylElement, Interval, weyl::WeylHash>;

// [<= w] = [<= sw] u s[<= sw] for any left descent s of w.
const Interval& interval(const WeylElement& w, Memo& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  Interval result;
  auto desc = weyl::left_descents(w);
  if (desc.empty()) {
    result.push_back(w);
  } else {
    WeylElement s = weyl::simple_reflection(desc.front(), w.rank());
    const Interval& below = interval(weyl::compose(s, w), memo);
    std::unordered_set<WeylElement, weyl::WeylHash> seen(below.begin(), below.end());
    result = below;
    for (const auto& v : below) {
      WeylElement sv = weyl::compose(s, v);
      if (seen.insert(sv).second) result.push_back(std::move(sv));
    }
    std::sort(result.begin(), result.end());
  }
  return memo.emplace(w, std::move(result)).first->second;
}

} // namespace

std::vector<WeylElement> bruhat_interval(const WeylElement& w) {
  Memo memo;
  return interval(w, memo);
}

std::vector<WeylElement> enumerate_admissible(int rank) {
  Memo memo;
  std::set<WeylElement> all;
  for (const auto& t : extreme_translations(rank)) {
    const auto& below = interval(t, memo);
    all.insert(below.begin(), below.end());
  }
  return {all.begin(), all.end()};
}

} // namespace lmflat::alcove
