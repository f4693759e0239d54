#include "lmflat/weylc.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace lmflat::weyl {

namespace {

int mirror(int j, int n) { return n - 1 - j; }

// Floor division, correct for negative numerators.
long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

} // namespace

WeylElement::WeylElement(int rank, std::vector<int> perm, std::vector<int> trans)
    : rank_(rank), perm_(std::move(perm)), trans_(std::move(trans)) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  const int n = 2 * rank;
  if (static_cast<int>(perm_.size()) != n || static_cast<int>(trans_.size()) != n)
    throw std::invalid_argument("perm and trans must have length 2r");
  std::vector<bool> seen(n, false);
  for (int j = 0; j < n; ++j) {
    int p = perm_[j];
    if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("perm is not a bijection");
    seen[p] = true;
  }
  for (int j = 0; j < n; ++j)
    if (perm_[mirror(j, n)] != mirror(perm_[j], n))
      throw std::invalid_argument("perm does not commute with j -> 2r+1-j");
  c_ = trans_[0] + trans_[n - 1];
  for (int j = 0; j < n; ++j)
    if (trans_[j] + trans_[mirror(j, n)] != c_)
      throw std::invalid_argument("trans pairing sums are not constant");
}

WeylElement WeylElement::identity(int rank) {
  std::vector<int> p(2 * rank);
  for (int j = 0; j < 2 * rank; ++j) p[j] = j;
  return WeylElement(rank, std::move(p), std::vector<int>(2 * rank, 0));
}

bool WeylElement::is_identity() const noexcept { return is_translation() && c_ == 0 &&
    std::all_of(trans_.begin(), trans_.end(), [](int t) { return t == 0; }); }

bool WeylElement::is_translation() const noexcept {
  for (int j = 0; j < dim(); ++j)
    if (perm_[j] != j) return false;
  return true;
}

std::vector<int> WeylElement::apply(const std::vector<int>& y) const {
  if (static_cast<int>(y.size()) != dim()) throw std::invalid_argument("vector length != 2r");
  std::vector<int> out(dim());
  for (int j = 0; j < dim(); ++j) out[perm_[j]] = y[j] + trans_[perm_[j]];
  return out;
}

nlohmann::json WeylElement::to_json() const {
  std::vector<int> p1(perm_);
  for (int& v : p1) ++v;
  nlohmann::json j;
  j["perm"] = p1;
  j["trans"] = trans_;
  j["c"] = c_;
  return j;
}

WeylElement WeylElement::from_json(const nlohmann::json& j) {
  auto p = j.at("perm").get<std::vector<int>>();
  for (int& v : p) --v;
  auto t = j.at("trans").get<std::vector<int>>();
  if (p.size() % 2 != 0 || p.empty()) throw std::invalid_argument("perm must have even length");
  const int rank = static_cast<int>(p.size() / 2);
  WeylElement w(rank, std::move(p), std::move(t));
  if (j.contains("c") && j.at("c").get<int>() != w.similitude())
    throw std::invalid_argument("similitude does not match trans");
  return w;
}

std::string WeylElement::to_string() const {
  std::ostringstream os;
  os << "perm=[";
  for (int j = 0; j < dim(); ++j) os << (j ? "," : "") << perm_[j] + 1;
  os << "] trans=[";
  for (int j = 0; j < dim(); ++j) os << (j ? "," : "") << trans_[j];
  os << "] c=" << c_;
  return os.str();
}

std::size_t WeylHash::operator()(const WeylElement& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank());
  auto mix = [&h](int v) { h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (int v : w.perm()) mix(v);
  for (int v : w.trans()) mix(v);
  return h;
}

WeylElement compose(const WeylElement& u, const WeylElement& w) {
  if (u.rank() != w.rank()) throw std::invalid_argument("rank mismatch");
  const int n = u.dim();
  WeylElement out;
  out.rank_ = u.rank();
  out.perm_.resize(n);
  out.trans_.resize(n);
  for (int j = 0; j < n; ++j) out.perm_[j] = u.perm_[w.perm_[j]];
  // u(w(y)) = sigma_u(sigma_w y + lambda_w) + lambda_u
  for (int j = 0; j < n; ++j) out.trans_[u.perm_[j]] = w.trans_[j];
  for (int j = 0; j < n; ++j) out.trans_[j] += u.trans_[j];
  out.c_ = u.c_ + w.c_;
  return out;
}

WeylElement inverse(const WeylElement& w) {
  const int n = w.dim();
  WeylElement out;
  out.rank_ = w.rank();
  out.perm_.resize(n);
  out.trans_.resize(n);
  for (int j = 0; j < n; ++j) out.perm_[w.perm_[j]] = j;
  for (int j = 0; j < n; ++j) out.trans_[j] = -w.trans_[w.perm_[j]];
  out.c_ = -w.c_;
  return out;
}

WeylElement power(const WeylElement& w, int n) {
  WeylElement base = n < 0 ? inverse(w) : w;
  WeylElement acc = WeylElement::identity(w.rank());
  for (int k = 0; k < std::abs(n); ++k) acc = compose(acc, base);
  return acc;
}

WeylElement simple_reflection(int i, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (i < 0 || i > rank) throw std::out_of_range("simple reflection index out of range");
  const int n = 2 * rank;
  std::vector<int> p(n);
  for (int j = 0; j < n; ++j) p[j] = j;
  std::vector<int> t(n, 0);
  auto swap = [&p](int a, int b) { std::swap(p[a], p[b]); };
  if (i == 0) {
    swap(0, n - 1);
    t[0] = -1;
    t[n - 1] = 1;
  } else if (i == rank) {
    swap(rank - 1, rank);
  } else {
    swap(i - 1, i);
    swap(n - i - 1, n - i);
  }
  return WeylElement(rank, std::move(p), std::move(t));
}

WeylElement tau(int rank) {
  const int n = 2 * rank;
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = (k + rank) % n;
  std::vector<int> t(n, 0);
  for (int k = rank; k < n; ++k) t[k] = 1;
  return WeylElement(rank, std::move(p), std::move(t));
}

WeylElement translation(const std::vector<int>& lambda) {
  if (lambda.empty() || lambda.size() % 2 != 0)
    throw std::invalid_argument("translation vector must have even positive length");
  const int rank = static_cast<int>(lambda.size() / 2);
  std::vector<int> p(lambda.size());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = static_cast<int>(j);
  return WeylElement(rank, std::move(p), lambda);
}

int length(const WeylElement& w) {
  const int r = w.rank();
  const int n = w.dim();
  const long long D = 2LL * (r + 1);
  // Interior point of the base alcove -1/2 < x_1 < ... < x_r < 0, scaled by D.
  std::vector<long long> P(n);
  for (int j = 0; j < r; ++j) {
    P[j] = -(r - j);
    P[mirror(j, n)] = r - j;
  }
  std::vector<long long> Q(n);
  for (int j = 0; j < n; ++j) Q[w.perm()[j]] = P[j];
  for (int j = 0; j < n; ++j) Q[j] += D * w.trans()[j] - (D / 2) * w.similitude();

  long long count = 0;
  auto cross = [&](long long a, long long b) {
    count += std::llabs(floor_div(b, D) - floor_div(a, D));
  };
  for (int a = 0; a < r; ++a) {
    cross(2 * P[a], 2 * Q[a]);
    for (int b = a + 1; b < r; ++b) {
      cross(P[a] - P[b], Q[a] - Q[b]);
      cross(P[a] + P[b], Q[a] + Q[b]);
    }
  }
  return static_cast<int>(count);
}

std::vector<int> left_descents(const WeylElement& w) {
  std::vector<int> out;
  const int l = length(w);
  if (l == 0) return out;
  for (int i = 0; i <= w.rank(); ++i)
    if (length(compose(simple_reflection(i, w.rank()), w)) < l) out.push_back(i);
  return out;
}

namespace {

int first_descent(const WeylElement& w, int l) {
  for (int i = 0; i <= w.rank(); ++i)
    if (length(compose(simple_reflection(i, w.rank()), w)) < l) return i;
  throw std::logic_error("no descent for an element of positive length");
}

} // namespace

ReducedWord reduced_word(const WeylElement& w) {
  ReducedWord out{{}, w};
  int l = length(w);
  while (l > 0) {
    int i = first_descent(out.remainder, l);
    out.letters.push_back(i);
    out.remainder = compose(simple_reflection(i, w.rank()), out.remainder);
    --l;
  }
  return out;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  if (u.rank() != w.rank() || u.similitude() != w.similitude()) return false;
  WeylElement a = u, b = w;
  int la = length(a), lb = length(b);
  while (true) {
    if (la > lb) return false;
    if (lb == 0) return a == b;
    int i = first_descent(b, lb);
    WeylElement s = simple_reflection(i, w.rank());
    b = compose(s, b);
    --lb;
    WeylElement sa = compose(s, a);
    int lsa = length(sa);
    if (lsa < la) {
      a = std::move(sa);
      la = lsa;
    }
  }
}

std::vector<std::vector<int>> finite_orbit(const std::vector<int>& mu) {
  if (mu.empty() || mu.size() % 2 != 0) throw std::invalid_argument("vector must have even positive length");
  const int n = static_cast<int>(mu.size());
  const int r = n / 2;
  for (int j = 0; j < n; ++j)
    if (mu[j] + mu[mirror(j, n)] != mu[0] + mu[n - 1])
      throw std::invalid_argument("pairing sums are not constant");
  std::set<std::vector<int>> seen{mu};
  std::deque<std::vector<int>> queue{mu};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= r; ++i) {
      const std::vector<int> p = simple_reflection(i, r).perm();
      std::vector<int> img(n);
      for (int j = 0; j < n; ++j) img[p[j]] = v[j];
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<WeylElement> ball(int rank, int radius, int coset) {
  std::vector<WeylElement> gens;
  for (int i = 0; i <= rank; ++i) gens.push_back(simple_reflection(i, rank));
  WeylElement start = power(tau(rank), coset);
  std::vector<WeylElement> out{start};
  std::unordered_set<WeylElement, WeylHash> seen{start};
  std::size_t frontier_begin = 0;
  for (int d = 0; d < radius; ++d) {
    std::size_t frontier_end = out.size();
    for (std::size_t k = frontier_begin; k < frontier_end; ++k)
      for (const auto& s : gens) {
        WeylElement x = compose(s, out[k]);
        if (seen.insert(x).second) out.push_back(std::move(x));
      }
    frontier_begin = frontier_end;
  }
  return out;
}

WeylElement parse_element(std::string_view text, int rank) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    int v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    return v;
  };
  WeylElement acc = WeylElement::identity(rank);
  std::size_t pos = 0;
  while (true) {
    std::size_t star = text.find('*', pos);
    std::string_view f = trim(text.substr(pos, star == std::string_view::npos ? text.npos : star - pos));
    if (f.empty()) throw std::invalid_argument("empty factor in '" + std::string(text) + "'");
    WeylElement x = WeylElement::identity(rank);
    if (f == "e") {
    } else if (f == "tau") {
      x = tau(rank);
    } else if (f.front() == 's') {
      x = simple_reflection(parse_int(f.substr(1)), rank);
    } else if (f.starts_with("t:")) {
      std::vector<int> lambda;
      std::string_view rest = f.substr(2);
      while (true) {
        std::size_t comma = rest.find(',');
        lambda.push_back(parse_int(trim(rest.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      if (static_cast<int>(lambda.size()) != 2 * rank)
        throw std::invalid_argument("translation needs 2r entries");
      x = translation(lambda);
    } else {
      throw std::invalid_argument("unknown factor '" + std::string(f) + "'");
    }
    acc = compose(acc, x);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return acc;
}

} // namespace lmflat::weyl
