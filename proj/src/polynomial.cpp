#include "lmflat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lmflat::poly {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Exponent> exps)
    : exps_(std::move(exps)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent e) {
  if (index >= num_vars) throw std::out_of_range("variable index out of range");
  std::vector<Exponent> exps(num_vars, 0);
  exps[index] = e;
  return Monomial(std::move(exps));
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::is_coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r = other;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  r.degree_ = other.degree_ - degree_;
  return r;
}

// ------------------------------------------------------------------ orders

int compare(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept {
  const std::size_t n = a.size();
  switch (order) {
  case MonomialOrder::DegRevLex:
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = n; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  case MonomialOrder::DegLex:
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    [[fallthrough]];
  case MonomialOrder::Lex:
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  return 0;
}

bool is_graded(MonomialOrder order) noexcept { return order != MonomialOrder::Lex; }

std::string to_string(MonomialOrder order) {
  switch (order) {
  case MonomialOrder::DegRevLex: return "degrevlex";
  case MonomialOrder::DegLex: return "deglex";
  case MonomialOrder::Lex: return "lex";
  }
  return "?";
}

MonomialOrder parse_order(std::string_view tag) {
  if (tag == "degrevlex" || tag == "grevlex") return MonomialOrder::DegRevLex;
  if (tag == "deglex" || tag == "grlex") return MonomialOrder::DegLex;
  if (tag == "lex") return MonomialOrder::Lex;
  throw std::invalid_argument("unknown monomial order '" + std::string(tag) + "'");
}

namespace {

void fill_degree(std::size_t var, unsigned remaining, std::vector<Exponent>& cur,
                 std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = static_cast<Exponent>(remaining);
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = static_cast<Exponent>(e);
    fill_degree(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(std::vector<Exponent>{});
    return out;
  }
  std::vector<Exponent> cur(num_vars, 0);
  fill_degree(0, degree, cur, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return compare(MonomialOrder::DegRevLex, a, b) > 0;
  });
  return out;
}

std::size_t count_monomials_of_degree(std::size_t num_vars, unsigned degree) {
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  // C(n + d - 1, d) computed incrementally; each prefix product is itself a binomial.
  unsigned long long acc = 1;
  for (unsigned k = 1; k <= degree; ++k) {
    unsigned long long num = num_vars - 1 + k;
    if (acc > std::numeric_limits<unsigned long long>::max() / num)
      return std::numeric_limits<std::size_t>::max();
    acc = acc * num / k;
  }
  return static_cast<std::size_t>(acc);
}

// -------------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names, PrimeField field, MonomialOrder order)
    : names_(std::move(names)), field_(field), order_(order) {}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names, std::uint32_t prime, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), PrimeField(prime), order);
}

// -------------------------------------------------------------- Polynomial

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw std::invalid_argument("ring mismatch");
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial p(ring);
  auto e = ring->field().from_int(c);
  if (e != 0) p.terms_.push_back({e, Monomial(ring->num_vars())});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(ring);
  p.terms_.push_back({1, Monomial::variable(ring->num_vars(), index)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(ring);
  const Ring& R = *ring;
  for (const auto& t : terms)
    if (t.mono.size() != R.num_vars())
      throw std::invalid_argument("monomial has wrong number of variables");
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    auto c = t.coef % R.field().modulus();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef = R.field().add(p.terms_.back().coef, c);
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({c, std::move(t.mono)});
    }
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Polynomial Polynomial::add_scaled(Element c, const Monomial& m, const Polynomial& other) const {
  check_ring(other);
  const Ring& R = *ring_;
  const PrimeField& F = R.field();
  Polynomial out(ring_);
  if (c == 0 || other.is_zero()) {
    out.terms_ = terms_;
    return out;
  }
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial shifted;
  bool have_shifted = false;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j < other.terms_.size() && !have_shifted) {
      shifted = other.terms_[j].mono * m;
      have_shifted = true;
    }
    int cmp;
    if (i >= terms_.size()) cmp = -1;
    else if (j >= other.terms_.size()) cmp = 1;
    else cmp = R.compare(terms_[i].mono, shifted);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({F.mul(c, other.terms_[j].coef), std::move(shifted)});
      ++j;
      have_shifted = false;
    } else {
      auto v = F.add(terms_[i].coef, F.mul(c, other.terms_[j].coef));
      if (v != 0) out.terms_.push_back({v, terms_[i].mono});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  return add_scaled(1, Monomial(ring_->num_vars()), other);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return add_scaled(ring_->field().neg(1), Monomial(ring_->num_vars()), other);
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  const PrimeField& F = ring_->field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) prod.push_back({F.mul(a.coef, b.coef), a.mono * b.mono});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(Element c) const {
  Polynomial out(ring_);
  c %= ring_->field().modulus();
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coef = ring_->field().mul(t.coef, c);
  return out;
}

Polynomial Polynomial::times_term(Element c, const Monomial& m) const {
  Polynomial out(ring_);
  c %= ring_->field().modulus();
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any term order.
  for (const auto& t : terms_) out.terms_.push_back({ring_->field().mul(t.coef, c), t.mono * m});
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(terms_.front().coef));
}

Polynomial::Element Polynomial::evaluate(std::span<const Element> point) const {
  const PrimeField& F = ring_->field();
  if (point.size() != ring_->num_vars()) throw std::invalid_argument("point has wrong dimension");
  Element acc = 0;
  for (const auto& t : terms_) {
    Element v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.mono[i] != 0) v = F.mul(v, F.pow(point[i], t.mono[i]));
    acc = F.add(acc, v);
  }
  return acc;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->num_vars())
    throw std::invalid_argument("substitution needs one image per variable");
  if (images.empty()) throw std::invalid_argument("substitution into a ring without variables");
  const RingPtr& target = images.front().ring();
  const PrimeField& F = ring_->field();
  if (!(target->field() == F)) throw std::invalid_argument("ring mismatch");
  // Cache powers per variable on demand.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t var, Exponent e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Polynomial acc(target);
  for (const auto& t : terms_) {
    Polynomial v = Polynomial::constant(target, 1).scaled(t.coef);
    for (std::size_t i = 0; i < images.size() && !v.is_zero(); ++i)
      if (t.mono[i] != 0) v = v * power(i, t.mono[i]);
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->num_vars()) throw std::out_of_range("variable index out of range");
  const PrimeField& F = ring_->field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Exponent e = t.mono[var];
    if (e == 0) continue;
    std::vector<Exponent> exps = t.mono.exponents();
    exps[var] -= 1;
    out.push_back({F.mul(t.coef, F.from_int(e)), Monomial(std::move(exps))});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::reinterpret(RingPtr ring) const {
  if (ring->num_vars() != ring_->num_vars() || !(ring->field() == ring_->field()))
    throw std::invalid_argument("ring mismatch");
  return from_terms(std::move(ring), terms_);
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!(*ring_ == *other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coef != other.terms_[i].coef || !(terms_[i].mono == other.terms_[i].mono))
      return false;
  return true;
}

// ------------------------------------------------------------- text / json

std::string to_text(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  const PrimeField& F = ring_->field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = F.to_signed(t.coef);
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += lmflat::poly::to_text(*ring_, t.mono);
    }
  }
  return out;
}

namespace {

class TextParser {
public:
  TextParser(const RingPtr& ring, std::string_view s) : ring_(ring), s_(s) {}

  Polynomial parse() {
    const PrimeField& F = ring_->field();
    std::vector<Term> terms;
    skip_ws();
    if (pos_ >= s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      bool negative = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        negative = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = parse_term();
      if (negative) t.coef = F.neg(t.coef);
      terms.push_back(std::move(t));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

private:
  Term parse_term() {
    const PrimeField& F = ring_->field();
    std::vector<Exponent> exps(ring_->num_vars(), 0);
    PrimeField::Element coef = 1;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) fail("unexpected end of input");
      char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coef = F.mul(coef, F.from_int(static_cast<std::int64_t>(parse_uint())));
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
          ++pos_;
        std::string_view name = s_.substr(start, pos_ - start);
        auto idx = ring_->index_of(name);
        if (!idx) fail("unknown variable '" + std::string(name) + "'");
        std::uint64_t e = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip_ws();
          e = parse_uint();
        }
        if (exps[*idx] + e > 0xffff) fail("exponent too large");
        exps[*idx] = static_cast<Exponent>(exps[*idx] + e);
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {coef, Monomial(std::move(exps))};
  }

  std::uint64_t parse_uint() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (1ull << 62)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse_text(RingPtr ring, std::string_view text) {
  return TextParser(ring, text).parse();
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : terms_)
    arr.push_back({ring_->field().to_signed(t.coef), t.mono.exponents()});
  return arr;
}

Polynomial Polynomial::from_json(RingPtr ring, const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_array())
      throw std::invalid_argument("polynomial JSON term must be [coef, [exponents]]");
    std::vector<Exponent> exps;
    for (const auto& e : entry[1]) {
      if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<std::int64_t>() >= 0))
        throw std::invalid_argument("exponents must be nonnegative integers");
      exps.push_back(e.get<Exponent>());
    }
    if (exps.size() != ring->num_vars())
      throw std::invalid_argument("exponent vector has wrong length");
    terms.push_back({ring->field().from_int(entry[0].get<std::int64_t>()), Monomial(std::move(exps))});
  }
  return from_terms(std::move(ring), std::move(terms));
}

} // namespace lmflat::poly
