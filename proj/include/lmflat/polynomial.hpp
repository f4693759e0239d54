#pragma once

#include "lmflat/field.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace lmflat::poly {

using Exponent = std::uint16_t;

/// Exponent vector over a fixed ordered variable set, with cached total degree.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent e = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  unsigned degree() const noexcept { return degree_; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  bool is_coprime(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  /// Lexicographic on raw exponents; for containers only, not a term order.
  auto operator<=>(const Monomial& other) const { return exps_ <=> other.exps_; }
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

enum class MonomialOrder { DegRevLex, DegLex, Lex };

/// Three-way comparison in the given order: positive when a > b.
int compare(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept;
bool is_graded(MonomialOrder order) noexcept;
std::string to_string(MonomialOrder order);
MonomialOrder parse_order(std::string_view tag);

/// All monomials of total degree d in n variables, descending in degrevlex
/// (which for a fixed degree is also the order used for column indexing).
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);
/// Binomial(n + d - 1, d) without enumeration; saturates at SIZE_MAX.
std::size_t count_monomials_of_degree(std::size_t num_vars, unsigned degree);

/// Polynomial ring over a prime field: ordered variable names plus a term order.
class Ring {
public:
  Ring(std::vector<std::string> names, PrimeField field,
       MonomialOrder order = MonomialOrder::DegRevLex);

  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const PrimeField& field() const noexcept { return field_; }
  MonomialOrder order() const noexcept { return order_; }

  int compare(const Monomial& a, const Monomial& b) const noexcept {
    return poly::compare(order_, a, b);
  }

  bool operator==(const Ring& other) const = default;

private:
  std::vector<std::string> names_;
  PrimeField field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::uint32_t prime,
                  MonomialOrder order = MonomialOrder::DegRevLex);

struct Term {
  PrimeField::Element coef;
  Monomial mono;
};

/// Sparse polynomial. Terms are kept strictly descending in the ring's order
/// with nonzero coefficients; every operation maintains that invariant.
class Polynomial {
public:
  using Element = PrimeField::Element;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scaled(Element c) const;
  Polynomial times_term(Element c, const Monomial& m) const;
  /// Scales so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;
  /// this + c * m * other, computed by a single merge.
  Polynomial add_scaled(Element c, const Monomial& m, const Polynomial& other) const;

  Element evaluate(std::span<const Element> point) const;
  /// Substitutes images[i] for variable i; images live in the target ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  Polynomial derivative(std::size_t var) const;
  /// Same terms interpreted in another ring with the same variables and field
  /// (typically a different term order).
  Polynomial reinterpret(RingPtr ring) const;

  bool operator==(const Polynomial& other) const;

  /// Text form `c*x^e*y - z + 3`, deterministic term order.
  std::string to_text() const;
  static Polynomial parse_text(RingPtr ring, std::string_view text);
  /// JSON form [[coef, [e_1, ..., e_n]], ...].
  nlohmann::json to_json() const;
  static Polynomial from_json(RingPtr ring, const nlohmann::json& j);

private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string to_text(const Ring& ring, const Monomial& m);

} // namespace lmflat::poly
