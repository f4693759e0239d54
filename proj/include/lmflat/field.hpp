#pragma once

#include <cstdint>

namespace lmflat::poly {

/// Arithmetic in Z/pZ for a prime 2 < p < 2^31. Elements are stored as
/// canonical residues in [0, p).
class PrimeField {
public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Element add(Element a, Element b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element pow(Element a, std::uint64_t e) const noexcept;
  /// Throws std::domain_error for zero.
  Element inv(Element a) const;

  Element from_int(std::int64_t v) const noexcept;
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Element a) const noexcept;

  bool operator==(const PrimeField&) const = default;

  static bool is_prime(std::uint64_t n) noexcept;

private:
  std::uint32_t p_;
};

} // namespace lmflat::poly
