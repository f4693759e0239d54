#include "lmflat/field.hpp"

#include <stdexcept>
#include <string>

namespace lmflat::poly {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("modulus must be a prime with 2 < p < 2^31, got " +
                                std::to_string(p));
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const noexcept {
  Element result = 1 % p_;
  Element base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in prime field");
  return pow(a, p_ - 2);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

std::int64_t PrimeField::to_signed(Element a) const noexcept {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

bool PrimeField::is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

} // namespace lmflat::poly
