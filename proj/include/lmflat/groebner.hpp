#pragma once

#include "lmflat/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace lmflat::poly {

/// Reduced Groebner basis of the ideal generated by `generators()`, with
/// respect to the term order of the ring. Built by buchberger().
class GroebnerBasis {
public:
  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  /// Monic, sorted by leading monomial descending.
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  std::vector<Monomial> leading_monomials() const;
  bool is_unit_ideal() const noexcept;

  /// True when no leading monomial divides m.
  bool is_standard(const Monomial& m) const noexcept;

  // Statistics of the run that built the basis.
  std::size_t pairs_reduced() const noexcept { return pairs_reduced_; }
  std::size_t pairs_skipped() const noexcept { return pairs_skipped_; }

private:
  friend GroebnerBasis buchberger(std::vector<Polynomial> generators);
  explicit GroebnerBasis(RingPtr ring) : ring_(std::move(ring)) {}

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> basis_;
  std::size_t pairs_reduced_ = 0;
  std::size_t pairs_skipped_ = 0;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, ties broken by pair index) and the Gebauer-Moeller criteria,
/// which subsume the coprime-lcm and chain criteria. Output is deterministic.
/// `ring` is only consulted when `generators` is empty.
GroebnerBasis buchberger(std::vector<Polynomial> generators);
GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> generators);
/// Same ideal, computed in a copy of the ring carrying `order`.
GroebnerBasis buchberger(std::vector<Polynomial> generators, MonomialOrder order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full reduction against an arbitrary divisor list (first divisor wins).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Unique representative of f modulo the ideal. Throws on ring mismatch.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Degree-d monomials divisible by no leading monomial, in descending order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& G, unsigned d);

/// Number of standard monomials of degree d. For a homogeneous ideal this is
/// dim_k (ring/ideal)_d. Requires a graded order (throws otherwise).
std::size_t hilbert_function(const GroebnerBasis& G, unsigned d);

/// Largest number of variables S such that no leading monomial is supported
/// inside S. Returns -1 for the unit ideal.
int krull_dimension(const GroebnerBasis& G);

struct MultMapRank {
  std::size_t domain_dim = 0;
  std::size_t rank = 0;
  bool injective() const noexcept { return rank == domain_dim; }
};

/// Rank of m -> normal_form(f * m) from degree-d standard monomials into the
/// standard monomials of degree d + deg f. f must be homogeneous.
MultMapRank mult_map_rank(const Polynomial& f, const GroebnerBasis& G, unsigned d);

/// Coordinates of homogeneous polynomials of degree d in the degree-d
/// standard monomials of G, after reduction to normal form.
std::vector<std::vector<std::pair<std::size_t, PrimeField::Element>>>
standard_coordinates(const std::vector<Polynomial>& polys, const GroebnerBasis& G, unsigned d);

inline constexpr std::size_t kDefaultEntryCap = 20'000'000;

/// dim (ring/ideal)_d without Groebner bases: the rank of the span of all
/// g*m of degree d inside the degree-d monomials. Generators must be
/// homogeneous. Throws std::length_error when rows * columns exceeds the cap.
std::size_t brute_force_degree_piece(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                     unsigned d, std::size_t entry_cap = kDefaultEntryCap);

} // namespace lmflat::poly
