#pragma once

#include "lmflat/alcove.hpp"
#include "lmflat/groebner.hpp"
#include "lmflat/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lmflat::local {

using poly::Polynomial;
using poly::RingPtr;

inline constexpr std::uint32_t kDefaultPrime = 101;
inline constexpr std::uint32_t kSecondaryPrime = 32003;

/// How the uniformizer is treated: a ring variable, or substituted by 0 or 1
/// before any Groebner computation.
enum class Fibre { Variable, Special, Generic };
std::string to_string(Fibre f);
Fibre parse_fibre(std::string_view tag);

/// Named variables plus generators; notes[k] says where generators[k] came
/// from (which matrix entry of which product).
struct IdealPresentation {
  std::string name;
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::vector<std::string> notes;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// k[c_{mu nu}] / (C J C^t, C^t J C) with C of size 2m. Strictly upper
/// entries of both skew products, in row-major order, CJC^t first.
IdealPresentation ring_R(int m, std::uint32_t prime = kDefaultPrime);

/// Block sizes of the chart for the pair (i, 2r-i). The case r > 2i uses the
/// layout of (r, r-i): h = max(i, r-i), s = 2h - r, t = 2(r - h).
struct ChartLayout {
  int r = 0;
  int i = 0;
  int h = 0;
  int s = 0;
  int t = 0;

  /// Coordinates chosen freely besides the singular block: all of A_3 and
  /// the part of A_2 on or above the secondary diagonal.
  int affine_factor() const { return t * s + s * (s + 1) / 2; }
  int chart_dimension() const { return r * (r + 1) / 2; }
  int block_dimension() const { return chart_dimension() - affine_factor(); }
};

/// Throws std::out_of_range unless 1 <= i <= r-1.
ChartLayout chart_layout(int r, int i);

/// +1 when mu, nu <= h or mu, nu >= h+1, else -1 (1-based indices).
int epsilon(const ChartLayout& L, int mu, int nu);

/// Generators B4 A4 - pi, A4 B4 - pi, B2 - A2 + B3 A3, A1 - B3 A4 over the
/// variables a_{mu nu} (row-major) and pi (last, unless substituted), with
/// b_{mu nu} = eps_{mu nu} a_{r-nu+1, r-mu+1}.
IdealPresentation chart_ideal(int r, int i, Fibre fibre, std::uint32_t prime = kDefaultPrime);

/// B1 + B4 A3, pi B2 - A1 B1 - pi A2, pi B3 - A1 B4, pi A3 + A4 B1 in the
/// ring of chart_ideal(r, i, Fibre::Variable).
IdealPresentation redundant_equations(int r, int i, std::uint32_t prime = kDefaultPrime);

/// B4 A4 - pi and A4 B4 - pi alone, over the entries of A_4.
IdealPresentation singular_block(int r, int i, Fibre fibre, std::uint32_t prime = kDefaultPrime);

/// Big-cell chart of the Lagrangian Grassmannian (index 0 or r):
/// a_{mu nu} = a_{r-nu+1, r-mu+1}.
IdealPresentation grassmannian_chart(int r, int index, std::uint32_t prime = kDefaultPrime);

/// Symplectic adjoint -J A^t J of a square matrix of even size.
std::vector<std::vector<Polynomial>> symplectic_adjoint(const std::vector<std::vector<Polynomial>>& A);

struct FibreReport {
  ChartLayout layout;
  int dim_special = 0;
  int dim_generic = 0;
  int block_dim_special = 0;
  int block_dim_generic = 0;
  /// 2(i-r)(2i-r) + (2i-r)(2i-r+1)/2, the closed form with the opposite
  /// sign in the first term; reported next to the counted value.
  int affine_factor_alt = 0;
  std::vector<std::size_t> hilbert_special;

  bool dimensions_agree() const;
  nlohmann::ordered_json to_json() const;
};

FibreReport fibre_report(int r, int i, unsigned max_degree, std::uint32_t prime = kDefaultPrime);

/// Same for the Grassmannian chart.
FibreReport grassmannian_fibre_report(int r, int index, unsigned max_degree,
                                      std::uint32_t prime = kDefaultPrime);

struct SampleReport {
  int trials = 0;
  int vanishing = 0;
  int corank_ok = 0;
  int expected_corank = 0;
  std::vector<std::string> failures;

  bool passed() const { return vanishing == trials && corank_ok == trials; }
  nlohmann::ordered_json to_json() const;
};

inline constexpr int kTransvections = 20;

/// Random points of the generic fibre (pi = 1): A_4 a product of symplectic
/// transvections, A_3 and the upper part of A_2 uniform, the rest solved
/// from the chart equations. Checks that every generator vanishes and that
/// the Jacobian has corank r(r+1)/2. `corrupt` adds 1 to that generator.
SampleReport generic_point_sample(int r, int i, int trials, std::uint64_t seed,
                                  std::uint32_t prime = kDefaultPrime,
                                  std::optional<std::size_t> corrupt = std::nullopt,
                                  int transvections = kTransvections);

/// A point of the generic fibre built with A_4 = 1 and all free
/// coordinates 0.
std::vector<poly::PrimeField::Element> base_point(int r, int i, std::uint32_t prime = kDefaultPrime);

// Extreme charts.

/// Half-open cyclic interval [from, to) in Z/nZ; empty when from == to.
bool in_cyclic_interval(int x, int from, int to, int n);

struct ExtremeEntry {
  int lambda = 0;  // 1-based
  int mu = 0;      // 1-based
  int i_lambda = 0;
  int j_mu = 0;
  /// For i = 0..2r-1: true when a^i = a^{i_lambda - 1}, false when it is pi
  /// times that coordinate.
  std::vector<bool> free_at;
  int partner_lambda = 0;
  int partner_mu = 0;
};

struct ChartReport {
  int rank = 0;
  std::vector<int> x0;
  std::vector<int> I;  // x_0(i) = 0
  std::vector<int> J;  // x_0(j) = 1
  std::vector<ExtremeEntry> entries;
  int free_orbits = 0;
  bool pairing_lemma = false;
  bool index_identities = false;
  /// Every step and duality equation vanishes after substituting the
  /// recurrence solution.
  bool substitution_zero = false;
  /// Step equations of the form pi a^i = a^{i+1} and a^i = pi a^{i+1} occur
  /// exactly once each per (lambda, mu), at i = i_lambda - 1 and
  /// i = j_mu - 1.
  bool step_cases_once = false;
  std::vector<std::string> witnesses;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

/// Throws std::invalid_argument when x is not an extreme alcove.
ChartReport extreme_chart(int r, const alcove::Alcove& x, std::uint32_t prime = kDefaultPrime);

} // namespace lmflat::local
