#pragma once

#include "lmflat/weylc.hpp"

#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

namespace lmflat::alcove {

using weyl::WeylElement;

/// T-fixed lattice chain (L_i), stored as the exponent vectors y_i of
/// L_i = sum_j t^{y_i(j)} R[[t]] e_j for i = 0..2r-1. The chain continues
/// periodically by y_{i+2r} = y_i - 1.
struct Alcove {
  int rank = 0;
  std::vector<std::vector<int>> levels;

  auto operator<=>(const Alcove&) const = default;
  bool operator==(const Alcove&) const = default;

  /// Kottwitz-Rapoport vector x_i = 1 - y_i.
  std::vector<int> kr_vector(int i) const;
  /// sum(y_0) / r; 1 for every permissible alcove.
  int similitude() const;

  nlohmann::json to_json() const;
  static Alcove from_json(const nlohmann::json& j);
  std::string to_string() const;
};

/// Exponent vector of the standard lattice lambda_i: -1 on the first i
/// coordinates, 0 elsewhere.
std::vector<int> omega(int rank, int i);

// Individual defining conditions of the permissible set.
bool satisfies_box(const Alcove& a);
bool satisfies_rank(const Alcove& a);
/// Each step removes exactly one unit, including the wrap-around
/// y_{2r-1} -> y_0 - 1.
bool satisfies_chain(const Alcove& a);
bool is_selfdual(const Alcove& a);
bool is_permissible(const Alcove& a);

/// Symplectic dual chain. Level i is k -> -y_{2r-i}(2r+1-k) - (1 - c),
/// where y_{2r} = y_0 - 1 and c is the similitude. Involutive; fixes the
/// standard chain and every permissible alcove.
Alcove dual_alcove(const Alcove& a);

/// The standard chain (omega_i)_i.
Alcove standard_alcove(int rank);

/// (w . omega_i)_i. Throws std::domain_error ("not permissible") when w has
/// similitude other than 1 or the image violates the box condition.
Alcove alcove_of(const WeylElement& w);

/// The 2^r alcoves with x_0 in {0,1}^{2r}, x_0(i) + x_0(2r+1-i) = 1 and
/// x_i = x_0 + (1^i, 0^{2r-i}). Sorted.
std::vector<Alcove> extreme_alcoves(int rank);

/// Translations t_lambda, lambda in the finite orbit of (1^r, 0^r). Sorted
/// so that alcove_of(extreme_translations(r)[k]) == extreme_alcoves(r)[k].
std::vector<WeylElement> extreme_translations(int rank);

/// All alcoves satisfying the box, rank, chain and duality conditions. Sorted.
std::vector<Alcove> enumerate_permissible(int rank);

/// {v : v <= w} in the Bruhat order. Sorted.
std::vector<WeylElement> bruhat_interval(const WeylElement& w);

/// Union of the Bruhat intervals below the extreme translations. Sorted.
std::vector<WeylElement> enumerate_admissible(int rank);

} // namespace lmflat::alcove
