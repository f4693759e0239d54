#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace lmflat::weyl {

/// Element of the extended affine Weyl group of GSp_{2r}, stored in
/// 2r-coordinate form: a permutation commuting with j -> 2r-1-j (0-based)
/// and a translation whose mirrored pairs all sum to the similitude c.
///
/// Acting on exponent vectors: (w.y)[perm[j]] = y[j] + trans[perm[j]].
class WeylElement {
public:
  /// Validates both invariants; throws std::invalid_argument.
  WeylElement(int rank, std::vector<int> perm, std::vector<int> trans);

  static WeylElement identity(int rank);

  int rank() const noexcept { return rank_; }
  int dim() const noexcept { return 2 * rank_; }
  /// 0-based: perm()[j] is the image of coordinate j.
  const std::vector<int>& perm() const noexcept { return perm_; }
  const std::vector<int>& trans() const noexcept { return trans_; }
  int similitude() const noexcept { return c_; }

  bool is_identity() const noexcept;
  bool is_translation() const noexcept;

  std::vector<int> apply(const std::vector<int>& y) const;

  auto operator<=>(const WeylElement&) const = default;
  bool operator==(const WeylElement&) const = default;

  /// {perm: 1-based, trans, c}
  nlohmann::json to_json() const;
  static WeylElement from_json(const nlohmann::json& j);
  std::string to_string() const;

private:
  WeylElement() = default;
  friend WeylElement compose(const WeylElement&, const WeylElement&);
  friend WeylElement inverse(const WeylElement&);

  int rank_ = 0;
  std::vector<int> perm_;
  std::vector<int> trans_;
  int c_ = 0;
};

struct WeylHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

/// u * w, acting as u(w(.)). Throws on rank mismatch.
WeylElement compose(const WeylElement& u, const WeylElement& w);
WeylElement inverse(const WeylElement& w);
WeylElement power(const WeylElement& w, int n);

/// s_0..s_r. s_0 is the reflection in the wall x_1 = -1/2 of the base alcove.
WeylElement simple_reflection(int i, int rank);

/// Length-0 generator of the similitude-1 coset; tau^2 is the translation by
/// the all-ones vector.
WeylElement tau(int rank);

/// Throws std::invalid_argument unless lambda(j) + lambda(2r+1-j) is constant.
WeylElement translation(const std::vector<int>& lambda);

/// Number of affine root hyperplanes separating the base alcove from its
/// image. Length-0 elements (powers of tau) give 0.
int length(const WeylElement& w);

struct ReducedWord {
  std::vector<int> letters;
  WeylElement remainder;
};

/// w = s_{letters[0]} * ... * s_{letters[k-1]} * remainder, with
/// k = length(w) and the smallest descent index taken at each step.
ReducedWord reduced_word(const WeylElement& w);

/// Indices i with length(s_i w) < length(w), ascending.
std::vector<int> left_descents(const WeylElement& w);

/// False across different similitude cosets.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

/// Orbit under the finite group W_r, sorted ascending.
std::vector<std::vector<int>> finite_orbit(const std::vector<int>& mu);

inline constexpr int kDefaultBallRadius = 8;

/// All elements tau^c * v with length(v) <= radius, in BFS order.
std::vector<WeylElement> ball(int rank, int radius = kDefaultBallRadius, int coset = 0);

/// Grammar: factor ('*' factor)*, factor = e | tau | s<i> | t:<a,b,...>.
WeylElement parse_element(std::string_view text, int rank);

} // namespace lmflat::weyl
