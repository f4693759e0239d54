#pragma once

// Slow, independent recomputations used to cross-check the main algorithms.

#include "lmflat/alcove.hpp"
#include "lmflat/tableau.hpp"
#include "lmflat/weylc.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace lmflat::oracle {

using weyl::WeylElement;

/// Word length from tau^coset by breadth-first search over s_0..s_r.
std::unordered_map<WeylElement, int, weyl::WeylHash> bfs_lengths(int rank, int radius, int coset);

/// All products of subwords of the word, each times `remainder`. By the
/// subword property this is the Bruhat interval below a reduced word.
std::vector<WeylElement> subword_products(const std::vector<int>& word, const WeylElement& remainder);

/// Every choice of 2r levels inside the box, filtered by is_permissible.
/// Only feasible for r <= 2.
std::vector<alcove::Alcove> brute_force_permissible(int rank);

/// Lexicographically smallest valid T among all subsets, or nullopt.
std::optional<tableau::IndexSet> brute_force_lambda(const tableau::IndexSet& I,
                                                    const tableau::IndexSet& J, int r);

/// Number of k-subsets of {1..2r} whose (I, J) split admits some T, found by
/// trying all subsets T. Squared, this counts doubly admissible minors.
std::size_t brute_force_admissible_sides(int r, int k);

} // namespace lmflat::oracle
