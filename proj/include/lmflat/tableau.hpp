#pragma once

#include "lmflat/groebner.hpp"
#include "lmflat/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lmflat::tableau {

using poly::Polynomial;
using poly::RingPtr;
using IndexSet = std::vector<int>;  // sorted ascending

/// A <= B: |A| >= |B| and the mu-th smallest of A is at most that of B for
/// mu = 1..|B|.
bool set_leq(const IndexSet& A, const IndexSet& B);

struct Admissibility {
  bool admissible = false;
  IndexSet Gamma;
  /// Componentwise smallest T in {1..r} - (I u J) with |T| = |Gamma| and
  /// Gamma <= T; empty when not admissible.
  IndexSet Lambda;
};

/// Lambda is built greedily: each gamma in increasing order takes the
/// smallest unused element >= gamma. Greedy succeeds exactly when some T
/// exists.
Admissibility is_admissible(const IndexSet& I, const IndexSet& J, int r);

/// Row (or column) data of a minor of the 2r x 2r matrix. The index set is
/// I u (n+1-J), n = 2r.
struct IndexData {
  IndexSet I, J, Gamma, Lambda;
  /// I u (n+1-J'), J' = (J - Gamma) u Lambda.
  IndexSet top;
  /// I' u (n+1-J), I' = (I - Gamma) u Lambda.
  IndexSet bottom;
  /// n+1-j for j in J - Gamma (j ascending), then I - Gamma descending,
  /// then the pairs n+1-gamma, gamma for gamma in Gamma descending.
  std::vector<int> expanded;

  bool operator==(const IndexData&) const = default;
};

/// nullopt when (I, J) is not admissible.
std::optional<IndexData> make_index_data(const IndexSet& I, const IndexSet& J, int r);
/// Splits a subset of {1..2r} into (I, J).
std::optional<IndexData> index_data_of(const IndexSet& indices, int r);

/// Doubly admissible minor. Rows are listed in expanded order, columns in
/// the reverse of their expanded order (so (r..1 | 1..r) is the minor f).
struct MinorSpec {
  int r = 0;
  IndexData rows, cols;

  int size() const { return static_cast<int>(rows.expanded.size()); }
  std::vector<int> row_tuple() const { return rows.expanded; }
  std::vector<int> col_tuple() const;
  bool operator==(const MinorSpec&) const = default;

  /// `(4,1|1,2)`: row tuple | column tuple.
  std::string to_string() const;
  nlohmann::ordered_json to_json() const;
};

/// f = (r, ..., 1 | 1, ..., r).
MinorSpec f_minor(int r);

/// All doubly admissible minors of size k, ordered by row set then column
/// set (lexicographic on the sorted index sets). Empty when k > r:
/// admissibility needs |I| + |J| + |Gamma| <= r.
std::vector<MinorSpec> enumerate_doubly_admissible(int r, int k);

/// bottom_rows(P) <= top_rows(P') and bottom_cols(P) <= top_cols(P').
bool tableau_leq(const MinorSpec& P, const MinorSpec& Q);

/// Every doubly admissible minor of a fixed r (sizes 1..r) with the <=
/// relation cached.
class MinorPoset {
public:
  explicit MinorPoset(int r);

  int rank() const noexcept { return r_; }
  const std::vector<MinorSpec>& minors() const noexcept { return minors_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * minors_.size() + b] != 0; }

  /// Number of tableaux of total degree d (the empty tableau counts at d=0).
  std::uint64_t count(unsigned d) const;
  /// Tableaux of total degree d as index chains, in lexicographic order.
  std::vector<std::vector<std::size_t>> tableaux(unsigned d) const;

private:
  int r_;
  std::vector<MinorSpec> minors_;
  std::vector<char> leq_;
};

std::uint64_t count_tableaux(int r, unsigned d);

/// Determinant of the submatrix of C = (c_{mu nu}) on the listed rows and
/// columns, in the ring of ring_R(r) (variables c_mu_nu, row-major).
Polynomial evaluate(const MinorSpec& P, const RingPtr& ring);
/// Product of the minors; 1 for the empty tableau.
Polynomial phi(const std::vector<MinorSpec>& T, const RingPtr& ring);

struct BasisReport {
  int r = 0;
  unsigned d = 0;
  std::uint64_t tableaux = 0;
  std::size_t hilbert = 0;
  std::size_t rank = 0;
  /// Tableaux forming a dependent subset, when rank < tableaux.
  std::vector<std::string> dependent;

  bool passed() const { return tableaux == hilbert && rank == tableaux; }
  nlohmann::ordered_json to_json() const;
};

/// Compares the tableau count with the Hilbert function of ring_R(r) in
/// degree d and checks that the normal forms of phi(T) are independent.
BasisReport verify_basis(int r, unsigned d, std::uint32_t prime);
BasisReport verify_basis(const MinorPoset& poset, const poly::GroebnerBasis& G, unsigned d);

struct NzdReport {
  int r = 0;
  std::vector<poly::MultMapRank> ranks;  // d = 0..d_max
  bool f_is_minimum = false;
  std::vector<std::string> witnesses;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

/// Multiplication by f is injective on R_d for d <= d_max, and f <= P for
/// every doubly admissible P.
NzdReport verify_nzd(int r, unsigned d_max, std::uint32_t prime);
NzdReport verify_nzd(const MinorPoset& poset, const poly::GroebnerBasis& G, unsigned d_max);

} // namespace lmflat::tableau
