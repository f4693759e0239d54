#pragma once

#include "lmflat/field.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lmflat::linalg {

using poly::PrimeField;
using Element = PrimeField::Element;

/// Sparse row: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Element>>;

/// Incremental row echelon form over F_p. Pivots are the smallest column of
/// each stored row; stored rows are normalized to pivot value 1.
class RowEchelon {
public:
  explicit RowEchelon(PrimeField field) : field_(field) {}

  /// Reduces the row against the stored pivots; stores it and returns true if
  /// it was independent of everything inserted so far.
  bool insert(SparseRow row);
  std::size_t rank() const noexcept { return pivots_.size(); }

private:
  PrimeField field_;
  std::unordered_map<std::size_t, SparseRow> pivots_;
};

/// row + c * other (both sorted); drops cancelled entries.
SparseRow axpy(const PrimeField& field, const SparseRow& row, Element c, const SparseRow& other);

std::size_t rank(const PrimeField& field, const std::vector<SparseRow>& rows);

/// Indices of a minimal linearly dependent subset (a circuit), or nullopt if
/// the rows are independent. The circuit ends with the first row that reduces
/// to zero against its predecessors.
std::optional<std::vector<std::size_t>> find_dependency(const PrimeField& field,
                                                        const std::vector<SparseRow>& rows);

} // namespace lmflat::linalg
