#include "lmflat/linalg.hpp"

#include <map>

namespace lmflat::linalg {

SparseRow axpy(const PrimeField& F, const SparseRow& row, Element c, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j >= other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i >= row.size() || other[j].first < row[i].first) {
      Element v = F.mul(c, other[j].second);
      if (v != 0) out.emplace_back(other[j].first, v);
      ++j;
    } else {
      Element v = F.add(row[i].second, F.mul(c, other[j].second));
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

bool RowEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    row = axpy(field_, row, field_.neg(row.front().second), it->second);
  }
  if (row.empty()) return false;
  Element scale = field_.inv(row.front().second);
  for (auto& [col, v] : row) v = field_.mul(v, scale);
  std::size_t col = row.front().first;
  pivots_.emplace(col, std::move(row));
  return true;
}

std::size_t rank(const PrimeField& field, const std::vector<SparseRow>& rows) {
  RowEchelon ech(field);
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

std::optional<std::vector<std::size_t>> find_dependency(const PrimeField& F,
                                                        const std::vector<SparseRow>& rows) {
  // Each pivot carries the combination of original rows it equals.
  struct Pivot {
    SparseRow row;
    SparseRow combo;
  };
  std::map<std::size_t, Pivot> pivots;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    SparseRow row = rows[k];
    SparseRow combo{{k, 1}};
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      Element c = F.neg(row.front().second);
      row = axpy(F, row, c, it->second.row);
      combo = axpy(F, combo, c, it->second.combo);
    }
    if (row.empty()) {
      // Earlier rows are independent, so the relation is unique and minimal.
      std::vector<std::size_t> circuit;
      for (const auto& [idx, v] : combo) circuit.push_back(idx);
      return circuit;
    }
    Element scale = F.inv(row.front().second);
    for (auto& [c, v] : row) v = F.mul(v, scale);
    for (auto& [c, v] : combo) v = F.mul(v, scale);
    std::size_t col = row.front().first;
    pivots.emplace(col, Pivot{std::move(row), std::move(combo)});
  }
  return std::nullopt;
}

} // namespace lmflat::linalg
