#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ffalg/rational.hpp"

namespace ffalg {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact solution of A x = b for square A; nullopt if A is singular.
std::optional<std::vector<Rational>> solve_square(RationalMatrix A, std::vector<Rational> b);

// Sparse vector over Q keyed by column index.
using SparseVector = std::vector<std::pair<int, Rational>>;

// Incremental row echelon form over Z (fraction-free). Rows are scaled to
// primitive integer vectors; the pivot of a row is its smallest column index.
class IntegerEchelon {
 public:
  // Returns true if the row was independent of the rows inserted so far.
  bool insert(const SparseVector& row);
  // True if the row lies in the span of the inserted rows.
  bool contains(const SparseVector& row) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  using Row = std::vector<std::pair<int, Integer>>;
  Row reduce(Row row) const;
  static Row primitive(const SparseVector& row);
  static void normalize(Row& row);

  std::map<int, Row> pivots_;
};

}  // namespace ffalg
