#pragma once

#include <vector>

#include "crsym/rational.hpp"

namespace crsym {

/// Exact homogeneous linear solver over the rationals.
///
/// Rows are inserted one at a time and reduced against the current echelon
/// with fraction-free (Bareiss-style) integer row operations; every stored
/// row is kept primitive (content 1). The resulting echelon, and hence the
/// kernel basis, does not depend on the insertion order of the rows.
class LinSys {
 public:
  explicit LinSys(size_t ncols) : ncols_(ncols) {}

  size_t ncols() const { return ncols_; }
  size_t rank() const { return rows_.size(); }

  void add_row(const std::vector<Rat>& row);
  void add_row_int(std::vector<Int> row);

  /// Canonical kernel basis: one vector per free column, reduced against
  /// the pivots, scaled to a primitive integer vector whose first nonzero
  /// entry is positive. Vectors are ordered by free column.
  std::vector<std::vector<Rat>> kernel_basis() const;

 private:
  size_t ncols_;
  std::vector<std::vector<Int>> rows_;  // echelon rows, primitive
  std::vector<size_t> pivots_;          // pivot column of each row
};

/// Solve A x = b exactly; returns nullopt if inconsistent. If the system is
/// underdetermined, returns the solution with all free variables zero.
std::optional<std::vector<Rat>> solve_linear(
    const std::vector<std::vector<Rat>>& rows, const std::vector<Rat>& rhs,
    size_t ncols);

/// True iff v lies in the span of the given vectors.
bool in_span(const std::vector<std::vector<Rat>>& basis,
             const std::vector<Rat>& v);

}  // namespace crsym
