#include "crsym/linsolve.hpp"

#include <algorithm>
#include <numeric>

namespace crsym {

namespace {

Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

void make_primitive(std::vector<Int>& v) {
  Int g = content(v);
  if (g == 0 || g == 1) return;
  for (Int& x : v) x /= g;
}

}  // namespace

void LinSys::add_row(const std::vector<Rat>& row) {
  Int l = 1;
  for (const Rat& x : row) l = lcm(l, rat_den(x));
  std::vector<Int> iv(row.size());
  for (size_t j = 0; j < row.size(); ++j)
    iv[j] = rat_num(row[j]) * (l / rat_den(row[j]));
  add_row_int(std::move(iv));
}

void LinSys::add_row_int(std::vector<Int> row) {
  // Reduce against existing pivots.
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Int c = row[pivots_[i]];
    if (c == 0) continue;
    const Int p = rows_[i][pivots_[i]];
    for (size_t j = 0; j < ncols_; ++j) row[j] = row[j] * p - rows_[i][j] * c;
    make_primitive(row);
  }
  size_t piv = ncols_;
  for (size_t j = 0; j < ncols_; ++j)
    if (row[j] != 0) { piv = j; break; }
  if (piv == ncols_) return;  // dependent row
  if (row[piv] < 0)
    for (Int& x : row) x = -x;
  // Eliminate the new pivot column from existing rows.
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Int c = rows_[i][piv];
    if (c == 0) continue;
    for (size_t j = 0; j < ncols_; ++j)
      rows_[i][j] = rows_[i][j] * row[piv] - row[j] * c;
    make_primitive(rows_[i]);
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
}

std::vector<std::vector<Rat>> LinSys::kernel_basis() const {
  std::vector<bool> is_pivot(ncols_, false);
  for (size_t p : pivots_) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(ncols_, Rat(0));
    v[f] = 1;
    for (size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i][f] != 0)
        v[pivots_[i]] = -Rat(rows_[i][f], rows_[i][pivots_[i]]);
    // Scale to a primitive integer vector, first nonzero entry positive.
    Int l = 1;
    for (const Rat& x : v) l = lcm(l, rat_den(x));
    std::vector<Int> iv(ncols_);
    for (size_t j = 0; j < ncols_; ++j)
      iv[j] = rat_num(v[j]) * (l / rat_den(v[j]));
    make_primitive(iv);
    for (size_t j = 0; j < ncols_; ++j)
      if (iv[j] != 0) {
        if (iv[j] < 0)
          for (Int& x : iv) x = -x;
        break;
      }
    for (size_t j = 0; j < ncols_; ++j) v[j] = Rat(iv[j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve_linear(
    const std::vector<std::vector<Rat>>& rows, const std::vector<Rat>& rhs,
    size_t ncols) {
  std::vector<std::vector<Rat>> m;
  for (size_t i = 0; i < rows.size(); ++i) {
    auto r = rows[i];
    r.push_back(rhs[i]);
    m.push_back(std::move(r));
  }
  std::vector<size_t> pivcol;
  size_t prow = 0;
  for (size_t col = 0; col < ncols && prow < m.size(); ++col) {
    size_t sel = m.size();
    for (size_t i = prow; i < m.size(); ++i)
      if (m[i][col] != 0) { sel = i; break; }
    if (sel == m.size()) continue;
    std::swap(m[prow], m[sel]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == prow || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[prow][col];
      for (size_t j = col; j <= ncols; ++j) m[i][j] -= f * m[prow][j];
    }
    pivcol.push_back(col);
    ++prow;
  }
  for (size_t i = prow; i < m.size(); ++i)
    if (m[i][ncols] != 0) return std::nullopt;
  std::vector<Rat> x(ncols, Rat(0));
  for (size_t i = 0; i < prow; ++i) x[pivcol[i]] = m[i][ncols] / m[i][pivcol[i]];
  return x;
}

bool in_span(const std::vector<std::vector<Rat>>& basis,
             const std::vector<Rat>& v) {
  if (basis.empty()) return std::all_of(v.begin(), v.end(),
                                        [](const Rat& x) { return x == 0; });
  size_t n = v.size();
  // Solve B^T c = v.
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(basis.size()));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < basis.size(); ++k) rows[i][k] = basis[k][i];
  return solve_linear(rows, v, basis.size()).has_value();
}

}  // namespace crsym
