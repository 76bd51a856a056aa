#include "opbw/linalg.hpp"

#include <algorithm>

namespace opbw {

Mat rref(Mat rows) {
  if (rows.empty()) return rows;
  size_t cols = 0;
  for (const Vec& r : rows) cols = std::max(cols, r.size());
  for (Vec& r : rows) r.resize(cols, Rat(0));

  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    Rat inv = Rat(1) / rows[pivot_row][col];
    for (size_t c = col; c < cols; ++c) rows[pivot_row][c] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

int rank(const Mat& rows) { return static_cast<int>(rref(rows).size()); }

bool spans_equal(const Mat& a, const Mat& b) { return rref(a) == rref(b); }

bool in_span(const Mat& echelon, Vec v) {
  size_t cols = v.size();
  for (const Vec& r : echelon) cols = std::max(cols, r.size());
  v.resize(cols, Rat(0));
  for (const Vec& row : echelon) {
    size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size() || p >= cols) continue;
    if (v[p] == 0) continue;
    Rat f = v[p];
    for (size_t c = p; c < row.size(); ++c) v[c] -= f * row[c];
  }
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

Mat nullspace(const Mat& rows, int cols) {
  Mat e = rref(rows);
  for (Vec& r : e) r.resize(cols, Rat(0));
  std::vector<int> pivot_col_of_row(e.size());
  std::vector<bool> is_pivot(cols, false);
  for (size_t r = 0; r < e.size(); ++r) {
    int p = 0;
    while (p < cols && e[r][p] == 0) ++p;
    pivot_col_of_row[r] = p;
    if (p < cols) is_pivot[p] = true;
  }
  Mat basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < e.size(); ++r) {
      int p = pivot_col_of_row[r];
      if (p < cols) v[p] = -e[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace opbw
