#pragma once

// Dense exact matrices and Gaussian elimination.  Column-vector convention:
// a map K^c -> K^r is an r x c matrix acting by v |-> M v.  The reduced row
// echelon form here is the unique one, which makes subspace equality a plain
// grid comparison.

#include <leibniz/field.hpp>

#include <algorithm>
#include <optional>
#include <utility>

namespace leibniz {

template <ScalarType K>
struct Mat {
  int rows = 0;
  int cols = 0;
  FieldSpec field;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c, FieldSpec fs)
      : rows(r), cols(c), field(fs), a(static_cast<std::size_t>(r) * c) {}

  K& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const K& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  static Mat identity(int n, FieldSpec fs) {
    Mat m(n, n, fs);
    for (int i = 0; i < n; ++i) m.at(i, i) = scalar_of<K>(fs, 1);
    return m;
  }

  bool is_zero() const {
    for (const K& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols, rows, field);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols != o.rows) throw error("matrix product shape mismatch");
    Mat r(rows, o.cols, field);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const K& f = at(i, k);
        if (f.is_zero()) continue;
        for (int j = 0; j < o.cols; ++j) {
          if (o.at(k, j).is_zero()) continue;
          r.at(i, j) += f * o.at(k, j);
        }
      }
    return r;
  }

  Mat operator-(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw error("matrix shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (static_cast<int>(v.size()) != cols)
      throw error("matrix apply shape mismatch");
    std::vector<K> r(rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        if (at(i, j).is_zero() || v[j].is_zero()) continue;
        r[i] += at(i, j) * v[j];
      }
    return r;
  }

  std::vector<K> row(int i) const {
    return std::vector<K>(a.begin() + static_cast<std::size_t>(i) * cols,
                          a.begin() + static_cast<std::size_t>(i + 1) * cols);
  }
  std::vector<K> col(int j) const {
    std::vector<K> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }

  static Mat from_rows(const std::vector<std::vector<K>>& rs, int ncols,
                       FieldSpec fs) {
    Mat m(static_cast<int>(rs.size()), ncols, fs);
    for (int i = 0; i < m.rows; ++i) {
      if (static_cast<int>(rs[i].size()) != ncols)
        throw error("row length mismatch");
      for (int j = 0; j < ncols; ++j) m.at(i, j) = rs[i][j];
    }
    return m;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// v += f * w
template <ScalarType K>
void axpy(std::vector<K>& v, const K& f, const std::vector<K>& w) {
  if (f.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (w[i].is_zero()) continue;
    v[i] += f * w[i];
  }
}

template <ScalarType K>
bool is_zero_vec(const std::vector<K>& v) {
  for (const K& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Incremental row-echelon builder.  Rows are kept fully reduced (RREF
// invariant) and ordered by pivot column, so the accumulated span has a
// canonical basis at every step regardless of insertion order.
template <ScalarType K>
class SpanBuilder {
 public:
  SpanBuilder(int ambient, FieldSpec fs) : ambient_(ambient), field_(fs) {}

  // Reduce v against the current basis; the residual is written in place.
  void reduce(std::vector<K>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const K& f = v[pivots_[r]];
      if (f.is_zero()) continue;
      axpy(v, -f, rows_[r]);
    }
  }

  bool contains(std::vector<K> v) const {
    reduce(v);
    return is_zero_vec(v);
  }

  // Insert a vector; returns true if the rank grew.
  bool add(std::vector<K> v) {
    if (static_cast<int>(v.size()) != ambient_)
      throw error("span ambient mismatch");
    reduce(v);
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!v[j].is_zero()) {
        p = j;
        break;
      }
    if (p < 0) return false;
    K inv = scalar_of<K>(field_, 1) / v[p];
    for (K& x : v) x *= inv;
    // reduce existing rows at the new pivot column
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const K& f = rows_[r][p];
      if (f.is_zero()) continue;
      axpy(rows_[r], -f, v);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }
  const std::vector<int>& pivots() const { return pivots_; }

  Mat<K> basis() const {
    return Mat<K>::from_rows(rows_, ambient_, field_);
  }

 private:
  int ambient_;
  FieldSpec field_;
  std::vector<std::vector<K>> rows_;
  std::vector<int> pivots_;
};

template <ScalarType K>
struct RrefResult {
  Mat<K> mat;                // zero rows dropped
  std::vector<int> pivots;   // strictly increasing
};

template <ScalarType K>
RrefResult<K> rref(const Mat<K>& m) {
  SpanBuilder<K> sb(m.cols, m.field);
  for (int i = 0; i < m.rows; ++i) sb.add(m.row(i));
  return {sb.basis(), sb.pivots()};
}

template <ScalarType K>
int rank_of(const Mat<K>& m) {
  return rref(m).mat.rows;
}

// Basis (RREF rows in K^cols) of { v : M v = 0 }.
template <ScalarType K>
Mat<K> nullspace(const Mat<K>& m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> rows;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(m.cols);
    v[f] = scalar_of<K>(m.field, 1);
    for (int i = 0; i < r.mat.rows; ++i) v[r.pivots[i]] = -r.mat.at(i, f);
    rows.push_back(std::move(v));
  }
  auto basis = Mat<K>::from_rows(rows, m.cols, m.field);
  return rref(basis).mat;  // canonical form
}

// One solution of M x = b, or nullopt.  With reversed_free = true the free
// coordinates are chosen by eliminating columns right-to-left, which yields a
// second deterministic preimage rule (used to cross-check connecting maps).
template <ScalarType K>
std::optional<std::vector<K>> solve(const Mat<K>& m, const std::vector<K>& b,
                                    bool reversed_free = false) {
  if (static_cast<int>(b.size()) != m.rows) throw error("solve shape mismatch");
  // eliminate on the augmented transpose-free layout: rows of [M | b]
  Mat<K> aug(m.rows, m.cols + 1, m.field);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j)
      aug.at(i, reversed_free ? m.cols - 1 - j : j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto r = rref(aug);
  std::vector<K> x(m.cols);
  for (int i = 0; i < r.mat.rows; ++i) {
    if (r.pivots[i] == m.cols) return std::nullopt;  // 0 = 1 row
    int j = reversed_free ? m.cols - 1 - r.pivots[i] : r.pivots[i];
    x[j] = r.mat.at(i, m.cols);
  }
  return x;
}

}  // namespace leibniz
