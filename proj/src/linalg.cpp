// Copyright 2026 The qact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qact/linalg.hpp"

#include <cmath>
#include <string>

namespace qact {

Mat Mat::identity(std::size_t n) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::unit(std::size_t n, std::size_t row, std::size_t col) {
  Mat m(n);
  m(row, col) = Scalar(1);
  return m;
}

Mat Mat::diag(std::initializer_list<Scalar> entries) {
  return diag(std::span<const Scalar>(entries.begin(), entries.size()));
}

Mat Mat::diag(std::span<const Scalar> entries) {
  Mat m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Mat Mat::from_flat(std::size_t n, std::span<const Scalar> flat) {
  if (flat.size() != n * n) {
    fail(ErrorCode::DimensionMismatch, "flat vector of length " + std::to_string(flat.size()) +
                                           " is not " + std::to_string(n) + "x" + std::to_string(n));
  }
  Mat m(n);
  std::copy(flat.begin(), flat.end(), m.data_.begin());
  return m;
}

Mat Mat::block2(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  const std::size_t k = a.n();
  if (b.n() != k || c.n() != k || d.n() != k) fail(ErrorCode::DimensionMismatch, "block sizes differ");
  Mat m(2 * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t col = 0; col < k; ++col) {
      m(r, col) = a(r, col);
      m(r, col + k) = b(r, col);
      m(r + k, col) = c(r, col);
      m(r + k, col + k) = d(r, col);
    }
  }
  return m;
}

Mat Mat::block(std::size_t br, std::size_t bc, std::size_t size) const {
  Mat out(size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) out(r, c) = (*this)(br * size + r, bc * size + c);
  return out;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const { return *this == identity(n_); }

Mat& Mat::operator+=(const Mat& o) {
  if (o.n_ != n_) fail(ErrorCode::DimensionMismatch, "matrix sizes differ");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (o.n_ != n_) fail(ErrorCode::DimensionMismatch, "matrix sizes differ");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.n_ != b.n_) fail(ErrorCode::DimensionMismatch, "matrix sizes differ");
  const std::size_t n = a.n_;
  Mat out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j).addmul(aik, bkj);
      }
    }
  }
  return out;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (v.size() != a.n_) fail(ErrorCode::DimensionMismatch, "vector length differs from matrix size");
  Vec out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i].addmul(a(i, k), v[k]);
  return out;
}

Mat unit4(int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4) fail(ErrorCode::DimensionMismatch, "matrix unit index out of range");
  return Mat::unit(4, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat q_commutator(const Mat& a, const Mat& b, const Scalar& c) { return a * b - c * (b * a); }

Mat sandwich_operator(const Mat& left, const Mat& right) {
  const std::size_t n = left.n();
  if (right.n() != n) fail(ErrorCode::DimensionMismatch, "matrix sizes differ");
  // vec(L X R)[i n + j] = sum_{k,l} L(i,k) X(k,l) R(l,j)
  Mat op(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (left(i, k).is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) {
          if (right(l, j).is_zero()) continue;
          op(i * n + j, k * n + l) = left(i, k) * right(l, j);
        }
    }
  return op;
}

std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    Vec& prow = rows[next];
    if (!prow[c].is_one()) {
      const Scalar inv = prow[c].inverse();
      for (std::size_t k = c; k < cols; ++k)
        if (!prow[k].is_zero()) prow[k] *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][c].is_zero()) continue;
      const Scalar f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!prow[k].is_zero()) rows[r][k].submul(f, prow[k]);
    }
    pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

std::size_t rank(const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(m.n());
  for (std::size_t r = 0; r < m.n(); ++r) {
    Vec row(m.n());
    for (std::size_t c = 0; c < m.n(); ++c) row[c] = m(r, c);
    rows.push_back(std::move(row));
  }
  return rref(rows, m.n()).size();
}

Scalar determinant(const Mat& m) {
  const std::size_t n = m.n();
  Mat a = m;
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Scalar f = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!a(c, k).is_zero()) a(r, k).submul(f, a(c, k));
    }
  }
  return det;
}

Mat inverse(const Mat& m) {
  const std::size_t n = m.n();
  std::vector<Vec> rows(n, Vec(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = m(r, c);
    rows[r][n + r] = Scalar(1);
  }
  auto pivots = rref(rows, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    fail(ErrorCode::Singular, "matrix of size " + std::to_string(n) + " is singular");
  }
  Mat out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = rows[r][n + c];
  return out;
}

// Subspace ------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient_dim, std::vector<Vec> vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) fail(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  s.pivots_ = rref(vectors, ambient_dim);
  s.basis_ = std::move(vectors);
  return s;
}

Subspace Subspace::span(std::span<const Mat> matrices) {
  if (matrices.empty()) fail(ErrorCode::DimensionMismatch, "cannot infer ambient dimension of an empty span");
  const std::size_t n = matrices.front().n();
  std::vector<Vec> vs;
  vs.reserve(matrices.size());
  for (const auto& m : matrices) vs.push_back(m.flatten());
  return span(n * n, std::move(vs));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vec> vs(ambient_dim, Vec(ambient_dim));
  for (std::size_t k = 0; k < ambient_dim; ++k) vs[k][k] = Scalar(1);
  return span(ambient_dim, std::move(vs));
}

void Subspace::check_ambient(std::size_t other) const {
  if (other != ambient_) {
    fail(ErrorCode::DimensionMismatch, "ambient dimensions " + std::to_string(ambient_) + " and " +
                                           std::to_string(other) + " differ");
  }
}

std::vector<Mat> Subspace::basis_matrices() const {
  const auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(ambient_))));
  if (n * n != ambient_) fail(ErrorCode::DimensionMismatch, "ambient dimension is not a square");
  std::vector<Mat> out;
  out.reserve(basis_.size());
  for (const auto& v : basis_) out.push_back(Mat::from_flat(n, v));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  check_ambient(v.size());
  // Reduce against the RREF basis; membership iff the residual vanishes.
  Vec r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar f = r[pivots_[k]];
    if (f.is_zero()) continue;
    for (std::size_t c = pivots_[k]; c < ambient_; ++c)
      if (!basis_[k][c].is_zero()) r[c].submul(f, basis_[k][c]);
  }
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  check_ambient(other.ambient_);
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  check_ambient(other.ambient_);
  std::vector<Vec> vs = basis_;
  vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, std::move(vs));
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_ambient(other.ambient_);
  const std::size_t d1 = dim(), d2 = other.dim();
  if (d1 == 0 || d2 == 0) return Subspace(ambient_);
  // Solve sum a_i s_i - sum b_j t_j = 0; the a-part spans the intersection.
  std::vector<Vec> rows(ambient_, Vec(d1 + d2));
  for (std::size_t c = 0; c < ambient_; ++c) {
    for (std::size_t i = 0; i < d1; ++i) rows[c][i] = basis_[i][c];
    for (std::size_t j = 0; j < d2; ++j) rows[c][d1 + j] = -other.basis_[j][c];
  }
  Subspace coeffs = kernel(std::move(rows), d1 + d2);
  std::vector<Vec> vs;
  for (const auto& a : coeffs.basis()) {
    Vec v(ambient_);
    for (std::size_t i = 0; i < d1; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t c = 0; c < ambient_; ++c)
        if (!basis_[i][c].is_zero()) v[c].addmul(a[i], basis_[i][c]);
    }
    vs.push_back(std::move(v));
  }
  return span(ambient_, std::move(vs));
}

// Kernel and algebra computations --------------------------------------------

Subspace kernel(std::vector<Vec> rows, std::size_t cols) {
  for (const auto& r : rows)
    if (r.size() != cols) fail(ErrorCode::DimensionMismatch, "operator row length differs from column count");
  auto pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (!rows[k][f].is_zero()) v[pivots[k]] = -rows[k][f];
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols, std::move(basis));
}

Subspace kernel(const Mat& op) {
  const std::size_t n = op.n();
  std::vector<Vec> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Vec row(n);
    bool any = false;
    for (std::size_t c = 0; c < n; ++c) {
      row[c] = op(r, c);
      any = any || !row[c].is_zero();
    }
    if (any) rows.push_back(std::move(row));
  }
  return kernel(std::move(rows), n);
}

Subspace algebra_closure(std::span<const Mat> generators, bool include_identity) {
  if (generators.empty() && !include_identity) return Subspace();
  std::vector<Mat> seed(generators.begin(), generators.end());
  const std::size_t n = seed.empty() ? 4 : seed.front().n();
  if (include_identity) seed.push_back(Mat::identity(n));
  Subspace current = Subspace::span(seed);
  for (;;) {
    const auto basis = current.basis_matrices();
    std::vector<Vec> vs = current.basis();
    for (const auto& x : basis)
      for (const auto& y : basis) {
        Mat p = x * y;
        if (!p.is_zero() && !current.contains(p)) vs.push_back(p.flatten());
      }
    Subspace next = Subspace::span(n * n, std::move(vs));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Subspace centralizer(std::span<const Mat> generators) {
  if (generators.empty()) fail(ErrorCode::DimensionMismatch, "centralizer of an empty generator list");
  const std::size_t n = generators.front().n();
  const Mat id = Mat::identity(n);
  std::vector<Vec> rows;
  for (const auto& g : generators) {
    // X g - g X
    const Mat op = sandwich_operator(id, g) - sandwich_operator(g, id);
    for (std::size_t r = 0; r < op.n(); ++r) {
      Vec row(op.n());
      bool any = false;
      for (std::size_t c = 0; c < op.n(); ++c) {
        row[c] = op(r, c);
        any = any || !row[c].is_zero();
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return kernel(std::move(rows), n * n);
}

bool is_permuted_triangular(const Mat& m) {
  const std::size_t n = m.n();
  // Kahn's algorithm on the digraph r -> c for nonzero off-diagonal (r, c).
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c && !m(r, c).is_zero()) ++indegree[c];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t c = 0; c < n; ++c)
      if (c != v && !m(v, c).is_zero() && --indegree[c] == 0) ready.push_back(c);
  }
  return seen == n;
}

std::vector<Scalar> diagonal_spectrum(const Mat& m) {
  if (!is_permuted_triangular(m)) {
    fail(ErrorCode::NotTriangular, "matrix is not triangular under any simultaneous permutation");
  }
  std::vector<Scalar> out;
  out.reserve(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) out.push_back(m(i, i));
  return out;
}

std::optional<InvertibleElement> invertible_element_in(const Subspace& s) {
  const std::size_t d = s.dim();
  if (d > kMaxGridDimension) {
    fail(ErrorCode::GridTooLarge, "subspace of dimension " + std::to_string(d) + " exceeds the grid cap of " +
                                      std::to_string(kMaxGridDimension));
  }
  if (d == 0) return std::nullopt;
  const auto basis = s.basis_matrices();
  if (basis.front().n() > static_cast<std::size_t>(kGridSize - 1)) {
    fail(ErrorCode::DimensionMismatch, "grid {0..4} is only complete for matrices up to 4x4");
  }
  std::vector<int> point(d, 0);
  for (;;) {
    // Advance the odometer; the last coordinate runs fastest.
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++point[k] < kGridSize) break;
      point[k] = 0;
      if (k == 0) return std::nullopt;
    }
    Mat x(basis.front().n());
    for (std::size_t i = 0; i < d; ++i)
      if (point[i] != 0) x += Scalar(point[i]) * basis[i];
    if (!determinant(x).is_zero()) return InvertibleElement{std::move(x), point};
  }
}

}  // namespace qact
