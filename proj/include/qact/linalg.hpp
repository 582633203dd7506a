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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "qact/scalar.hpp"

namespace qact {

using Vec = std::vector<Scalar>;

/// Dense square matrix over Q(i), row-major.
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t n) : n_(n), data_(n * n) {}

  static Mat identity(std::size_t n);
  /// Zero-based standard basis matrix with a single 1 at (row, col).
  static Mat unit(std::size_t n, std::size_t row, std::size_t col);
  static Mat diag(std::initializer_list<Scalar> entries);
  static Mat diag(std::span<const Scalar> entries);
  /// Rebuilds an n x n matrix from its row-major flattening.
  static Mat from_flat(std::size_t n, std::span<const Scalar> flat);
  /// [[a, b], [c, d]] for equally sized square blocks.
  static Mat block2(const Mat& a, const Mat& b, const Mat& c, const Mat& d);

  std::size_t n() const { return n_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  /// The (br, bc) block of size `size`.
  Mat block(std::size_t br, std::size_t bc, std::size_t size) const;

  const Vec& flatten() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) { return a *= Scalar(-1); }
  friend Mat operator*(Mat a, const Scalar& s) { return a *= s; }
  friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);

  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.data_ == b.data_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  Vec data_;
};

/// 1-based matrix unit e_ij of the 4x4 matrix algebra.
Mat unit4(int i, int j);

Mat commutator(const Mat& a, const Mat& b);
/// [a, b]_c = ab - c ba
Mat q_commutator(const Mat& a, const Mat& b, const Scalar& c);

/// Operator of X -> left * X * right on row-major flattened n x n matrices.
Mat sandwich_operator(const Mat& left, const Mat& right);

/// Reduces `rows` (each of length `cols`) to reduced row-echelon form in
/// place using the first nonzero entry in each column as pivot, drops zero
/// rows and returns the pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols);

std::size_t rank(const Mat& m);
Scalar determinant(const Mat& m);

/// Gauss-Jordan inverse; throws Singular.
Mat inverse(const Mat& m);

/// Linear subspace of Q(i)^ambient held as its canonical RREF basis, so two
/// subspaces are equal exactly when their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::vector<Vec> vectors);
  static Subspace span(std::span<const Mat> matrices);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Basis vectors reshaped as n x n matrices (ambient must be n^2).
  std::vector<Mat> basis_matrices() const;

  bool contains(const Vec& v) const;
  bool contains(const Mat& m) const { return contains(m.flatten()); }
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void check_ambient(std::size_t other) const;

  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : rows * x = 0} of a rectangular operator with `cols` columns.
Subspace kernel(std::vector<Vec> rows, std::size_t cols);
Subspace kernel(const Mat& op);

/// Smallest subspace of n x n matrices containing `generators` (and the
/// identity when requested) that is closed under multiplication.
Subspace algebra_closure(std::span<const Mat> generators, bool include_identity);

/// {X : XG = GX for every generator G}.
Subspace centralizer(std::span<const Mat> generators);

/// Diagonal entries of a matrix that is triangular up to a simultaneous
/// permutation of rows and columns (its off-diagonal support is acyclic);
/// these are exactly its eigenvalues with multiplicity. Throws NotTriangular
/// otherwise.
std::vector<Scalar> diagonal_spectrum(const Mat& m);

/// True when the off-diagonal support of `m` is acyclic.
bool is_permuted_triangular(const Mat& m);

struct InvertibleElement {
  Mat element;
  std::vector<int> grid_point;
};

/// Searches the grid {0..4}^d of coefficient vectors over the subspace's
/// basis for an invertible element. det(sum c_i b_i) has degree <= n in each
/// c_i, so for n <= 4 an empty result certifies that every element of the
/// subspace is singular. Throws GridTooLarge for d > 8.
std::optional<InvertibleElement> invertible_element_in(const Subspace& s);

inline constexpr std::size_t kMaxGridDimension = 8;
inline constexpr int kGridSize = 5;

}  // namespace qact
