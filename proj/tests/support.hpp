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


// Helpers shared by the test binaries.

#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "qact/action.hpp"

namespace qact::testing {

/// Order of the indices in which every off-diagonal nonzero of A11 and A22
/// points forward; throws if the combined support has a cycle.
inline std::vector<std::size_t> common_order(const GLqRep& r) {
  const std::size_t n = r.a11.n();
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (const Mat* m : {&r.a11, &r.a22})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && !(*m)(i, j).is_zero()) edge[i][j] = true;
  std::vector<std::size_t> order;
  std::vector<bool> used(n, false);
  while (order.size() < n) {
    bool placed = false;
    for (std::size_t v = 0; v < n && !placed; ++v) {
      if (used[v]) continue;
      bool free = true;
      for (std::size_t w = 0; w < n; ++w)
        if (!used[w] && edge[w][v]) free = false;
      if (free) {
        order.push_back(v);
        used[v] = true;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("support has a cycle");
  }
  return order;
}

inline Scalar random_small(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 2), im(-1, 1);
  for (;;) {
    Scalar s(Rational(num(rng), den(rng)), Rational(im(rng)));
    if (!nonzero || !s.is_zero()) return s;
  }
}

/// Random invertible u that is triangular in the order of common_order(r).
inline Mat random_conjugator(std::mt19937_64& rng, const GLqRep& r) {
  const auto order = common_order(r);
  const std::size_t n = order.size();
  Mat u(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) u(order[a], order[b]) = random_small(rng, a == b);
  return u;
}

/// A'11 = u A11 u^-1 a1, A'21 = u A21 u^-1 a1, A'12 = u A12 u^-1 a2,
/// A'22 = u A22 u^-1 a2.
inline GLqRep conjugate_scaled(const GLqRep& r, const Mat& u, const Scalar& a1, const Scalar& a2) {
  const Mat ui = inverse(u);
  return GLqRep{a1 * (u * r.a11 * ui), a2 * (u * r.a12 * ui), a1 * (u * r.a21 * ui), a2 * (u * r.a22 * ui), r.q};
}

}  // namespace qact::testing
