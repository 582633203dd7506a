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


#include "qact/action.hpp"

#include <algorithm>
#include <string>

#include "qact/error.hpp"

namespace qact {

namespace {

void append_rows(std::vector<Vec>& rows, const Mat& op) {
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

std::string unit_name(std::size_t flat) {
  return "e" + std::to_string(flat / 4 + 1) + std::to_string(flat % 4 + 1);
}

std::vector<Scalar> spectrum_or_unsupported(const Mat& m, const char* what) {
  try {
    return diagonal_spectrum(m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotTriangular) throw;
    fail(ErrorCode::Unsupported, std::string(what) + " is not triangular up to permutation");
  }
}

std::vector<Scalar> ratio_candidates(const std::vector<Scalar>& from, const std::vector<Scalar>& to) {
  std::vector<Scalar> out;
  for (const auto& lambda : from) {
    if (lambda.is_zero()) continue;
    for (const auto& mu : to) {
      if (mu.is_zero()) continue;
      Scalar r = mu / lambda;
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
  }
  return out;
}

// Operator of u -> u a - c b u on flattened u.
Mat intertwiner_operator(const Mat& a, const Mat& b, const Scalar& c) {
  const Mat id = Mat::identity(a.n());
  return sandwich_operator(id, a) - c * sandwich_operator(b, id);
}

}  // namespace

Mat InnerAction::apply(int i, int j, const Mat& v) const {
  Mat out(v.n());
  for (int k = 1; k <= 2; ++k) out += rep.a(i, k) * v * astar[k - 1][j - 1];
  return out;
}

InnerAction build_action(const GLqRep& r, bool check_relations) {
  InnerAction a{r, Mat::block2(r.a11, r.a12, r.a21, r.a22), Mat(), {}, {}};
  try {
    a.minv = inverse(a.m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    fail(ErrorCode::MSingular, "block matrix M is singular");
  }
  const std::size_t n = r.a11.n();
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t j = 0; j < 2; ++j) a.astar[k][j] = a.minv.block(k, j, n);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      Mat op(n * n);
      for (int k = 1; k <= 2; ++k) op += sandwich_operator(r.a(i, k), a.astar[k - 1][j - 1]);
      a.l[i - 1][j - 1] = std::move(op);
    }
  if (check_relations) require_ok(action_relations(a), ErrorCode::RelationViolated);
  return a;
}

Report action_relations(const InnerAction& a) {
  return glq_relations(a.op(1, 1), a.op(1, 2), a.op(2, 1), a.op(2, 2), a.rep.q);
}

Report verify_module_algebra(const InnerAction& a) {
  const std::size_t n = a.rep.a11.n();
  const std::size_t nn = n * n;
  // image[i][j][p] = a_ij . (p-th matrix unit)
  std::array<std::array<std::vector<Mat>, 2>, 2> image;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      image[i][j].reserve(nn);
      for (std::size_t p = 0; p < nn; ++p) {
        Mat img(n);
        for (std::size_t s = 0; s < nn; ++s) img(s / n, s % n) = a.l[i][j](s, p);
        image[i][j].push_back(std::move(img));
      }
    }
  Report report;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      int ok = 0;
      std::string first;
      for (std::size_t v = 0; v < nn; ++v)
        for (std::size_t w = 0; w < nn; ++w) {
          // e_ab e_cd = delta_bc e_ad
          const Mat lhs = v % n == w / n ? image[i][j][(v / n) * n + w % n] : Mat(n);
          Mat rhs(n);
          for (std::size_t k = 0; k < 2; ++k) rhs += image[i][k][v] * image[k][j][w];
          if (lhs == rhs) {
            ++ok;
          } else if (first.empty()) {
            first = " first failure v=" + unit_name(v) + " w=" + unit_name(w);
          }
        }
      report.add("module_algebra[a" + std::to_string(i + 1) + std::to_string(j + 1) + "]",
                 ok == static_cast<int>(nn * nn), std::to_string(ok) + "/" + std::to_string(nn * nn) + first);
    }
  return report;
}

Subspace operator_algebra(const GLqRep& r) {
  const auto gens = r.generators();
  return algebra_closure(gens, true);
}

Subspace fixed_points(const InnerAction& a) {
  const Mat id = Mat::identity(a.l[0][0].n());
  std::vector<Vec> rows;
  append_rows(rows, a.op(1, 1) - id);
  append_rows(rows, a.op(1, 2));
  append_rows(rows, a.op(2, 1));
  append_rows(rows, a.op(2, 2) - id);
  return kernel(std::move(rows), id.n());
}

Subspace invariants(const InnerAction& a) {
  const auto gens = a.rep.generators();
  Subspace c = centralizer(gens);
  if (c != fixed_points(a)) fail(ErrorCode::Lemma1Mismatch, "centralizer and action fixed points differ");
  return c;
}

Subspace invariants(const GLqRep& r) { return invariants(build_action(r)); }

Report epsilon_consistency(const InnerAction& a, const Subspace& inv) {
  bool fixed = true, killed = true;
  for (const auto& v : inv.basis()) {
    fixed = fixed && a.op(1, 1) * v == v && a.op(2, 2) * v == v;
    const Vec x = a.op(1, 2) * v, y = a.op(2, 1) * v;
    killed = killed && std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); }) &&
             std::all_of(y.begin(), y.end(), [](const Scalar& s) { return s.is_zero(); });
  }
  Report report;
  report.add("diagonal_generators_fix_invariants", fixed);
  report.add("offdiagonal_generators_kill_invariants", killed);
  return report;
}

bool check_witness(const GLqRep& r1, const GLqRep& r2, const EquivalenceWitness& w) {
  if (determinant(w.u).is_zero() || w.alpha1.is_zero() || w.alpha2.is_zero()) return false;
  const Mat uinv = inverse(w.u);
  auto conj = [&](const Mat& x, const Scalar& s) { return s * (w.u * x * uinv); };
  return r2.a11 == conj(r1.a11, w.alpha1) && r2.a21 == conj(r1.a21, w.alpha1) &&
         r2.a12 == conj(r1.a12, w.alpha2) && r2.a22 == conj(r1.a22, w.alpha2);
}

EquivalenceVerdict decide_equivalence(const GLqRep& r1, const GLqRep& r2) {
  const auto alpha1s = ratio_candidates(spectrum_or_unsupported(r1.a11, "A11"), spectrum_or_unsupported(r2.a11, "A11'"));
  const auto alpha2s = ratio_candidates(spectrum_or_unsupported(r1.a22, "A22"), spectrum_or_unsupported(r2.a22, "A22'"));
  const std::size_t nn = r1.a11.n() * r1.a11.n();
  EquivalenceVerdict verdict;
  for (const auto& a1 : alpha1s) {
    const Scalar a1inv = a1.inverse();
    std::vector<Vec> rows;
    append_rows(rows, intertwiner_operator(r1.a11, r2.a11, a1inv));
    append_rows(rows, intertwiner_operator(r1.a21, r2.a21, a1inv));
    const Subspace k1 = kernel(std::move(rows), nn);
    if (k1.dim() == 0 || (k1.dim() <= kMaxGridDimension && !invertible_element_in(k1))) {
      verdict.candidates_tried += static_cast<int>(alpha2s.size());
      continue;
    }
    const auto& k1_basis = k1.basis();
    for (const auto& a2 : alpha2s) {
      ++verdict.candidates_tried;
      const Scalar a2inv = a2.inverse();
      const Mat op12 = intertwiner_operator(r1.a12, r2.a12, a2inv);
      const Mat op22 = intertwiner_operator(r1.a22, r2.a22, a2inv);
      // Restrict to u = sum c_t b_t with b_t the basis of k1.
      std::vector<Vec> restricted;
      for (const Mat* op : {&op12, &op22}) {
        std::vector<Vec> images;
        images.reserve(k1_basis.size());
        for (const auto& b : k1_basis) images.push_back(*op * b);
        for (std::size_t r = 0; r < nn; ++r) {
          Vec row(k1_basis.size());
          bool any = false;
          for (std::size_t t = 0; t < k1_basis.size(); ++t) {
            row[t] = images[t][r];
            any = any || !row[t].is_zero();
          }
          if (any) restricted.push_back(std::move(row));
        }
      }
      const Subspace coeffs = kernel(std::move(restricted), k1_basis.size());
      std::vector<Vec> vs;
      for (const auto& c : coeffs.basis()) {
        Vec u(nn);
        for (std::size_t t = 0; t < c.size(); ++t) {
          if (c[t].is_zero()) continue;
          for (std::size_t s = 0; s < nn; ++s) u[s].addmul(c[t], k1_basis[t][s]);
        }
        vs.push_back(std::move(u));
      }
      const Subspace solutions = Subspace::span(nn, std::move(vs));
      if (auto found = invertible_element_in(solutions)) {
        EquivalenceWitness w{std::move(found->element), a1, a2};
        if (!check_witness(r1, r2, w)) fail(ErrorCode::VerificationFailure, "intertwiner fails the equivalence identities");
        verdict.equivalent = true;
        verdict.witness = std::move(w);
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace qact
