// Copyright 2026 The isingsynth Authors
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

#include <array>

#include "isingsynth/matcore.hpp"

namespace isingsynth {

/// Index shuffle pairing the two qubit-1 indices against the two qubit-2
/// indices: realign(m)(2i+j, 2k+l) = m(2i+k, 2j+l). Involutive. Singular
/// values of the realigned matrix are the operator Schmidt coefficients of m.
Mat4 realign(const Mat4& m);

/// Operator Schmidt decomposition of a two-qubit operator,
///
///   m = 2 * sum_i coeffs[i] * kron(left[i], right[i]),
///
/// with the factor matrices orthonormal in the Hilbert-Schmidt inner
/// product. Coefficients are the realigned singular values scaled by 1/2 so
/// that a unitary input (Frobenius norm 2) satisfies sum coeffs^2 = 1; they
/// come out sorted descending.
struct SchmidtData {
  std::array<double, 4> coeffs{};
  std::array<Mat2, 4> left{};
  std::array<Mat2, 4> right{};
};

SchmidtData schmidt_decompose(const Mat4& m);

/// Operator Schmidt number: coefficients above the threshold. Local unitaries
/// (products a ⊗ b) have rank 1; a generic two-qubit unitary has rank 4.
int osn(const SchmidtData& d, double threshold = Tol::osn);
int osn(const Mat4& m, double threshold = Tol::osn);

/// Elementwise comparison of the sorted Schmidt coefficient vectors. Equal
/// coefficients are necessary for the two operators to differ only by local
/// unitaries; the converse does not hold in general (inequivalent gates can
/// share a coefficient vector), so a true result is a screen, not a proof.
bool lu_invariant_equal(const Mat4& x, const Mat4& y,
                        double tol = Tol::lu_match);

}  // namespace isingsynth
