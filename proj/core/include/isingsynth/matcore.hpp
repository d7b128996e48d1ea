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
#include <complex>
#include <cstddef>

namespace isingsynth {

using Complex = std::complex<double>;

/// Numerical tolerances shared across the library. Kept in one place so the
/// thresholds used by checks, solvers and decompositions cannot drift apart.
struct Tol {
  /// max-norm deviation from U†U = 1 accepted for a matrix tagged unitary
  static constexpr double unitarity = 1e-12;
  /// SVD reconstruction error budget, relative to the input norm
  static constexpr double svd = 1e-10;
  /// default bound on the first-order error norm accepted as "robust"
  static constexpr double robust = 1e-10;
  /// Schmidt coefficients above this count towards the Schmidt number
  static constexpr double osn = 1e-8;
  /// elementwise slack when comparing sorted Schmidt coefficient vectors
  static constexpr double lu_match = 1e-8;
};

/// Dense 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<Complex, 4> a{};

  Complex& operator()(std::size_t r, std::size_t c) { return a[2 * r + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return a[2 * r + c];
  }

  static Mat2 identity();
  static Mat2 zero() { return Mat2{}; }
};

/// Dense 4x4 complex matrix, row-major. Tensor products are stored with the
/// first (left) factor indexing the slow axis: (a ⊗ b)(2i+k, 2j+l) = a(i,j) b(k,l).
struct Mat4 {
  std::array<Complex, 16> a{};

  Complex& operator()(std::size_t r, std::size_t c) { return a[4 * r + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return a[4 * r + c];
  }

  static Mat4 identity();
  static Mat4 zero() { return Mat4{}; }
};

Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator*(Complex s, const Mat2& x);
Mat4 operator+(const Mat4& x, const Mat4& y);
Mat4 operator-(const Mat4& x, const Mat4& y);
Mat4 operator*(const Mat4& x, const Mat4& y);
Mat4 operator*(Complex s, const Mat4& x);

Mat2 dagger(const Mat2& m);
Mat4 dagger(const Mat4& m);
Complex trace(const Mat2& m);
Complex trace(const Mat4& m);

/// Frobenius norm.
double fnorm(const Mat2& m);
double fnorm(const Mat4& m);
/// Largest entry modulus.
double max_abs(const Mat2& m);
double max_abs(const Mat4& m);

/// Kronecker product; left factor acts on the first qubit.
Mat4 kron(const Mat2& x, const Mat2& y);

bool is_unitary(const Mat2& m, double tol = Tol::unitarity);
bool is_unitary(const Mat4& m, double tol = Tol::unitarity);

/// True if every entry of the matrix is finite.
bool is_finite(const Mat2& m);
bool is_finite(const Mat4& m);

const Mat2& pauli_x();
const Mat2& pauli_y();
const Mat2& pauli_z();

/// min over a global phase of ||x - e^{i phi} y||_F.
///
/// Computed by aligning y to the optimal phase arg tr(x†y) and summing the
/// squared entry differences directly. The equivalent closed form
/// sqrt(8 - 2|tr(x†y)|) loses half the significant digits to cancellation
/// when the matrices nearly coincide, which is exactly the regime the
/// library's checks care about.
double dist_up_to_phase(const Mat4& x, const Mat4& y);

/// Singular value decomposition m = u * diag(s) * v†.
struct Svd4 {
  Mat4 u;
  std::array<double, 4> s;  // descending, non-negative
  Mat4 v;
};

/// One-sided Jacobi SVD for 4x4 complex matrices. Column rotations are
/// applied until all column pairs are orthogonal, so the singular values are
/// recovered as column norms without forming m†m and squaring the condition
/// number. Rank-deficient inputs get their null columns completed to a
/// unitary u.
Svd4 svd4(const Mat4& m);

}  // namespace isingsynth
