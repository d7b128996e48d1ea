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

#include "isingsynth/matcore.hpp"

#include <cmath>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace isingsynth;
using namespace isingsynth::testing;

namespace {

Mat4 diag4(Complex d0, Complex d1, Complex d2, Complex d3) {
  Mat4 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return m;
}

}  // namespace

TEST_CASE("pauli matrices satisfy the algebra") {
  const Complex i{0, 1};
  CHECK(max_abs(pauli_x() * pauli_x() - Mat2::identity()) == 0.0);
  CHECK(max_abs(pauli_y() * pauli_y() - Mat2::identity()) == 0.0);
  CHECK(max_abs(pauli_z() * pauli_z() - Mat2::identity()) == 0.0);
  CHECK(max_abs(pauli_x() * pauli_y() - i * pauli_z()) == 0.0);
  CHECK(max_abs(pauli_y() * pauli_z() - i * pauli_x()) == 0.0);
  CHECK(max_abs(pauli_z() * pauli_x() - i * pauli_y()) == 0.0);
}

TEST_CASE("kron places the left factor on the slow index") {
  const Mat4 zx = kron(pauli_z(), pauli_x());
  // (z ⊗ x)(2i+k, 2j+l) = z(i,j) x(k,l)
  CHECK(zx(0, 1) == Complex(1, 0));
  CHECK(zx(1, 0) == Complex(1, 0));
  CHECK(zx(2, 3) == Complex(-1, 0));
  CHECK(zx(3, 2) == Complex(-1, 0));
  CHECK(zx(0, 0) == Complex(0, 0));
  CHECK(zx(0, 2) == Complex(0, 0));

  std::mt19937_64 rng(11);
  const Mat2 a = random_local(rng);
  const Mat2 b = random_local(rng);
  const Mat4 ab = kron(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          CHECK(ab(2 * i + k, 2 * j + l) == a(i, j) * b(k, l));
}

TEST_CASE("kron is multiplicative") {
  std::mt19937_64 rng(12);
  const Mat2 a = random_local(rng), b = random_local(rng);
  const Mat2 c = random_local(rng), d = random_local(rng);
  CHECK(max_abs(kron(a, b) * kron(c, d) - kron(a * c, b * d)) < 1e-14);
}

TEST_CASE("trace dagger and norms") {
  std::mt19937_64 rng(13);
  const Mat4 m = random_dense(rng);
  CHECK(std::abs(trace(dagger(m)) - std::conj(trace(m))) < 1e-14);
  // ||m||_F^2 = tr(m† m)
  CHECK(std::abs(trace(dagger(m) * m) - Complex(fnorm(m) * fnorm(m), 0)) <
        1e-12 * fnorm(m) * fnorm(m));
  CHECK(max_abs(m) <= fnorm(m));
  CHECK(fnorm(Mat4::identity()) == doctest::Approx(2.0));
}

TEST_CASE("is_unitary accepts products of unitaries and rejects the rest") {
  std::mt19937_64 rng(14);
  CHECK(is_unitary(Mat4::identity()));
  CHECK(is_unitary(random_local_pair(rng)));
  CHECK_FALSE(is_unitary(random_dense(rng)));
  Mat4 scaled = Mat4::identity();
  scaled(3, 3) = Complex(1.0 + 1e-6, 0);
  CHECK_FALSE(is_unitary(scaled));
}

TEST_CASE("is_finite flags nan and inf entries") {
  Mat4 m = Mat4::identity();
  CHECK(is_finite(m));
  m(2, 1) = Complex(0, std::nan(""));
  CHECK_FALSE(is_finite(m));
  Mat2 m2 = Mat2::identity();
  m2(0, 1) = Complex(INFINITY, 0);
  CHECK_FALSE(is_finite(m2));
}

TEST_CASE("dist_up_to_phase quotients exactly by a global phase") {
  std::mt19937_64 rng(15);
  const Mat4 u = random_local_pair(rng);
  // phases with nonzero imaginary part used to regress the alignment
  for (double phi : {0.0, kPi / 4, 1.0, kPi / 2, 2.5, -0.7}) {
    const Complex phase = std::exp(Complex(0, phi));
    CHECK(dist_up_to_phase(phase * u, u) < 1e-14);
    CHECK(dist_up_to_phase(u, phase * u) < 1e-14);
  }
  // and it still separates genuinely different matrices
  CHECK(dist_up_to_phase(u, random_local_pair(rng)) > 1e-2);
  // orthogonal pair: any phase gives the same (maximal) distance sqrt(8)
  const Mat4 zz = kron(pauli_z(), pauli_z());
  CHECK(dist_up_to_phase(Mat4::identity(), zz) == doctest::Approx(std::sqrt(8.0)));
}

TEST_CASE("svd4 recovers a known diagonal spectrum") {
  const Mat4 m = diag4(Complex(0, 3), Complex(-1, 0), Complex(0, -0.5),
                       Complex(2, 0));
  const Svd4 f = svd4(m);
  CHECK(f.s[0] == doctest::Approx(3.0));
  CHECK(f.s[1] == doctest::Approx(2.0));
  CHECK(f.s[2] == doctest::Approx(1.0));
  CHECK(f.s[3] == doctest::Approx(0.5));
}

TEST_CASE("svd4 factors random dense matrices") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat4 m = random_dense(rng);
    const Svd4 f = svd4(m);
    CHECK(is_unitary(f.u, 1e-10));
    CHECK(is_unitary(f.v, 1e-10));
    for (int i = 0; i < 4; ++i) CHECK(f.s[i] >= 0.0);
    for (int i = 0; i < 3; ++i) CHECK(f.s[i] >= f.s[i + 1]);
    const Mat4 rebuilt =
        f.u * diag4(f.s[0], f.s[1], f.s[2], f.s[3]) * dagger(f.v);
    CHECK(max_abs(rebuilt - m) < Tol::svd * fnorm(m));
  }
}

TEST_CASE("svd4 handles rank deficient input") {
  std::mt19937_64 rng(17);
  // rank-1 outer product of two random vectors
  Mat4 m;
  std::normal_distribution<double> g;
  Complex x[4], y[4];
  for (auto& v : x) v = Complex(g(rng), g(rng));
  for (auto& v : y) v = Complex(g(rng), g(rng));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = x[r] * std::conj(y[c]);

  const Svd4 f = svd4(m);
  CHECK(f.s[0] > 0.1);
  CHECK(f.s[1] < 1e-12 * f.s[0]);
  CHECK(is_unitary(f.u, 1e-10));
  CHECK(is_unitary(f.v, 1e-10));
  const Mat4 rebuilt = f.u * diag4(f.s[0], f.s[1], f.s[2], f.s[3]) * dagger(f.v);
  CHECK(max_abs(rebuilt - m) < Tol::svd * fnorm(m));

  const Svd4 z = svd4(Mat4::zero());
  CHECK(z.s[0] == 0.0);
  CHECK(is_unitary(z.u));
  CHECK(is_unitary(z.v));
}
