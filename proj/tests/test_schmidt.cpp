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

#include "isingsynth/schmidt.hpp"

#include <cmath>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace isingsynth;
using namespace isingsynth::testing;

TEST_CASE("realign shuffles indices as documented and is an involution") {
  std::mt19937_64 rng(31);
  const Mat4 m = random_dense(rng);
  const Mat4 r = realign(m);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          CHECK(r(2 * i + j, 2 * k + l) == m(2 * i + k, 2 * j + l));
  CHECK(max_abs(realign(realign(m)) - m) == 0.0);
}

TEST_CASE("realign of a pure tensor is the rank-1 outer product") {
  std::mt19937_64 rng(32);
  const Mat4 m = random_local_pair(rng);
  const SchmidtData sd = schmidt_decompose(m);
  CHECK(osn(sd) == 1);
  CHECK(sd.coeffs[0] == doctest::Approx(1.0));
  CHECK(sd.coeffs[1] < 1e-14);
}

TEST_CASE("schmidt_decompose reconstructs its input") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    // generic unitary: random locals sandwiching a CNOT, plus one case with
    // a non-unitary dense matrix (the expansion itself never needs unitarity)
    const Mat4 m = trial == 0 ? random_dense(rng)
                              : random_local_pair(rng) * cnot_gate() *
                                    random_local_pair(rng);
    const SchmidtData sd = schmidt_decompose(m);
    Mat4 rebuilt = Mat4::zero();
    for (int t = 0; t < 4; ++t)
      rebuilt = rebuilt +
                (2.0 * sd.coeffs[t]) * kron(sd.left[t], sd.right[t]);
    CHECK(max_abs(rebuilt - m) < 1e-10 * (1.0 + fnorm(m)));
    for (int t = 0; t < 3; ++t) CHECK(sd.coeffs[t] >= sd.coeffs[t + 1]);
  }
}

TEST_CASE("unitaries have unit-normalized schmidt coefficients") {
  std::mt19937_64 rng(34);
  const Mat4 m = random_local_pair(rng) * coupling(1.23) *
                 random_local_pair(rng);
  const SchmidtData sd = schmidt_decompose(m);
  double s2 = 0;
  for (double c : sd.coeffs) s2 += c * c;
  CHECK(s2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coupling gates have the closed-form coefficient pair") {
  for (double th : {0.3, kPi / 3, kPi, 1.5 * kPi, 5.0}) {
    const SchmidtData sd = schmidt_decompose(coupling(th));
    const double big = std::max(std::abs(std::cos(th / 4)),
                                std::abs(std::sin(th / 4)));
    const double small = std::min(std::abs(std::cos(th / 4)),
                                  std::abs(std::sin(th / 4)));
    CHECK(sd.coeffs[0] == doctest::Approx(big).epsilon(1e-12));
    CHECK(sd.coeffs[1] == doctest::Approx(small).epsilon(1e-12));
    CHECK(sd.coeffs[2] < 1e-12);
  }
}

TEST_CASE("schmidt number counts coefficients above threshold") {
  CHECK(osn(schmidt_decompose(Mat4::identity())) == 1);
  CHECK(osn(schmidt_decompose(coupling(kPi / 3))) == 2);
  CHECK(osn(schmidt_decompose(coupling(kPi))) == 2);
  CHECK(osn(schmidt_decompose(coupling(3 * kPi / 2))) == 2);
  // full turns of the coupling are local (a global phase times sz⊗sz or 1)
  CHECK(osn(schmidt_decompose(coupling(2 * kPi))) == 1);
  CHECK(osn(schmidt_decompose(coupling(4 * kPi))) == 1);
  CHECK(osn(cnot_gate()) == 2);
  CHECK(osn(swap_gate()) == 4);
  // threshold is adjustable: S(0.4) has coeffs ~{0.995, 0.0998}, so a 0.5
  // cutoff keeps only the dominant term
  CHECK(osn(schmidt_decompose(coupling(0.4)), 0.5) == 1);
}

TEST_CASE("cnot and swap have the textbook coefficient vectors") {
  const SchmidtData cn = schmidt_decompose(cnot_gate());
  CHECK(cn.coeffs[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(cn.coeffs[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(cn.coeffs[2] < 1e-12);

  const SchmidtData sw = schmidt_decompose(swap_gate());
  for (int t = 0; t < 4; ++t)
    CHECK(sw.coeffs[t] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("schmidt coefficients are invariant under local dressing") {
  std::mt19937_64 rng(35);
  const SchmidtData base = schmidt_decompose(cnot_gate());
  for (int trial = 0; trial < 20; ++trial) {
    const Mat4 dressed =
        random_local_pair(rng) * cnot_gate() * random_local_pair(rng);
    const SchmidtData sd = schmidt_decompose(dressed);
    for (int t = 0; t < 4; ++t)
      CHECK(std::abs(sd.coeffs[t] - base.coeffs[t]) < 1e-9);
  }
}

TEST_CASE("lu_invariant_equal compares coefficient vectors only") {
  std::mt19937_64 rng(36);
  const Mat4 dressed =
      random_local_pair(rng) * cnot_gate() * random_local_pair(rng);
  CHECK(lu_invariant_equal(cnot_gate(), dressed));
  CHECK_FALSE(lu_invariant_equal(cnot_gate(), swap_gate()));
  CHECK_FALSE(lu_invariant_equal(cnot_gate(), Mat4::identity()));
  // Matching coefficients do NOT certify local equivalence. v_gate and swap
  // share the flat coefficient vector {1/2,1/2,1/2,1/2} yet no local
  // dressing connects them (their products with swap differ in rank), so a
  // true here is only ever a screen.
  CHECK(lu_invariant_equal(v_gate(), swap_gate()));
  const SchmidtData product = schmidt_decompose(v_gate() * swap_gate());
  CHECK(osn(product) == 2);  // nonlocal product: the gates are inequivalent
}
