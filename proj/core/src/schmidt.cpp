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

#include <algorithm>
#include <cmath>

namespace isingsynth {

Mat4 realign(const Mat4& m) {
  Mat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          r(2 * i + j, 2 * k + l) = m(2 * i + k, 2 * j + l);
  return r;
}

SchmidtData schmidt_decompose(const Mat4& m) {
  const Svd4 dec = svd4(realign(m));
  SchmidtData d;
  for (std::size_t t = 0; t < 4; ++t) {
    d.coeffs[t] = dec.s[t] / 2.0;
    // Left factors from the u columns, right factors from the conjugated v
    // columns, both unvectorized row-major.
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        d.left[t](r, c) = dec.u(2 * r + c, t);
        d.right[t](r, c) = std::conj(dec.v(2 * r + c, t));
      }
  }
  return d;
}

int osn(const SchmidtData& d, double threshold) {
  int n = 0;
  for (double c : d.coeffs)
    if (c > threshold) ++n;
  return n;
}

int osn(const Mat4& m, double threshold) {
  return osn(schmidt_decompose(m), threshold);
}

bool lu_invariant_equal(const Mat4& x, const Mat4& y, double tol) {
  const SchmidtData dx = schmidt_decompose(x);
  const SchmidtData dy = schmidt_decompose(y);
  for (std::size_t i = 0; i < 4; ++i)
    if (std::abs(dx.coeffs[i] - dy.coeffs[i]) > tol) return false;
  return true;
}

}  // namespace isingsynth
