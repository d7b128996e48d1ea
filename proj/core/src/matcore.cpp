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

#include <algorithm>
#include <cmath>

namespace isingsynth {

Mat2 Mat2::identity() {
  Mat2 m;
  m(0, 0) = m(1, 1) = 1.0;
  return m;
}

Mat4 Mat4::identity() {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}

Mat2 operator*(Complex s, const Mat2& x) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.a[i] = s * x.a[i];
  return r;
}

Mat4 operator+(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat4 operator-(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Mat4 operator*(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      const Complex xik = x(i, k);
      if (xik == Complex{}) continue;
      for (std::size_t j = 0; j < 4; ++j) r(i, j) += xik * y(k, j);
    }
  }
  return r;
}

Mat4 operator*(Complex s, const Mat4& x) {
  Mat4 r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = s * x.a[i];
  return r;
}

Mat2 dagger(const Mat2& m) {
  Mat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

Mat4 dagger(const Mat4& m) {
  Mat4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

Complex trace(const Mat2& m) { return m(0, 0) + m(1, 1); }

Complex trace(const Mat4& m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }

double fnorm(const Mat2& m) {
  double s = 0;
  for (const auto& z : m.a) s += std::norm(z);
  return std::sqrt(s);
}

double fnorm(const Mat4& m) {
  double s = 0;
  for (const auto& z : m.a) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs(const Mat2& m) {
  double s = 0;
  for (const auto& z : m.a) s = std::max(s, std::abs(z));
  return s;
}

double max_abs(const Mat4& m) {
  double s = 0;
  for (const auto& z : m.a) s = std::max(s, std::abs(z));
  return s;
}

Mat4 kron(const Mat2& x, const Mat2& y) {
  Mat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          r(2 * i + k, 2 * j + l) = x(i, j) * y(k, l);
  return r;
}

bool is_unitary(const Mat2& m, double tol) {
  return max_abs(dagger(m) * m - Mat2::identity()) <= tol;
}

bool is_unitary(const Mat4& m, double tol) {
  return max_abs(dagger(m) * m - Mat4::identity()) <= tol;
}

bool is_finite(const Mat2& m) {
  for (const auto& z : m.a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

bool is_finite(const Mat4& m) {
  for (const auto& z : m.a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

const Mat2& pauli_x() {
  static const Mat2 m = [] {
    Mat2 r;
    r(0, 1) = r(1, 0) = 1.0;
    return r;
  }();
  return m;
}

const Mat2& pauli_y() {
  static const Mat2 m = [] {
    Mat2 r;
    r(0, 1) = Complex(0, -1);
    r(1, 0) = Complex(0, 1);
    return r;
  }();
  return m;
}

const Mat2& pauli_z() {
  static const Mat2 m = [] {
    Mat2 r;
    r(0, 0) = 1.0;
    r(1, 1) = -1.0;
    return r;
  }();
  return m;
}

double dist_up_to_phase(const Mat4& x, const Mat4& y) {
  const Complex ov = trace(dagger(y) * x);
  // When the overlap vanishes no phase is preferred; any one gives the
  // minimum of the (constant) objective.
  const Complex phase =
      std::abs(ov) > 0 ? ov / std::abs(ov) : Complex(1.0, 0.0);
  double s = 0;
  for (std::size_t i = 0; i < 16; ++i) s += std::norm(x.a[i] - phase * y.a[i]);
  return std::sqrt(s);
}

namespace {

// Orthogonalize columns p and q of m in place, accumulating the rotation
// into v. Returns the off-diagonal Gram mass |m_p† m_q| before rotation.
double jacobi_step(Mat4& m, Mat4& v, std::size_t p, std::size_t q) {
  Complex g{};    // m_p† m_q
  double app = 0;  // |m_p|^2
  double aqq = 0;  // |m_q|^2
  for (std::size_t r = 0; r < 4; ++r) {
    g += std::conj(m(r, p)) * m(r, q);
    app += std::norm(m(r, p));
    aqq += std::norm(m(r, q));
  }
  const double off = std::abs(g);
  if (off <= 1e-300) return 0.0;

  // Classic symmetric Jacobi angle for the 2x2 Gram block [[app, g],[g*, aqq]];
  // the complex phase of g is absorbed into the rotation.
  const double tau = (aqq - app) / (2.0 * off);
  const double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex u = g / off;

  for (std::size_t r = 0; r < 4; ++r) {
    const Complex mp = m(r, p);
    const Complex mq = m(r, q);
    m(r, p) = c * mp - s * std::conj(u) * mq;
    m(r, q) = s * u * mp + c * mq;
  }
  for (std::size_t r = 0; r < 4; ++r) {
    const Complex vp = v(r, p);
    const Complex vq = v(r, q);
    v(r, p) = c * vp - s * std::conj(u) * vq;
    v(r, q) = s * u * vp + c * vq;
  }
  return off;
}

}  // namespace

Svd4 svd4(const Mat4& m) {
  Mat4 w = m;
  Mat4 v = Mat4::identity();

  const double scale = std::max(fnorm(m), 1e-300);
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = p + 1; q < 4; ++q)
        off = std::max(off, jacobi_step(w, v, p, q));
    if (off <= 1e-30 * scale * scale) break;
  }

  // Column norms are the singular values; sort them descending and permute
  // the accumulated right factor to match.
  std::array<double, 4> s{};
  std::array<std::size_t, 4> ord{0, 1, 2, 3};
  for (std::size_t c = 0; c < 4; ++c) {
    double n2 = 0;
    for (std::size_t r = 0; r < 4; ++r) n2 += std::norm(w(r, c));
    s[c] = std::sqrt(n2);
  }
  std::sort(ord.begin(), ord.end(),
            [&s](std::size_t x, std::size_t y) { return s[x] > s[y]; });

  Svd4 out;
  Mat4 u;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < 4; ++c) {
    const std::size_t src = ord[c];
    out.s[c] = s[src];
    for (std::size_t r = 0; r < 4; ++r) out.v(r, c) = v(r, src);
    if (s[src] > 1e-140 * scale || (s[src] > 0 && scale <= 1e-140)) {
      for (std::size_t r = 0; r < 4; ++r) u(r, c) = w(r, src) / s[src];
      ++rank;
    }
  }

  // Complete a rank-deficient u to a unitary by Gram-Schmidt over the
  // standard basis.
  for (std::size_t c = rank; c < 4; ++c) {
    for (std::size_t cand = 0; cand < 4; ++cand) {
      std::array<Complex, 4> col{};
      col[cand] = 1.0;
      for (std::size_t prev = 0; prev < c; ++prev) {
        Complex ip{};
        for (std::size_t r = 0; r < 4; ++r) ip += std::conj(u(r, prev)) * col[r];
        for (std::size_t r = 0; r < 4; ++r) col[r] -= ip * u(r, prev);
      }
      double n2 = 0;
      for (const auto& z : col) n2 += std::norm(z);
      if (n2 > 0.25) {
        const double inv = 1.0 / std::sqrt(n2);
        for (std::size_t r = 0; r < 4; ++r) u(r, c) = inv * col[r];
        break;
      }
    }
    out.s[c] = 0.0;
  }

  out.u = u;
  return out;
}

}  // namespace isingsynth
