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

#include "isingsynth/robustness.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace isingsynth {

Mat4 delta_u(const PulseCircuit& c) {
  validate(c);
  const Mat4 szz = kron(pauli_z(), pauli_z());

  // Shared right-to-left prefixes: before[j] is everything applied before
  // coupling j (boundary_pre and the first j couplings with their layers).
  std::vector<Mat4> before(c.couplings.size());
  Mat4 acc = Mat4::identity();
  for (const auto& l : c.boundary_pre) acc = layer_matrix(l) * acc;
  for (std::size_t j = 0; j < c.couplings.size(); ++j) {
    before[j] = acc;
    acc = coupling(c.couplings[j]) * acc;
    if (j < c.locals.size()) acc = layer_matrix(c.locals[j]) * acc;
  }

  Mat4 total;
  for (std::size_t j = 0; j < c.couplings.size(); ++j) {
    Mat4 term = Complex(c.couplings[j] / 4.0) *
                (szz * (coupling(c.couplings[j]) * before[j]));
    for (std::size_t i = j; i < c.locals.size(); ++i) {
      term = layer_matrix(c.locals[i]) * term;
      term = coupling(c.couplings[i + 1]) * term;
    }
    total = total + term;
  }
  for (const auto& l : c.boundary_post) total = layer_matrix(l) * total;
  return total;
}

Mat4 delta_u_oracle(const PulseCircuit& c, double h) {
  if (!(h >= 1e-6 && h <= 1e-3))
    throw std::invalid_argument("finite-difference step must be in [1e-6, 1e-3]");
  const Mat4 diff = evaluate(c, +h) - evaluate(c, -h);
  return Complex(0, 1.0 / (2.0 * h)) * diff;
}

bool check_robust(const PulseCircuit& c, double tol) {
  return fnorm(delta_u(c)) <= tol;
}

double fidelity(const Mat4& target, const Mat4& u) {
  return std::abs(trace(dagger(target) * u)) / 4.0;
}

double slope_fit(const std::vector<double>& epsilon,
                 const std::vector<double>& infidelity) {
  if (epsilon.size() != infidelity.size())
    throw std::invalid_argument("slope_fit needs matching sample vectors");
  if (epsilon.size() < 2) return std::numeric_limits<double>::quiet_NaN();

  bool all_floor = true;
  for (double f : infidelity)
    if (f >= 1e-15) all_floor = false;
  if (all_floor) return std::numeric_limits<double>::infinity();

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(epsilon.size());
  for (std::size_t i = 0; i < epsilon.size(); ++i) {
    const double x = std::log(epsilon[i]);
    // Keep samples at the numerical floor from producing -inf logs; they
    // only flatten the fit, which is the honest reading of such a scan.
    const double y = std::log(std::max(infidelity[i], 1e-18));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ErrorScan scan(const PulseCircuit& c, const Mat4& target,
               const std::vector<double>& eps_grid) {
  if (eps_grid.empty()) throw std::invalid_argument("empty epsilon grid");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (eps_grid[i] <= 0)
      throw std::invalid_argument("epsilon grid must be positive");
    if (i > 0 && eps_grid[i] <= eps_grid[i - 1])
      throw std::invalid_argument("epsilon grid must be strictly increasing");
  }

  ErrorScan s;
  s.epsilon = eps_grid;
  for (double e : eps_grid) {
    const Mat4 u = evaluate(c, e);
    s.infidelity.push_back(1.0 - fidelity(target, u));
    s.distance.push_back(dist_up_to_phase(target, u));
  }
  s.slope = slope_fit(s.epsilon, s.infidelity);
  return s;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0) || !(hi > lo)) throw std::invalid_argument("need 0 < lo < hi");
  if (n < 2) throw std::invalid_argument("need at least two grid points");
  std::vector<double> g(n);
  const double la = std::log(lo);
  const double lb = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = std::exp(la + (lb - la) * static_cast<double>(i) /
                             static_cast<double>(n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::string scan_csv(const ErrorScan& s) {
  std::string out = "epsilon,infidelity,distance\n";
  char row[128];
  for (std::size_t i = 0; i < s.epsilon.size(); ++i) {
    std::snprintf(row, sizeof(row), "%.17g,%.17g,%.17g\n", s.epsilon[i],
                  s.infidelity[i], s.distance[i]);
    out += row;
  }
  return out;
}

}  // namespace isingsynth
