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

#include <string>
#include <vector>

#include "isingsynth/circuit.hpp"
#include "isingsynth/matcore.hpp"

namespace isingsynth {

/// First-order coefficient of the coupling error: with every coupling run as
/// (1+eps)Theta, the total unitary expands as U(eps) = U - i eps dU + O(eps^2).
/// This returns dU, assembled term by term: differentiating coupling j
/// contributes (Theta_j/4) * A_j * (sz⊗sz) * S_j * B_j, where A_j and B_j
/// are the circuit segments left and right of that coupling. A circuit is
/// first-order robust exactly when dU vanishes.
Mat4 delta_u(const PulseCircuit& c);

/// Independent finite-difference estimate of delta_u:
/// i * (evaluate(+h) - evaluate(-h)) / (2h). Agreement with the assembled
/// form is O(h^2). h must lie in [1e-6, 1e-3].
Mat4 delta_u_oracle(const PulseCircuit& c, double h = 1e-5);

/// True when ||delta_u||_F <= tol.
bool check_robust(const PulseCircuit& c, double tol = Tol::robust);

/// Trace overlap fidelity |tr(target† u)| / 4 for two-qubit unitaries.
double fidelity(const Mat4& target, const Mat4& u);

/// Infidelity and phase-invariant distance of a circuit against a fixed
/// target over a grid of error values, plus the fitted log-log slope of
/// infidelity against epsilon.
struct ErrorScan {
  std::vector<double> epsilon;
  std::vector<double> infidelity;
  std::vector<double> distance;
  double slope = 0.0;
};

/// Least-squares slope of log(infidelity) against log(epsilon).
/// Returns NaN when fewer than two samples are given (undefined fit) and
/// +infinity when every infidelity sits below 1e-15, i.e. the circuit
/// matches the target to working precision across the whole grid.
double slope_fit(const std::vector<double>& epsilon,
                 const std::vector<double>& infidelity);

/// Evaluates the circuit at every epsilon in the grid. The grid must be
/// non-empty, positive and strictly increasing.
ErrorScan scan(const PulseCircuit& c, const Mat4& target,
               const std::vector<double>& eps_grid);

/// n logarithmically spaced points from lo to hi (inclusive); lo, hi > 0.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

/// CSV rendering with header "epsilon,infidelity,distance"; full round-trip
/// precision, byte-stable for identical scans.
std::string scan_csv(const ErrorScan& s);

}  // namespace isingsynth
