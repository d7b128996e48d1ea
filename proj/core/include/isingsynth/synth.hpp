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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "isingsynth/circuit.hpp"

namespace isingsynth {

/// A synthesis formula hit a pole (vanishing denominator) or a forbidden
/// parameter (such as a zero winding index).
struct SingularParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The requested target lies outside the reachable set of the construction.
struct UnreachableTarget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Three-coupling family that cancels the first-order coupling error.
///
/// Given free qubit-2 rotation angles theta1, theta2, a nonzero integer k
/// and sign choices alpha, beta in {-1, +1}, the circuit
///
///   S(Theta3) [R(tb2,0) ⊗ R(theta2,0)] S(Theta2) [R(tb1,0) ⊗ R(theta1,0)] S(Theta1)
///
/// is first-order robust with Theta2 = 2 pi k and
///
///   Theta1 = alpha Theta2 sin(theta2) / sin(gamma theta1 + theta2),
///   Theta3 = beta  Theta2 sin(theta1) / sin(gamma theta1 + theta2),
///
/// where gamma = +1 for even k and -1 for odd k. The sign choices are
/// realized by the qubit-1 angles: tb1 = pi when alpha = +1 and 0 otherwise;
/// tb2 = pi when beta = gamma and 0 otherwise. Throws SingularParameter when
/// k = 0 or the denominator is within 1e-9 of a pole.
PulseCircuit general_solution(double theta1, double theta2, int k, int alpha,
                              int beta);

/// Rewrites a circuit whose qubit-1 local gates are all x-axis half-turn
/// multiples (theta in pi Z, phi in pi Z) into the two-local-degrees form:
/// qubit-1 locals become identity, couplings to the left of each absorbed
/// half-turn flip sign, and a single leftover sx factor (if any) lands in
/// boundary_post. The result equals the input up to global phase. Existing
/// boundary layers are carried through unchanged.
PulseCircuit simplify_to_minimal(const PulseCircuit& c);

/// Root of the quarter-turn crossing cos(pi/4) = cos(t) sin(pi sec(t)/2),
/// reported as theta_star = pi - t. Bisection on the outer monotone segment;
/// residual is the defect of the returned root in the crossing condition.
struct ThetaStar {
  double theta_star;
  double residual;
  int iterations;
};
ThetaStar solve_theta_star();

/// Robust composite replacement for a bare coupling S(target_theta).
///
/// The equal-outer-coupling member of general_solution (theta1 = -t,
/// theta2 = t, k = 1, couplings (-pi sec t, 2 pi, -pi sec t)) evaluates, after
/// a fixed one-qubit dressing R(eta, 0) on qubit 2, to exactly S(4 zeta) with
///   cos(zeta) = cos(t) sin(pi sec(t) / 2),
///   eta = atan2(sin t, cos(pi sec(t)/2) cos t).
/// The solver inverts cos(zeta) = cos(target_theta/4) for t in (pi/2, pi).
/// Multiple roots can exist; they are indexed by `branch` in order of
/// increasing execution time (branch 0 is the cheapest, the one of interest
/// in practice). Unreachable targets and out-of-range branches throw
/// UnreachableTarget.
struct RobustCoupling {
  PulseCircuit circuit;
  double target = 0;
  double theta = 0;  // the root t
  double zeta = 0;
  double eta = 0;
  int branch = 0;
  int branches_found = 0;
};
RobustCoupling robust_s(double target_theta, int branch = 0);

/// CNOT as the robust S(pi) composite wrapped in fixed one-qubit gates
/// (phase-type and Hadamard-type factors written as x-y rotation products in
/// the boundary layers). Control is qubit 1; the result matches cnot_gate()
/// up to global phase and keeps every coupling non-negative.
PulseCircuit build_cnot();

/// Six-coupling robust realization of v_gate(): two robust S(pi) blocks
/// conjugated by R(pi/2, pi/2)⊗R(pi/2, pi/2) and R(pi/2, 0)⊗R(pi/2, 0)
/// respectively, with the inter-block one-qubit gates merged into the middle
/// local layer.
PulseCircuit build_v_gate();

/// Random sweep over the full solution set of the two-coupling robustness
/// condition Theta2 (Rb⊗R)^2 = -Theta1 * identity. Every member is verified
/// first-order robust and then Schmidt-decomposed: the report records the
/// largest second Schmidt coefficient seen, which stays at numerical zero
/// because all such circuits collapse to local gates. Two couplings
/// therefore buy no robust entangling gate, and three is minimal.
struct TwoCouplingReport {
  std::size_t trials = 0;
  bool all_robust = true;
  double max_delta_norm = 0;
  double max_second_coeff = 0;
};
TwoCouplingReport no_go_n2_witness(std::size_t trials, std::uint64_t seed);

/// The two branch families of the full robustness-condition case analysis,
/// beyond the generic family of general_solution.
///
/// In the qubit-1-free family, the qubit-2 angles are half-turn multiples
/// (theta = pi p, pi q with axis phases pi m, 0) while the qubit-1 angles
/// tb1, tb2 range freely:
///   Theta1 = -(-1)^p       2 pi k sin(tb2) csc(tb2 + (-1)^{k+l} tb1),
///   Theta3 = -(-1)^{k+l+q} 2 pi k sin(tb1) csc(tb2 + (-1)^{k+l} tb1),
/// with qubit-1 axis phases pi l, 0. This is the image of the generic family
/// under exchanging the qubit labels, extended by the axis parities.
///
/// In the qubit-2-free family, the qubit-2 angles theta1, theta2 range
/// freely with axis phases pi m, 0; the qubit-1 angles are constrained to
/// tb2 = pi n2, tb1 = pi p - (-1)^{k+l} pi n2 (axis phases pi l, 0), and
///   Theta1 = -(-1)^{p+q}   2 pi k sin(theta2) csc(theta2 + (-1)^{k+m} theta1),
///   Theta3 = -(-1)^{k+m+q} 2 pi k sin(theta1) csc(theta2 + (-1)^{k+m} theta1),
/// where q is the parity of n2. With l = m = 0 this reduces exactly to
/// general_solution (the two paths share one coupling-formula evaluation, so
/// the reduction is bitwise).
PulseCircuit qubit1_free_solution(double tb1, double tb2, int k, int p, int q,
                                  int l, int m);
PulseCircuit qubit2_free_solution(double theta1, double theta2, int k, int l,
                                  int m, int p, int n2);

enum class BranchFamily { qubit1_free, qubit2_free };

/// Deterministic sweep over one branch family: free angles are drawn from a
/// seeded generator, parities cycle through all combinations, and instances
/// whose denominator is near a pole are redrawn. Returns `count` circuits.
std::vector<PulseCircuit> enumerate_appendix_branches(BranchFamily family,
                                                      int k,
                                                      std::size_t count,
                                                      std::uint64_t seed);

}  // namespace isingsynth
