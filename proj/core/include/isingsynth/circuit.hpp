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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "isingsynth/matcore.hpp"

namespace isingsynth {

/// Thrown when a circuit (or its serialized form) violates the structural
/// rules documented on PulseCircuit.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One-qubit rotation about an axis in the x-y plane:
///   R(theta, phi) = exp[-i theta (cos(phi) sx + sin(phi) sy) / 2].
struct LocalGate {
  double theta = 0.0;
  double phi = 0.0;
};

/// The local gates applied between two neighbouring couplings, one product
/// per qubit. Gates are listed in application order (index 0 acts first).
/// Most layers hold a single gate per qubit; dressed constructions produce
/// longer products.
struct LocalLayer {
  std::vector<LocalGate> q1;
  std::vector<LocalGate> q2;
};

/// Uniform multiplicative error on every coupling angle: each coupling Theta
/// is executed as (1 + epsilon) * Theta while local gates stay exact.
struct ErrorModel {
  double epsilon = 0.0;
};

/// Alternating sequence of two-qubit couplings and local layers,
///
///   U = B_post * S(Theta_N) * L_{N-1} * ... * L_1 * S(Theta_1) * B_pre,
///
/// with S(Theta) = exp(-i Theta sz⊗sz / 4). Everything is stored in
/// application order: couplings[0] / boundary lists index 0 act first
/// (rightmost in the product above). locals[i] sits between couplings[i] and
/// couplings[i+1], so locals.size() == couplings.size() - 1. The boundary
/// layers are optional dressing; they carry no coupling and therefore no
/// error sensitivity.
///
/// Qubit 1 is the left tensor factor (slow index of the row-major Mat4).
struct PulseCircuit {
  std::vector<double> couplings;
  std::vector<LocalLayer> locals;
  std::vector<LocalLayer> boundary_pre;
  std::vector<LocalLayer> boundary_post;

  std::size_t n() const { return couplings.size(); }
};

/// Matrix of R(theta, phi); see LocalGate.
Mat2 rot(double theta, double phi);
Mat2 rot(const LocalGate& g);

/// Matrix of S(Theta) = exp(-i Theta sz⊗sz / 4) = diag(e^{-i Theta/4},
/// e^{i Theta/4}, e^{i Theta/4}, e^{-i Theta/4}).
Mat4 coupling(double theta);

/// Product of a layer's per-qubit gate lists as a 4x4 unitary.
Mat4 layer_matrix(const LocalLayer& layer);

/// Checks the structural rules (sizes, finiteness). Throws ValidationError.
void validate(const PulseCircuit& c);

/// Total unitary of the circuit under the given coupling error.
Mat4 evaluate(const PulseCircuit& c, const ErrorModel& err = {});
Mat4 evaluate(const PulseCircuit& c, double epsilon);

/// Interaction cost: sum of |Theta_i| over the couplings.
double execution_time(const PulseCircuit& c);

/// True when every coupling angle is non-negative, i.e. the circuit can be
/// run as scheduled evolution under a fixed-sign coupling without reversal.
bool is_physical(const PulseCircuit& c);

/// Product of couplings lo..hi (1-indexed, inclusive) with the local layers
/// strictly between them; boundary layers and outside locals are excluded.
Mat4 subproduct(const PulseCircuit& c, std::size_t lo, std::size_t hi);

/// Same circuit with the roles of the two qubits exchanged in every layer.
/// S(Theta) is symmetric under the exchange, so the couplings are untouched.
PulseCircuit swap_qubits(const PulseCircuit& c);

/// Standard two-qubit gates used as synthesis targets (qubit 1 = control).
Mat4 cnot_gate();
Mat4 swap_gate();
/// The double-sided entangler diag-antidiag gate
/// [[1,0,0,0],[0,0,-i,0],[0,-i,0,0],[0,0,0,1]].
Mat4 v_gate();

/// Serialize to the documented JSON schema (keys in fixed order, indent
/// spaces as given, stable across runs for identical circuits).
std::string to_json_string(const PulseCircuit& c, int indent = 2);
/// Parse and validate a circuit from its JSON form. Accepts each local part
/// as a single {"theta","phi"} object or as a list of them.
PulseCircuit circuit_from_json_string(const std::string& text);

}  // namespace isingsynth
