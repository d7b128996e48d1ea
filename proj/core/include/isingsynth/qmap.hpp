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

#ifndef ISINGSYNTH_QMAP_HPP_
#define ISINGSYNTH_QMAP_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "isingsynth/circuit.hpp"
#include "isingsynth/matcore.hpp"

namespace isingsynth {

// An su(2) triple embedded in the two-qubit algebra, parameterized by an
// axis phase omega:
//
//   x = sz (x) sz
//   y = sz (x) (sin(omega) sx - cos(omega) sy)
//   z = 1  (x) (cos(omega) sx + sin(omega) sy)
//
// These satisfy [x, y] = 2i z and cyclic permutations, so any single-qubit
// composite pulse written in terms of Pauli rotations has an exact image in
// the coupling-plus-local gate set.
struct SubalgebraFrame {
  double omega = 0.0;
  Mat4 x;
  Mat4 y;
  Mat4 z;
};

SubalgebraFrame make_frame(double omega);

// Rotation by phi about the axis at angle theta in the frame's x-y plane,
// realized as a dressed coupling:
//
//   [1 (x) R(theta, omega)] S(2*phi) [1 (x) R(theta, omega)]^dag
Mat4 frak_r(double phi, double theta, const SubalgebraFrame& frame);

// The same rotation from its closed form,
// cos(phi/2) 1 - i sin(phi/2) (cos(theta) x + sin(theta) y).
// Useful as an independent check on the dressed-coupling path.
Mat4 frak_r_direct(double phi, double theta, const SubalgebraFrame& frame);

// One rotation of a single-qubit composite sequence: R(angle, phi) with the
// angle (not the axis) subject to the multiplicative error.
struct OneQubitPulse {
  double angle = 0.0;
  double phi = 0.0;
};

// Pulses in application order: pulses[0] acts first.
struct OneQubitSequence {
  std::vector<OneQubitPulse> pulses;
};

// Product of the sequence with every angle scaled by (1 + epsilon).
Mat2 evaluate_sequence(const OneQubitSequence& seq, double epsilon = 0.0);

// Analytic d/d epsilon of evaluate_sequence at epsilon = 0. A sequence is
// robust to the angle error exactly when this vanishes.
Mat2 sequence_derivative(const OneQubitSequence& seq);

// Phase-insensitive overlap |tr(x^dag y)| / 2.
double sequence_fidelity(const Mat2& x, const Mat2& y);

// Embed a single-qubit sequence as a two-qubit pulse circuit in the frame
// at axis phase omega. Each pulse R(a, phi) becomes a coupling S(2a)
// conjugated into the pulse's axis; adjacent conjugations merge into one
// junction local per coupling pair. Boundary dressing layers appear only
// when the first or last axis phase is nonzero. The coupling error model
// of the circuit reproduces the angle error model of the sequence, and
// |tr| fidelities agree between the two pictures.
PulseCircuit lift_sequence(const OneQubitSequence& seq, double omega = 0.0);

// Inverse of lift_sequence for circuits of the embedded shape: every
// qubit-1 gate an identity up to sign, every qubit-2 gate a rotation about
// one common axis (opposite-phase gates count as negative rotations).
// Boundary layers are folded into the phase bookkeeping: a pre layer fixes
// the first pulse phase (overriding phi1), and a post layer must agree with
// the final phase reached through the junctions, modulo a full turn.
// Without boundary dressing phi1 supplies the free initial phase, and the
// reconstruction is exact only up to frame rotations at the two ends.
// Throws ValidationError when the circuit is not of this shape.
OneQubitSequence project_to_one_qubit(const PulseCircuit& c, double phi1 = 0.0);

std::string to_json_string(const OneQubitSequence& seq, int indent = 2);
OneQubitSequence sequence_from_json_string(const std::string& text);

// The distinct local rotation axes appearing in a circuit, as phases
// folded into [0, pi). Gates that are identities up to sign are skipped.
// single_axis reports whether everything shares one axis, the shape
// required for an exact single-qubit reading of the circuit.
struct AxisReport {
  std::vector<double> axes;
  bool single_axis = false;
};

AxisReport dressing_axes(const PulseCircuit& c);

}  // namespace isingsynth

#endif  // ISINGSYNTH_QMAP_HPP_
