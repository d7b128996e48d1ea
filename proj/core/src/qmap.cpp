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

#include "isingsynth/qmap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace isingsynth {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

Mat2 axis_mat(double phi) {
  return std::cos(phi) * pauli_x() + std::sin(phi) * pauli_y();
}

// Fold an axis phase into [0, pi); phases pi apart name the same axis.
double fold_axis(double phi) {
  double x = std::fmod(phi, kPi);
  if (x < 0.0) x += kPi;
  if (x > kPi - 1e-9) x = 0.0;
  return x;
}

bool near_multiple(double delta, double period, double tol) {
  const double r = std::abs(std::remainder(delta, period));
  return r <= tol;
}

}  // namespace

SubalgebraFrame make_frame(double omega) {
  SubalgebraFrame f;
  f.omega = omega;
  const Mat2 id2 = Mat2::identity();
  const Mat2 u = std::sin(omega) * pauli_x() - std::cos(omega) * pauli_y();
  const Mat2 v = std::cos(omega) * pauli_x() + std::sin(omega) * pauli_y();
  f.x = kron(pauli_z(), pauli_z());
  f.y = kron(pauli_z(), u);
  f.z = kron(id2, v);
  return f;
}

Mat4 frak_r(double phi, double theta, const SubalgebraFrame& frame) {
  const Mat4 d = kron(Mat2::identity(), rot(theta, frame.omega));
  return d * coupling(2.0 * phi) * dagger(d);
}

Mat4 frak_r_direct(double phi, double theta, const SubalgebraFrame& frame) {
  const Mat4 axis = std::cos(theta) * frame.x + std::sin(theta) * frame.y;
  return std::cos(phi / 2.0) * Mat4::identity() +
         (-kI * std::sin(phi / 2.0)) * axis;
}

Mat2 evaluate_sequence(const OneQubitSequence& seq, double epsilon) {
  Mat2 m = Mat2::identity();
  for (const auto& p : seq.pulses) m = rot((1.0 + epsilon) * p.angle, p.phi) * m;
  return m;
}

Mat2 sequence_derivative(const OneQubitSequence& seq) {
  const std::size_t n = seq.pulses.size();
  std::vector<Mat2> gate(n);
  std::vector<Mat2> before(n + 1);  // before[i] = product of pulses < i
  before[0] = Mat2::identity();
  for (std::size_t i = 0; i < n; ++i) {
    gate[i] = rot(seq.pulses[i].angle, seq.pulses[i].phi);
    before[i + 1] = gate[i] * before[i];
  }
  Mat2 deriv = Mat2::zero();
  Mat2 after = Mat2::identity();
  for (std::size_t i = n; i-- > 0;) {
    const auto& p = seq.pulses[i];
    const Mat2 d = (-kI * (p.angle / 2.0)) * (axis_mat(p.phi) * gate[i]);
    deriv = deriv + after * d * before[i];
    after = after * gate[i];
  }
  return deriv;
}

double sequence_fidelity(const Mat2& x, const Mat2& y) {
  return std::abs(trace(dagger(x) * y)) / 2.0;
}

PulseCircuit lift_sequence(const OneQubitSequence& seq, double omega) {
  const std::size_t n = seq.pulses.size();
  if (n == 0)
    throw std::invalid_argument("sequence must contain at least one pulse");
  PulseCircuit c;
  c.couplings.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.couplings[i] = 2.0 * seq.pulses[i].angle;
  c.locals.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    c.locals[i] = LocalLayer{
        {LocalGate{0.0, 0.0}},
        {LocalGate{seq.pulses[i].phi - seq.pulses[i + 1].phi, omega}}};
  if (std::abs(seq.pulses[0].phi) > 1e-12)
    c.boundary_pre = {
        LocalLayer{{LocalGate{0.0, 0.0}},
                   {LocalGate{-seq.pulses[0].phi, omega}}}};
  if (std::abs(seq.pulses[n - 1].phi) > 1e-12)
    c.boundary_post = {
        LocalLayer{{LocalGate{0.0, 0.0}},
                   {LocalGate{seq.pulses[n - 1].phi, omega}}}};
  return c;
}

OneQubitSequence project_to_one_qubit(const PulseCircuit& c, double phi1) {
  validate(c);

  bool have_axis = false;
  double axis = 0.0;
  // Net signed rotation a layer applies about the common axis. Gates pi out
  // of phase count as negative rotations; everything else is rejected.
  const auto fold_layer = [&](const LocalLayer& l) {
    for (const auto& g : l.q1)
      if (std::abs(std::sin(g.theta / 2.0)) > 1e-9)
        throw ValidationError(
            "projection requires identity qubit-1 gates, found a rotation by " +
            std::to_string(g.theta));
    double sum = 0.0;
    for (const auto& g : l.q2) {
      if (std::abs(std::sin(g.theta / 2.0)) <= 1e-9) continue;
      if (!have_axis) {
        axis = g.phi;
        have_axis = true;
      }
      if (near_multiple(g.phi - axis, 2.0 * kPi, 1e-9))
        sum += g.theta;
      else if (near_multiple(g.phi - axis - kPi, 2.0 * kPi, 1e-9))
        sum -= g.theta;
      else
        throw ValidationError(
            "projection requires a single qubit-2 axis, found phases " +
            std::to_string(axis) + " and " + std::to_string(g.phi));
    }
    return sum;
  };

  double pre_sum = 0.0;
  for (const auto& l : c.boundary_pre) pre_sum += fold_layer(l);
  std::vector<double> junction;
  junction.reserve(c.locals.size());
  for (const auto& l : c.locals) junction.push_back(fold_layer(l));
  double post_sum = 0.0;
  for (const auto& l : c.boundary_post) post_sum += fold_layer(l);

  // The lift opens with a rotation by -phi_0, so a pre layer pins the first
  // phase; otherwise the caller's phi1 supplies it.
  OneQubitSequence seq;
  seq.pulses.resize(c.couplings.size());
  double phase = c.boundary_pre.empty() ? phi1 : -pre_sum;
  for (std::size_t i = 0; i < c.couplings.size(); ++i) {
    seq.pulses[i] = OneQubitPulse{c.couplings[i] / 2.0, phase};
    if (i < junction.size()) phase -= junction[i];
  }
  // A post layer closes the frame and must land on the final phase the
  // junctions produce, or the circuit is not an embedded sequence.
  if (!c.boundary_post.empty() &&
      !near_multiple(post_sum - seq.pulses.back().phi, 2.0 * kPi, 1e-9))
    throw ValidationError(
        "post dressing rotates by " + std::to_string(post_sum) +
        " but the junctions end at phase " +
        std::to_string(seq.pulses.back().phi));
  return seq;
}

std::string to_json_string(const OneQubitSequence& seq, int indent) {
  nlohmann::ordered_json root;
  root["pulses"] = nlohmann::ordered_json::array();
  for (const auto& p : seq.pulses)
    root["pulses"].push_back({{"angle", p.angle}, {"phi", p.phi}});
  return root.dump(indent) + "\n";
}

OneQubitSequence sequence_from_json_string(const std::string& text) {
  try {
    const auto root = nlohmann::json::parse(text);
    OneQubitSequence seq;
    for (const auto& item : root.at("pulses"))
      seq.pulses.push_back(OneQubitPulse{item.at("angle").get<double>(),
                                         item.at("phi").get<double>()});
    return seq;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad sequence JSON: ") + e.what());
  }
}

AxisReport dressing_axes(const PulseCircuit& c) {
  std::vector<double> axes;
  const auto add = [&axes](const LocalGate& g) {
    if (std::abs(std::sin(g.theta / 2.0)) <= 1e-9) return;
    const double a = fold_axis(g.phi);
    for (double seen : axes)
      if (std::abs(seen - a) <= 1e-9) return;
    axes.push_back(a);
  };
  const auto add_layer = [&add](const LocalLayer& l) {
    for (const auto& g : l.q1) add(g);
    for (const auto& g : l.q2) add(g);
  };
  for (const auto& l : c.boundary_pre) add_layer(l);
  for (const auto& l : c.locals) add_layer(l);
  for (const auto& l : c.boundary_post) add_layer(l);
  std::sort(axes.begin(), axes.end());
  AxisReport rep;
  rep.axes = std::move(axes);
  rep.single_axis = rep.axes.size() <= 1;
  return rep;
}

}  // namespace isingsynth
