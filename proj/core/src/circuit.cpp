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

#include "isingsynth/circuit.hpp"

#include <cmath>
#include <utility>

#include "json.hpp"

namespace isingsynth {

Mat2 rot(double theta, double phi) {
  Mat2 m;
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  m(0, 0) = c;
  m(1, 1) = c;
  m(0, 1) = Complex(0, -s) * Complex(std::cos(phi), -std::sin(phi));
  m(1, 0) = Complex(0, -s) * Complex(std::cos(phi), std::sin(phi));
  return m;
}

Mat2 rot(const LocalGate& g) { return rot(g.theta, g.phi); }

Mat4 coupling(double theta) {
  Mat4 m;
  const Complex lo = std::exp(Complex(0, -theta / 4));
  const Complex hi = std::exp(Complex(0, theta / 4));
  m(0, 0) = lo;
  m(1, 1) = hi;
  m(2, 2) = hi;
  m(3, 3) = lo;
  return m;
}

Mat4 layer_matrix(const LocalLayer& layer) {
  Mat2 m1 = Mat2::identity();
  for (const auto& g : layer.q1) m1 = rot(g) * m1;
  Mat2 m2 = Mat2::identity();
  for (const auto& g : layer.q2) m2 = rot(g) * m2;
  return kron(m1, m2);
}

namespace {

void check_finite_layer(const LocalLayer& layer, const char* where) {
  for (const auto& g : layer.q1)
    if (!std::isfinite(g.theta) || !std::isfinite(g.phi))
      throw ValidationError(std::string("non-finite gate angle in ") + where);
  for (const auto& g : layer.q2)
    if (!std::isfinite(g.theta) || !std::isfinite(g.phi))
      throw ValidationError(std::string("non-finite gate angle in ") + where);
}

}  // namespace

void validate(const PulseCircuit& c) {
  if (c.couplings.empty())
    throw ValidationError("circuit needs at least one coupling");
  if (c.locals.size() + 1 != c.couplings.size())
    throw ValidationError("expected exactly one local layer between "
                          "neighbouring couplings: got " +
                          std::to_string(c.locals.size()) + " layers for " +
                          std::to_string(c.couplings.size()) + " couplings");
  for (double t : c.couplings)
    if (!std::isfinite(t)) throw ValidationError("non-finite coupling angle");
  for (const auto& l : c.locals) check_finite_layer(l, "locals");
  for (const auto& l : c.boundary_pre) check_finite_layer(l, "boundary.pre");
  for (const auto& l : c.boundary_post) check_finite_layer(l, "boundary.post");
}

Mat4 evaluate(const PulseCircuit& c, const ErrorModel& err) {
  validate(c);
  Mat4 u = Mat4::identity();
  for (const auto& l : c.boundary_pre) u = layer_matrix(l) * u;
  for (std::size_t j = 0; j < c.couplings.size(); ++j) {
    u = coupling((1.0 + err.epsilon) * c.couplings[j]) * u;
    if (j < c.locals.size()) u = layer_matrix(c.locals[j]) * u;
  }
  for (const auto& l : c.boundary_post) u = layer_matrix(l) * u;
  return u;
}

Mat4 evaluate(const PulseCircuit& c, double epsilon) {
  return evaluate(c, ErrorModel{epsilon});
}

double execution_time(const PulseCircuit& c) {
  double t = 0;
  for (double x : c.couplings) t += std::abs(x);
  return t;
}

bool is_physical(const PulseCircuit& c) {
  for (double x : c.couplings)
    if (x < 0) return false;
  return true;
}

Mat4 subproduct(const PulseCircuit& c, std::size_t lo, std::size_t hi) {
  validate(c);
  if (lo < 1 || hi > c.couplings.size() || lo > hi)
    throw ValidationError("subproduct range [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "] out of bounds");
  Mat4 u = Mat4::identity();
  for (std::size_t j = lo - 1; j < hi; ++j) {
    u = coupling(c.couplings[j]) * u;
    if (j + 1 < hi) u = layer_matrix(c.locals[j]) * u;
  }
  return u;
}

PulseCircuit swap_qubits(const PulseCircuit& c) {
  PulseCircuit r = c;
  for (auto& l : r.locals) std::swap(l.q1, l.q2);
  for (auto& l : r.boundary_pre) std::swap(l.q1, l.q2);
  for (auto& l : r.boundary_post) std::swap(l.q1, l.q2);
  return r;
}

Mat4 cnot_gate() {
  Mat4 m;
  m(0, 0) = m(1, 1) = 1.0;
  m(2, 3) = m(3, 2) = 1.0;
  return m;
}

Mat4 swap_gate() {
  Mat4 m;
  m(0, 0) = m(3, 3) = 1.0;
  m(1, 2) = m(2, 1) = 1.0;
  return m;
}

Mat4 v_gate() {
  Mat4 m;
  m(0, 0) = m(3, 3) = 1.0;
  m(1, 2) = m(2, 1) = Complex(0, -1);
  return m;
}

namespace {

using nlohmann::ordered_json;

ordered_json part_to_json(const std::vector<LocalGate>& part) {
  if (part.size() == 1)
    return ordered_json{{"theta", part[0].theta}, {"phi", part[0].phi}};
  ordered_json arr = ordered_json::array();
  for (const auto& g : part)
    arr.push_back(ordered_json{{"theta", g.theta}, {"phi", g.phi}});
  return arr;
}

ordered_json layer_to_json(const LocalLayer& layer) {
  return ordered_json::array({part_to_json(layer.q1), part_to_json(layer.q2)});
}

LocalGate gate_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("theta") || !j.contains("phi"))
    throw ValidationError("gate must be an object with theta and phi");
  if (!j["theta"].is_number() || !j["phi"].is_number())
    throw ValidationError("gate angles must be numbers");
  return LocalGate{j["theta"].get<double>(), j["phi"].get<double>()};
}

std::vector<LocalGate> part_from_json(const ordered_json& j) {
  std::vector<LocalGate> part;
  if (j.is_object()) {
    part.push_back(gate_from_json(j));
  } else if (j.is_array()) {
    for (const auto& g : j) part.push_back(gate_from_json(g));
  } else {
    throw ValidationError("local part must be a gate object or a gate list");
  }
  return part;
}

LocalLayer layer_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ValidationError("local layer must be a [qubit1, qubit2] pair");
  return LocalLayer{part_from_json(j[0]), part_from_json(j[1])};
}

}  // namespace

std::string to_json_string(const PulseCircuit& c, int indent) {
  validate(c);
  ordered_json j;
  j["n"] = c.couplings.size();
  j["couplings"] = c.couplings;
  ordered_json locals = ordered_json::array();
  for (const auto& l : c.locals) locals.push_back(layer_to_json(l));
  j["locals"] = std::move(locals);
  if (!c.boundary_pre.empty() || !c.boundary_post.empty()) {
    ordered_json pre = ordered_json::array();
    for (const auto& l : c.boundary_pre) pre.push_back(layer_to_json(l));
    ordered_json post = ordered_json::array();
    for (const auto& l : c.boundary_post) post.push_back(layer_to_json(l));
    j["boundary"] = ordered_json{{"pre", std::move(pre)},
                                 {"post", std::move(post)}};
  }
  return j.dump(indent) + "\n";
}

PulseCircuit circuit_from_json_string(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("circuit JSON must be an object");
  if (!j.contains("couplings") || !j["couplings"].is_array())
    throw ValidationError("missing couplings array");

  PulseCircuit c;
  for (const auto& t : j["couplings"]) {
    if (!t.is_number()) throw ValidationError("couplings must be numbers");
    c.couplings.push_back(t.get<double>());
  }
  if (j.contains("n")) {
    if (!j["n"].is_number_unsigned() ||
        j["n"].get<std::size_t>() != c.couplings.size())
      throw ValidationError("field n disagrees with couplings length");
  }
  if (j.contains("locals")) {
    if (!j["locals"].is_array())
      throw ValidationError("locals must be an array");
    for (const auto& l : j["locals"]) c.locals.push_back(layer_from_json(l));
  }
  if (j.contains("boundary")) {
    const auto& b = j["boundary"];
    if (!b.is_object()) throw ValidationError("boundary must be an object");
    if (b.contains("pre"))
      for (const auto& l : b["pre"]) c.boundary_pre.push_back(layer_from_json(l));
    if (b.contains("post"))
      for (const auto& l : b["post"])
        c.boundary_post.push_back(layer_from_json(l));
  }
  validate(c);
  return c;
}

}  // namespace isingsynth
