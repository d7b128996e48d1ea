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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "isingsynth/synth.hpp"
#include "test_helpers.hpp"

using namespace isingsynth;
using namespace isingsynth::testing;

namespace {

// Generic non-robust circuit exercising locals on both qubits.
PulseCircuit crooked() {
  PulseCircuit c;
  c.couplings = {1.0, 2.5, -0.7};
  c.locals = {LocalLayer{{LocalGate{0.9, 0.2}}, {LocalGate{-1.3, 1.1}}},
              LocalLayer{{LocalGate{0.4, 2.7}}, {LocalGate{2.2, 0.6}}}};
  c.boundary_pre = {LocalLayer{{}, {LocalGate{0.5, 0.3}}}};
  c.boundary_post = {LocalLayer{{LocalGate{1.7, 1.0}}, {}}};
  return c;
}

}  // namespace

TEST_CASE("delta_u of a bare coupling is its exact generator term") {
  const double th = 1.9;
  const Mat4 zz = kron(pauli_z(), pauli_z());
  const Mat4 expected = (th / 4.0) * (zz * coupling(th));
  CHECK(max_abs(delta_u(PulseCircuit{{th}, {}, {}, {}}) - expected) < 1e-15);
}

TEST_CASE("delta_u assembles one generator term per coupling") {
  PulseCircuit c;
  c.couplings = {1.3, -2.1};
  c.locals = {LocalLayer{{LocalGate{0.8, 0.3}}, {LocalGate{-1.1, 2.0}}}};
  const Mat4 zz = kron(pauli_z(), pauli_z());
  const Mat4 l = layer_matrix(c.locals[0]);
  const Mat4 s1 = coupling(1.3), s2 = coupling(-2.1);
  const Mat4 expected = (1.3 / 4.0) * (s2 * l * (zz * s1)) +
                        (-2.1 / 4.0) * (zz * s2 * l * s1);
  CHECK(max_abs(delta_u(c) - expected) < 1e-15);
}

TEST_CASE("delta_u respects boundary dressing") {
  PulseCircuit c = crooked();
  const Mat4 direct = delta_u(c);
  // the same derivative conjugated by the boundary layers
  PulseCircuit bare = c;
  bare.boundary_pre.clear();
  bare.boundary_post.clear();
  const Mat4 expected = layer_matrix(c.boundary_post[0]) * delta_u(bare) *
                        layer_matrix(c.boundary_pre[0]);
  CHECK(max_abs(direct - expected) < 1e-14);
}

TEST_CASE("delta_u agrees with the finite difference oracle") {
  const PulseCircuit c = crooked();
  CHECK(max_abs(delta_u(c) - delta_u_oracle(c)) < 1e-9);
  CHECK(max_abs(delta_u(c) - delta_u_oracle(c, 1e-4)) < 1e-7);
}

TEST_CASE("delta_u_oracle validates its step size") {
  const PulseCircuit c = crooked();
  CHECK_THROWS_AS((void)delta_u_oracle(c, 1e-7), std::invalid_argument);
  CHECK_THROWS_AS((void)delta_u_oracle(c, 1e-2), std::invalid_argument);
  CHECK_THROWS_AS((void)delta_u_oracle(c, 0.0), std::invalid_argument);
}

TEST_CASE("check_robust separates composite from bare couplings") {
  CHECK(check_robust(general_solution(-2.2, 2.2, 1, -1, 1)));
  CHECK_FALSE(check_robust(PulseCircuit{{kPi}, {}, {}, {}}));
  CHECK_FALSE(check_robust(crooked()));
}

TEST_CASE("fidelity is the phase-free trace overlap") {
  std::mt19937_64 rng(21);
  const Mat4 u = random_local_pair(rng);
  CHECK(fidelity(u, u) == doctest::Approx(1.0));
  CHECK(fidelity(u, std::exp(Complex(0, 1.1)) * u) == doctest::Approx(1.0));
  CHECK(fidelity(cnot_gate(), Mat4::identity()) == doctest::Approx(0.5));
}

TEST_CASE("slope_fit recovers exact power laws") {
  std::vector<double> eps, inf2, inf4;
  for (int i = 0; i < 12; ++i) {
    const double e = 1e-3 * std::pow(10.0, i / 6.0);
    eps.push_back(e);
    inf2.push_back(0.37 * e * e);
    inf4.push_back(0.81 * e * e * e * e);
  }
  CHECK(slope_fit(eps, inf2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(slope_fit(eps, inf4) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::isnan(slope_fit({1e-3}, {1e-9})));
  CHECK(std::isinf(slope_fit({1e-3, 1e-2}, {1e-16, 1e-17})));
}

TEST_CASE("log_grid spans the requested decade range") {
  const auto g = log_grid(1e-3, 1e-1, 25);
  REQUIRE(g.size() == 25);
  CHECK(g.front() == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(g.back() == doctest::Approx(1e-1).epsilon(1e-12));
  for (std::size_t i = 1; i < g.size(); ++i) {
    CHECK(g[i] > g[i - 1]);
    // constant ratio between neighbours
    CHECK(g[i] / g[i - 1] ==
          doctest::Approx(g[1] / g[0]).epsilon(1e-12));
  }
  CHECK_THROWS_AS((void)log_grid(0.0, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS((void)log_grid(1e-1, 1e-3, 5), std::invalid_argument);
}

TEST_CASE("scan validates its grid") {
  const PulseCircuit c = crooked();
  const Mat4 target = evaluate(c);
  CHECK_THROWS_AS((void)scan(c, target, {}), std::invalid_argument);
  CHECK_THROWS_AS((void)scan(c, target, {1e-2, 1e-3}), std::invalid_argument);
  CHECK_THROWS_AS((void)scan(c, target, {-1e-3, 1e-2}), std::invalid_argument);
}

TEST_CASE("scan slope tells robust and bare circuits apart") {
  const auto grid = log_grid(1e-3, 1e-1, 25);

  const PulseCircuit robust = general_solution(-2.2, 2.2, 1, -1, 1);
  const ErrorScan sr = scan(robust, evaluate(robust), grid);
  CHECK(sr.slope > 3.9);

  PulseCircuit bare{{kPi}, {}, {}, {}};
  const ErrorScan sb = scan(bare, evaluate(bare), grid);
  CHECK(sb.slope == doctest::Approx(2.0).epsilon(1e-3));

  // infidelity grows monotonically in this range for both
  for (std::size_t i = 1; i < grid.size(); ++i) {
    CHECK(sr.infidelity[i] > sr.infidelity[i - 1]);
    CHECK(sb.infidelity[i] > sb.infidelity[i - 1]);
  }
}

TEST_CASE("scan_csv is deterministic and round-trip precise") {
  const PulseCircuit c = crooked();
  const ErrorScan s = scan(c, evaluate(c), log_grid(1e-3, 1e-2, 4));
  const std::string text = scan_csv(s);
  CHECK(text.rfind("epsilon,infidelity,distance\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
  CHECK(scan_csv(scan(c, evaluate(c), log_grid(1e-3, 1e-2, 4))) == text);
  // the first epsilon prints with full round-trip precision
  CHECK(text.find("\n0.001,") != std::string::npos);
}
