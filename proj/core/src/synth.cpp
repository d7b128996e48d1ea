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

#include "isingsynth/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "isingsynth/robustness.hpp"
#include "isingsynth/schmidt.hpp"

namespace isingsynth {

namespace {

constexpr double kPi = std::numbers::pi;

int parity_sign(long n) { return (n & 1L) ? -1 : 1; }

LocalLayer single_layer(double t1, double p1, double t2, double p2) {
  return LocalLayer{{LocalGate{t1, p1}}, {LocalGate{t2, p2}}};
}

struct OuterCouplings {
  double theta1;
  double theta3;
};

// One shared evaluation of the outer-coupling formulas. Every solution
// family routes through here so that parameter sets which agree on
// (signs, k, angles, gamma) produce bitwise identical couplings.
OuterCouplings outer_couplings(double sign1, double sign3, int k, double a1,
                               double a2, double gamma) {
  if (k == 0) throw SingularParameter("winding index k must be nonzero");
  const double den = std::sin(gamma * a1 + a2);
  if (std::abs(den) < 1e-9)
    throw SingularParameter(
        "outer couplings diverge: sin(gamma*a1 + a2) = " + std::to_string(den));
  const double theta2 = 2.0 * kPi * static_cast<double>(k);
  return OuterCouplings{sign1 * theta2 * std::sin(a2) / den,
                        sign3 * theta2 * std::sin(a1) / den};
}

PulseCircuit three_coupling(const OuterCouplings& oc, int k, LocalLayer l1,
                            LocalLayer l2) {
  PulseCircuit c;
  c.couplings = {oc.theta1, 2.0 * kPi * static_cast<double>(k), oc.theta3};
  c.locals = {std::move(l1), std::move(l2)};
  return c;
}

// cos of the effective quarter-angle reached by the equal-outer-coupling
// family at local angle t.
double effective_cos(double t) {
  return std::cos(t) * std::sin(kPi / (2.0 * std::cos(t)));
}

double bisect_effective_cos(double lo, double hi, double target, int* iters) {
  double flo = effective_cos(lo) - target;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      if (iters) *iters = i;
      break;
    }
    const double fmid = effective_cos(mid) - target;
    if ((flo <= 0) == (fmid <= 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PulseCircuit general_solution(double theta1, double theta2, int k, int alpha,
                              int beta) {
  if (alpha * alpha != 1 || beta * beta != 1)
    throw std::invalid_argument("alpha and beta must be +1 or -1");
  const double gamma = (k & 1) ? -1.0 : 1.0;
  const OuterCouplings oc = outer_couplings(alpha, beta, k, theta1, theta2, gamma);
  // The sign choices are carried by qubit-1 half turns: a pi rotation next
  // to the first (last) coupling flips the sign of Theta1 (Theta3) relative
  // to the all-identity baseline.
  const double tb1 = (alpha == 1) ? kPi : 0.0;
  const double tb2 = (beta == static_cast<int>(gamma)) ? kPi : 0.0;
  return three_coupling(oc, k, single_layer(tb1, 0.0, theta1, 0.0),
                        single_layer(tb2, 0.0, theta2, 0.0));
}

PulseCircuit simplify_to_minimal(const PulseCircuit& c) {
  validate(c);
  PulseCircuit out = c;
  // Commute every qubit-1 half turn leftward out of the ladder. Passing an
  // sx factor through a coupling flips that coupling's sign; whatever
  // parity survives leaves the ladder as one extra boundary half turn.
  long parity = 0;
  for (std::size_t ci = 0; ci < out.couplings.size(); ++ci) {
    if (parity & 1L) out.couplings[ci] = -out.couplings[ci];
    if (ci >= out.locals.size()) break;
    for (const auto& g : out.locals[ci].q1) {
      const long nt = std::lround(g.theta / kPi);
      const long np = std::lround(g.phi / kPi);
      if (std::abs(g.theta - nt * kPi) > 1e-9 ||
          std::abs(g.phi - np * kPi) > 1e-9)
        throw ValidationError(
            "qubit-1 local gate is not a half-turn multiple; nothing to strip");
      parity += nt;
    }
    out.locals[ci].q1 = {LocalGate{0.0, 0.0}};
  }
  if (parity & 1L)
    out.boundary_post.insert(out.boundary_post.begin(),
                             LocalLayer{{LocalGate{kPi, 0.0}}, {}});
  return out;
}

ThetaStar solve_theta_star() {
  // The outer monotone segment of effective_cos runs from its last interior
  // minimum (near 1.95) up to the right endpoint where the value tends to 1,
  // so the quarter-turn level cos(pi/4) is crossed exactly once in [2, pi).
  const double target = std::cos(kPi / 4.0);
  int iters = 0;
  const double root = bisect_effective_cos(2.0, kPi - 1e-9, target, &iters);
  return ThetaStar{kPi - root, effective_cos(root) - target, iters};
}

RobustCoupling robust_s(double target_theta, int branch) {
  if (!std::isfinite(target_theta))
    throw std::invalid_argument("target coupling angle must be finite");
  if (branch < 0) throw std::invalid_argument("branch index must be >= 0");
  const double target = std::cos(target_theta / 4.0);

  // Locate every crossing of the target level on a fixed grid. The grid
  // pitch bounds how deep into the short-wavelength region near pi/2 roots
  // can be resolved; branches beyond it would demand couplings of order 1e3
  // and are reported unreachable instead.
  constexpr int kCells = 4096;
  const double lo = kPi / 2.0 + 1e-6;
  const double hi = kPi - 1e-6;
  std::vector<double> roots;
  double prev_t = lo;
  double prev_f = effective_cos(lo) - target;
  for (int i = 1; i <= kCells; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / kCells;
    const double f = effective_cos(t) - target;
    if (prev_f == 0.0)
      roots.push_back(prev_t);
    else if ((prev_f < 0) != (f < 0))
      roots.push_back(bisect_effective_cos(prev_t, t, target, nullptr));
    prev_t = t;
    prev_f = f;
  }

  if (roots.empty())
    throw UnreachableTarget("no composite reaches coupling angle " +
                            std::to_string(target_theta));
  // Cheapest first: the outer couplings are -pi sec(t), so execution time
  // decreases as |cos t| grows.
  std::sort(roots.begin(), roots.end(), [](double x, double y) {
    return std::abs(std::cos(x)) > std::abs(std::cos(y));
  });
  if (static_cast<std::size_t>(branch) >= roots.size())
    throw UnreachableTarget("branch " + std::to_string(branch) +
                            " not available: only " +
                            std::to_string(roots.size()) +
                            " root(s) for coupling angle " +
                            std::to_string(target_theta));

  const double t = roots[static_cast<std::size_t>(branch)];
  const double zeta = std::acos(std::clamp(effective_cos(t), -1.0, 1.0));
  const double eta =
      std::atan2(std::sin(t), std::cos(kPi / (2.0 * std::cos(t))) * std::cos(t));

  const double outer = -kPi / std::cos(t);
  PulseCircuit c;
  c.couplings = {outer, 2.0 * kPi, outer};
  c.locals = {single_layer(0.0, 0.0, -t, 0.0), single_layer(0.0, 0.0, t, 0.0)};
  c.boundary_pre = {single_layer(0.0, 0.0, eta, 0.0)};
  c.boundary_post = {single_layer(0.0, 0.0, -eta, 0.0)};

  RobustCoupling r;
  r.circuit = std::move(c);
  r.target = target_theta;
  r.theta = t;
  r.zeta = zeta;
  r.eta = eta;
  r.branch = branch;
  r.branches_found = static_cast<int>(roots.size());
  return r;
}

PulseCircuit build_cnot() {
  RobustCoupling rs = robust_s(kPi, 0);
  PulseCircuit c = std::move(rs.circuit);

  // Dress the composite coupling into a CNOT: conjugate qubit 2 by
  // Hadamards to turn the zz axis into zx, then a quarter phase turn on each
  // qubit absorbs the diagonal factors. All factors are spelled as x-y
  // rotation products so the circuit stays inside the gate set.
  const LocalLayer hadamard{{LocalGate{0.0, 0.0}},
                            {LocalGate{kPi, 0.0}, LocalGate{-kPi / 2, kPi / 2}}};
  c.boundary_pre.insert(c.boundary_pre.begin(), hadamard);
  c.boundary_post.push_back(LocalLayer{
      // z quarter turn, written as an x-y conjugated x rotation
      {LocalGate{kPi / 2, kPi / 2}, LocalGate{-kPi / 2, 0.0},
       LocalGate{-kPi / 2, kPi / 2}},
      // Hadamard followed by an x quarter turn
      {LocalGate{kPi, 0.0}, LocalGate{-kPi / 2, kPi / 2},
       LocalGate{-kPi / 2, 0.0}}});
  return c;
}

PulseCircuit build_v_gate() {
  RobustCoupling rs = robust_s(kPi, 0);
  const double t = rs.theta;
  const double eta = rs.eta;
  const double outer = rs.circuit.couplings[0];

  PulseCircuit c;
  c.couplings = {outer, 2.0 * kPi, outer, outer, 2.0 * kPi, outer};
  c.locals.resize(5);
  c.locals[0] = single_layer(0.0, 0.0, -t, 0.0);
  c.locals[1] = single_layer(0.0, 0.0, t, 0.0);
  // Junction between the two composite blocks: the closing conjugation of
  // the first block, the opening conjugation of the second, and the two
  // dressing rotations, merged into one local layer.
  c.locals[2] = LocalLayer{
      {LocalGate{kPi / 2, 0.0}, LocalGate{-kPi / 2, kPi / 2}},
      {LocalGate{-eta, 0.0}, LocalGate{kPi / 2, 0.0},
       LocalGate{-kPi / 2, kPi / 2}, LocalGate{eta, 0.0}}};
  c.locals[3] = single_layer(0.0, 0.0, -t, 0.0);
  c.locals[4] = single_layer(0.0, 0.0, t, 0.0);
  c.boundary_pre = {single_layer(-kPi / 2, 0.0, -kPi / 2, 0.0),
                    single_layer(0.0, 0.0, eta, 0.0)};
  c.boundary_post = {single_layer(0.0, 0.0, -eta, 0.0),
                     single_layer(kPi / 2, kPi / 2, kPi / 2, kPi / 2)};
  return c;
}

TwoCouplingReport no_go_n2_witness(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> axis(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> strength(0.3, 6.0);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> winding(0, 1);

  TwoCouplingReport rep;
  rep.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    // The squared local layer must be a global sign; the four classes are
    // (tb, t) in {0, pi}^2, with the coupling ratio fixed by that sign.
    const int cls = pick(rng);
    const double tb = (cls == 1 || cls == 3) ? kPi : 0.0;
    const double t = (cls == 1 || cls == 2) ? kPi : 0.0;
    const bool plus_sign = (cls == 0 || cls == 1);
    const double theta = strength(rng);

    PulseCircuit c;
    c.couplings = {theta, plus_sign ? -theta : theta};
    c.locals = {single_layer(tb + 2.0 * kPi * winding(rng), axis(rng),
                             t + 2.0 * kPi * winding(rng), axis(rng))};

    const double dn = fnorm(delta_u(c));
    rep.max_delta_norm = std::max(rep.max_delta_norm, dn);
    if (dn > Tol::robust) rep.all_robust = false;
    const SchmidtData sd = schmidt_decompose(evaluate(c));
    rep.max_second_coeff = std::max(rep.max_second_coeff, sd.coeffs[1]);
  }
  return rep;
}

PulseCircuit qubit1_free_solution(double tb1, double tb2, int k, int p, int q,
                                  int l, int m) {
  const double gamma = ((k + l) & 1) ? -1.0 : 1.0;
  const OuterCouplings oc =
      outer_couplings(-parity_sign(p), -parity_sign(k + l + q), k, tb1, tb2,
                      gamma);
  return three_coupling(oc, k,
                        single_layer(tb1, kPi * l, kPi * p, kPi * m),
                        single_layer(tb2, 0.0, kPi * q, 0.0));
}

PulseCircuit qubit2_free_solution(double theta1, double theta2, int k, int l,
                                  int m, int p, int n2) {
  const double gamma = ((k + m) & 1) ? -1.0 : 1.0;
  const OuterCouplings oc =
      outer_couplings(-parity_sign(p + n2), -parity_sign(k + m + n2), k,
                      theta1, theta2, gamma);
  const double gkl = ((k + l) & 1) ? -1.0 : 1.0;
  const double tb1 = kPi * p - gkl * kPi * n2;
  const double tb2 = kPi * n2;
  return three_coupling(oc, k,
                        single_layer(tb1, kPi * l, theta1, kPi * m),
                        single_layer(tb2, 0.0, theta2, 0.0));
}

std::vector<PulseCircuit> enumerate_appendix_branches(BranchFamily family,
                                                      int k,
                                                      std::size_t count,
                                                      std::uint64_t seed) {
  if (k == 0) throw SingularParameter("winding index k must be nonzero");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);

  std::vector<PulseCircuit> out;
  out.reserve(count);
  std::size_t combo = 0;
  while (out.size() < count) {
    const double a1 = angle(rng);
    const double a2 = angle(rng);
    const int b0 = static_cast<int>(combo & 1);
    const int b1 = static_cast<int>((combo >> 1) & 1);
    const int b2 = static_cast<int>((combo >> 2) & 1);
    const int b3 = static_cast<int>((combo >> 3) & 1);
    try {
      if (family == BranchFamily::qubit1_free)
        out.push_back(qubit1_free_solution(a1, a2, k, b0, b1, b2, b3));
      else
        out.push_back(qubit2_free_solution(a1, a2, k, b0, b1, b2, b3));
      ++combo;  // advance parities only on success to keep coverage even
    } catch (const SingularParameter&) {
      // near a pole; redraw the free angles for the same parity combination
    }
  }
  return out;
}

}  // namespace isingsynth
