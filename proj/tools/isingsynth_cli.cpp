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
//
// Command line front end. Artifact bytes (circuit JSON, sequence JSON, scan
// CSV) go to stdout or --out verbatim; human-facing summaries go to stderr
// so redirected output stays machine readable and byte stable.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isingsynth/circuit.hpp"
#include "isingsynth/qmap.hpp"
#include "isingsynth/robustness.hpp"
#include "isingsynth/schmidt.hpp"
#include "isingsynth/synth.hpp"

namespace {

using namespace isingsynth;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open input file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file " + out);
  f << text;
}

std::vector<double> parse_grid(const std::string& text) {
  double lo = 0, hi = 0;
  std::size_t n = 0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%zu%c", &lo, &hi, &n, &extra) != 3)
    throw ValidationError("bad epsilon grid '" + text + "', expected lo:hi:n");
  return log_grid(lo, hi, n);
}

Mat4 parse_target(const std::string& name) {
  if (name == "cnot") return cnot_gate();
  if (name == "swap") return swap_gate();
  if (name == "v") return v_gate();
  double theta = 0;
  char extra = 0;
  if (std::sscanf(name.c_str(), "s:%lf%c", &theta, &extra) == 1)
    return coupling(theta);
  throw ValidationError("unknown target gate '" + name +
                        "'; use cnot, swap, v or s:<theta>");
}

std::string format_coeffs(const SchmidtData& sd) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "coeffs = %.12g %.12g %.12g %.12g\nosn = %d\n",
                sd.coeffs[0], sd.coeffs[1], sd.coeffs[2], sd.coeffs[3],
                osn(sd));
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synthesis and checking of coupling-error-robust gate sequences"};
  app.require_subcommand(1);
  int exit_code = 0;

  // shared option storage
  std::string in_path, out_path, target_name, grid_spec, family_name;
  double target_theta = 0, theta = 0, omega = 0, phi1 = 0, tol = Tol::robust;
  int branch = 0, k = 1;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  int range_lo = 0, range_hi = 0;

  auto* cmd_ts = app.add_subcommand(
      "solve-theta-star",
      "solve for the local angle of the quarter-turn robust composite");
  cmd_ts->callback([&] {
    const ThetaStar ts = solve_theta_star();
    std::printf("theta_star = %.16g\nresidual = %.3g\niterations = %d\n",
                ts.theta_star, ts.residual, ts.iterations);
  });

  auto* cmd_s = app.add_subcommand(
      "synth-s", "robust composite for a target coupling angle");
  cmd_s->add_option("--target-theta", target_theta, "target coupling angle")
      ->required();
  cmd_s->add_option("--branch", branch, "solution branch, cheapest first");
  cmd_s->add_option("--out", out_path, "write circuit JSON here");
  cmd_s->callback([&] {
    const RobustCoupling r = robust_s(target_theta, branch);
    std::fprintf(stderr,
                 "branch %d of %d: theta = %.12g, execution time = %.12g\n",
                 r.branch, r.branches_found, r.theta,
                 execution_time(r.circuit));
    emit(to_json_string(r.circuit), out_path);
  });

  auto* cmd_cnot =
      app.add_subcommand("synth-cnot", "robust controlled-NOT circuit");
  cmd_cnot->add_option("--out", out_path, "write circuit JSON here");
  cmd_cnot->callback([&] { emit(to_json_string(build_cnot()), out_path); });

  auto* cmd_v = app.add_subcommand(
      "synth-v", "robust circuit for the xx+yy quarter-turn gate");
  cmd_v->add_option("--out", out_path, "write circuit JSON here");
  cmd_v->callback([&] { emit(to_json_string(build_v_gate()), out_path); });

  auto* cmd_gen = app.add_subcommand(
      "synth-general", "three-coupling solution with free qubit-2 angles");
  cmd_gen->add_option("--theta1", theta, "first qubit-2 local angle")
      ->required();
  double theta2 = 0;
  cmd_gen->add_option("--theta2", theta2, "second qubit-2 local angle")
      ->required();
  cmd_gen->add_option("--k", k, "winding index of the middle coupling");
  int alpha = -1, beta = 1;
  cmd_gen->add_option("--alpha", alpha, "sign of the first coupling (+1/-1)");
  cmd_gen->add_option("--beta", beta, "sign of the last coupling (+1/-1)");
  cmd_gen->add_option("--out", out_path, "write circuit JSON here");
  cmd_gen->callback([&] {
    emit(to_json_string(general_solution(theta, theta2, k, alpha, beta)),
         out_path);
  });

  auto* cmd_verify = app.add_subcommand(
      "verify", "validate a circuit JSON and check first-order robustness");
  cmd_verify->add_option("--in", in_path, "circuit JSON ('-' for stdin)");
  cmd_verify->add_option("--tol", tol, "robustness threshold on ||dU||");
  cmd_verify->callback([&] {
    const PulseCircuit c = circuit_from_json_string(read_input(in_path));
    validate(c);
    const double dn = fnorm(delta_u(c));
    const bool ok = dn <= tol;
    std::printf("n = %zu\nunitary = %s\n|dU| = %.6g\nrobust = %s\n"
                "execution_time = %.12g\nphysical = %s\n",
                c.n(), is_unitary(evaluate(c)) ? "true" : "false", dn,
                ok ? "true" : "false", execution_time(c),
                is_physical(c) ? "true" : "false");
    if (!ok) exit_code = 1;
  });

  auto* cmd_scan = app.add_subcommand(
      "scan", "infidelity and distance against a target over an error grid");
  cmd_scan->add_option("--in", in_path, "circuit JSON ('-' for stdin)");
  cmd_scan->add_option("--target", target_name,
                       "target gate: cnot, swap, v, s:<theta>; default is the "
                       "circuit itself at zero error");
  cmd_scan->add_option("--epsilon-grid", grid_spec, "log grid as lo:hi:n")
      ->required();
  cmd_scan->add_option("--out", out_path, "write CSV here");
  cmd_scan->callback([&] {
    const PulseCircuit c = circuit_from_json_string(read_input(in_path));
    const Mat4 target =
        target_name.empty() ? evaluate(c) : parse_target(target_name);
    const ErrorScan s = scan(c, target, parse_grid(grid_spec));
    std::fprintf(stderr, "slope = %.6g\n", s.slope);
    emit(scan_csv(s), out_path);
  });

  auto* cmd_schmidt = app.add_subcommand(
      "schmidt", "operator Schmidt coefficients and rank of a circuit");
  cmd_schmidt->add_option("--in", in_path, "circuit JSON ('-' for stdin)");
  cmd_schmidt->add_option("--gate", target_name,
                          "analyze a named gate instead: cnot, swap, v, "
                          "s:<theta>");
  cmd_schmidt->add_option("--range", range_lo,
                          "first coupling of a subproduct (1-indexed)");
  cmd_schmidt->add_option("--range-end", range_hi,
                          "last coupling of the subproduct (inclusive)");
  cmd_schmidt->callback([&] {
    Mat4 m;
    if (!target_name.empty()) {
      m = parse_target(target_name);
    } else {
      const PulseCircuit c = circuit_from_json_string(read_input(in_path));
      m = range_lo > 0 ? subproduct(c, range_lo,
                                    range_hi > 0 ? range_hi : range_lo)
                       : evaluate(c);
    }
    std::fputs(format_coeffs(schmidt_decompose(m)).c_str(), stdout);
  });

  auto* cmd_map = app.add_subcommand(
      "map", "move between one-qubit pulse sequences and coupled circuits");
  cmd_map->require_subcommand(1);
  auto* map_lift = cmd_map->add_subcommand(
      "lift", "embed a pulse sequence as a coupled circuit");
  map_lift->add_option("--in", in_path, "sequence JSON ('-' for stdin)");
  map_lift->add_option("--omega", omega, "axis phase of the embedding frame");
  map_lift->add_option("--out", out_path, "write circuit JSON here");
  map_lift->callback([&] {
    emit(to_json_string(
             lift_sequence(sequence_from_json_string(read_input(in_path)),
                           omega)),
         out_path);
  });
  auto* map_project = cmd_map->add_subcommand(
      "project", "read an embedded circuit back as a pulse sequence");
  map_project->add_option("--in", in_path, "circuit JSON ('-' for stdin)");
  map_project->add_option("--phi1", phi1, "axis phase of the first pulse");
  map_project->add_option("--out", out_path, "write sequence JSON here");
  map_project->callback([&] {
    emit(to_json_string(project_to_one_qubit(
             circuit_from_json_string(read_input(in_path)), phi1)),
         out_path);
  });
  auto* map_axes = cmd_map->add_subcommand(
      "axes", "distinct local rotation axes used by a circuit");
  map_axes->add_option("--in", in_path, "circuit JSON ('-' for stdin)");
  map_axes->callback([&] {
    const AxisReport rep =
        dressing_axes(circuit_from_json_string(read_input(in_path)));
    std::printf("axes =");
    for (double a : rep.axes) std::printf(" %.12g", a);
    std::printf("\nsingle_axis = %s\n", rep.single_axis ? "true" : "false");
  });

  auto* cmd_enum = app.add_subcommand(
      "enumerate", "sample a solution family and check every instance");
  cmd_enum
      ->add_option("--family", family_name, "qubit1-free or qubit2-free")
      ->required()
      ->check(CLI::IsMember({"qubit1-free", "qubit2-free"}));
  cmd_enum->add_option("--k", k, "winding index of the middle coupling");
  cmd_enum->add_option("--trials", trials, "number of instances");
  cmd_enum->add_option("--seed", seed, "RNG seed");
  cmd_enum->callback([&] {
    const BranchFamily fam = family_name == "qubit1-free"
                                 ? BranchFamily::qubit1_free
                                 : BranchFamily::qubit2_free;
    const auto circuits = enumerate_appendix_branches(fam, k, trials, seed);
    std::size_t failed = 0;
    double worst = 0.0;
    for (const auto& c : circuits) {
      const double dn = fnorm(delta_u(c));
      worst = std::max(worst, dn);
      if (dn > Tol::robust) ++failed;
    }
    std::printf("family %s: %zu instances, %zu failed, worst |dU| = %.6g\n",
                family_name.c_str(), circuits.size(), failed, worst);
    if (failed > 0) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const UnreachableTarget& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const SingularParameter& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return exit_code;
}
