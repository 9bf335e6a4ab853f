// SPDX-License-Identifier: Apache-2.0
//
// swipt-ifc: transmit design for two-user MISO interference channels with
// energy harvesting receivers
// Copyright (C) 2026 The swipt-ifc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// swipt: solve, sweep and compare transmit schemes on instance files.
//
// Exit codes: 0 success / feasible, 1 usage error, 2 infeasible,
// 3 malformed instance, 4 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "swipt/errors.hpp"
#include "swipt/instance_io.hpp"
#include "swipt/oracle.hpp"
#include "swipt/sweep.hpp"

namespace {

using namespace swipt;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitParse = 3;
constexpr int kExitIo = 4;

std::string num(double x, const char* f = "%.9g") {
  char buf[48];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string complex_str(Complex c) { return "[" + num(c.real()) + ", " + num(c.imag()) + "]"; }

void print_header(std::ostream& out, const Instance& inst) {
  const ChannelSet& ch = inst.ch;
  out << "nt = " << ch.nt << "  sigma1_sq = " << num(ch.sigma1_sq)
      << "  sigma2_sq = " << num(ch.sigma2_sq) << "  p1 = " << num(inst.budget.p1)
      << "  p2 = " << num(inst.budget.p2) << '\n';
  out << "|h11| = " << num(norm(ch.h11), "%.4f") << "  |h12| = " << num(norm(ch.h12), "%.4f")
      << "  |h21| = " << num(norm(ch.h21), "%.4f") << "  |h22| = " << num(norm(ch.h22), "%.4f")
      << '\n';
}

void print_beam(std::ostream& out, const char* name, const Beamformer& b) {
  out << "    " << name << ": power " << num(b.power) << ", direction [";
  for (std::size_t i = 0; i < b.direction.dim(); ++i)
    out << (i ? ", " : "") << complex_str(b.direction[i]);
  out << "]";
  if (b.span_coords)
    out << ", span coords " << complex_str((*b.span_coords)[0]) << ' '
        << complex_str((*b.span_coords)[1]);
  out << '\n';
}

void print_result(std::ostream& out, const SchemeResult& r, const Instance& inst) {
  out << "scheme = " << scheme_name(r.scheme) << "  e1 = " << num(r.e1) << "  e2 = " << num(r.e2)
      << '\n';
  out << "feasible = " << (r.feasible ? "true" : "false") << '\n';
  if (!r.feasible) return;
  if (r.alpha) out << "alpha = " << num(*r.alpha, "%.12g") << '\n';
  if (r.w_star) out << "w_star = " << num(*r.w_star, "%.12g") << '\n';
  out << "sum_rate = " << num(r.sum_rate, "%.12g") << "  r1 = " << num(r.r1, "%.12g")
      << "  r2 = " << num(r.r2, "%.12g") << '\n';
  out << "energy1 = " << num(r.energy1, "%.12g") << "  energy2 = " << num(r.energy2, "%.12g")
      << '\n';
  for (const auto& s : r.slots) {
    out << "slot " << s.label << ": duration " << num(s.duration, "%.12g");
    if (s.decodes[0]) out << ", rate1 " << num(rate_1(s.cov, inst.ch), "%.12g");
    if (s.decodes[1]) out << ", rate2 " << num(rate_2(s.cov, inst.ch), "%.12g");
    const ReceivedPowers g = received_powers(s.cov, inst.ch);
    out << ", received power " << num(g.energy1()) << " / " << num(g.energy2()) << '\n';
    print_beam(out, "tx1", s.beams[0]);
    print_beam(out, "tx2", s.beams[1]);
  }
}

struct RangeFlags {
  std::optional<double> e1_max;
  std::optional<double> e2_max;
  int steps = 10;
  std::string schemes = "ideal,tdma-a,tdma-b";
};

SweepSpec make_spec(const Instance& inst, const RangeFlags& f) {
  SweepSpec spec = default_sweep(inst, f.steps, parse_scheme_list(f.schemes));
  if (f.e1_max) spec.e1_max = *f.e1_max;
  if (f.e2_max) spec.e2_max = *f.e2_max;
  spec.validate();
  return spec;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

OracleObjective parse_objective(const std::string& s) {
  if (s == "sum-rate") return OracleObjective::sum_rate;
  if (s == "rate-1") return OracleObjective::rate_1;
  if (s == "rate-2") return OracleObjective::rate_2;
  if (s == "min-scaled-energy") return OracleObjective::min_scaled_energy;
  throw InstanceError("unknown objective '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transmit design for two-user MISO interference channels with energy harvesting"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string scheme = "ideal";
  double e1 = 0.0, e2 = 0.0;
  int grid = 64;
  int alpha_steps = SolveOptions{}.alpha_steps;
  int threads = 0;
  std::string out_path;
  bool emit_solutions = false;
  RangeFlags range;

  auto add_resolution = [&](CLI::App* sub) {
    sub->add_option("--grid", grid, "Grid points per beam angle")->check(CLI::Range(2, 4096));
    sub->add_option("--alpha-steps", alpha_steps, "Time-fraction grid points for tdma-b")
        ->check(CLI::Range(2, 100000));
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--e1-max", range.e1_max, "Largest E1 (default 0.9 of the maximum)");
    sub->add_option("--e2-max", range.e2_max, "Largest E2 (default 0.9 of the maximum)");
    sub->add_option("--steps", range.steps, "Grid points per energy axis")
        ->check(CLI::Range(2, 10000));
    sub->add_option("--scheme", range.schemes, "Comma-separated schemes");
    sub->add_option("--threads", threads, "Worker threads (0 = hardware)");
  };

  auto* solve = app.add_subcommand("solve", "Solve one scheme at one energy target");
  solve->add_option("--instance", instance_path, "Instance file")->required();
  solve->add_option("--scheme", scheme, "ideal, tdma-a or tdma-b");
  solve->add_option("--e1", e1, "Energy target at receiver 1")->check(CLI::NonNegativeNumber);
  solve->add_option("--e2", e2, "Energy target at receiver 2")->check(CLI::NonNegativeNumber);
  add_resolution(solve);

  auto* sweep = app.add_subcommand("sweep", "Sweep (E1, E2) and write CSV");
  sweep->add_option("--instance", instance_path, "Instance file")->required();
  sweep->add_option("--out", out_path, "CSV output path (stdout when omitted)");
  sweep->add_flag("--emit-solutions", emit_solutions,
                  "Also write <out>.solutions.json with every row's covariances");
  add_range(sweep);
  add_resolution(sweep);

  auto* compare = app.add_subcommand("compare", "Per-cell winners and dominance verdict");
  compare->add_option("--instance", instance_path, "Instance file")->required();
  compare->add_option("--out", out_path, "Report output path (stdout when omitted)");
  add_range(compare);
  add_resolution(compare);

  std::string objective = "sum-rate";
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference optimum");
  oracle->add_option("--instance", instance_path, "Instance file")->required();
  oracle->add_option("--objective", objective, "sum-rate, rate-1, rate-2 or min-scaled-energy");
  oracle->add_option("--e1", e1, "Minimum energy (or scaling target) at receiver 1")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--e2", e2, "Minimum energy (or scaling target) at receiver 2")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--grid", grid, "Grid points per angle")->check(CLI::Range(8, 4096));

  std::uint64_t seed = 1;
  std::size_t nt = 2;
  std::string profile = "noise-limited";
  double factor = -1.0;
  auto* rnd = app.add_subcommand("random-instance", "Write a seeded random instance");
  rnd->add_option("--seed", seed, "Generator seed");
  rnd->add_option("--nt", nt, "Transmit antennas")->check(CLI::Range(1, 64));
  rnd->add_option("--profile", profile, "interference-limited or noise-limited");
  rnd->add_option("--factor", factor, "E1/D1 + E2/D2 of the targets (random when negative)");
  rnd->add_option("--out", out_path, "Instance output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  SolveOptions opts;
  opts.ctrl.grid_points = grid;
  opts.alpha_steps = alpha_steps;

  try {
    if (*rnd) {
      if (profile != "interference-limited" && profile != "noise-limited")
        throw InstanceError("unknown profile '" + profile + "'");
      const auto r = random_instance(seed, nt, profile == "interference-limited"
                                                   ? ScaleProfile::interference_limited
                                                   : ScaleProfile::noise_limited,
                                     factor);
      Instance inst{r.ch, r.budget, 1.0, 1.0};
      const std::string text = format_instance(inst);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_file(out_path, text);
      }
      std::cerr << "seed = " << seed << "  e1 = " << num(r.tgt.e1, "%.17g")
                << "  e2 = " << num(r.tgt.e2, "%.17g")
                << "  feasibility_factor = " << num(r.feasibility_factor, "%.17g") << '\n';
      return kExitOk;
    }

    const Instance inst = load_instance(instance_path);

    if (*solve) {
      const Scheme s = parse_scheme(scheme);
      print_header(std::cout, inst);
      const SchemeResult r = solve_scheme(s, inst, e1, e2, opts);
      print_result(std::cout, r, inst);
      return r.feasible ? kExitOk : kExitInfeasible;
    }

    if (*oracle) {
      const OracleObjective obj = parse_objective(objective);
      const double scale = inst.gamma * inst.delta;
      OracleConstraints cons;
      if (obj == OracleObjective::min_scaled_energy) {
        cons.scale_e1 = e1 / scale;
        cons.scale_e2 = e2 / scale;
      } else {
        cons.min_energy1 = e1 / scale;
        cons.min_energy2 = e2 / scale;
      }
      OracleConfig cfg;
      cfg.grid_points_per_angle = grid;
      const OracleResult r = brute_force_best(inst.ch, inst.budget, obj, cons, cfg);
      print_header(std::cout, inst);
      std::cout << "objective = " << objective << "  grid = " << grid << "  cells = " << r.cells
                << '\n';
      std::cout << "feasible = " << (r.feasible ? "true" : "false") << '\n';
      if (!r.feasible) return kExitInfeasible;
      std::cout << "value = " << num(r.objective, "%.12g") << '\n';
      return kExitOk;
    }

    const SweepSpec spec = make_spec(inst, range);
    if (*compare && spec.schemes.size() < 2)
      throw InstanceError("compare needs at least two schemes");
    const auto rows = run_sweep(inst, spec, opts, threads);

    if (*sweep) {
      if (emit_solutions && out_path.empty())
        throw InstanceError("--emit-solutions requires --out");
      std::ostringstream csv;
      write_csv(csv, rows);
      if (out_path.empty()) {
        std::cout << csv.str();
      } else {
        write_file(out_path, csv.str());
        if (emit_solutions) write_file(out_path + ".solutions.json", solutions_json(rows));
      }
      return kExitOk;
    }

    std::ostringstream report;
    print_compare(report, compare_schemes(rows, spec.schemes));
    if (out_path.empty()) {
      std::cout << report.str();
    } else {
      write_file(out_path, report.str());
    }
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << instance_path << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
