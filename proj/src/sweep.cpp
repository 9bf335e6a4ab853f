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

#include "swipt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "swipt/errors.hpp"
#include "swipt/ideal.hpp"
#include "swipt/tdma_b.hpp"

namespace swipt {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

SlotRecord slot(std::string label, double duration, const CovariancePair& cov,
                const Beamformer& b1, const Beamformer& b2, bool d1, bool d2) {
  return {std::move(label), duration, cov, {b1, b2}, {d1, d2}};
}

SchemeResult from_ideal(const IdealSolution& s, SchemeResult r) {
  r.feasible = s.feasible;
  if (!s.feasible) return r;
  r.r1 = s.r1;
  r.r2 = s.r2;
  r.sum_rate = s.objective;
  r.energy1 = s.energy1;
  r.energy2 = s.energy2;
  r.slots.push_back(slot("joint", 1.0, s.cov, s.beams[0], s.beams[1], true, true));
  return r;
}

SchemeResult from_tdma_a(const SchemeASolution& s, const ChannelSet& ch, const EnergyTarget& tgt,
                         SchemeResult r) {
  r.feasible = s.feasible();
  if (!r.feasible) return r;
  const double a = s.min_time.alpha;
  r.alpha = a;
  r.w_star = s.min_time.w_star;
  r.r1 = (1.0 - a) * s.slot2_r1;
  r.r2 = (1.0 - a) * s.slot2_r2;
  r.sum_rate = s.overall_sum_rate;
  r.energy1 = a * harvested_energy(Receiver::first, s.min_time.eh_cov, ch, tgt);
  r.energy2 = a * harvested_energy(Receiver::second, s.min_time.eh_cov, ch, tgt);
  r.slots.push_back(slot("harvest", a, s.min_time.eh_cov, s.min_time.eh_beam1,
                         s.min_time.eh_beam2, false, false));
  r.slots.push_back(slot("decode", 1.0 - a, s.id_cov, s.id_beam1, s.id_beam2, true, true));
  return r;
}

SchemeResult from_tdma_b(const SchemeBSolution& s, const ChannelSet& ch, const EnergyTarget& tgt,
                         SchemeResult r) {
  r.feasible = s.feasible;
  if (!s.feasible) return r;
  const double a = s.alpha;
  r.alpha = a;
  r.r1 = a * s.r1;
  r.r2 = (1.0 - a) * s.r2;
  r.sum_rate = s.overall_sum_rate;
  r.energy2 = a * harvested_energy(Receiver::second, s.slot1.cov, ch, tgt);
  r.energy1 = (1.0 - a) * harvested_energy(Receiver::first, s.slot2.cov, ch, tgt);
  r.slots.push_back(
      slot("rx1-decodes", a, s.slot1.cov, s.slot1.beams[0], s.slot1.beams[1], true, false));
  r.slots.push_back(
      slot("rx2-decodes", 1.0 - a, s.slot2.cov, s.slot2.beams[0], s.slot2.beams[1], false, true));
  return r;
}

nlohmann::json matrix_json(const HermitianMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json beam_json(const Beamformer& b) {
  nlohmann::json dir = nlohmann::json::array();
  for (const Complex& c : b.direction) dir.push_back({c.real(), c.imag()});
  nlohmann::json j = {{"direction", dir}, {"power", b.power}};
  if (b.span_coords) {
    const auto& sc = *b.span_coords;
    j["span_coords"] = {{sc[0].real(), sc[0].imag()}, {sc[1].real(), sc[1].imag()}};
  }
  return j;
}

}  // namespace

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::ideal:
      return "ideal";
    case Scheme::tdma_a:
      return "tdma-a";
    case Scheme::tdma_b:
      return "tdma-b";
  }
  return "?";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "ideal") return Scheme::ideal;
  if (name == "tdma-a") return Scheme::tdma_a;
  if (name == "tdma-b") return Scheme::tdma_b;
  throw InstanceError("unknown scheme '" + name + "' (expected ideal, tdma-a or tdma-b)");
}

std::vector<Scheme> parse_scheme_list(const std::string& list) {
  std::vector<Scheme> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_scheme(item));
  }
  if (out.empty()) throw InstanceError("scheme list is empty");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SchemeResult solve_scheme(Scheme scheme, const Instance& inst, double e1, double e2,
                          const SolveOptions& opts, const Slot2Solution* tdma_a_slot) {
  const EnergyTarget tgt = inst.target(e1, e2);
  SchemeResult r;
  r.scheme = scheme;
  r.e1 = e1;
  r.e2 = e2;
  switch (scheme) {
    case Scheme::ideal:
      return from_ideal(solve_ideal(inst.ch, inst.budget, tgt, opts.ctrl), r);
    case Scheme::tdma_a: {
      const SchemeASolution s = tdma_a_slot
                                    ? solve_tdma_a(inst.ch, inst.budget, tgt, *tdma_a_slot)
                                    : solve_tdma_a(inst.ch, inst.budget, tgt, opts.ctrl);
      return from_tdma_a(s, inst.ch, tgt, r);
    }
    case Scheme::tdma_b:
      return from_tdma_b(solve_tdma_b(inst.ch, inst.budget, tgt, opts.alpha_steps, opts.ctrl),
                         inst.ch, tgt, r);
  }
  return r;
}

double reevaluate_sum_rate(const SchemeResult& r, const ChannelSet& ch) {
  double total = 0.0;
  for (const auto& s : r.slots) {
    if (s.duration == 0.0) continue;
    if (s.decodes[0]) total += s.duration * rate_1(s.cov, ch);
    if (s.decodes[1]) total += s.duration * rate_2(s.cov, ch);
  }
  return total;
}

void SweepSpec::validate() const {
  if (steps < 2) throw InstanceError("sweep needs at least 2 steps per axis");
  if (!(e1_max >= 0.0) || !std::isfinite(e1_max) || !(e2_max >= 0.0) || !std::isfinite(e2_max))
    throw InstanceError("sweep maxima must be finite and nonnegative");
  if (schemes.empty()) throw InstanceError("sweep needs at least one scheme");
}

SweepSpec default_sweep(const Instance& inst, int steps, std::vector<Scheme> schemes) {
  const double scale = inst.gamma * inst.delta;
  return {0.9 * scale * max_energy_1(inst.ch, inst.budget),
          0.9 * scale * max_energy_2(inst.ch, inst.budget), steps, std::move(schemes)};
}

std::vector<SchemeResult> run_sweep(const Instance& inst, const SweepSpec& spec,
                                    const SolveOptions& opts, int threads) {
  spec.validate();
  inst.ch.validate();
  inst.budget.validate();
  opts.ctrl.validate();

  std::optional<Slot2Solution> slot;
  if (std::find(spec.schemes.begin(), spec.schemes.end(), Scheme::tdma_a) != spec.schemes.end())
    slot = solve_slot2_sum_rate(inst.ch, inst.budget, opts.ctrl);

  std::vector<Scheme> schemes = spec.schemes;
  std::sort(schemes.begin(), schemes.end());
  const std::size_t ns = schemes.size();
  const std::size_t steps = static_cast<std::size_t>(spec.steps);
  const std::size_t total = steps * steps * ns;
  std::vector<SchemeResult> rows(total);

  auto axis = [&](double max, std::size_t i) {
    return i + 1 == steps ? max : max * static_cast<double>(i) / static_cast<double>(steps - 1);
  };

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      const std::size_t cell = idx / ns;
      const Scheme s = schemes[idx % ns];
      try {
        rows[idx] = solve_scheme(s, inst, axis(spec.e1_max, cell / steps),
                                 axis(spec.e2_max, cell % steps), opts, slot ? &*slot : nullptr);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(total);
      }
    }
  };

  int n = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  n = std::clamp(n, 1, static_cast<int>(std::min<std::size_t>(total, 64)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SchemeResult>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << fmt(r.e1) << ',' << fmt(r.e2) << ',' << scheme_name(r.scheme) << ','
        << (r.feasible ? 1 : 0) << ',';
    if (!r.feasible) {
      out << ",,,,,,\n";
      continue;
    }
    out << (r.alpha ? fmt(*r.alpha) : "") << ',' << fmt(r.sum_rate) << ',' << fmt(r.r1) << ','
        << fmt(r.r2) << ',' << fmt(r.energy1) << ',' << fmt(r.energy2) << ','
        << (r.w_star ? fmt(*r.w_star) : "") << '\n';
  }
}

std::string solutions_json(const std::vector<SchemeResult>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j = {{"e1", r.e1},
                        {"e2", r.e2},
                        {"scheme", scheme_name(r.scheme)},
                        {"feasible", r.feasible}};
    if (r.feasible) {
      j["sum_rate"] = r.sum_rate;
      nlohmann::json slots = nlohmann::json::array();
      for (const auto& s : r.slots) {
        slots.push_back({{"label", s.label},
                         {"duration", s.duration},
                         {"decodes", {s.decodes[0], s.decodes[1]}},
                         {"s1", matrix_json(s.cov.s1)},
                         {"s2", matrix_json(s.cov.s2)},
                         {"beam1", beam_json(s.beams[0])},
                         {"beam2", beam_json(s.beams[1])}});
      }
      j["slots"] = slots;
    }
    doc.push_back(j);
  }
  return doc.dump(1) + "\n";
}

CompareReport compare_schemes(const std::vector<SchemeResult>& rows,
                              const std::vector<Scheme>& schemes) {
  CompareReport rep;
  rep.schemes = schemes;
  const std::size_t ns = schemes.size();
  rep.cells_won.assign(ns, 0);
  rep.wins.assign(ns, std::vector<int>(ns, 0));

  for (const auto& r : rows) {
    const auto it = std::find(schemes.begin(), schemes.end(), r.scheme);
    if (it == schemes.end()) continue;
    if (rep.cells.empty() || rep.cells.back().e1 != r.e1 || rep.cells.back().e2 != r.e2) {
      rep.cells.push_back({r.e1, r.e2, {}, std::vector<std::optional<double>>(ns)});
    }
    if (r.feasible) rep.cells.back().rates[static_cast<std::size_t>(it - schemes.begin())] = r.sum_rate;
  }

  for (auto& c : rep.cells) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : c.rates)
      if (v) best = std::max(best, *v);
    for (std::size_t a = 0; a < ns; ++a) {
      if (c.rates[a] && *c.rates[a] >= best - kTieTol) {
        c.winners.push_back(schemes[a]);
        ++rep.cells_won[a];
      }
      for (std::size_t b = 0; b < ns; ++b)
        if (c.rates[a] && c.rates[b] && *c.rates[a] > *c.rates[b] + kWinMargin) ++rep.wins[a][b];
    }
  }

  // Some scheme dominates when no other scheme ever beats it.
  bool dominated_by_one = false;
  for (std::size_t a = 0; a < ns && !dominated_by_one; ++a) {
    bool never_beaten = true;
    for (std::size_t b = 0; b < ns; ++b)
      if (b != a && rep.wins[b][a] > 0) never_beaten = false;
    dominated_by_one = never_beaten;
  }
  rep.non_dominance = ns >= 2 && !dominated_by_one;
  return rep;
}

void print_compare(std::ostream& out, const CompareReport& rep) {
  const std::size_t ns = rep.schemes.size();
  out << "e1,e2,winner";
  for (Scheme s : rep.schemes) out << ',' << scheme_name(s);
  out << '\n';
  for (const auto& c : rep.cells) {
    std::string win;
    for (Scheme s : c.winners) win += (win.empty() ? "" : "=") + scheme_name(s);
    out << fmt(c.e1) << ',' << fmt(c.e2) << ',' << (win.empty() ? "none" : win);
    for (const auto& v : c.rates) out << ',' << (v ? fmt(*v) : "");
    out << '\n';
  }
  out << '\n' << "cells won:";
  for (std::size_t a = 0; a < ns; ++a)
    out << ' ' << scheme_name(rep.schemes[a]) << '=' << rep.cells_won[a];
  out << '\n';
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = a + 1; b < ns; ++b)
      out << scheme_name(rep.schemes[a]) << " vs " << scheme_name(rep.schemes[b]) << ": "
          << rep.wins[a][b] << " - " << rep.wins[b][a] << '\n';
  out << "verdict: " << (rep.non_dominance ? "non-dominance" : "dominance") << '\n';
}

}  // namespace swipt
