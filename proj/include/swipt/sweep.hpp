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

// Scheme dispatch, (E1, E2) sweeps, CSV output and scheme comparison.

#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "swipt/instance_io.hpp"
#include "swipt/rank_one_search.hpp"
#include "swipt/tdma_a.hpp"

namespace swipt {

/// Declared in name order, which is also the CSV row order.
enum class Scheme { ideal, tdma_a, tdma_b };

std::string scheme_name(Scheme s);
/// Accepts "ideal", "tdma-a", "tdma-b"; throws InstanceError otherwise.
Scheme parse_scheme(const std::string& name);
/// Comma-separated list, deduplicated and sorted.
std::vector<Scheme> parse_scheme_list(const std::string& list);

struct SolveOptions {
  SearchControl ctrl;
  int alpha_steps = 101;
};

/// One time slot of a scheme's strategy.
struct SlotRecord {
  std::string label;
  double duration = 0.0;
  CovariancePair cov;
  std::array<Beamformer, 2> beams;
  std::array<bool, 2> decodes{};  // which receivers decode in this slot
};

struct SchemeResult {
  Scheme scheme = Scheme::ideal;
  double e1 = 0.0;
  double e2 = 0.0;
  bool feasible = false;
  std::optional<double> alpha;
  double sum_rate = 0.0;
  double r1 = 0.0;  // time-weighted
  double r2 = 0.0;
  double energy1 = 0.0;  // time-weighted harvested energy
  double energy2 = 0.0;
  std::optional<double> w_star;
  std::vector<SlotRecord> slots;
};

/// The information-slot solution of scheme A may be passed in when solving
/// many targets on one instance.
SchemeResult solve_scheme(Scheme scheme, const Instance& inst, double e1, double e2,
                          const SolveOptions& opts, const Slot2Solution* tdma_a_slot = nullptr);

/// Sum over slots of duration times the decoding receivers' rates.
double reevaluate_sum_rate(const SchemeResult& r, const ChannelSet& ch);

struct SweepSpec {
  double e1_max = 0.0;
  double e2_max = 0.0;
  int steps = 2;
  std::vector<Scheme> schemes;

  void validate() const;  // steps >= 2, nonnegative finite maxima, >= 1 scheme
};

/// 0.9 of the largest harvestable energy at each receiver.
SweepSpec default_sweep(const Instance& inst, int steps, std::vector<Scheme> schemes);

/// Rows ordered by e1, then e2, then scheme. `threads` <= 0 uses the
/// hardware concurrency.
std::vector<SchemeResult> run_sweep(const Instance& inst, const SweepSpec& spec,
                                    const SolveOptions& opts, int threads = 0);

inline constexpr const char* kCsvHeader =
    "e1,e2,scheme,feasible,alpha,sum_rate,r1,r2,energy1,energy2,w_star";

void write_csv(std::ostream& out, const std::vector<SchemeResult>& rows);
/// JSON document with every row's slot covariances and beams.
std::string solutions_json(const std::vector<SchemeResult>& rows);

struct CompareReport {
  struct Cell {
    double e1 = 0.0;
    double e2 = 0.0;
    std::vector<Scheme> winners;  // empty when no scheme is feasible
    std::vector<std::optional<double>> rates;  // per scheme, unset when infeasible
  };
  std::vector<Scheme> schemes;
  std::vector<Cell> cells;
  std::vector<int> cells_won;  // per scheme, ties count for every winner
  /// wins[a][b]: cells where both are feasible and a beats b by > 1e-6.
  std::vector<std::vector<int>> wins;
  bool non_dominance = false;
};

inline constexpr double kTieTol = 1e-9;
inline constexpr double kWinMargin = 1e-6;

CompareReport compare_schemes(const std::vector<SchemeResult>& rows,
                              const std::vector<Scheme>& schemes);
void print_compare(std::ostream& out, const CompareReport& rep);

}  // namespace swipt
