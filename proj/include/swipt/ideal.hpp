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

// Ideal receivers that decode and harvest at the same time: maximize
// r1 + r2 subject to minimum harvested energy at both receivers and the
// per-transmitter power budgets.
//
// Some optimal pair uses full power and rank-one covariances whose beams
// lie in span(h_i1, h_i2), so the search runs over that family only.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "swipt/rank_one_search.hpp"
#include "swipt/system_model.hpp"

namespace swipt {

struct IdealSolution {
  CovariancePair cov;
  std::array<Beamformer, 2> beams;
  double r1 = 0.0;
  double r2 = 0.0;
  double energy1 = 0.0;
  double energy2 = 0.0;
  bool feasible = false;
  double objective = 0.0;  // r1 + r2, -inf when infeasible
};

/// True iff some budget-limited strategy meets both targets, i.e. the
/// largest common energy scaling beta* is at least one.
bool ideal_feasible(const ChannelSet& ch, const PowerBudget& budget, const EnergyTarget& tgt);

IdealSolution solve_ideal(const ChannelSet& ch, const PowerBudget& budget,
                          const EnergyTarget& tgt, const SearchControl& ctrl = {});

struct StructureReport {
  std::array<double, 2> trace_gap{};       // |trace(S_i) - P_i|
  std::array<double, 2> range_residual{};  // |Pi_perp(H_i) S_i Pi_perp(H_i)|_F
  std::array<double, 2> eig_ratio{};       // lambda_2 / lambda_1
  bool trace_full = false;
  bool range_space = false;
  bool rank_one = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks full power (1e-6), span membership (1e-8) and rank one (1e-8).
StructureReport verify_structure(const IdealSolution& sol, const ChannelSet& ch,
                                 const PowerBudget& budget);

}  // namespace swipt
