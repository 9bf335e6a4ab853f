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

// TDMA scheme B: in the first slot (length alpha) receiver 1 decodes while
// receiver 2 harvests; in the second slot the roles swap. Each slot
// maximizes the decoding receiver's rate subject to the harvesting
// receiver's energy requirement scaled up by the slot length.
//
// Feasibility has a closed form: the best a slot can deliver to a
// harvesting receiver is D_k = sum_i P_i |h_ik|^2, so
//     E1 / D1 + E2 / D2 <= 1
// and alpha is confined to [E2 / D2, 1 - E1 / D1].

#pragma once

#include <array>
#include <utility>

#include "swipt/rank_one_search.hpp"
#include "swipt/system_model.hpp"

namespace swipt {

/// One slot's data. The energy target is in received-power units and
/// already divided by the slot length.
struct SlotProblem {
  Receiver id_receiver = Receiver::first;
  double alpha_weight = 0.5;             // slot length
  double energy_target_effective = 0.0;  // E2 / alpha or E1 / (1 - alpha)
};

struct SlotSolution {
  CovariancePair cov;
  std::array<Beamformer, 2> beams;
  double rate = 0.0;  // rate of the decoding receiver within the slot
  double energy = 0.0;  // received power at the harvesting receiver
  bool used_closed_form = false;
};

/// E1/D1 + E2/D2 <= 1 + 1e-9.
bool feasible_tdma_b(const ChannelSet& ch, const PowerBudget& budget, const EnergyTarget& tgt);

/// (E2 / D2, 1 - E1 / D1); throws InfeasibleError when the pair is empty.
std::pair<double, double> alpha_bounds(const ChannelSet& ch, const PowerBudget& budget,
                                       const EnergyTarget& tgt);

/// Whether maximum-ratio transmission toward the decoding receiver plus
/// full power on the direction orthogonal to the interfering channel meets
/// the slot's energy target. A cross transmitter whose two channels are
/// parallel contributes no energy term.
bool closed_form_applies(const SlotProblem& sp, const ChannelSet& ch, const PowerBudget& budget);

/// The closed-form strategy above, in the original user labelling.
SlotSolution closed_form_slot(const SlotProblem& sp, const ChannelSet& ch,
                              const PowerBudget& budget);

/// Throws InfeasibleError when the slot's target exceeds what any strategy
/// can deliver.
SlotSolution solve_slot(const SlotProblem& sp, const ChannelSet& ch, const PowerBudget& budget,
                        const SearchControl& ctrl = {});

/// The parameterized search alone, without the closed-form shortcut.
SlotSolution search_slot(const SlotProblem& sp, const ChannelSet& ch, const PowerBudget& budget,
                         const SearchControl& ctrl = {});

/// Linear-fractional change of variables for the receiver-1-decoding slot:
/// y = 1 / (h21^H S2 h21 + sigma1^2), X_i = y S_i.
struct CharnesCooperForm {
  HermitianMatrix x1;
  HermitianMatrix x2;
  double y = 0.0;
};

CharnesCooperForm charnes_cooper_transform(const CovariancePair& cov, const ChannelSet& ch);
CovariancePair charnes_cooper_inverse(const CharnesCooperForm& form);

/// alpha log2(1 + h11^H X1 h11).
double charnes_cooper_objective(const CharnesCooperForm& form, const ChannelSet& ch,
                                double alpha);

/// Constraints of the transformed slot problem: the normalization
/// h21^H X2 h21 + y sigma1^2 = 1 (within 1e-9), trace(X_i) <= y P_i,
/// h12^H X1 h12 + h22^H X2 h22 >= y e2_eff, X_i PSD and y > 0.
bool charnes_cooper_feasible(const CharnesCooperForm& form, const ChannelSet& ch,
                             const PowerBudget& budget, double e2_eff);

/// Constraints of the untransformed receiver-1-decoding slot.
bool slot1_feasible(const CovariancePair& cov, const ChannelSet& ch, const PowerBudget& budget,
                    double e2_eff);

struct SchemeBSolution {
  double alpha = 0.0;
  SlotSolution slot1;  // receiver 1 decodes; empty when alpha = 0
  SlotSolution slot2;  // receiver 2 decodes; empty when alpha = 1
  double r1 = 0.0;     // slot-1 rate
  double r2 = 0.0;     // slot-2 rate
  double overall_sum_rate = 0.0;  // alpha r1 + (1 - alpha) r2; -inf when infeasible
  bool feasible = false;
  std::array<bool, 2> used_closed_form{};
};

inline constexpr int kDefaultAlphaSteps = 101;

SchemeBSolution solve_tdma_b(const ChannelSet& ch, const PowerBudget& budget,
                             const EnergyTarget& tgt, int alpha_steps = kDefaultAlphaSteps,
                             const SearchControl& ctrl = {});

/// Overall rate at a fixed alpha, or -inf when a slot cannot meet its target.
double tdma_b_objective_at(double alpha, const ChannelSet& ch, const PowerBudget& budget,
                           const EnergyTarget& tgt, const SearchControl& ctrl = {});

}  // namespace swipt
