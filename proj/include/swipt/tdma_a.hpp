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

// TDMA scheme A: a harvesting slot of length alpha in which both receivers
// harvest, then an information slot of length 1 - alpha in which both
// decode.
//
// The shortest harvesting slot is alpha = 1 / beta*, where beta* is the
// largest common scaling of both energy targets that a budget-limited
// strategy can deliver. For a weight w in [0, 1] let v_i(w) be the
// principal eigenvector of
//     w h_i1 h_i1^H / E1 + (1 - w) h_i2 h_i2^H / E2
// and beta_k(w) the scaled energy at receiver k when S_i = P_i v_i v_i^H.
// Then beta* = max_w min(beta_1(w), beta_2(w)), which is found by
// golden-section search on w.

#pragma once

#include <optional>

#include "swipt/rank_one_search.hpp"
#include "swipt/system_model.hpp"

namespace swipt {

struct BetaCurves {
  double beta1 = 0.0;  // +inf when E1 = 0
  double beta2 = 0.0;  // +inf when E2 = 0
  CVector v1;
  CVector v2;
};

/// Zero targets give an infinite beta on that side; the beams then follow
/// the remaining active term only (both zero: maximum-ratio beams toward
/// receiver 1).
BetaCurves beta_curves(double w, const ChannelSet& ch, const PowerBudget& budget,
                       const EnergyTarget& tgt);

struct MinTimeSolution {
  std::optional<double> w_star;   // unset when no harvesting slot is needed
  double beta_star = 0.0;         // +inf when E1 = E2 = 0
  double alpha = 0.0;             // 1 / beta_star when feasible
  Beamformer eh_beam1;
  Beamformer eh_beam2;
  CovariancePair eh_cov;
  bool feasible = false;
  /// Set when a coarse scan found a better bracket than the golden-section
  /// search and the search was restarted there.
  bool used_scan_fallback = false;
};

inline constexpr double kGoldenTolW = 1e-9;

MinTimeSolution solve_min_time(const ChannelSet& ch, const PowerBudget& budget,
                               const EnergyTarget& tgt, double tol = kGoldenTolW);

struct Slot2Solution {
  CovariancePair cov;
  Beamformer beam1;
  Beamformer beam2;
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Unconstrained sum-rate maximization over full-power beams in each
/// transmitter's two-channel span.
Slot2Solution solve_slot2_sum_rate(const ChannelSet& ch, const PowerBudget& budget,
                                   const SearchControl& ctrl = {});

struct SchemeASolution {
  MinTimeSolution min_time;
  CovariancePair id_cov;
  Beamformer id_beam1;
  Beamformer id_beam2;
  double slot2_r1 = 0.0;
  double slot2_r2 = 0.0;
  double overall_sum_rate = 0.0;  // (1 - alpha)(r1 + r2); -inf when infeasible

  bool feasible() const { return min_time.feasible; }
};

SchemeASolution solve_tdma_a(const ChannelSet& ch, const PowerBudget& budget,
                             const EnergyTarget& tgt, const SearchControl& ctrl = {});

/// Same, reusing an information-slot solution for this instance (it does
/// not depend on the energy targets).
SchemeASolution solve_tdma_a(const ChannelSet& ch, const PowerBudget& budget,
                             const EnergyTarget& tgt, const Slot2Solution& slot2);

}  // namespace swipt
