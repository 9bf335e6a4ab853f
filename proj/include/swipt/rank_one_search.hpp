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

// Search over full-power rank-one strategies whose beams lie in each
// transmitter's two-channel span.
//
// A beam is v = cos(theta) u1 + sin(theta) e^{j phi} u2 with (u1, u2) the
// orthonormal basis of the transmitter's span, theta in [0, pi/2] and
// phi in [0, 2 pi). The search is an exhaustive grid over
// (theta1, phi1, theta2, phi2) with theta_i = i (pi/2) / N, i = 0..N, and
// phi_j = 2 pi j / N, a number of zoomed grid passes around the incumbent,
// and a coordinate-descent polish.
//
// Everything a rate or energy depends on is one of the four received
// powers g_ik, so each transmitter's grid is tabulated once and joint
// candidates are scored from those tables. Transmitter points that are
// dominated in every relevant received power are dropped before the joint
// pass; this never changes the grid maximum.

#pragma once

#include <span>
#include <vector>

#include "swipt/system_model.hpp"

namespace swipt {

struct SearchControl {
  int grid_points = 64;         // N: lattice divisions per angle
  int zoom_passes = 2;
  double zoom_factor = 8.0;     // window shrink per pass
  double stationarity_tol = 1e-7;
  int restarts = 4;             // separated coarse winners refined independently

  void validate() const;
};

namespace search {

enum class Goal { sum_rate, rate_1, rate_2 };

/// Goal plus minimum received energies in received-power units
/// (values <= 0 disable a constraint).
struct Problem {
  Goal goal = Goal::sum_rate;
  double min_energy1 = 0.0;
  double min_energy2 = 0.0;
};

/// Which channel leads each transmitter's span basis.
///   natural:  Tx1 over (h11, h12), Tx2 over (h21, h22)
///   mirrored: Tx1 over (h12, h11), Tx2 over (h22, h21)
enum class BasisOrder { natural, mirrored };

/// (theta, phi) for a regular span; (power fraction, unused) for a
/// parallel-channel span searched over power.
struct TxParam {
  double x = 0.0;
  double y = 0.0;
};

class TxSpace {
 public:
  TxSpace(const CVector& lead, const CVector& other, const CVector& to_rx1, const CVector& to_rx2,
          double power, bool power_search_if_degenerate);

  bool degenerate() const { return basis_.degenerate; }
  bool power_search() const { return power_search_; }
  /// Number of free coordinates (2, 1 or 0).
  int free_coords() const;

  /// (h_to_rx1^H S h_to_rx1, h_to_rx2^H S h_to_rx2) for S = p v v^H.
  std::pair<double, double> gains(TxParam p) const;
  CVector direction(TxParam p) const;
  double power(TxParam p) const;

  std::vector<TxParam> grid(int n) const;
  /// n x n lattice of the window shrunk by `shrink` around `center`.
  std::vector<TxParam> window(TxParam center, double shrink, int n) const;
  /// Parameters of a unit direction lying in the span (projected otherwise).
  TxParam param_of(const CVector& direction) const;
  TxParam normalize(TxParam p) const;
  /// Range of each free coordinate.
  double range(int coord) const;

 private:
  SpanBasis basis_;
  double power_;
  bool power_search_;
  Complex a1_, b1_;  // h_to_rx1^H u1, h_to_rx1^H u2
  Complex a2_, b2_;
  // Unit directions toward each receiver and orthogonal to each receiver.
  std::vector<CVector> anchors_;

  friend class RankOneSearch;
};

struct Outcome {
  bool feasible = false;
  TxParam tx1;
  TxParam tx2;
  Beamformer beam1;
  Beamformer beam2;
  ReceivedPowers powers;
  /// Monotone surrogate of the goal (e.g. product of 1 + SINR terms).
  double score = 0.0;

  CovariancePair covariance() const;
};

class RankOneSearch {
 public:
  RankOneSearch(const ChannelSet& ch, const PowerBudget& budget, BasisOrder order,
                const SearchControl& ctrl, bool power_search_if_degenerate = false);

  /// Best feasible strategy for the problem. Optional seed directions are
  /// added to each transmitter's coarse candidate set.
  Outcome maximize(const Problem& problem, std::span<const CVector> seeds1 = {},
                   std::span<const CVector> seeds2 = {}) const;

  const TxSpace& tx(int i) const { return i == 0 ? tx1_ : tx2_; }

 private:
  struct Table {
    std::vector<TxParam> params;
    std::vector<double> to_rx1;
    std::vector<double> to_rx2;
  };
  struct PairBest {
    bool found = false;
    TxParam tx1, tx2;
    double score = 0.0;
  };

  Table tabulate(const TxSpace& tx, std::vector<TxParam> params) const;
  PairBest best_pair(const Table& t1, const Table& t2, const Problem& problem) const;
  /// Up to `count` coarse winners, pairwise separated by more than two
  /// lattice steps, best first.
  std::vector<PairBest> best_starts(const Table& t1, const Table& t2, const Problem& problem,
                                    int count) const;
  PairBest refine(const Problem& problem, PairBest start) const;
  double score(const Problem& problem, double g11, double g12, double g21, double g22) const;
  bool feasible(const Problem& problem, double g11, double g12, double g21, double g22) const;
  PairBest polish(const Problem& problem, PairBest start) const;
  /// Projected-gradient ascent along active energy constraints.
  PairBest ridge(const Problem& problem, PairBest start) const;

  ChannelSet ch_;
  PowerBudget budget_;
  SearchControl ctrl_;
  TxSpace tx1_;
  TxSpace tx2_;
  Table coarse1_;
  Table coarse2_;
};

}  // namespace search
}  // namespace swipt
