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

// Brute-force reference solvers and seeded instance generators.
//
// The oracle enumerates full-power beams v = cos(theta) u1 +
// sin(theta) e^{j phi} u2 on a regular lattice per transmitter, with
// theta_i = i (pi/2) / N for i = 0..N and phi_j = 2 pi j / N, and
// takes the best pair. Candidates beaten in both received powers are
// dropped first, which leaves the maximum unchanged. Lattices for N and any
// multiple of N are nested.
// The oracle trusts the rank-one, full-power family; it does not validate
// that restriction.

#pragma once

#include <cstdint>
#include <string>

#include "swipt/system_model.hpp"

namespace swipt {

struct OracleConfig {
  int grid_points_per_angle = 32;
  std::uint64_t seed = 1;
  int instance_count = 1;
  bool prune = true;  // drop candidates beaten in both received powers

  void validate() const;  // grid_points_per_angle >= 8, instance_count >= 1
};

enum class OracleObjective { sum_rate, rate_1, rate_2, min_scaled_energy };

/// Received-power lower bounds (<= 0 disables). For min_scaled_energy the
/// scaling targets are scale_e1 and scale_e2 (a nonpositive one is
/// ignored).
struct OracleConstraints {
  double min_energy1 = 0.0;
  double min_energy2 = 0.0;
  double scale_e1 = 0.0;
  double scale_e2 = 0.0;
};

struct OracleResult {
  bool feasible = false;
  CovariancePair cov;
  double objective = 0.0;  // rate in bits or the scaled energy
  long long cells = 0;     // pairs represented (before exact pruning)
};

/// The rate-2 objective orders each span basis as (cross, direct), the
/// other objectives as (direct, cross).
OracleResult brute_force_best(const ChannelSet& ch, const PowerBudget& budget,
                              OracleObjective objective, const OracleConstraints& constraints,
                              const OracleConfig& cfg);

enum class ScaleProfile { interference_limited, noise_limited };

double profile_noise(ScaleProfile p);  // 0.001 and 0.1

struct RandomInstance {
  ChannelSet ch;
  PowerBudget budget;
  EnergyTarget tgt;
  std::uint64_t seed = 0;
  double feasibility_factor = 0.0;  // E1/D1 + E2/D2 of the drawn targets
};

/// Complex Gaussian channels CN(0, 0.4 I) and unit power budgets, drawn
/// from a counter-based stream keyed by the seed. Energy targets split
/// the factor f in (0, 1) as E1 = f t D1, E2 = f (1 - t) D2 with t uniform.
/// A negative factor draws f uniformly from (0.05, 0.95).
RandomInstance random_instance(std::uint64_t seed, std::size_t nt, ScaleProfile profile,
                               double feasibility_factor = -1.0);

/// Counter-based uniform variate in [0, 1) for (seed, index).
double uniform_at(std::uint64_t seed, std::uint64_t index);

}  // namespace swipt
