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

// Problem instances and the physical quantities of the two-user MISO
// interference channel: rates, harvested energy, budgets and targets.
//
// Channel naming: h_ik runs from transmitter i to receiver k, so receiver 1
// sees h11 (desired) and h21 (interference), receiver 2 sees h22 and h12.

#pragma once

#include <array>
#include <optional>

#include "swipt/linalg.hpp"

namespace swipt {

/// Additive slack on energy constraints for floating point noise at the
/// active boundary.
inline constexpr double kEnergySlack = 1e-9;

enum class Receiver { first = 1, second = 2 };

struct ChannelSet {
  CVector h11, h12, h21, h22;
  double sigma1_sq = 0.0;
  double sigma2_sq = 0.0;
  std::size_t nt = 0;

  /// Throws InstanceError unless all vectors have dim == nt >= 1 and both
  /// noise powers are positive.
  void validate() const;

  /// Relabel users 1 <-> 2: h11' = h22, h12' = h21, h21' = h12, h22' = h11.
  ChannelSet swapped() const;
};

struct PowerBudget {
  double p1 = 1.0;
  double p2 = 1.0;

  void validate() const;
  PowerBudget swapped() const { return {p2, p1}; }
};

struct EnergyTarget {
  double e1 = 0.0;
  double e2 = 0.0;
  double gamma = 1.0;
  double delta = 1.0;

  void validate() const;
  /// Target expressed in received-power units, E_i / (gamma Delta).
  double effective_e1() const { return e1 / (gamma * delta); }
  double effective_e2() const { return e2 / (gamma * delta); }
  EnergyTarget swapped() const { return {e2, e1, gamma, delta}; }
};

struct CovariancePair {
  HermitianMatrix s1;
  HermitianMatrix s2;

  static CovariancePair zero(std::size_t nt);
  CovariancePair swapped() const { return {s2, s1}; }
  /// PSD (smallest eigenvalue >= -1e-10) and trace(s_i) <= p_i + 1e-9.
  void validate(const PowerBudget& budget) const;
};

/// Rank-one strategy. span_coords holds (a, b) with
/// sqrt(power) * direction = a * h_first + b * h_second in the transmitter's
/// two-channel span, when that representation was computed.
struct Beamformer {
  CVector direction;
  double power = 0.0;
  std::optional<std::array<Complex, 2>> span_coords;
};

/// The four received powers that rates and energies depend on:
/// g_ik = h_ik^H S_i h_ik.
struct ReceivedPowers {
  double g11 = 0.0;
  double g12 = 0.0;
  double g21 = 0.0;
  double g22 = 0.0;

  double energy1() const { return g11 + g21; }
  double energy2() const { return g12 + g22; }
};

ReceivedPowers received_powers(const CovariancePair& cov, const ChannelSet& ch);

/// log2(1 + signal / (interference + noise))
double link_rate(double signal, double interference, double noise);

/// Bits per channel use.
double rate_1(const CovariancePair& cov, const ChannelSet& ch);
double rate_2(const CovariancePair& cov, const ChannelSet& ch);
double sum_rate(const CovariancePair& cov, const ChannelSet& ch);

/// gamma * Delta * (h_1i^H S1 h_1i + h_2i^H S2 h_2i)
double harvested_energy(Receiver rx, const CovariancePair& cov, const ChannelSet& ch,
                        const EnergyTarget& tgt);

HermitianMatrix beamformer_to_covariance(const Beamformer& b);

/// Coordinates (a, b) of x in the (not necessarily orthogonal) basis
/// {h_first, h_second}, least squares. Returns nullopt when the two vectors
/// are parallel.
std::optional<std::array<Complex, 2>> channel_span_coords(const CVector& x, const CVector& h_first,
                                                          const CVector& h_second);

/// Maximum receiver energies over all strategies within budget:
/// p1|h11|^2 + p2|h21|^2 and p1|h12|^2 + p2|h22|^2.
double max_energy_1(const ChannelSet& ch, const PowerBudget& budget);
double max_energy_2(const ChannelSet& ch, const PowerBudget& budget);

}  // namespace swipt
