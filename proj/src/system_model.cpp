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

#include "swipt/system_model.hpp"

#include <cmath>
#include <string>

#include "swipt/errors.hpp"

namespace swipt {

void ChannelSet::validate() const {
  if (nt == 0) throw InstanceError("antenna count must be >= 1");
  const std::pair<const CVector*, const char*> all[] = {
      {&h11, "h11"}, {&h12, "h12"}, {&h21, "h21"}, {&h22, "h22"}};
  for (const auto& [h, name] : all) {
    if (h->dim() != nt) {
      throw InstanceError(std::string("channel ") + name + " has dimension " +
                          std::to_string(h->dim()) + ", expected " + std::to_string(nt));
    }
  }
  if (!(sigma1_sq > 0.0) || !(sigma2_sq > 0.0)) {
    throw InstanceError("noise powers must be positive");
  }
}

ChannelSet ChannelSet::swapped() const {
  return ChannelSet{h22, h21, h12, h11, sigma2_sq, sigma1_sq, nt};
}

void PowerBudget::validate() const {
  if (!(p1 > 0.0) || !(p2 > 0.0)) throw InstanceError("power budgets must be positive");
}

void EnergyTarget::validate() const {
  if (!(e1 >= 0.0) || !(e2 >= 0.0)) throw InstanceError("energy targets must be nonnegative");
  if (!(gamma > 0.0) || !(delta > 0.0)) {
    throw InstanceError("conversion efficiency and symbol duration must be positive");
  }
}

CovariancePair CovariancePair::zero(std::size_t nt) {
  return {HermitianMatrix::zero(nt), HermitianMatrix::zero(nt)};
}

void CovariancePair::validate(const PowerBudget& budget) const {
  const std::pair<const HermitianMatrix*, double> both[] = {{&s1, budget.p1}, {&s2, budget.p2}};
  for (const auto& [s, p] : both) {
    if (eigen_decomposition(*s).back().value < -1e-10) {
      throw InstanceError("covariance is not positive semidefinite");
    }
    if (s->trace() > p + 1e-9) throw InstanceError("covariance exceeds its power budget");
  }
}

ReceivedPowers received_powers(const CovariancePair& cov, const ChannelSet& ch) {
  return {quadratic_form(ch.h11, cov.s1), quadratic_form(ch.h12, cov.s1),
          quadratic_form(ch.h21, cov.s2), quadratic_form(ch.h22, cov.s2)};
}

double link_rate(double signal, double interference, double noise) {
  return std::log2(1.0 + signal / (interference + noise));
}

double rate_1(const CovariancePair& cov, const ChannelSet& ch) {
  return link_rate(quadratic_form(ch.h11, cov.s1), quadratic_form(ch.h21, cov.s2), ch.sigma1_sq);
}

double rate_2(const CovariancePair& cov, const ChannelSet& ch) {
  return link_rate(quadratic_form(ch.h22, cov.s2), quadratic_form(ch.h12, cov.s1), ch.sigma2_sq);
}

double sum_rate(const CovariancePair& cov, const ChannelSet& ch) {
  return rate_1(cov, ch) + rate_2(cov, ch);
}

double harvested_energy(Receiver rx, const CovariancePair& cov, const ChannelSet& ch,
                        const EnergyTarget& tgt) {
  const double received = rx == Receiver::first
                              ? quadratic_form(ch.h11, cov.s1) + quadratic_form(ch.h21, cov.s2)
                              : quadratic_form(ch.h12, cov.s1) + quadratic_form(ch.h22, cov.s2);
  return tgt.gamma * tgt.delta * received;
}

HermitianMatrix beamformer_to_covariance(const Beamformer& b) {
  if (b.power < 0.0) throw InstanceError("beamformer power must be nonnegative");
  if (std::abs(norm(b.direction) - 1.0) > 1e-10) {
    throw InstanceError("beamformer direction must have unit norm");
  }
  return HermitianMatrix::outer(b.direction, b.power);
}

std::optional<std::array<Complex, 2>> channel_span_coords(const CVector& x, const CVector& h_first,
                                                          const CVector& h_second) {
  // Normal equations of the 2-column least squares problem.
  const Complex g11 = inner(h_first, h_first);
  const Complex g12 = inner(h_first, h_second);
  const Complex g22 = inner(h_second, h_second);
  const Complex r1 = inner(h_first, x);
  const Complex r2 = inner(h_second, x);
  const Complex det = g11 * g22 - g12 * std::conj(g12);
  if (std::abs(det) <= 1e-20 * std::max(1.0, std::abs(g11 * g22))) return std::nullopt;
  const Complex a = (g22 * r1 - g12 * r2) / det;
  const Complex b = (g11 * r2 - std::conj(g12) * r1) / det;
  return std::array<Complex, 2>{a, b};
}

double max_energy_1(const ChannelSet& ch, const PowerBudget& budget) {
  return budget.p1 * norm_sq(ch.h11) + budget.p2 * norm_sq(ch.h21);
}

double max_energy_2(const ChannelSet& ch, const PowerBudget& budget) {
  return budget.p1 * norm_sq(ch.h12) + budget.p2 * norm_sq(ch.h22);
}

}  // namespace swipt
