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

#include "swipt/tdma_a.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "swipt/errors.hpp"

namespace swipt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kCheckScanPoints = 257;

double scaled_energy(const CVector& h_from1, const CVector& h_from2, const CVector& v1,
                     const CVector& v2, const PowerBudget& budget, double target) {
  return (budget.p1 * std::norm(inner(h_from1, v1)) + budget.p2 * std::norm(inner(h_from2, v2))) /
         target;
}

double min_beta(double w, const ChannelSet& ch, const PowerBudget& budget,
                const EnergyTarget& tgt) {
  const auto c = beta_curves(w, ch, budget, tgt);
  return std::min(c.beta1, c.beta2);
}

// Golden-section maximization of min(beta1, beta2) on [lo, hi]. Ties go to
// the smaller w.
double golden_max(double lo, double hi, double tol, const ChannelSet& ch,
                  const PowerBudget& budget, const EnergyTarget& tgt) {
  const double inv_phi = 1.0 / std::numbers::phi;
  double a = lo, b = hi;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = min_beta(c, ch, budget, tgt);
  double fd = min_beta(d, ch, budget, tgt);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = min_beta(c, ch, budget, tgt);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = min_beta(d, ch, budget, tgt);
    }
  }
  double best_w = lo;
  double best = min_beta(lo, ch, budget, tgt);
  for (double w : {a, c, d, b, hi}) {
    const double f = min_beta(w, ch, budget, tgt);
    if (f > best || (f == best && w < best_w)) {
      best = f;
      best_w = w;
    }
  }
  return best_w;
}

}  // namespace

BetaCurves beta_curves(double w, const ChannelSet& ch, const PowerBudget& budget,
                       const EnergyTarget& tgt) {
  ch.validate();
  budget.validate();
  tgt.validate();
  if (!(w >= 0.0 && w <= 1.0)) throw InstanceError("weight w must lie in [0, 1]");
  const double e1 = tgt.effective_e1();
  const double e2 = tgt.effective_e2();

  BetaCurves out;
  if (e1 == 0.0 || e2 == 0.0) {
    // Only the active receiver's term remains in the weighted matrices.
    const bool toward_rx1 = e2 == 0.0;
    out.v1 = principal_eig(HermitianMatrix::outer(toward_rx1 ? ch.h11 : ch.h12)).vector;
    out.v2 = principal_eig(HermitianMatrix::outer(toward_rx1 ? ch.h21 : ch.h22)).vector;
  } else {
    const HermitianMatrix m1 =
        HermitianMatrix::outer(ch.h11, w / e1) + HermitianMatrix::outer(ch.h12, (1.0 - w) / e2);
    const HermitianMatrix m2 =
        HermitianMatrix::outer(ch.h21, w / e1) + HermitianMatrix::outer(ch.h22, (1.0 - w) / e2);
    out.v1 = principal_eig(m1).vector;
    out.v2 = principal_eig(m2).vector;
  }
  out.beta1 = e1 == 0.0 ? kInf : scaled_energy(ch.h11, ch.h21, out.v1, out.v2, budget, e1);
  out.beta2 = e2 == 0.0 ? kInf : scaled_energy(ch.h12, ch.h22, out.v1, out.v2, budget, e2);
  return out;
}

MinTimeSolution solve_min_time(const ChannelSet& ch, const PowerBudget& budget,
                               const EnergyTarget& tgt, double tol) {
  ch.validate();
  budget.validate();
  tgt.validate();
  if (!(tol > 0.0)) throw InstanceError("golden-section tolerance must be positive");

  MinTimeSolution out;
  const double e1 = tgt.effective_e1();
  const double e2 = tgt.effective_e2();
  if (e1 == 0.0 && e2 == 0.0) {
    out.beta_star = kInf;
    out.alpha = 0.0;
    out.feasible = true;
    out.eh_cov = CovariancePair::zero(ch.nt);
    out.eh_beam1 = {CVector::basis(ch.nt, 0), 0.0, std::nullopt};
    out.eh_beam2 = {CVector::basis(ch.nt, 0), 0.0, std::nullopt};
    return out;
  }

  double w_star;
  if (e2 == 0.0) {
    w_star = 1.0;
  } else if (e1 == 0.0) {
    w_star = 0.0;
  } else {
    w_star = golden_max(0.0, 1.0, tol, ch, budget, tgt);
    // The search relies on unimodality; a coarse scan catches a violation.
    double best = min_beta(w_star, ch, budget, tgt);
    int best_k = -1;
    for (int k = 0; k < kCheckScanPoints; ++k) {
      const double w = static_cast<double>(k) / (kCheckScanPoints - 1);
      const double f = min_beta(w, ch, budget, tgt);
      if (f > best + 1e-12 * std::max(1.0, std::abs(best))) {
        best = f;
        best_k = k;
      }
    }
    if (best_k >= 0) {
      const double step = 1.0 / (kCheckScanPoints - 1);
      const double lo = std::max(0.0, (best_k - 1) * step);
      const double hi = std::min(1.0, (best_k + 1) * step);
      const double w = golden_max(lo, hi, tol, ch, budget, tgt);
      if (min_beta(w, ch, budget, tgt) >= best) {
        w_star = w;
      } else {
        w_star = best_k * step;
      }
      out.used_scan_fallback = true;
    }
  }

  const auto curves = beta_curves(w_star, ch, budget, tgt);
  out.w_star = w_star;
  out.beta_star = std::min(curves.beta1, curves.beta2);
  out.alpha = 1.0 / out.beta_star;
  out.feasible = out.beta_star >= 1.0 - 1e-9;
  out.eh_beam1 = {curves.v1, budget.p1, channel_span_coords(std::sqrt(budget.p1) * curves.v1,
                                                            ch.h11, ch.h12)};
  out.eh_beam2 = {curves.v2, budget.p2, channel_span_coords(std::sqrt(budget.p2) * curves.v2,
                                                            ch.h21, ch.h22)};
  out.eh_cov = {beamformer_to_covariance(out.eh_beam1), beamformer_to_covariance(out.eh_beam2)};
  return out;
}

Slot2Solution solve_slot2_sum_rate(const ChannelSet& ch, const PowerBudget& budget,
                                   const SearchControl& ctrl) {
  const search::RankOneSearch engine(ch, budget, search::BasisOrder::natural, ctrl);
  const auto best = engine.maximize({search::Goal::sum_rate, 0.0, 0.0});
  Slot2Solution out;
  out.beam1 = best.beam1;
  out.beam2 = best.beam2;
  out.cov = best.covariance();
  out.r1 = rate_1(out.cov, ch);
  out.r2 = rate_2(out.cov, ch);
  return out;
}

SchemeASolution solve_tdma_a(const ChannelSet& ch, const PowerBudget& budget,
                             const EnergyTarget& tgt, const Slot2Solution& slot2) {
  SchemeASolution out;
  out.min_time = solve_min_time(ch, budget, tgt);
  out.id_cov = slot2.cov;
  out.id_beam1 = slot2.beam1;
  out.id_beam2 = slot2.beam2;
  out.slot2_r1 = slot2.r1;
  out.slot2_r2 = slot2.r2;
  out.overall_sum_rate = out.min_time.feasible
                             ? (1.0 - out.min_time.alpha) * (slot2.r1 + slot2.r2)
                             : -std::numeric_limits<double>::infinity();
  return out;
}

SchemeASolution solve_tdma_a(const ChannelSet& ch, const PowerBudget& budget,
                             const EnergyTarget& tgt, const SearchControl& ctrl) {
  return solve_tdma_a(ch, budget, tgt, solve_slot2_sum_rate(ch, budget, ctrl));
}

}  // namespace swipt
