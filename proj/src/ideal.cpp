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

#include "swipt/ideal.hpp"

#include <cmath>
#include <limits>

#include "swipt/errors.hpp"
#include "swipt/tdma_a.hpp"

namespace swipt {

bool ideal_feasible(const ChannelSet& ch, const PowerBudget& budget, const EnergyTarget& tgt) {
  return solve_min_time(ch, budget, tgt).feasible;
}

IdealSolution solve_ideal(const ChannelSet& ch, const PowerBudget& budget,
                          const EnergyTarget& tgt, const SearchControl& ctrl) {
  IdealSolution out;
  out.objective = -std::numeric_limits<double>::infinity();
  const MinTimeSolution min_time = solve_min_time(ch, budget, tgt);
  if (!min_time.feasible) return out;

  // The max-min energy beams satisfy both targets whenever the instance is
  // feasible, so seeding with them keeps tight instances searchable.
  const search::RankOneSearch engine(ch, budget, search::BasisOrder::natural, ctrl);
  const CVector seed1[] = {min_time.eh_beam1.direction};
  const CVector seed2[] = {min_time.eh_beam2.direction};
  const search::Problem problem{search::Goal::sum_rate, tgt.effective_e1(), tgt.effective_e2()};
  const auto best = engine.maximize(problem, seed1, seed2);
  if (!best.feasible) return out;

  out.beams = {best.beam1, best.beam2};
  out.cov = best.covariance();
  out.r1 = rate_1(out.cov, ch);
  out.r2 = rate_2(out.cov, ch);
  out.energy1 = harvested_energy(Receiver::first, out.cov, ch, tgt);
  out.energy2 = harvested_energy(Receiver::second, out.cov, ch, tgt);
  out.objective = out.r1 + out.r2;
  out.feasible = true;
  return out;
}

StructureReport verify_structure(const IdealSolution& sol, const ChannelSet& ch,
                                 const PowerBudget& budget) {
  StructureReport rep;
  const HermitianMatrix* s[2] = {&sol.cov.s1, &sol.cov.s2};
  const double p[2] = {budget.p1, budget.p2};
  const CVector h1[2] = {ch.h11, ch.h12};
  const CVector h2[2] = {ch.h21, ch.h22};
  const std::span<const CVector> spans[2] = {h1, h2};

  bool trace_ok = true, range_ok = true, rank_ok = true;
  for (int i = 0; i < 2; ++i) {
    rep.trace_gap[i] = std::abs(s[i]->trace() - p[i]);
    trace_ok = trace_ok && rep.trace_gap[i] < 1e-6;

    // Parallel channels collapse the span to a single column.
    const bool parallel = min_singular_value(spans[i]) <= kRankTol;
    const HermitianMatrix perp =
        parallel ? complement_projector(spans[i].first(1)) : complement_projector(spans[i]);
    rep.range_residual[i] = sandwich(perp, *s[i]).frobenius_norm();
    range_ok = range_ok && rep.range_residual[i] < 1e-8;

    const auto eig = eigen_decomposition(*s[i]);
    const double lead = eig.front().value;
    const double second = eig.size() > 1 ? std::max(0.0, eig[1].value) : 0.0;
    rep.eig_ratio[i] = lead > 0.0 ? second / lead : (second > 0.0 ? 1.0 : 0.0);
    rank_ok = rank_ok && rep.eig_ratio[i] < 1e-8;
  }
  rep.trace_full = trace_ok;
  rep.range_space = range_ok;
  rep.rank_one = rank_ok;
  if (!trace_ok) rep.violations.emplace_back("trace-full");
  if (!range_ok) rep.violations.emplace_back("range-space");
  if (!rank_ok) rep.violations.emplace_back("rank-one");
  return rep;
}

}  // namespace swipt
