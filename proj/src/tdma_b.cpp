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

#include "swipt/tdma_b.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "swipt/errors.hpp"

namespace swipt {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kAlphaTol = 1e-6;

// The receiver-2-decoding slot is the receiver-1-decoding slot of the
// relabelled instance.
struct Oriented {
  ChannelSet ch;
  PowerBudget budget;
  bool swapped = false;
};

Oriented orient(Receiver id, const ChannelSet& ch, const PowerBudget& budget) {
  if (id == Receiver::first) return {ch, budget, false};
  return {ch.swapped(), budget.swapped(), true};
}

// Direction of h22 with its h21 component removed; unset when parallel.
std::optional<CVector> interference_free_direction(const ChannelSet& ch) {
  const SpanBasis b = orthonormal_span_basis(ch.h21, ch.h22);
  if (b.degenerate) return std::nullopt;
  return b.u2;
}

void fill_span_coords(SlotSolution& s, const ChannelSet& ch) {
  auto coords = [](const Beamformer& b, const CVector& ha, const CVector& hb) {
    return channel_span_coords(Complex(std::sqrt(b.power), 0.0) * b.direction, ha, hb);
  };
  s.beams[0].span_coords = coords(s.beams[0], ch.h11, ch.h12);
  s.beams[1].span_coords = coords(s.beams[1], ch.h21, ch.h22);
}

// Converts a receiver-1-decoding result on the oriented instance back to
// the caller's labelling.
SlotSolution finish(CovariancePair cov, std::array<Beamformer, 2> beams, bool closed_form,
                    const Oriented& o, const ChannelSet& ch) {
  SlotSolution s;
  if (o.swapped) {
    s.cov = cov.swapped();
    s.beams = {beams[1], beams[0]};
  } else {
    s.cov = std::move(cov);
    s.beams = std::move(beams);
  }
  s.used_closed_form = closed_form;
  const ReceivedPowers g = received_powers(s.cov, ch);
  if (o.swapped) {
    s.rate = rate_2(s.cov, ch);
    s.energy = g.energy1();
  } else {
    s.rate = rate_1(s.cov, ch);
    s.energy = g.energy2();
  }
  fill_span_coords(s, ch);
  return s;
}

double closed_form_energy(const ChannelSet& ch, const PowerBudget& budget) {
  double e = budget.p1 * std::norm(inner(ch.h12, normalized(ch.h11)));
  if (const auto perp = interference_free_direction(ch))
    e += budget.p2 * std::norm(inner(ch.h22, *perp));
  return e;
}

std::pair<CovariancePair, std::array<Beamformer, 2>> closed_form_oriented(
    const ChannelSet& ch, const PowerBudget& budget) {
  Beamformer b1{normalized(ch.h11), budget.p1, std::nullopt};
  Beamformer b2;
  if (const auto perp = interference_free_direction(ch)) {
    b2 = {*perp, budget.p2, std::nullopt};
  } else {
    // Any power from transmitter 2 only adds interference.
    b2 = {normalized(ch.h21), 0.0, std::nullopt};
  }
  CovariancePair cov{beamformer_to_covariance(b1), beamformer_to_covariance(b2)};
  return {std::move(cov), {b1, b2}};
}

// Slot solver for one orientation, with the search tables built on first
// use.
class SlotSolver {
 public:
  SlotSolver(Receiver id, const ChannelSet& ch, const PowerBudget& budget,
             const SearchControl& ctrl)
      : orig_(ch), o_(orient(id, ch, budget)), ctrl_(ctrl) {
    closed_energy_ = closed_form_energy(o_.ch, o_.budget);
    max_energy_ = max_energy_2(o_.ch, o_.budget);
  }

  std::optional<SlotSolution> solve(double e_eff, bool allow_closed_form) {
    if (allow_closed_form && closed_energy_ >= e_eff - kEnergySlack) {
      auto [cov, beams] = closed_form_oriented(o_.ch, o_.budget);
      return finish(std::move(cov), std::move(beams), true, o_, orig_);
    }
    if (e_eff > max_energy_ + kEnergySlack) return std::nullopt;
    if (!engine_)
      engine_.emplace(o_.ch, o_.budget, search::BasisOrder::natural, ctrl_, true);
    const auto best = engine_->maximize({search::Goal::rate_1, 0.0, e_eff});
    if (!best.feasible) return std::nullopt;
    return finish(best.covariance(), {best.beam1, best.beam2}, false, o_, orig_);
  }

 private:
  ChannelSet orig_;
  Oriented o_;
  SearchControl ctrl_;
  double closed_energy_ = 0.0;
  double max_energy_ = 0.0;
  std::optional<search::RankOneSearch> engine_;
};

void check_slot(const SlotProblem& sp) {
  if (!(sp.alpha_weight > 0.0 && sp.alpha_weight <= 1.0))
    throw InstanceError("slot length must lie in (0, 1]");
  if (!(sp.energy_target_effective >= 0.0) || !std::isfinite(sp.energy_target_effective))
    throw InstanceError("slot energy target must be finite and nonnegative");
}

struct Evaluation {
  double objective = kNegInf;
  std::optional<SlotSolution> s1;
  std::optional<SlotSolution> s2;
};

class SchemeBEvaluator {
 public:
  SchemeBEvaluator(const ChannelSet& ch, const PowerBudget& budget, const EnergyTarget& tgt,
                   const SearchControl& ctrl)
      : e1_(tgt.effective_e1()),
        e2_(tgt.effective_e2()),
        slot1_(Receiver::first, ch, budget, ctrl),
        slot2_(Receiver::second, ch, budget, ctrl) {}

  // A slot of zero length is skipped; its rate contributes nothing.
  Evaluation at(double alpha) {
    Evaluation ev;
    double total = 0.0;
    if (alpha > 0.0) {
      ev.s1 = slot1_.solve(e2_ / alpha, true);
      if (!ev.s1) return ev;
      total += alpha * ev.s1->rate;
    } else if (e2_ > 0.0) {
      return ev;
    }
    if (alpha < 1.0) {
      ev.s2 = slot2_.solve(e1_ / (1.0 - alpha), true);
      if (!ev.s2) return ev;
      total += (1.0 - alpha) * ev.s2->rate;
    } else if (e1_ > 0.0) {
      return ev;
    }
    ev.objective = total;
    return ev;
  }

 private:
  double e1_, e2_;
  SlotSolver slot1_;
  SlotSolver slot2_;
};

}  // namespace

bool feasible_tdma_b(const ChannelSet& ch, const PowerBudget& budget, const EnergyTarget& tgt) {
  ch.validate();
  budget.validate();
  tgt.validate();
  const double d1 = max_energy_1(ch, budget);
  const double d2 = max_energy_2(ch, budget);
  const double e1 = tgt.effective_e1();
  const double e2 = tgt.effective_e2();
  const double lhs = (e1 > 0.0 ? e1 / d1 : 0.0) + (e2 > 0.0 ? e2 / d2 : 0.0);
  return lhs <= 1.0 + 1e-9;
}

std::pair<double, double> alpha_bounds(const ChannelSet& ch, const PowerBudget& budget,
                                       const EnergyTarget& tgt) {
  if (!feasible_tdma_b(ch, budget, tgt))
    throw InfeasibleError("energy targets violate E1/D1 + E2/D2 <= 1");
  const double e1 = tgt.effective_e1();
  const double e2 = tgt.effective_e2();
  const double lo = e2 > 0.0 ? e2 / max_energy_2(ch, budget) : 0.0;
  const double hi = e1 > 0.0 ? 1.0 - e1 / max_energy_1(ch, budget) : 1.0;
  // Within the 1e-9 acceptance slack the interval can invert by rounding.
  return {std::min(lo, 1.0), std::max(std::min(lo, 1.0), hi)};
}

bool closed_form_applies(const SlotProblem& sp, const ChannelSet& ch, const PowerBudget& budget) {
  ch.validate();
  budget.validate();
  check_slot(sp);
  if (sp.energy_target_effective == 0.0) return true;
  const Oriented o = orient(sp.id_receiver, ch, budget);
  return closed_form_energy(o.ch, o.budget) >= sp.energy_target_effective - kEnergySlack;
}

SlotSolution closed_form_slot(const SlotProblem& sp, const ChannelSet& ch,
                              const PowerBudget& budget) {
  ch.validate();
  budget.validate();
  check_slot(sp);
  const Oriented o = orient(sp.id_receiver, ch, budget);
  auto [cov, beams] = closed_form_oriented(o.ch, o.budget);
  return finish(std::move(cov), std::move(beams), true, o, ch);
}

SlotSolution solve_slot(const SlotProblem& sp, const ChannelSet& ch, const PowerBudget& budget,
                        const SearchControl& ctrl) {
  ch.validate();
  budget.validate();
  check_slot(sp);
  SlotSolver solver(sp.id_receiver, ch, budget, ctrl);
  auto s = solver.solve(sp.energy_target_effective, true);
  if (!s) throw InfeasibleError("slot energy target exceeds the deliverable maximum");
  return *s;
}

SlotSolution search_slot(const SlotProblem& sp, const ChannelSet& ch, const PowerBudget& budget,
                         const SearchControl& ctrl) {
  ch.validate();
  budget.validate();
  check_slot(sp);
  SlotSolver solver(sp.id_receiver, ch, budget, ctrl);
  auto s = solver.solve(sp.energy_target_effective, false);
  if (!s) throw InfeasibleError("slot energy target exceeds the deliverable maximum");
  return *s;
}

CharnesCooperForm charnes_cooper_transform(const CovariancePair& cov, const ChannelSet& ch) {
  const double y = 1.0 / (quadratic_form(ch.h21, cov.s2) + ch.sigma1_sq);
  return {y * cov.s1, y * cov.s2, y};
}

CovariancePair charnes_cooper_inverse(const CharnesCooperForm& form) {
  if (!(form.y > 0.0)) throw InstanceError("normalization variable y must be positive");
  const double inv = 1.0 / form.y;
  return {inv * form.x1, inv * form.x2};
}

double charnes_cooper_objective(const CharnesCooperForm& form, const ChannelSet& ch,
                                double alpha) {
  return alpha * std::log2(1.0 + quadratic_form(ch.h11, form.x1));
}

bool charnes_cooper_feasible(const CharnesCooperForm& form, const ChannelSet& ch,
                             const PowerBudget& budget, double e2_eff) {
  if (!(form.y > 0.0)) return false;
  const double y = form.y;
  const double norm_lhs = quadratic_form(ch.h21, form.x2) + y * ch.sigma1_sq;
  if (std::abs(norm_lhs - 1.0) > 1e-9) return false;
  if (form.x1.trace() > y * budget.p1 + 1e-9 * y) return false;
  if (form.x2.trace() > y * budget.p2 + 1e-9 * y) return false;
  for (const auto* x : {&form.x1, &form.x2})
    if (eigen_decomposition(*x).back().value < -1e-10 * y) return false;
  const double e = quadratic_form(ch.h12, form.x1) + quadratic_form(ch.h22, form.x2);
  return e >= y * (e2_eff - kEnergySlack);
}

bool slot1_feasible(const CovariancePair& cov, const ChannelSet& ch, const PowerBudget& budget,
                    double e2_eff) {
  if (cov.s1.trace() > budget.p1 + 1e-9) return false;
  if (cov.s2.trace() > budget.p2 + 1e-9) return false;
  for (const auto* s : {&cov.s1, &cov.s2})
    if (eigen_decomposition(*s).back().value < -1e-10) return false;
  return received_powers(cov, ch).energy2() >= e2_eff - kEnergySlack;
}

SchemeBSolution solve_tdma_b(const ChannelSet& ch, const PowerBudget& budget,
                             const EnergyTarget& tgt, int alpha_steps,
                             const SearchControl& ctrl) {
  if (alpha_steps < 2) throw InstanceError("alpha grid needs at least 2 points");
  ctrl.validate();
  SchemeBSolution out;
  out.overall_sum_rate = kNegInf;
  if (!feasible_tdma_b(ch, budget, tgt)) return out;

  const auto [lo, hi] = alpha_bounds(ch, budget, tgt);
  SchemeBEvaluator eval(ch, budget, tgt, ctrl);

  double best_alpha = lo;
  Evaluation best = eval.at(lo);
  if (hi - lo > 1e-12) {
    const double step = (hi - lo) / (alpha_steps - 1);
    int best_k = 0;
    for (int k = 1; k < alpha_steps; ++k) {
      const double a = k == alpha_steps - 1 ? hi : lo + step * k;
      Evaluation ev = eval.at(a);
      if (ev.objective > best.objective) {
        best = std::move(ev);
        best_alpha = a;
        best_k = k;
      }
    }
    // No unimodality is assumed; the refinement only replaces the grid
    // winner when it finds something strictly better.
    if (best.objective > kNegInf) {
      double a = std::max(lo, lo + step * (best_k - 1));
      double b = std::min(hi, lo + step * (best_k + 1));
      const double inv_phi = 1.0 / std::numbers::phi;
      double c = b - (b - a) * inv_phi;
      double d = a + (b - a) * inv_phi;
      Evaluation fc = eval.at(c);
      Evaluation fd = eval.at(d);
      while (b - a > kAlphaTol) {
        if (fc.objective >= fd.objective) {
          b = d;
          d = c;
          fd = std::move(fc);
          c = b - (b - a) * inv_phi;
          fc = eval.at(c);
        } else {
          a = c;
          c = d;
          fc = std::move(fd);
          d = a + (b - a) * inv_phi;
          fd = eval.at(d);
        }
      }
      if (fc.objective > best.objective) {
        best = std::move(fc);
        best_alpha = c;
      }
      if (fd.objective > best.objective) {
        best = std::move(fd);
        best_alpha = d;
      }
    }
  }
  if (best.objective == kNegInf) return out;

  out.feasible = true;
  out.alpha = best_alpha;
  out.overall_sum_rate = best.objective;
  const std::size_t nt = ch.nt;
  auto empty_slot = [nt]() {
    SlotSolution s;
    s.cov = CovariancePair::zero(nt);
    s.beams = {Beamformer{CVector::basis(nt, 0), 0.0, std::nullopt},
               Beamformer{CVector::basis(nt, 0), 0.0, std::nullopt}};
    return s;
  };
  out.slot1 = best.s1 ? *best.s1 : empty_slot();
  out.slot2 = best.s2 ? *best.s2 : empty_slot();
  out.r1 = best.s1 ? best.s1->rate : 0.0;
  out.r2 = best.s2 ? best.s2->rate : 0.0;
  out.used_closed_form = {best.s1 && best.s1->used_closed_form,
                          best.s2 && best.s2->used_closed_form};
  return out;
}

double tdma_b_objective_at(double alpha, const ChannelSet& ch, const PowerBudget& budget,
                           const EnergyTarget& tgt, const SearchControl& ctrl) {
  ch.validate();
  budget.validate();
  tgt.validate();
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InstanceError("alpha must lie in [0, 1]");
  SchemeBEvaluator eval(ch, budget, tgt, ctrl);
  return eval.at(alpha).objective;
}

}  // namespace swipt
