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

#include "swipt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "swipt/errors.hpp"

namespace swipt {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Candidates {
  std::vector<CVector> beams;
  std::vector<double> powers;
  std::vector<double> to_rx1;  // received power at receiver 1
  std::vector<double> to_rx2;
};

Candidates enumerate(const CVector& lead, const CVector& other, const CVector& to_rx1,
                     const CVector& to_rx2, double power, int n) {
  Candidates c;
  const SpanBasis b = orthonormal_span_basis(lead, other);
  auto add = [&](const CVector& v, double p) {
    c.to_rx1.push_back(p * std::norm(inner(to_rx1, v)));
    c.to_rx2.push_back(p * std::norm(inner(to_rx2, v)));
    c.beams.push_back(v);
    c.powers.push_back(p);
  };
  if (b.degenerate) {
    for (int i = 0; i <= n; ++i) add(b.u1, power * i / n);
    return c;
  }
  for (int i = 0; i <= n; ++i) {
    const double theta = (std::numbers::pi / 2.0) * i / n;
    for (int j = 0; j < n; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n;
      CVector v = Complex(std::cos(theta), 0.0) * b.u1;
      v += std::polar(std::sin(theta), phi) * b.u2;
      add(v, power);
    }
  }
  return c;
}

// Preference of the objective and constraints on one received power:
// +1 larger is better, -1 smaller is better, 0 irrelevant, 2 conflicting.
int merge(int a, int b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  return 2;
}

// Candidates no other candidate beats in both received powers under the
// preferences. Dropping the rest leaves every pairwise maximum unchanged.
std::vector<std::size_t> frontier(const Candidates& c, int pref1, int pref2) {
  const std::size_t n = c.beams.size();
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  if (pref1 == 2 || pref2 == 2) return idx;
  auto k1 = [&](std::size_t i) { return pref1 * c.to_rx1[i]; };
  auto k2 = [&](std::size_t i) { return pref2 * c.to_rx2[i]; };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (k1(a) != k1(b)) return k1(a) > k1(b);
    if (k2(a) != k2(b)) return k2(a) > k2(b);
    return a < b;
  });
  std::vector<std::size_t> keep;
  double best2 = kNegInf;
  for (std::size_t i : idx) {
    if (keep.empty() || k2(i) > best2) {
      keep.push_back(i);
      best2 = k2(i);
    }
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

void OracleConfig::validate() const {
  if (grid_points_per_angle < 8) throw InstanceError("oracle grid needs >= 8 points per angle");
  if (instance_count < 1) throw InstanceError("oracle instance count must be >= 1");
}

OracleResult brute_force_best(const ChannelSet& ch, const PowerBudget& budget,
                              OracleObjective objective, const OracleConstraints& constraints,
                              const OracleConfig& cfg) {
  ch.validate();
  budget.validate();
  cfg.validate();
  const int n = cfg.grid_points_per_angle;
  const bool mirrored = objective == OracleObjective::rate_2;
  const Candidates c1 = mirrored ? enumerate(ch.h12, ch.h11, ch.h11, ch.h12, budget.p1, n)
                                 : enumerate(ch.h11, ch.h12, ch.h11, ch.h12, budget.p1, n);
  const Candidates c2 = mirrored ? enumerate(ch.h22, ch.h21, ch.h21, ch.h22, budget.p2, n)
                                 : enumerate(ch.h21, ch.h22, ch.h21, ch.h22, budget.p2, n);

  const bool need1 = constraints.min_energy1 > 0.0;
  const bool need2 = constraints.min_energy2 > 0.0;
  const double lo1 = constraints.min_energy1 - kEnergySlack;
  const double lo2 = constraints.min_energy2 - kEnergySlack;
  const double s1 = constraints.scale_e1 > 0.0 ? 1.0 / constraints.scale_e1 : 0.0;
  const double s2 = constraints.scale_e2 > 0.0 ? 1.0 / constraints.scale_e2 : 0.0;
  if (objective == OracleObjective::min_scaled_energy && s1 == 0.0 && s2 == 0.0)
    throw InstanceError("min-scaled-energy objective needs a positive target");

  // Scores are monotone in the objective (1 + SINR products for rates) so
  // the pair loop avoids logarithms. One loop per objective keeps the inner
  // loop branch-free.
  int p11 = 0, p12 = 0, p21 = 0, p22 = 0;  // tx i toward rx k
  switch (objective) {
    case OracleObjective::sum_rate:
      p11 = 1, p12 = -1, p21 = -1, p22 = 1;
      break;
    case OracleObjective::rate_1:
      p11 = 1, p21 = -1;
      break;
    case OracleObjective::rate_2:
      p12 = -1, p22 = 1;
      break;
    case OracleObjective::min_scaled_energy:
      p11 = p21 = s1 > 0.0 ? 1 : 0;
      p12 = p22 = s2 > 0.0 ? 1 : 0;
      break;
  }
  if (need1) p11 = merge(p11, 1), p21 = merge(p21, 1);
  if (need2) p12 = merge(p12, 1), p22 = merge(p22, 1);
  if (!cfg.prune) p11 = p12 = p21 = p22 = 2;
  const auto keep1 = frontier(c1, p11, p12);
  const auto keep2 = frontier(c2, p21, p22);
  std::vector<double> x21(keep2.size()), x22(keep2.size());
  for (std::size_t k = 0; k < keep2.size(); ++k) {
    x21[k] = c2.to_rx1[keep2[k]];
    x22[k] = c2.to_rx2[keep2[k]];
  }

  double best = kNegInf;
  std::size_t bj = 0, bk = 0;
  const double inf = std::numeric_limits<double>::infinity();
  auto scan = [&](auto value) {
    for (std::size_t j : keep1) {
      const double g11 = c1.to_rx1[j], g12 = c1.to_rx2[j];
      double row = kNegInf;
      std::size_t row_k = 0;
      for (std::size_t k = 0; k < keep2.size(); ++k) {
        const double g21 = x21[k], g22 = x22[k];
        const double e1 = g11 + g21, e2 = g12 + g22;
        if ((need1 && e1 < lo1) || (need2 && e2 < lo2)) continue;
        const double v = value(g11, g12, g21, g22, e1, e2);
        if (v > row) {
          row = v;
          row_k = keep2[k];
        }
      }
      if (row > best) {
        best = row;
        bj = j;
        bk = row_k;
      }
    }
  };
  switch (objective) {
    case OracleObjective::sum_rate:
      scan([&](double g11, double g12, double g21, double g22, double, double) {
        return (1.0 + g11 / (g21 + ch.sigma1_sq)) * (1.0 + g22 / (g12 + ch.sigma2_sq));
      });
      break;
    case OracleObjective::rate_1:
      scan([&](double g11, double, double g21, double, double, double) {
        return g11 / (g21 + ch.sigma1_sq);
      });
      break;
    case OracleObjective::rate_2:
      scan([&](double, double g12, double, double g22, double, double) {
        return g22 / (g12 + ch.sigma2_sq);
      });
      break;
    case OracleObjective::min_scaled_energy:
      scan([&](double, double, double, double, double e1, double e2) {
        return std::min(s1 > 0.0 ? e1 * s1 : inf, s2 > 0.0 ? e2 * s2 : inf);
      });
      break;
  }
  const long long cells = static_cast<long long>(c1.beams.size()) *
                          static_cast<long long>(c2.beams.size());

  OracleResult out;
  out.cells = cells;
  if (best == kNegInf) return out;
  out.feasible = true;
  out.cov = {HermitianMatrix::outer(c1.beams[bj], c1.powers[bj]),
             HermitianMatrix::outer(c2.beams[bk], c2.powers[bk])};
  switch (objective) {
    case OracleObjective::sum_rate:
      out.objective = sum_rate(out.cov, ch);
      break;
    case OracleObjective::rate_1:
      out.objective = rate_1(out.cov, ch);
      break;
    case OracleObjective::rate_2:
      out.objective = rate_2(out.cov, ch);
      break;
    case OracleObjective::min_scaled_energy:
      out.objective = best;
      break;
  }
  return out;
}

double profile_noise(ScaleProfile p) {
  return p == ScaleProfile::interference_limited ? 0.001 : 0.1;
}

double uniform_at(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t x = splitmix64(seed ^ splitmix64(index));
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

RandomInstance random_instance(std::uint64_t seed, std::size_t nt, ScaleProfile profile,
                               double feasibility_factor) {
  if (nt < 1) throw InstanceError("antenna count must be >= 1");
  constexpr double kEntryVariance = 0.4;
  const double sd = std::sqrt(kEntryVariance / 2.0);
  std::uint64_t counter = 0;
  auto draw = [&]() {
    CVector v(nt);
    for (std::size_t e = 0; e < nt; ++e) {
      const double u1 = uniform_at(seed, counter++);
      const double u2 = uniform_at(seed, counter++);
      const double r = sd * std::sqrt(-2.0 * std::log(1.0 - u1));
      v[e] = std::polar(r, 2.0 * std::numbers::pi * u2);
    }
    return v;
  };

  RandomInstance out;
  out.seed = seed;
  out.ch.nt = nt;
  out.ch.h11 = draw();
  out.ch.h12 = draw();
  out.ch.h21 = draw();
  out.ch.h22 = draw();
  out.ch.sigma1_sq = out.ch.sigma2_sq = profile_noise(profile);
  out.budget = {1.0, 1.0};

  // Target draws live past any channel counter.
  const std::uint64_t base = 1ULL << 32;
  const double f = feasibility_factor >= 0.0 ? feasibility_factor
                                             : 0.05 + 0.9 * uniform_at(seed, base);
  const double t = uniform_at(seed, base + 1);
  out.feasibility_factor = f;
  out.tgt.e1 = f * t * max_energy_1(out.ch, out.budget);
  out.tgt.e2 = f * (1.0 - t) * max_energy_2(out.ch, out.budget);
  return out;
}

}  // namespace swipt
