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

#include "swipt/rank_one_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "swipt/errors.hpp"

namespace swipt {

void SearchControl::validate() const {
  if (grid_points < 2) throw InstanceError("grid resolution must be >= 2 points per angle");
  if (zoom_passes < 0) throw InstanceError("zoom passes must be >= 0");
  if (!(zoom_factor > 1.0)) throw InstanceError("zoom factor must exceed 1");
  if (!(stationarity_tol > 0.0)) throw InstanceError("stationarity tolerance must be positive");
  if (restarts < 1) throw InstanceError("restarts must be >= 1");
}

namespace search {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double wrap_angle(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

// Preference of the goal/constraints on one received power.
enum class Pref { none, up, down, mixed };

Pref combine(Pref a, Pref b) {
  if (a == Pref::none) return b;
  if (b == Pref::none || a == b) return a;
  return Pref::mixed;
}

struct TxPrefs {
  Pref to_rx1 = Pref::none;
  Pref to_rx2 = Pref::none;
};

// Index 0 = Tx1 (g11, g12), index 1 = Tx2 (g21, g22).
std::array<TxPrefs, 2> preferences(const Problem& p) {
  std::array<TxPrefs, 2> out{};
  auto& t1 = out[0];
  auto& t2 = out[1];
  switch (p.goal) {
    case Goal::sum_rate:
      t1 = {Pref::up, Pref::down};
      t2 = {Pref::down, Pref::up};
      break;
    case Goal::rate_1:
      t1 = {Pref::up, Pref::none};
      t2 = {Pref::down, Pref::none};
      break;
    case Goal::rate_2:
      t1 = {Pref::none, Pref::down};
      t2 = {Pref::none, Pref::up};
      break;
  }
  if (p.min_energy1 > 0.0) {
    t1.to_rx1 = combine(t1.to_rx1, Pref::up);
    t2.to_rx1 = combine(t2.to_rx1, Pref::up);
  }
  if (p.min_energy2 > 0.0) {
    t1.to_rx2 = combine(t1.to_rx2, Pref::up);
    t2.to_rx2 = combine(t2.to_rx2, Pref::up);
  }
  return out;
}

// Indices (ascending) of the points not dominated under the preferences.
std::vector<std::size_t> undominated(const std::vector<double>& g1, const std::vector<double>& g2,
                                     TxPrefs prefs) {
  const std::size_t n = g1.size();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (prefs.to_rx1 == Pref::mixed || prefs.to_rx2 == Pref::mixed) return all;

  auto key = [](Pref p, double g) { return p == Pref::down ? -g : g; };
  const bool use1 = prefs.to_rx1 != Pref::none;
  const bool use2 = prefs.to_rx2 != Pref::none;
  if (!use1 && !use2) return {0};
  if (use1 != use2) {
    const auto& g = use1 ? g1 : g2;
    const Pref p = use1 ? prefs.to_rx1 : prefs.to_rx2;
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (key(p, g[i]) > key(p, g[best])) best = i;
    return {best};
  }
  std::vector<double> k1(n), k2(n);
  for (std::size_t i = 0; i < n; ++i) {
    k1[i] = key(prefs.to_rx1, g1[i]);
    k2[i] = key(prefs.to_rx2, g2[i]);
  }
  std::sort(all.begin(), all.end(), [&](std::size_t a, std::size_t b) {
    if (k1[a] != k1[b]) return k1[a] > k1[b];
    if (k2[a] != k2[b]) return k2[a] > k2[b];
    return a < b;
  });
  std::vector<std::size_t> kept;
  double best2 = kNegInf;
  for (std::size_t i : all) {
    if (k2[i] > best2) {
      kept.push_back(i);
      best2 = k2[i];
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

// --- TxSpace --------------------------------------------------------------

TxSpace::TxSpace(const CVector& lead, const CVector& other, const CVector& to_rx1,
                 const CVector& to_rx2, double power, bool power_search_if_degenerate)
    : basis_(orthonormal_span_basis(lead, other)),
      power_(power),
      power_search_(basis_.degenerate && power_search_if_degenerate) {
  a1_ = inner(to_rx1, basis_.u1);
  a2_ = inner(to_rx2, basis_.u1);
  if (basis_.degenerate) return;
  b1_ = inner(to_rx1, basis_.u2);
  b2_ = inner(to_rx2, basis_.u2);
  anchors_ = {normalized(to_rx1), normalized(to_rx2)};
  // h^H (b u1 - a u2) = 0 for a = h^H u1, b = h^H u2.
  for (const auto& [a, b] : {std::pair{a1_, b1_}, std::pair{a2_, b2_}}) {
    if (std::abs(a) + std::abs(b) < 1e-14) continue;
    anchors_.push_back(normalized(b * basis_.u1 - a * basis_.u2));
  }
}

int TxSpace::free_coords() const {
  if (!basis_.degenerate) return 2;
  return power_search_ ? 1 : 0;
}

std::pair<double, double> TxSpace::gains(TxParam p) const {
  if (basis_.degenerate) {
    const double scale = power(p);
    return {scale * std::norm(a1_), scale * std::norm(a2_)};
  }
  const double c = std::cos(p.x);
  const double s = std::sin(p.x);
  const Complex e = std::polar(s, p.y);
  // h^H v = cos(theta) h^H u1 + sin(theta) e^{j phi} h^H u2
  const Complex x1 = c * a1_ + e * b1_;
  const Complex x2 = c * a2_ + e * b2_;
  return {power_ * std::norm(x1), power_ * std::norm(x2)};
}

CVector TxSpace::direction(TxParam p) const {
  if (basis_.degenerate) return basis_.u1;
  return Complex(std::cos(p.x), 0.0) * basis_.u1 + std::polar(std::sin(p.x), p.y) * basis_.u2;
}

double TxSpace::power(TxParam p) const {
  if (power_search_) return power_ * std::clamp(p.x, 0.0, 1.0);
  return power_;
}

double TxSpace::range(int coord) const {
  if (basis_.degenerate) return 1.0;
  return coord == 0 ? kHalfPi : kTwoPi;
}

TxParam TxSpace::normalize(TxParam p) const {
  if (basis_.degenerate) return {power_search_ ? std::clamp(p.x, 0.0, 1.0) : 1.0, 0.0};
  return {std::clamp(p.x, 0.0, kHalfPi), wrap_angle(p.y)};
}

std::vector<TxParam> TxSpace::grid(int n) const {
  std::vector<TxParam> out;
  if (basis_.degenerate) {
    if (!power_search_) return {TxParam{1.0, 0.0}};
    for (int i = 0; i <= n; ++i) out.push_back({static_cast<double>(i) / n, 0.0});
    return out;
  }
  out.reserve(static_cast<std::size_t>(n + 1) * n);
  for (int i = 0; i <= n; ++i) {
    const double theta = kHalfPi * i / n;
    for (int j = 0; j < n; ++j) out.push_back({theta, kTwoPi * j / n});
  }
  return out;
}

std::vector<TxParam> TxSpace::window(TxParam center, double shrink, int n) const {
  std::vector<TxParam> out;
  if (free_coords() == 0) return {normalize(center)};
  const double wx = range(0) / shrink;
  const double lo = std::clamp(center.x - 0.5 * wx, 0.0, range(0) - wx);
  if (basis_.degenerate) {
    for (int i = 0; i < n; ++i) out.push_back({lo + wx * i / (n - 1), 0.0});
  } else {
    const double wy = kTwoPi / shrink;
    out.reserve(static_cast<std::size_t>(n) * n + 1);
    for (int i = 0; i < n; ++i) {
      const double theta = lo + wx * i / (n - 1);
      for (int j = 0; j < n; ++j) {
        out.push_back({theta, wrap_angle(center.y - 0.5 * wy + wy * j / (n - 1))});
      }
    }
  }
  out.push_back(normalize(center));
  return out;
}

TxParam TxSpace::param_of(const CVector& dir) const {
  if (basis_.degenerate) return {1.0, 0.0};
  const Complex c1 = inner(basis_.u1, dir);
  const Complex c2 = inner(basis_.u2, dir);
  const double theta = std::atan2(std::abs(c2), std::abs(c1));
  const double phi = std::abs(c1) > 1e-14 ? std::arg(c2) - std::arg(c1) : std::arg(c2);
  return normalize({theta, phi});
}

// --- Outcome --------------------------------------------------------------

CovariancePair Outcome::covariance() const {
  return {beamformer_to_covariance(beam1), beamformer_to_covariance(beam2)};
}

// --- RankOneSearch --------------------------------------------------------

RankOneSearch::RankOneSearch(const ChannelSet& ch, const PowerBudget& budget, BasisOrder order,
                             const SearchControl& ctrl, bool power_search_if_degenerate)
    : ch_(ch),
      budget_(budget),
      ctrl_(ctrl),
      tx1_(order == BasisOrder::natural ? ch.h11 : ch.h12,
           order == BasisOrder::natural ? ch.h12 : ch.h11, ch.h11, ch.h12, budget.p1,
           power_search_if_degenerate),
      tx2_(order == BasisOrder::natural ? ch.h21 : ch.h22,
           order == BasisOrder::natural ? ch.h22 : ch.h21, ch.h21, ch.h22, budget.p2,
           power_search_if_degenerate) {
  ch_.validate();
  budget_.validate();
  ctrl_.validate();
  auto with_anchors = [&](const TxSpace& tx) {
    auto params = tx.grid(ctrl_.grid_points);
    for (const auto& a : tx.anchors_) params.push_back(tx.param_of(a));
    return params;
  };
  coarse1_ = tabulate(tx1_, with_anchors(tx1_));
  coarse2_ = tabulate(tx2_, with_anchors(tx2_));
}

RankOneSearch::Table RankOneSearch::tabulate(const TxSpace& tx, std::vector<TxParam> params) const {
  Table t;
  t.to_rx1.resize(params.size());
  t.to_rx2.resize(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto [g1, g2] = tx.gains(params[i]);
    t.to_rx1[i] = g1;
    t.to_rx2[i] = g2;
  }
  t.params = std::move(params);
  return t;
}

double RankOneSearch::score(const Problem& problem, double g11, double g12, double g21,
                            double g22) const {
  switch (problem.goal) {
    case Goal::sum_rate:
      return (1.0 + g11 / (g21 + ch_.sigma1_sq)) * (1.0 + g22 / (g12 + ch_.sigma2_sq));
    case Goal::rate_1:
      return g11 / (g21 + ch_.sigma1_sq);
    case Goal::rate_2:
      return g22 / (g12 + ch_.sigma2_sq);
  }
  return kNegInf;
}

bool RankOneSearch::feasible(const Problem& problem, double g11, double g12, double g21,
                             double g22) const {
  if (problem.min_energy1 > 0.0 && g11 + g21 < problem.min_energy1 - kEnergySlack) return false;
  if (problem.min_energy2 > 0.0 && g12 + g22 < problem.min_energy2 - kEnergySlack) return false;
  return true;
}

RankOneSearch::PairBest RankOneSearch::best_pair(const Table& t1, const Table& t2,
                                                 const Problem& problem) const {
  const auto starts = best_starts(t1, t2, problem, 1);
  return starts.empty() ? PairBest{} : starts.front();
}

std::vector<RankOneSearch::PairBest> RankOneSearch::best_starts(const Table& t1, const Table& t2,
                                                                const Problem& problem,
                                                                int count) const {
  const auto prefs = preferences(problem);
  const auto keep1 = undominated(t1.to_rx1, t1.to_rx2, prefs[0]);
  const auto keep2 = undominated(t2.to_rx1, t2.to_rx2, prefs[1]);

  // Structure-of-arrays copies of the surviving transmitter-2 points.
  const std::size_t m = keep2.size();
  std::vector<double> g21(m), g22(m), inv_i1(m);
  for (std::size_t k = 0; k < m; ++k) {
    g21[k] = t2.to_rx1[keep2[k]];
    g22[k] = t2.to_rx2[keep2[k]];
    inv_i1[k] = 1.0 / (g21[k] + ch_.sigma1_sq);
  }
  const bool need1 = problem.min_energy1 > 0.0;
  const bool need2 = problem.min_energy2 > 0.0;
  const double t1min = problem.min_energy1 - kEnergySlack;
  const double t2min = problem.min_energy2 - kEnergySlack;

  // Best partner of every transmitter-1 point.
  struct Row {
    double score;
    std::size_t j, k;
  };
  std::vector<Row> rows;
  rows.reserve(keep1.size());
  for (std::size_t j : keep1) {
    const double g11 = t1.to_rx1[j];
    const double g12 = t1.to_rx2[j];
    const double inv_i2 = 1.0 / (g12 + ch_.sigma2_sq);
    double row_best = kNegInf;
    std::size_t row_k = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (need1 && g11 + g21[k] < t1min) continue;
      if (need2 && g12 + g22[k] < t2min) continue;
      double s;
      switch (problem.goal) {
        case Goal::sum_rate:
          s = (1.0 + g11 * inv_i1[k]) * (1.0 + g22[k] * inv_i2);
          break;
        case Goal::rate_1:
          s = g11 * inv_i1[k];
          break;
        default:
          s = g22[k] * inv_i2;
          break;
      }
      if (s > row_best) {
        row_best = s;
        row_k = keep2[k];
      }
    }
    if (row_best > kNegInf) rows.push_back({row_best, j, row_k});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.score > b.score; });

  const double n = ctrl_.grid_points;
  auto apart = [&](const TxSpace& tx, TxParam a, TxParam b) {
    if (tx.free_coords() == 0) return false;
    if (std::abs(a.x - b.x) > 2.0 * tx.range(0) / n) return true;
    if (tx.free_coords() == 1) return false;
    const double d = std::abs(wrap_angle(a.y - b.y + kHalfPi * 2.0) - kHalfPi * 2.0);
    return d > 2.0 * kTwoPi / n;
  };
  std::vector<PairBest> out;
  for (const Row& r : rows) {
    if (static_cast<int>(out.size()) >= count) break;
    const PairBest cand{true, t1.params[r.j], t2.params[r.k], r.score};
    const bool separated = std::all_of(out.begin(), out.end(), [&](const PairBest& o) {
      return apart(tx1_, o.tx1, cand.tx1) || apart(tx2_, o.tx2, cand.tx2);
    });
    if (separated) out.push_back(cand);
  }
  return out;
}

RankOneSearch::PairBest RankOneSearch::refine(const Problem& problem, PairBest best) const {
  for (int pass = 1; pass <= ctrl_.zoom_passes; ++pass) {
    const double shrink = std::pow(ctrl_.zoom_factor, pass);
    const Table w1 = tabulate(tx1_, tx1_.window(best.tx1, shrink, ctrl_.grid_points));
    const Table w2 = tabulate(tx2_, tx2_.window(best.tx2, shrink, ctrl_.grid_points));
    const PairBest zoomed = best_pair(w1, w2, problem);
    if (zoomed.found && zoomed.score >= best.score) best = zoomed;
  }
  best = polish(problem, best);
  return ridge(problem, best);
}

RankOneSearch::PairBest RankOneSearch::polish(const Problem& problem, PairBest start) const {
  const TxSpace* spaces[2] = {&tx1_, &tx2_};
  const int passes = ctrl_.zoom_passes;
  const double shrink = std::pow(ctrl_.zoom_factor, passes);
  const int n = ctrl_.grid_points;

  // Coordinates: (tx, component). Initial steps match the finest lattice.
  struct Coord {
    int tx;
    int comp;
    double step;
    double max_step;
  };
  std::vector<Coord> coords;
  for (int t = 0; t < 2; ++t) {
    const int free = spaces[t]->free_coords();
    for (int c = 0; c < free; ++c) {
      const double span = spaces[t]->range(c) / shrink;
      const double denom = passes == 0 ? n : n - 1;
      coords.push_back({t, c, span / denom, spaces[t]->range(c) / 8.0});
    }
  }
  if (coords.empty()) return start;

  // Poll the axes first, then a rotated orthogonal set that changes every
  // iteration so the directions become dense and the search can slide
  // along an active energy constraint.
  const std::size_t nc = coords.size();
  std::vector<std::vector<double>> axes;
  for (std::size_t a = 0; a < nc; ++a) {
    for (double sa : {1.0, -1.0}) {
      std::vector<double> m(nc, 0.0);
      m[a] = sa;
      axes.push_back(m);
    }
  }
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  auto rotated = [&]() {
    std::vector<double> v(nc);
    double nv = 0.0;
    for (auto& x : v) {
      x = gauss(rng);
      nv += x * x;
    }
    std::vector<std::vector<double>> out;
    for (std::size_t a = 0; a < nc; ++a) {
      // Column a of the Householder reflection I - 2 v v^T / |v|^2.
      std::vector<double> col(nc);
      for (std::size_t b = 0; b < nc; ++b) col[b] = (a == b ? 1.0 : 0.0) - 2.0 * v[a] * v[b] / nv;
      out.push_back(col);
      for (auto& x : col) x = -x;
      out.push_back(col);
    }
    return out;
  };

  TxParam cur[2] = {start.tx1, start.tx2};
  auto eval = [&](const TxParam* p) {
    const auto [g11, g12] = tx1_.gains(p[0]);
    const auto [g21, g22] = tx2_.gains(p[1]);
    if (!feasible(problem, g11, g12, g21, g22)) return kNegInf;
    return score(problem, g11, g12, g21, g22);
  };
  double cur_score = eval(cur);
  if (cur_score == kNegInf) return start;

  for (int iter = 0; iter < 20000; ++iter) {
    double max_step = 0.0;
    for (const auto& c : coords) max_step = std::max(max_step, c.step);
    if (max_step < ctrl_.stationarity_tol) break;

    bool improved = false;
    auto moves = axes;
    if (nc > 1) {
      auto extra = rotated();
      moves.insert(moves.end(), extra.begin(), extra.end());
    }
    for (const auto& m : moves) {
      TxParam trial[2] = {cur[0], cur[1]};
      for (std::size_t a = 0; a < nc; ++a) {
        const Coord& c = coords[a];
        double& v = c.comp == 0 ? trial[c.tx].x : trial[c.tx].y;
        v += m[a] * c.step;
      }
      trial[0] = tx1_.normalize(trial[0]);
      trial[1] = tx2_.normalize(trial[1]);
      const double s = eval(trial);
      if (s > cur_score) {
        cur[0] = trial[0];
        cur[1] = trial[1];
        cur_score = s;
        improved = true;
        break;
      }
    }
    // Grow after a success so long shallow ridges are traversed quickly.
    for (auto& c : coords) c.step = improved ? std::min(2.0 * c.step, c.max_step) : 0.5 * c.step;
  }
  return {true, cur[0], cur[1], cur_score};
}

RankOneSearch::PairBest RankOneSearch::ridge(const Problem& problem, PairBest start) const {
  const TxSpace* spaces[2] = {&tx1_, &tx2_};
  struct Coord {
    int tx;
    int comp;
  };
  std::vector<Coord> coords;
  for (int t = 0; t < 2; ++t)
    for (int c = 0; c < spaces[t]->free_coords(); ++c) coords.push_back({t, c});
  const std::size_t nc = coords.size();
  if (nc == 0) return start;

  using Vec = std::vector<double>;
  auto unpack = [&](const Vec& x, TxParam* p) {
    p[0] = start.tx1;
    p[1] = start.tx2;
    for (std::size_t a = 0; a < nc; ++a) (coords[a].comp == 0 ? p[coords[a].tx].x : p[coords[a].tx].y) = x[a];
    p[0] = tx1_.normalize(p[0]);
    p[1] = tx2_.normalize(p[1]);
  };
  auto pack = [&](const TxParam* p) {
    Vec x(nc);
    for (std::size_t a = 0; a < nc; ++a) x[a] = coords[a].comp == 0 ? p[coords[a].tx].x : p[coords[a].tx].y;
    return x;
  };
  // Values: [0] smooth objective, [1] energy-1 margin, [2] energy-2 margin.
  auto values = [&](const Vec& x) {
    TxParam p[2];
    unpack(x, p);
    const auto [g11, g12] = tx1_.gains(p[0]);
    const auto [g21, g22] = tx2_.gains(p[1]);
    const double sc = score(problem, g11, g12, g21, g22);
    const double f = problem.goal == Goal::sum_rate ? std::log(sc) : std::log1p(sc);
    return std::array<double, 3>{f, g11 + g21 - problem.min_energy1,
                                 g12 + g22 - problem.min_energy2};
  };
  auto exact = [&](const Vec& x) {
    TxParam p[2];
    unpack(x, p);
    const auto [g11, g12] = tx1_.gains(p[0]);
    const auto [g21, g22] = tx2_.gains(p[1]);
    if (!feasible(problem, g11, g12, g21, g22)) return kNegInf;
    return score(problem, g11, g12, g21, g22);
  };
  const bool need[3] = {false, problem.min_energy1 > 0.0, problem.min_energy2 > 0.0};

  TxParam p0[2] = {start.tx1, start.tx2};
  Vec x = pack(p0);
  double best = exact(x);
  if (best == kNegInf) return start;

  constexpr double kDiff = 1e-7;
  auto gradients = [&](const Vec& at) {
    std::array<Vec, 3> g{Vec(nc), Vec(nc), Vec(nc)};
    for (std::size_t a = 0; a < nc; ++a) {
      Vec up = at, dn = at;
      up[a] += kDiff;
      dn[a] -= kDiff;
      const auto vu = values(up), vd = values(dn);
      for (int k = 0; k < 3; ++k) g[k][a] = (vu[k] - vd[k]) / (2.0 * kDiff);
    }
    return g;
  };
  auto dot = [](const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };

  double t0 = 1e-2;
  for (int iter = 0; iter < 200; ++iter) {
    const auto v = values(x);
    const auto g = gradients(x);
    // Active constraints: margins within a small band of the bound.
    std::vector<int> active;
    for (int k = 1; k < 3; ++k)
      if (need[k] && v[k] < 1e-7 * (1.0 + std::abs(problem.min_energy1 + problem.min_energy2)))
        active.push_back(k);

    Vec d;
    std::vector<Vec> basis;  // orthonormalized active gradients
    for (int attempt = 0; attempt < 3; ++attempt) {
      basis.clear();
      for (int k : active) {
        Vec q = g[k];
        for (const auto& b : basis) {
          const double c = dot(q, b);
          for (std::size_t i = 0; i < nc; ++i) q[i] -= c * b[i];
        }
        const double nq = std::sqrt(dot(q, q));
        if (nq > 1e-12) {
          for (auto& e : q) e /= nq;
          basis.push_back(q);
        }
      }
      d = g[0];
      for (const auto& b : basis) {
        const double c = dot(d, b);
        for (std::size_t i = 0; i < nc; ++i) d[i] -= c * b[i];
      }
      // Release a constraint whose gradient agrees with the objective's.
      bool released = false;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (dot(g[0], g[active[i]]) > 0.0 && std::sqrt(dot(d, d)) < 1e-9) {
          active.erase(active.begin() + static_cast<long>(i));
          released = true;
          break;
        }
      }
      if (!released) break;
    }
    const double nd = std::sqrt(dot(d, d));
    if (nd < 1e-10) break;
    for (auto& e : d) e /= nd;

    // Step along the projected ascent, then restore the active margins with
    // minimum-norm corrections along their gradients.
    bool moved = false;
    for (double t = t0; t > 1e-10; t *= 0.5) {
      Vec y = x;
      for (std::size_t i = 0; i < nc; ++i) y[i] += t * d[i];
      for (int corr = 0; corr < 8 && !active.empty(); ++corr) {
        const auto vy = values(y);
        bool ok = true;
        for (int k : active) ok = ok && vy[k] >= 0.0;
        if (ok) break;
        const auto gy = gradients(y);
        if (active.size() == 1) {
          const int k = active[0];
          const double gg = dot(gy[k], gy[k]);
          if (gg < 1e-300) break;
          const double r = std::max(0.0, -vy[k]) * (1.0 + 1e-9) + 1e-15;
          for (std::size_t i = 0; i < nc; ++i) y[i] += r * gy[k][i] / gg;
        } else {
          // Solve the 2 x 2 system J J^T l = r.
          const Vec& a = gy[active[0]];
          const Vec& b = gy[active[1]];
          const double aa = dot(a, a), ab = dot(a, b), bb = dot(b, b);
          const double det = aa * bb - ab * ab;
          if (std::abs(det) < 1e-300) break;
          const double ra = std::max(0.0, -vy[active[0]]) * (1.0 + 1e-9) + 1e-15;
          const double rb = std::max(0.0, -vy[active[1]]) * (1.0 + 1e-9) + 1e-15;
          const double la = (bb * ra - ab * rb) / det;
          const double lb = (aa * rb - ab * ra) / det;
          for (std::size_t i = 0; i < nc; ++i) y[i] += la * a[i] + lb * b[i];
        }
      }
      const double s = exact(y);
      if (s > best) {
        x = y;
        best = s;
        t0 = std::min(2.0 * t, 0.5);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }

  TxParam p[2];
  unpack(x, p);
  return {true, p[0], p[1], best};
}

Outcome RankOneSearch::maximize(const Problem& problem, std::span<const CVector> seeds1,
                                std::span<const CVector> seeds2) const {
  std::vector<PairBest> starts;
  if (seeds1.empty() && seeds2.empty()) {
    starts = best_starts(coarse1_, coarse2_, problem, ctrl_.restarts);
  } else {
    auto extend = [](const Table& base, const TxSpace& tx, std::span<const CVector> seeds,
                     const RankOneSearch& self) {
      std::vector<TxParam> params = base.params;
      for (const auto& s : seeds) params.push_back(tx.param_of(normalized(s)));
      return self.tabulate(tx, std::move(params));
    };
    starts = best_starts(extend(coarse1_, tx1_, seeds1, *this),
                         extend(coarse2_, tx2_, seeds2, *this), problem, ctrl_.restarts);
  }

  Outcome out;
  if (starts.empty()) return out;

  PairBest best;
  for (const PairBest& s : starts) {
    const PairBest r = refine(problem, s);
    if (!best.found || r.score > best.score) best = r;
  }

  out.feasible = true;
  out.tx1 = best.tx1;
  out.tx2 = best.tx2;
  out.score = best.score;
  out.beam1 = {tx1_.direction(best.tx1), tx1_.power(best.tx1), std::nullopt};
  out.beam2 = {tx2_.direction(best.tx2), tx2_.power(best.tx2), std::nullopt};
  out.beam1.span_coords =
      channel_span_coords(Complex(std::sqrt(out.beam1.power), 0.0) * out.beam1.direction, ch_.h11,
                          ch_.h12);
  out.beam2.span_coords =
      channel_span_coords(Complex(std::sqrt(out.beam2.power), 0.0) * out.beam2.direction, ch_.h21,
                          ch_.h22);
  const auto [g11, g12] = tx1_.gains(best.tx1);
  const auto [g21, g22] = tx2_.gains(best.tx2);
  out.powers = {g11, g12, g21, g22};
  return out;
}

}  // namespace search
}  // namespace swipt
