#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "swipt/errors.hpp"
#include "swipt/oracle.hpp"
#include "swipt/tdma_b.hpp"
#include "test_support.hpp"

using namespace swipt;

namespace {

SearchControl coarse() {
  SearchControl c;
  c.grid_points = 16;
  return c;
}

}  // namespace

TEST_CASE("closed-form feasibility region") {
  const Instance inst = testing::realization(1);
  const auto& ch = inst.ch;
  const auto& b = inst.budget;
  CHECK(feasible_tdma_b(ch, b, {0.0, 0.0}));
  // Denominators from the reference norms: 0.7562 and 1.4564.
  CHECK(feasible_tdma_b(ch, b, {0.37, 0.72}));
  CHECK(feasible_tdma_b(ch, b, {0.7562, 0.0}));
  CHECK_FALSE(feasible_tdma_b(ch, b, {0.7562 + 0.01, 0.0}));
  CHECK_FALSE(feasible_tdma_b(ch, b, {0.5, 0.5}));  // 0.661 + 0.343 > 1
  CHECK(feasible_tdma_b(ch, b, {0.4, 0.65}));      // 0.529 + 0.446 < 1
}

TEST_CASE("time-fraction bounds") {
  const Instance inst = testing::realization(1);
  const auto [lo0, hi0] = alpha_bounds(inst.ch, inst.budget, {0.0, 0.0});
  CHECK(lo0 == 0.0);
  CHECK(hi0 == 1.0);
  const auto [lo, hi] = alpha_bounds(inst.ch, inst.budget, {0.37, 0.72});
  CHECK(lo == doctest::Approx(0.4944).epsilon(2e-4));
  CHECK(hi == doctest::Approx(0.5107).epsilon(2e-4));
  CHECK_THROWS_AS(alpha_bounds(inst.ch, inst.budget, {0.5, 0.5}), InfeasibleError);

  // On the boundary the interval collapses.
  const double d1 = max_energy_1(inst.ch, inst.budget), d2 = max_energy_2(inst.ch, inst.budget);
  const auto [l, h] = alpha_bounds(inst.ch, inst.budget, {0.4 * d1, 0.6 * d2});
  CHECK(l == doctest::Approx(h).epsilon(1e-12));
}

TEST_CASE("closed-form condition") {
  const Instance inst = testing::realization(1);
  const auto& ch = inst.ch;
  CHECK(closed_form_applies({Receiver::first, 0.5, 0.0}, ch, inst.budget));

  // Scalar oracle at alpha = 0.5.
  const CVector h11n = normalized(ch.h11);
  CVector perp = ch.h22 - (inner(ch.h21, ch.h22) / Complex(norm_sq(ch.h21), 0.0)) * ch.h21;
  perp = normalized(perp);
  const double lhs = std::norm(inner(ch.h12, h11n)) + std::norm(inner(ch.h22, perp));
  for (double e2 : {0.1, 0.3, 0.5}) {
    const SlotProblem sp{Receiver::first, 0.5, e2 / 0.5};
    CHECK(closed_form_applies(sp, ch, inst.budget) == (lhs >= e2 / 0.5));
  }

  // h12 orthogonal to h11 and h22 parallel to h21: nothing reaches receiver 2.
  ChannelSet c;
  c.nt = 2;
  c.h11 = CVector{{1.0, 0.0}, {0.0, 0.0}};
  c.h12 = CVector{{0.0, 0.0}, {0.7, 0.2}};
  c.h21 = CVector{{0.3, 0.1}, {0.5, -0.2}};
  c.h22 = Complex(0.0, -1.5) * c.h21;
  c.sigma1_sq = c.sigma2_sq = 0.1;
  CHECK_FALSE(closed_form_applies({Receiver::first, 0.5, 1e-6}, c, {1.0, 1.0}));
  const SlotSolution s = closed_form_slot({Receiver::first, 0.5, 0.0}, c, {1.0, 1.0});
  CHECK(s.cov.s2.trace() == 0.0);
}

TEST_CASE("zero-target slot is interference free") {
  const Instance inst = testing::realization(2);
  const SlotSolution s = solve_slot({Receiver::first, 0.5, 0.0}, inst.ch, inst.budget);
  CHECK(s.used_closed_form);
  const double expected =
      std::log2(1.0 + inst.budget.p1 * norm_sq(inst.ch.h11) / inst.ch.sigma1_sq);
  CHECK(s.rate == doctest::Approx(expected).epsilon(1e-12));

  const SlotSolution s2 = solve_slot({Receiver::second, 0.5, 0.0}, inst.ch, inst.budget);
  const double expected2 =
      std::log2(1.0 + inst.budget.p2 * norm_sq(inst.ch.h22) / inst.ch.sigma2_sq);
  CHECK(s2.rate == doctest::Approx(expected2).epsilon(1e-12));
}

TEST_CASE("closed form and search agree when the condition holds") {
  const Instance inst = testing::realization(1);
  const SlotProblem sp{Receiver::first, 0.6, 0.05 / 0.6};
  REQUIRE(closed_form_applies(sp, inst.ch, inst.budget));
  const SlotSolution cf = solve_slot(sp, inst.ch, inst.budget);
  const SlotSolution se = search_slot(sp, inst.ch, inst.budget);
  CHECK(cf.used_closed_form);
  CHECK_FALSE(se.used_closed_form);
  CHECK(std::abs(cf.rate - se.rate) < 1e-4);
  CHECK(cf.rate >= se.rate - 1e-6);
}

TEST_CASE("searched slots honor the energy constraint and the oracle") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto r = random_instance(seed, 2, ScaleProfile::interference_limited, 0.8);
    const double d2 = max_energy_2(r.ch, r.budget);
    const SlotProblem sp{Receiver::first, 0.5, 0.9 * d2};
    const SlotSolution s = solve_slot(sp, r.ch, r.budget, coarse());
    CHECK(s.energy >= sp.energy_target_effective - 1e-6);
    OracleConfig cfg;
    cfg.grid_points_per_angle = 16;
    OracleConstraints cons;
    cons.min_energy2 = sp.energy_target_effective;
    const auto o = brute_force_best(r.ch, r.budget, OracleObjective::rate_1, cons, cfg);
    if (o.feasible) CHECK(s.rate >= o.objective - 1e-9);
    // Closed-form rate is the unconstrained maximum.
    const SlotSolution cf = closed_form_slot(sp, r.ch, r.budget);
    CHECK(s.rate <= cf.rate + 1e-9);
  }
  const Instance inst = testing::realization(1);
  CHECK_THROWS_AS(solve_slot({Receiver::first, 0.5, 10.0}, inst.ch, inst.budget), InfeasibleError);
}

TEST_CASE("Charnes-Cooper transform") {
  const Instance inst = testing::realization(1);
  const auto& ch = inst.ch;
  const CVector u = normalized(ch.h11);
  CovariancePair cov{HermitianMatrix::outer(u, 0.9), HermitianMatrix::zero(2)};
  const CharnesCooperForm f = charnes_cooper_transform(cov, ch);
  CHECK(f.y == doctest::Approx(1.0 / ch.sigma1_sq));
  CHECK((f.x1 - (1.0 / ch.sigma1_sq) * cov.s1).frobenius_norm() < 1e-12);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    CVector a{{g(rng), g(rng)}, {g(rng), g(rng)}}, b{{g(rng), g(rng)}, {g(rng), g(rng)}};
    const CovariancePair c{HermitianMatrix::outer(normalized(a), uni(rng)),
                           HermitianMatrix::outer(normalized(b), uni(rng))};
    const CharnesCooperForm t = charnes_cooper_transform(c, ch);
    CHECK(quadratic_form(ch.h21, t.x2) + t.y * ch.sigma1_sq == doctest::Approx(1.0));
    const CovariancePair back = charnes_cooper_inverse(t);
    CHECK((back.s1 - c.s1).frobenius_norm() < 1e-12);
    CHECK((back.s2 - c.s2).frobenius_norm() < 1e-12);
    CHECK(charnes_cooper_objective(t, ch, 0.4) ==
          doctest::Approx(0.4 * rate_1(c, ch)).epsilon(1e-12));
    const double e2 = received_powers(c, ch).energy2() * (trial % 2 ? 0.9 : 1.1);
    CHECK(charnes_cooper_feasible(t, ch, inst.budget, e2) ==
          slot1_feasible(c, ch, inst.budget, e2));
  }
  CHECK_THROWS_AS(charnes_cooper_inverse({HermitianMatrix::zero(2), HermitianMatrix::zero(2), 0.0}),
                  InstanceError);
}

TEST_CASE("scheme B composite invariants") {
  const Instance inst = testing::realization(1);
  const EnergyTarget tgt{0.2, 0.4};
  const SchemeBSolution s = solve_tdma_b(inst.ch, inst.budget, tgt, 21, coarse());
  REQUIRE(s.feasible);
  CHECK(s.overall_sum_rate ==
        doctest::Approx(s.alpha * s.r1 + (1.0 - s.alpha) * s.r2).epsilon(1e-12));
  CHECK(s.alpha * received_powers(s.slot1.cov, inst.ch).energy2() >= tgt.e2 - 1e-6);
  CHECK((1.0 - s.alpha) * received_powers(s.slot2.cov, inst.ch).energy1() >= tgt.e1 - 1e-6);
  const auto [lo, hi] = alpha_bounds(inst.ch, inst.budget, tgt);
  CHECK(s.alpha >= lo);
  CHECK(s.alpha <= hi);
}

TEST_CASE("scheme B objective matches a denser time-fraction scan") {
  const Instance inst = testing::realization(2);
  const EnergyTarget tgt{0.3, 0.3};
  const SchemeBSolution s = solve_tdma_b(inst.ch, inst.budget, tgt, 21, coarse());
  REQUIRE(s.feasible);
  const auto [lo, hi] = alpha_bounds(inst.ch, inst.budget, tgt);
  double dense = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 210; ++k) {
    const double a = lo + (hi - lo) * k / 209.0;
    dense = std::max(dense, tdma_b_objective_at(a, inst.ch, inst.budget, tgt, coarse()));
  }
  CHECK(std::abs(s.overall_sum_rate - dense) < 1e-4);
}

TEST_CASE("zero targets pick the better single-user operating point") {
  for (int k : {1, 2}) {
    const Instance inst = testing::realization(k);
    const SchemeBSolution s = solve_tdma_b(inst.ch, inst.budget, {0.0, 0.0});
    REQUIRE(s.feasible);
    const double u1 = std::log2(1.0 + norm_sq(inst.ch.h11) / inst.ch.sigma1_sq);
    const double u2 = std::log2(1.0 + norm_sq(inst.ch.h22) / inst.ch.sigma2_sq);
    CHECK(s.overall_sum_rate == doctest::Approx(std::max(u1, u2)).epsilon(1e-12));
    CHECK((s.alpha == 0.0 || s.alpha == 1.0));
  }
}

TEST_CASE("boundary instance forces the time fraction") {
  const Instance inst = testing::realization(1);
  const double d1 = max_energy_1(inst.ch, inst.budget);
  const SchemeBSolution s = solve_tdma_b(inst.ch, inst.budget, {d1, 0.0}, 21, coarse());
  REQUIRE(s.feasible);
  CHECK(s.alpha == 0.0);
  const SchemeBSolution bad = solve_tdma_b(inst.ch, inst.budget, {d1 + 0.01, 0.0});
  CHECK_FALSE(bad.feasible);
  CHECK(bad.overall_sum_rate == -std::numeric_limits<double>::infinity());
}
