#include <cmath>

#include "doctest.h"
#include "swipt/ideal.hpp"
#include "swipt/oracle.hpp"
#include "swipt/tdma_a.hpp"
#include "test_support.hpp"

using namespace swipt;

TEST_CASE("solutions meet both energy targets and the budget") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto r = random_instance(seed, 2, ScaleProfile::noise_limited, 0.4);
    if (!ideal_feasible(r.ch, r.budget, r.tgt)) continue;
    const IdealSolution s = solve_ideal(r.ch, r.budget, r.tgt);
    REQUIRE(s.feasible);
    CHECK(s.energy1 >= r.tgt.e1 - 1e-9);
    CHECK(s.energy2 >= r.tgt.e2 - 1e-9);
    CHECK_NOTHROW(s.cov.validate(r.budget));
    CHECK(s.objective == doctest::Approx(sum_rate(s.cov, r.ch)).epsilon(1e-14));
    const StructureReport rep = verify_structure(s, r.ch, r.budget);
    CHECK(rep.ok());
  }
}

TEST_CASE("feasibility agrees with the common energy scaling") {
  const Instance inst = testing::realization(1);
  const double d1 = max_energy_1(inst.ch, inst.budget);
  const double d2 = max_energy_2(inst.ch, inst.budget);
  // Both maxima at once are not simultaneously reachable.
  CHECK_FALSE(ideal_feasible(inst.ch, inst.budget, {d1, d2}));
  CHECK(ideal_feasible(inst.ch, inst.budget, {d1, 0.0}));
  CHECK_FALSE(solve_ideal(inst.ch, inst.budget, {d1, d2}).feasible);
  const auto mt = solve_min_time(inst.ch, inst.budget, {0.5, 0.8});
  CHECK(ideal_feasible(inst.ch, inst.budget, {0.5, 0.8}) == mt.feasible);
}

TEST_CASE("tight targets stay solvable through the max-min seed") {
  const Instance inst = testing::realization(2);
  const EnergyTarget base{0.4, 0.6};
  const auto mt = solve_min_time(inst.ch, inst.budget, base);
  // Scale targets onto the feasibility boundary.
  const EnergyTarget tight{base.e1 * mt.beta_star * (1 - 1e-12),
                           base.e2 * mt.beta_star * (1 - 1e-12)};
  const IdealSolution s = solve_ideal(inst.ch, inst.budget, tight);
  REQUIRE(s.feasible);
  CHECK(s.energy1 >= tight.e1 - 1e-9);
  CHECK(s.energy2 >= tight.e2 - 1e-9);
}

TEST_CASE("zero targets reduce to unconstrained sum rate") {
  for (int k : {1, 2}) {
    const Instance inst = testing::realization(k);
    const IdealSolution s = solve_ideal(inst.ch, inst.budget, {0.0, 0.0});
    const Slot2Solution slot = solve_slot2_sum_rate(inst.ch, inst.budget);
    CHECK(s.objective == doctest::Approx(slot.r1 + slot.r2).epsilon(1e-9));
  }
}

TEST_CASE("objective never increases with the targets") {
  const Instance inst = testing::realization(1);
  double prev = solve_ideal(inst.ch, inst.budget, {0.0, 0.0}).objective;
  for (double e : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    const IdealSolution s = solve_ideal(inst.ch, inst.budget, {e, e});
    if (!s.feasible) break;
    CHECK(s.objective <= prev + 1e-6);
    prev = s.objective;
  }
}

TEST_CASE("at least the equal-lattice brute force") {
  const auto r = random_instance(77, 2, ScaleProfile::interference_limited, 0.5);
  SearchControl ctrl;
  ctrl.grid_points = 16;
  OracleConfig cfg;
  cfg.grid_points_per_angle = 16;
  OracleConstraints cons;
  cons.min_energy1 = r.tgt.effective_e1();
  cons.min_energy2 = r.tgt.effective_e2();
  const auto o = brute_force_best(r.ch, r.budget, OracleObjective::sum_rate, cons, cfg);
  const IdealSolution s = solve_ideal(r.ch, r.budget, r.tgt, ctrl);
  if (o.feasible) {
    REQUIRE(s.feasible);
    CHECK(s.objective >= o.objective - 1e-9);
  }
}

TEST_CASE("structure check flags non-compliant covariances") {
  const Instance inst = testing::realization(1);
  IdealSolution fake;
  fake.feasible = true;
  fake.cov = {0.5 * HermitianMatrix::identity(2), 0.25 * HermitianMatrix::identity(2)};
  const StructureReport rep = verify_structure(fake, inst.ch, inst.budget);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.rank_one);
  CHECK_FALSE(rep.trace_full);
  // The span of two generic channels in C^2 is everything.
  CHECK(rep.range_space);

  Instance three;
  three.ch.nt = 3;
  three.ch.h11 = CVector{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
  three.ch.h12 = CVector{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
  three.ch.h21 = three.ch.h11;
  three.ch.h22 = three.ch.h12;
  three.ch.sigma1_sq = three.ch.sigma2_sq = 0.1;
  three.budget = {1.0, 1.0};
  IdealSolution off;
  const CVector e3 = CVector::basis(3, 2);
  off.cov = {HermitianMatrix::outer(e3), HermitianMatrix::outer(e3)};
  const StructureReport rep3 = verify_structure(off, three.ch, three.budget);
  CHECK_FALSE(rep3.range_space);
  CHECK(rep3.rank_one);
  CHECK(rep3.trace_full);
}
