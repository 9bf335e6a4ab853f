#include <cmath>

#include "doctest.h"
#include "swipt/errors.hpp"
#include "swipt/oracle.hpp"
#include "swipt/tdma_a.hpp"
#include "swipt/tdma_b.hpp"
#include "test_support.hpp"

using namespace swipt;

TEST_CASE("interference-free construction gives the sum of single-user rates") {
  ChannelSet ch;
  ch.nt = 2;
  ch.h11 = CVector{{0.8, 0.0}, {0.0, 0.0}};
  ch.h12 = CVector{{0.0, 0.0}, {0.5, 0.0}};
  ch.h21 = CVector{{0.0, 0.0}, {0.0, 0.7}};
  ch.h22 = CVector{{0.0, 0.6}, {0.0, 0.0}};
  ch.sigma1_sq = ch.sigma2_sq = 0.1;
  OracleConfig cfg;
  cfg.grid_points_per_angle = 128;
  const auto o = brute_force_best(ch, {1.0, 1.0}, OracleObjective::sum_rate, {}, cfg);
  const double mrt = std::log2(1.0 + 0.64 / 0.1) + std::log2(1.0 + 0.36 / 0.1);
  CHECK(std::abs(o.objective - mrt) < 0.01);
  CHECK(o.objective <= mrt + 1e-12);
}

TEST_CASE("min-scaled-energy reproduces beta star") {
  const Instance inst = testing::realization(1);
  const EnergyTarget tgt{0.3, 0.6};
  const auto mt = solve_min_time(inst.ch, inst.budget, tgt);
  OracleConfig cfg;
  cfg.grid_points_per_angle = 512;
  OracleConstraints c;
  c.scale_e1 = 0.3;
  c.scale_e2 = 0.6;
  const auto o = brute_force_best(inst.ch, inst.budget, OracleObjective::min_scaled_energy, c, cfg);
  CHECK(std::abs(o.objective - mt.beta_star) < 1e-3);
  CHECK(o.objective <= mt.beta_star + 1e-9);
}

TEST_CASE("doubling grid density never decreases the objective") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = random_instance(seed, 2, ScaleProfile::interference_limited, 0.5);
    OracleConstraints c;
    c.min_energy1 = r.tgt.e1;
    c.min_energy2 = r.tgt.e2;
    double prev = -1.0;
    for (int n : {8, 16, 32}) {
      OracleConfig cfg;
      cfg.grid_points_per_angle = n;
      const auto o = brute_force_best(r.ch, r.budget, OracleObjective::sum_rate, c, cfg);
      if (!o.feasible) {
        CHECK(prev < 0.0);
        continue;
      }
      CHECK(o.objective >= prev - 1e-12);
      prev = o.objective;
    }
  }
}

TEST_CASE("pruning leaves every optimum unchanged") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto r = random_instance(seed, 2, ScaleProfile::interference_limited, 0.6);
    for (auto obj : {OracleObjective::sum_rate, OracleObjective::rate_1, OracleObjective::rate_2,
                     OracleObjective::min_scaled_energy}) {
      for (int mask = 0; mask < 4; ++mask) {
        OracleConstraints c;
        if (obj == OracleObjective::min_scaled_energy) {
          c.scale_e1 = (mask & 1) ? r.tgt.e1 : 0.0;
          c.scale_e2 = (mask & 2) || mask == 0 ? r.tgt.e2 : 0.0;
        } else {
          c.min_energy1 = (mask & 1) ? r.tgt.e1 : 0.0;
          c.min_energy2 = (mask & 2) ? r.tgt.e2 : 0.0;
        }
        OracleConfig full;
        full.grid_points_per_angle = 12;
        full.prune = false;
        OracleConfig pruned = full;
        pruned.prune = true;
        const auto a = brute_force_best(r.ch, r.budget, obj, c, full);
        const auto b = brute_force_best(r.ch, r.budget, obj, c, pruned);
        REQUIRE(a.feasible == b.feasible);
        if (a.feasible) CHECK(a.objective == doctest::Approx(b.objective).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("infeasible constraints are reported") {
  const Instance inst = testing::realization(1);
  OracleConstraints c;
  c.min_energy1 = 2.0 * max_energy_1(inst.ch, inst.budget);
  OracleConfig cfg;
  cfg.grid_points_per_angle = 8;
  CHECK_FALSE(brute_force_best(inst.ch, inst.budget, OracleObjective::sum_rate, c, cfg).feasible);
  cfg.grid_points_per_angle = 4;
  CHECK_THROWS_AS(brute_force_best(inst.ch, inst.budget, OracleObjective::sum_rate, {}, cfg),
                  InstanceError);
}

TEST_CASE("random instances are deterministic and inside the feasible region") {
  const auto a = random_instance(42, 3, ScaleProfile::interference_limited);
  const auto b = random_instance(42, 3, ScaleProfile::interference_limited);
  CHECK(norm(a.ch.h11 - b.ch.h11) == 0.0);
  CHECK(norm(a.ch.h22 - b.ch.h22) == 0.0);
  CHECK(a.tgt.e1 == b.tgt.e1);
  const auto c = random_instance(43, 3, ScaleProfile::interference_limited);
  CHECK(norm(a.ch.h11 - c.ch.h11) > 0.0);

  CHECK(profile_noise(ScaleProfile::noise_limited) == 0.1);
  CHECK(profile_noise(ScaleProfile::interference_limited) == 0.001);
  CHECK(a.ch.sigma1_sq == 0.001);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto r = random_instance(seed, 2, ScaleProfile::noise_limited);
    CHECK(r.feasibility_factor > 0.0);
    CHECK(r.feasibility_factor < 1.0);
    CHECK(feasible_tdma_b(r.ch, r.budget, r.tgt));
    const double lhs = r.tgt.e1 / max_energy_1(r.ch, r.budget) +
                       r.tgt.e2 / max_energy_2(r.ch, r.budget);
    CHECK(lhs == doctest::Approx(r.feasibility_factor).epsilon(1e-12));
  }
}

TEST_CASE("uniform stream statistics") {
  double sum = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = uniform_at(9, static_cast<std::uint64_t>(i));
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02));
}
