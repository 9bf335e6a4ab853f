#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "swipt/errors.hpp"
#include "swipt/sweep.hpp"
#include "test_support.hpp"

using namespace swipt;

namespace {

SolveOptions fast() {
  SolveOptions o;
  o.ctrl.grid_points = 16;
  o.alpha_steps = 11;
  return o;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string l;
  while (std::getline(ss, l)) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("scheme names") {
  CHECK(scheme_name(Scheme::tdma_b) == "tdma-b");
  CHECK(parse_scheme("tdma-a") == Scheme::tdma_a);
  CHECK_THROWS_AS(parse_scheme("tdma-c"), InstanceError);
  const auto list = parse_scheme_list("tdma-b,ideal,tdma-b");
  REQUIRE(list.size() == 2);
  CHECK(list[0] == Scheme::ideal);
  CHECK(list[1] == Scheme::tdma_b);
}

TEST_CASE("row-count and ordering contract") {
  const Instance inst = testing::realization(1);
  const SweepSpec spec{0.3, 0.4, 2, {Scheme::tdma_a}};
  const auto rows = run_sweep(inst, spec, fast(), 1);
  std::ostringstream csv;
  write_csv(csv, rows);
  const auto ls = lines(csv.str());
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == kCsvHeader);
  CHECK(ls[1].rfind("0,0,tdma-a,1,", 0) == 0);
  CHECK(ls[2].rfind("0,0.4,tdma-a,", 0) == 0);
  CHECK(ls[3].rfind("0.3,0,tdma-a,", 0) == 0);
  CHECK(csv.str().back() == '\n');
}

TEST_CASE("rows are time-weighted and re-evaluate from covariances") {
  const Instance inst = testing::realization(2);
  const SweepSpec spec = default_sweep(inst, 3, {Scheme::ideal, Scheme::tdma_a, Scheme::tdma_b});
  const auto rows = run_sweep(inst, spec, fast(), 2);
  REQUIRE(rows.size() == 27);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    CHECK(r.scheme == static_cast<Scheme>(i % 3));
    if (!r.feasible) continue;
    CHECK(r.sum_rate == doctest::Approx(r.r1 + r.r2).epsilon(1e-12));
    CHECK(std::abs(reevaluate_sum_rate(r, inst.ch) - r.sum_rate) < 1e-9);
    CHECK(r.energy1 >= r.e1 - 1e-6);
    CHECK(r.energy2 >= r.e2 - 1e-6);
  }
}

TEST_CASE("infeasible rows leave numeric fields empty") {
  const Instance inst = testing::realization(1);
  SchemeResult r;
  r.scheme = Scheme::ideal;
  r.e1 = 10.0;
  r.e2 = 0.5;
  std::ostringstream csv;
  write_csv(csv, {r});
  CHECK(lines(csv.str())[1] == "10,0.5,ideal,0,,,,,,,");
  const SchemeResult s = solve_scheme(Scheme::tdma_b, inst, 10.0, 0.0, fast());
  CHECK_FALSE(s.feasible);
}

TEST_CASE("thread count does not change output") {
  const Instance inst = testing::realization(1);
  const SweepSpec spec = default_sweep(inst, 3, {Scheme::ideal, Scheme::tdma_b});
  std::ostringstream a, b;
  write_csv(a, run_sweep(inst, spec, fast(), 1));
  write_csv(b, run_sweep(inst, spec, fast(), 3));
  CHECK(a.str() == b.str());
}

TEST_CASE("solutions document carries every slot") {
  const Instance inst = testing::realization(1);
  const auto rows = run_sweep(inst, {0.2, 0.2, 2, {Scheme::tdma_a, Scheme::tdma_b}}, fast(), 1);
  const auto doc = nlohmann::json::parse(solutions_json(rows));
  REQUIRE(doc.size() == rows.size());
  CHECK(doc[0]["slots"].size() == 2);
  CHECK(doc[0]["slots"][1]["s1"].size() == 2);
}

TEST_CASE("compare report") {
  std::vector<SchemeResult> rows(4);
  rows[0] = {Scheme::tdma_a, 0, 0, true, 0.0, 2.0};
  rows[1] = {Scheme::tdma_b, 0, 0, true, 0.5, 1.0};
  rows[2] = {Scheme::tdma_a, 1, 0, true, 0.5, 1.0};
  rows[3] = {Scheme::tdma_b, 1, 0, true, 0.5, 1.5};
  const CompareReport rep = compare_schemes(rows, {Scheme::tdma_a, Scheme::tdma_b});
  REQUIRE(rep.cells.size() == 2);
  CHECK(rep.cells[0].winners == std::vector<Scheme>{Scheme::tdma_a});
  CHECK(rep.cells[1].winners == std::vector<Scheme>{Scheme::tdma_b});
  CHECK(rep.wins[0][1] == 1);
  CHECK(rep.wins[1][0] == 1);
  CHECK(rep.non_dominance);

  rows[3].sum_rate = 0.5;
  const CompareReport dom = compare_schemes(rows, {Scheme::tdma_a, Scheme::tdma_b});
  CHECK_FALSE(dom.non_dominance);
  std::ostringstream out;
  print_compare(out, dom);
  CHECK(out.str().find("verdict: dominance") != std::string::npos);

  // Infeasible cells count for the table but not for pairwise wins.
  rows[2].feasible = false;
  const CompareReport inf = compare_schemes(rows, {Scheme::tdma_a, Scheme::tdma_b});
  CHECK(inf.cells[1].winners == std::vector<Scheme>{Scheme::tdma_b});
  CHECK(inf.wins[1][0] == 0);
}

TEST_CASE("sweep spec validation") {
  CHECK_THROWS_AS((SweepSpec{1.0, 1.0, 1, {Scheme::ideal}}.validate()), InstanceError);
  CHECK_THROWS_AS((SweepSpec{1.0, 1.0, 2, {}}.validate()), InstanceError);
  CHECK_THROWS_AS((SweepSpec{-1.0, 1.0, 2, {Scheme::ideal}}.validate()), InstanceError);
}
