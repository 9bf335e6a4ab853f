#include <cmath>
#include <string>

#include "doctest.h"
#include "swipt/errors.hpp"
#include "swipt/instance_io.hpp"
#include "test_support.hpp"

using namespace swipt;

namespace {

const char* kGood = R"({
  "nt": 2,
  "h11": [[1, 0], [0, 0]],
  "h12": [[0, 0], [1, 0]],
  "h21": [[0.5, 0.5], [0, 0]],
  "h22": [[0, 0], [0.2, -0.1]],
  "sigma1_sq": 0.1,
  "sigma2_sq": 0.2,
  "p1": 1,
  "p2": 2,
  "gamma": 0.5
})";

std::size_t parse_error_line(const std::string& text, std::string* field = nullptr) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    if (field) *field = e.field();
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("bundled realizations reproduce the reference norms") {
  const Instance r1 = testing::realization(1);
  CHECK(std::abs(norm(r1.ch.h11) - 0.5464) < 5e-5);
  CHECK(std::abs(norm(r1.ch.h12) - 0.9925) < 5e-5);
  CHECK(std::abs(norm(r1.ch.h21) - 0.6765) < 5e-5);
  CHECK(std::abs(norm(r1.ch.h22) - 0.6865) < 5e-5);
  CHECK(r1.ch.sigma1_sq == 0.1);
  const Instance r2 = testing::realization(2);
  CHECK(std::abs(norm(r2.ch.h12) - 1.2156) < 5e-5);
  CHECK(std::abs(norm(r2.ch.h21) - 0.8286) < 5e-5);
  CHECK(r2.ch.sigma2_sq == 0.001);
  CHECK(norm(r1.ch.h11 - r2.ch.h11) == 0.0);
  CHECK(norm(r1.ch.h22 - r2.ch.h22) == 0.0);
}

TEST_CASE("parse fields and defaults") {
  const Instance inst = parse_instance(kGood);
  CHECK(inst.ch.nt == 2);
  CHECK(inst.ch.h21[0] == Complex(0.5, 0.5));
  CHECK(inst.budget.p2 == 2.0);
  CHECK(inst.gamma == 0.5);
  CHECK(inst.delta == 1.0);
  CHECK(inst.target(0.1, 0.2).effective_e1() == doctest::Approx(0.2));
}

TEST_CASE("format round trip is exact") {
  const Instance a = testing::realization(2);
  const Instance b = parse_instance(format_instance(a));
  CHECK(norm(a.ch.h12 - b.ch.h12) == 0.0);
  CHECK(a.ch.sigma1_sq == b.ch.sigma1_sq);
  CHECK(a.budget.p1 == b.budget.p1);
}

TEST_CASE("diagnostics name the line and field") {
  std::string text = kGood;
  std::string field;

  std::string bad = text;
  bad.replace(bad.find("[0.5, 0.5]"), 10, "[0.5]");
  CHECK(parse_error_line(bad, &field) == 5);
  CHECK(field == "h21");

  bad = text;
  bad.replace(bad.find("\"sigma2_sq\": 0.2"), 16, "\"sigma2_sq\": -1");
  CHECK(parse_error_line(bad, &field) == 8);
  CHECK(field == "sigma2_sq");

  bad = text;
  bad.replace(bad.find("\"p2\": 2,\n"), 9, "");
  CHECK(parse_error_line(bad, &field) == 0);
  CHECK(field == "p2");

  bad = text;
  bad.replace(bad.find("\"nt\": 2"), 7, "\"nt\": 3");
  parse_error_line(bad, &field);
  CHECK(field == "h11");

  bad = text;
  bad.replace(bad.find("\"gamma\""), 7, "\"gamna\"");
  CHECK(parse_error_line(bad, &field) == 11);
  CHECK(field == "gamna");

  // Syntax error on line 4 (missing comma at the end of line 3).
  bad = text;
  bad.replace(bad.find("[0, 0]],\n  \"h12\""), 8, "[0, 0]]");
  CHECK(parse_error_line(bad) == 4);

  CHECK(parse_error_line("[1, 2]") == 1);
  bad = text;
  bad.replace(bad.find("[[1, 0], [0, 0]]"), 16, "[[0, 0], [0, 0]]");
  parse_error_line(bad, &field);
  CHECK(field == "h11");
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.json"), IoError);
}
