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

#include "swipt/instance_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "swipt/errors.hpp"

namespace swipt {

namespace {

using nlohmann::json;

constexpr std::array<const char*, 11> kFields = {"nt", "h11", "h12", "h21", "h22", "sigma1_sq",
                                                 "sigma2_sq", "p1", "p2", "gamma", "delta"};

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// nlohmann::json keeps no source positions, so a field's line is that of
// its first quoted key.
std::size_t line_of_field(const std::string& text, const std::string& field) {
  const auto pos = text.find('"' + field + '"');
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

class Reader {
 public:
  Reader(const std::string& text, const json& root) : text_(text), root_(root) {}

  [[noreturn]] void fail(const std::string& field, const std::string& msg) const {
    const std::size_t line = line_of_field(text_, field);
    std::string what = "field '" + field + "'";
    if (line > 0) what = "line " + std::to_string(line) + ", " + what;
    throw ParseError(what + ": " + msg, line, field);
  }

  const json& get(const std::string& field) const {
    const auto it = root_.find(field);
    if (it == root_.end()) fail(field, "missing required field");
    return *it;
  }

  double positive(const std::string& field) const {
    const json& v = get(field);
    if (!v.is_number()) fail(field, "expected a number");
    const double x = v.get<double>();
    if (!(x > 0.0) || !std::isfinite(x)) fail(field, "expected a positive finite number");
    return x;
  }

  double optional_positive(const std::string& field, double fallback) const {
    return root_.contains(field) ? positive(field) : fallback;
  }

  CVector channel(const std::string& field, std::size_t nt) const {
    const json& v = get(field);
    if (!v.is_array()) fail(field, "expected a list of [re, im] pairs");
    if (v.size() != nt)
      fail(field, "expected " + std::to_string(nt) + " entries, got " + std::to_string(v.size()));
    CVector out(nt);
    for (std::size_t i = 0; i < nt; ++i) {
      const json& e = v[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        fail(field, "entry " + std::to_string(i) + " is not an [re, im] pair");
      const double re = e[0].get<double>(), im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        fail(field, "entry " + std::to_string(i) + " is not finite");
      out[i] = {re, im};
    }
    return out;
  }

 private:
  const std::string& text_;
  const json& root_;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t line = line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")", line,
                     "");
  }
  if (!root.is_object()) throw ParseError("line 1: instance must be a JSON object", 1, "");
  const Reader r(text, root);
  for (const auto& [key, value] : root.items()) {
    if (std::find(kFields.begin(), kFields.end(), key) == kFields.end())
      r.fail(key, "unknown field");
  }

  const json& nt_v = r.get("nt");
  if (!nt_v.is_number_integer() || nt_v.get<long long>() < 1)
    r.fail("nt", "expected a positive integer");

  Instance inst;
  const auto nt = static_cast<std::size_t>(nt_v.get<long long>());
  inst.ch.nt = nt;
  inst.ch.h11 = r.channel("h11", nt);
  inst.ch.h12 = r.channel("h12", nt);
  inst.ch.h21 = r.channel("h21", nt);
  inst.ch.h22 = r.channel("h22", nt);
  inst.ch.sigma1_sq = r.positive("sigma1_sq");
  inst.ch.sigma2_sq = r.positive("sigma2_sq");
  inst.budget.p1 = r.positive("p1");
  inst.budget.p2 = r.positive("p2");
  inst.gamma = r.optional_positive("gamma", 1.0);
  inst.delta = r.optional_positive("delta", 1.0);
  const std::pair<const char*, const CVector*> channels[] = {
      {"h11", &inst.ch.h11}, {"h12", &inst.ch.h12}, {"h21", &inst.ch.h21}, {"h22", &inst.ch.h22}};
  for (const auto& [field, h] : channels)
    if (norm(*h) == 0.0) r.fail(field, "channel must be nonzero");
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open instance file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read instance file '" + path.string() + "'");
  return parse_instance(ss.str());
}

std::string format_instance(const Instance& inst) {
  std::string out = "{\n  \"nt\": " + std::to_string(inst.ch.nt) + ",\n";
  auto channel = [&](const char* name, const CVector& h) {
    out += std::string("  \"") + name + "\": [";
    for (std::size_t i = 0; i < h.dim(); ++i) {
      if (i) out += ", ";
      out += "[" + num(h[i].real()) + ", " + num(h[i].imag()) + "]";
    }
    out += "],\n";
  };
  channel("h11", inst.ch.h11);
  channel("h12", inst.ch.h12);
  channel("h21", inst.ch.h21);
  channel("h22", inst.ch.h22);
  out += "  \"sigma1_sq\": " + num(inst.ch.sigma1_sq) + ",\n";
  out += "  \"sigma2_sq\": " + num(inst.ch.sigma2_sq) + ",\n";
  out += "  \"p1\": " + num(inst.budget.p1) + ",\n";
  out += "  \"p2\": " + num(inst.budget.p2) + ",\n";
  out += "  \"gamma\": " + num(inst.gamma) + ",\n";
  out += "  \"delta\": " + num(inst.delta) + "\n}\n";
  return out;
}

}  // namespace swipt
