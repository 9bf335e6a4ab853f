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

// Instance files: a JSON object with nt, h11, h12, h21, h22 (lists of
// [re, im] pairs), sigma1_sq, sigma2_sq, p1, p2 and optional gamma, delta.

#pragma once

#include <filesystem>
#include <string>

#include "swipt/system_model.hpp"

namespace swipt {

struct Instance {
  ChannelSet ch;
  PowerBudget budget;
  double gamma = 1.0;
  double delta = 1.0;

  EnergyTarget target(double e1, double e2) const { return {e1, e2, gamma, delta}; }
};

/// Throws ParseError naming the line and field of the first problem.
Instance parse_instance(const std::string& text);

/// Throws IoError when the file cannot be read, ParseError otherwise.
Instance load_instance(const std::filesystem::path& path);

/// Round-trips through parse_instance exactly (17 significant digits).
std::string format_instance(const Instance& inst);

}  // namespace swipt
