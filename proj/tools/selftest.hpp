// Copyright 2026 The Trispin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trispin/core.hpp"

namespace trispin::cli {

struct Check {
  std::string name;
  double value = 0.0;      // residual or 1 - fidelity
  double tolerance = 0.0;
  bool passed = false;
  std::string error;       // set when the check threw
};

/// The invariant suite behind `trispin selftest`. With tol_override every
/// check compares against that tolerance instead of its own.
std::vector<Check> run_selftest(unsigned long long seed,
                                std::optional<double> tol_override = std::nullopt);

/// One line per check followed by a summary line. Depends only on the checks.
std::string format_selftest(const std::vector<Check>& checks,
                            unsigned long long seed);

}  // namespace trispin::cli
