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

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "trispin/spin_system.hpp"

namespace trispin::sequences {

using SpinPair = std::pair<int, int>;

/// Ideal zero-duration rotation exp(-i angle I_{spin,axis}).
struct HardPulse {
  int spin = 1;
  opalg::Axis axis = opalg::Axis::x;  // x, y or z
  double angle = 0.0;                 // rad

  bool operator==(const HardPulse&) const = default;
};

/// Free evolution under the drift. Pairs listed in off_pairs are treated as
/// ideally decoupled; expand_refocusing() turns them into pi-pulse sandwiches.
struct Delay {
  double duration = 0.0;  // s
  std::vector<SpinPair> off_pairs;

  bool operator==(const Delay&) const = default;
};

/// Drift plus constant rf fields for a fixed duration.
struct ShapedEvolution {
  double duration = 0.0;  // s
  std::vector<dynamics::RfField> rf;

  bool operator==(const ShapedEvolution&) const = default;
};

using PulseEvent = std::variant<HardPulse, Delay, ShapedEvolution>;

double event_duration(const PulseEvent& event);

/// Events in time order; evolve() multiplies later events on the left.
struct PulseSequence {
  int n = 3;
  std::string label;
  std::vector<PulseEvent> events;
  /// Construction notes (resolved signs etc.). Not serialized.
  std::map<std::string, std::string> metadata;

  double duration() const;

  /// Throws IndexError if an event references a spin outside [1, n] and
  /// ContractViolation for negative durations or a z-axis rf field.
  void validate() const;
};

/// Events of a followed by events of b; labels joined with '+'.
PulseSequence concat(const PulseSequence& a, const PulseSequence& b);

}  // namespace trispin::sequences
