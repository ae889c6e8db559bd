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

#include "trispin/pulse_sequence.hpp"

#include <cmath>
#include <string>

namespace trispin::sequences {

using opalg::Axis;

double event_duration(const PulseEvent& event) {
  return std::visit(
      [](const auto& e) -> double {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, HardPulse>)
          return 0.0;
        else
          return e.duration;
      },
      event);
}

double PulseSequence::duration() const {
  double total = 0.0;
  for (const auto& e : events) total += event_duration(e);
  return total;
}

void PulseSequence::validate() const {
  if (n < 1) throw ContractViolation("PulseSequence: n must be >= 1");
  auto check_spin = [&](int k, const char* what) {
    if (k < 1 || k > n)
      throw IndexError(std::string(what) + ": spin " + std::to_string(k) +
                       " outside [1, " + std::to_string(n) + "]");
  };
  auto check_duration = [](double d) {
    if (!(d >= 0.0) || !std::isfinite(d))
      throw ContractViolation("PulseSequence: durations must be finite and >= 0");
  };
  for (const auto& event : events) {
    if (const auto* p = std::get_if<HardPulse>(&event)) {
      check_spin(p->spin, "hard pulse");
      if (p->axis == Axis::identity)
        throw ContractViolation("hard pulse: axis must be x, y or z");
      if (!std::isfinite(p->angle))
        throw ContractViolation("hard pulse: angle must be finite");
    } else if (const auto* d = std::get_if<Delay>(&event)) {
      check_duration(d->duration);
      for (const auto& [i, j] : d->off_pairs) {
        check_spin(i, "delay");
        check_spin(j, "delay");
        if (i == j) throw ContractViolation("delay: off pair must join two spins");
      }
    } else {
      const auto& s = std::get<ShapedEvolution>(event);
      check_duration(s.duration);
      for (const auto& f : s.rf) {
        check_spin(f.spin, "shaped evolution");
        if (f.axis != Axis::x && f.axis != Axis::y)
          throw ContractViolation("shaped evolution: rf phase must be x or y");
        if (!std::isfinite(f.amplitude_hz))
          throw ContractViolation("shaped evolution: rf amplitude not finite");
      }
    }
  }
}

PulseSequence concat(const PulseSequence& a, const PulseSequence& b) {
  if (a.n != b.n)
    throw DimensionMismatch("concat: sequences act on different spin counts");
  PulseSequence out{a.n, a.label + "+" + b.label, a.events, a.metadata};
  out.events.insert(out.events.end(), b.events.begin(), b.events.end());
  for (const auto& [k, v] : b.metadata) out.metadata.emplace(k, v);
  return out;
}

}  // namespace trispin::sequences
