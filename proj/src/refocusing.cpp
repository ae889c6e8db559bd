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

// Ideal decoupling -> explicit pi-pulse refocusing.
//
// All drift terms are diagonal and commute. A pi pulse about x on spin m
// sends I_mz to -I_mz and leaves other spins alone, so
//   pi_x(m) exp(-i H tau/2) pi_x(m) = -exp(-i H' tau/2)
// where H' flips the sign of every coupling touching m. Half a delay under H
// followed by half under H' cancels exactly those couplings.

#include <algorithm>
#include <set>
#include <string>

#include "trispin/sequences.hpp"

namespace trispin::sequences {

using opalg::Axis;

namespace {

SpinPair normalized(SpinPair p) {
  if (p.first > p.second) std::swap(p.first, p.second);
  return p;
}

int refocused_spin(const Delay& d, const dynamics::SpinSystem& sys) {
  std::set<SpinPair> omitted;
  for (const auto& p : d.off_pairs) {
    const auto q = normalized(p);
    if (sys.coupling(q.first, q.second) != 0.0) omitted.insert(q);
  }
  if (omitted.empty()) return 0;

  for (int m = 1; m <= sys.spins(); ++m) {
    std::set<SpinPair> touching;
    for (const auto& p : sys.coupled_pairs())
      if (p.first == m || p.second == m) touching.insert(p);
    if (touching != omitted) continue;
    if (sys.offset(m) != 0.0)
      throw UnsupportedPattern("expand_refocusing: spin " + std::to_string(m) +
                               " has a nonzero offset; a pi sandwich would "
                               "refocus it as well");
    return m;
  }
  throw UnsupportedPattern(
      "expand_refocusing: omitted couplings are not exactly the couplings of a "
      "single spin");
}

}  // namespace

PulseSequence expand_refocusing(const PulseSequence& seq,
                                const dynamics::SpinSystem& sys) {
  if (seq.n != sys.spins())
    throw DimensionMismatch("expand_refocusing: sequence and system differ in n");
  seq.validate();

  PulseSequence out{seq.n, seq.label, {}, seq.metadata};
  for (const auto& event : seq.events) {
    const auto* d = std::get_if<Delay>(&event);
    if (d == nullptr || d->off_pairs.empty()) {
      out.events.push_back(event);
      continue;
    }
    const int m = refocused_spin(*d, sys);
    if (m == 0) {
      // Only zero couplings were listed; the ideal delay is already physical.
      out.events.push_back(Delay{d->duration, {}});
      continue;
    }
    const double half = d->duration / 2;
    out.events.push_back(Delay{half, {}});
    out.events.push_back(HardPulse{m, Axis::x, kPi});
    out.events.push_back(Delay{half, {}});
    out.events.push_back(HardPulse{m, Axis::x, kPi});
  }
  return out;
}

}  // namespace trispin::sequences
