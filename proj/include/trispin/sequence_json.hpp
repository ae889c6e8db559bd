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

#include <string>
#include <string_view>

#include "json.hpp"
#include "trispin/pulse_sequence.hpp"

// Wire format:
//   {"n":3,"label":str,"events":[
//     {"type":"hard","spin":int,"axis":"x|y|z","angle":float},
//     {"type":"delay","duration":float,"off_pairs":[[i,j],...]},
//     {"type":"shaped","duration":float,"rf":[{"spin":int,"axis":"x|y","amp_hz":float}]}]}
// Angles in rad, durations in s, amplitudes in Hz. Metadata is not carried.

namespace trispin::sequences {

nlohmann::ordered_json to_json(const PulseSequence& seq);

/// Throws FormatError on missing/mistyped fields or unknown event types.
/// The result is validate()d.
PulseSequence sequence_from_json(const nlohmann::json& j);

std::string dump_sequence(const PulseSequence& seq, int indent = 2);
PulseSequence parse_sequence(std::string_view text);

}  // namespace trispin::sequences
