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

#include "trispin/sequence_json.hpp"

namespace trispin::sequences {

using nlohmann::json;
using nlohmann::ordered_json;
using opalg::Axis;

namespace {

std::string axis_name(Axis a) { return std::string(1, opalg::axis_char(a)); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw FormatError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_number()) throw FormatError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

int integer(const json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_number_integer())
    throw FormatError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Axis axis(const json& obj, const char* key, bool allow_z) {
  const auto& v = field(obj, key);
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.size() == 1) {
      auto a = opalg::parse_axis(s[0]);
      if (a && (allow_z || *a != Axis::z)) return *a;
    }
  }
  throw FormatError(std::string("field '") + key + "' must be " +
                    (allow_z ? "\"x\", \"y\" or \"z\"" : "\"x\" or \"y\""));
}

PulseEvent event_from_json(const json& e) {
  const auto& type = field(e, "type");
  if (!type.is_string()) throw FormatError("event 'type' must be a string");
  const auto t = type.get<std::string>();
  if (t == "hard") {
    return HardPulse{integer(e, "spin"), axis(e, "axis", true), number(e, "angle")};
  }
  if (t == "delay") {
    Delay d{number(e, "duration"), {}};
    const auto& pairs = field(e, "off_pairs");
    if (!pairs.is_array()) throw FormatError("'off_pairs' must be an array");
    for (const auto& p : pairs) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
          !p[1].is_number_integer())
        throw FormatError("'off_pairs' entries must be [int, int]");
      d.off_pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return d;
  }
  if (t == "shaped") {
    ShapedEvolution s{number(e, "duration"), {}};
    const auto& rf = field(e, "rf");
    if (!rf.is_array()) throw FormatError("'rf' must be an array");
    for (const auto& f : rf)
      s.rf.push_back({integer(f, "spin"), axis(f, "axis", false), number(f, "amp_hz")});
    return s;
  }
  throw FormatError("unknown event type '" + t + "'");
}

}  // namespace

ordered_json to_json(const PulseSequence& seq) {
  ordered_json events = ordered_json::array();
  for (const auto& event : seq.events) {
    ordered_json e;
    if (const auto* p = std::get_if<HardPulse>(&event)) {
      e["type"] = "hard";
      e["spin"] = p->spin;
      e["axis"] = axis_name(p->axis);
      e["angle"] = p->angle;
    } else if (const auto* d = std::get_if<Delay>(&event)) {
      e["type"] = "delay";
      e["duration"] = d->duration;
      e["off_pairs"] = ordered_json::array();
      for (const auto& [i, j] : d->off_pairs) e["off_pairs"].push_back({i, j});
    } else {
      const auto& s = std::get<ShapedEvolution>(event);
      e["type"] = "shaped";
      e["duration"] = s.duration;
      e["rf"] = ordered_json::array();
      for (const auto& f : s.rf)
        e["rf"].push_back(ordered_json{{"spin", f.spin},
                                       {"axis", axis_name(f.axis)},
                                       {"amp_hz", f.amplitude_hz}});
    }
    events.push_back(std::move(e));
  }
  ordered_json out;
  out["n"] = seq.n;
  out["label"] = seq.label;
  out["events"] = std::move(events);
  return out;
}

PulseSequence sequence_from_json(const json& j) {
  PulseSequence seq;
  seq.n = integer(j, "n");
  const auto& label = field(j, "label");
  if (!label.is_string()) throw FormatError("'label' must be a string");
  seq.label = label.get<std::string>();
  const auto& events = field(j, "events");
  if (!events.is_array()) throw FormatError("'events' must be an array");
  for (const auto& e : events) seq.events.push_back(event_from_json(e));
  try {
    seq.validate();
  } catch (const std::exception& err) {
    throw FormatError(std::string("invalid sequence: ") + err.what());
  }
  return seq;
}

std::string dump_sequence(const PulseSequence& seq, int indent) {
  return to_json(seq).dump(indent);
}

PulseSequence parse_sequence(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::exception& err) {
    throw FormatError(std::string("malformed JSON: ") + err.what());
  }
  return sequence_from_json(j);
}

}  // namespace trispin::sequences
