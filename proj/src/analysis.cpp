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

#include "trispin/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "trispin/core.hpp"
#include "trispin/sequences.hpp"

namespace trispin::analysis {

namespace {

void require_positive_coupling(double j_hz, const char* who) {
  if (!std::isfinite(j_hz) || j_hz <= 0.0)
    throw ContractViolation(std::string(who) + ": J must be positive");
}

void require_kappa(double kappa, const char* who) {
  if (!std::isfinite(kappa) || kappa < 0.0 || kappa > 2.0)
    throw ContractViolation(std::string(who) + ": kappa outside [0, 2]");
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

double t_star(double theta, double j_hz) {
  if (!std::isfinite(theta) || std::abs(theta) > 4 * kPi)
    throw ContractViolation("t_star: |theta| must be <= 4pi");
  if (!std::isfinite(j_hz) || j_hz == 0.0)
    throw ContractViolation("t_star: J must be nonzero");
  const double th = std::abs(theta);
  const double j = std::abs(j_hz);
  const double kappa = th / kTwoPi;

  const double angular = std::sqrt(std::max(0.0, kTwoPi * th - (th / 2) * (th / 2))) /
                         (kTwoPi * j);
  const double reduced = std::sqrt(std::max(0.0, kappa * (4.0 - kappa))) / (2.0 * j);
  if (relative_gap(angular, reduced) > 1e-12)
    throw std::logic_error("t_star: closed forms disagree");
  return reduced;
}

double t_conventional(double kappa, double j_hz) {
  require_positive_coupling(j_hz, "t_conventional");
  require_kappa(kappa, "t_conventional");
  return (2.0 + kappa) / (2.0 * j_hz);
}

double t_improved(double kappa, double j_hz) {
  require_positive_coupling(j_hz, "t_improved");
  require_kappa(kappa, "t_improved");
  return (1.0 + kappa) / (2.0 * j_hz);
}

double t_optimal(double kappa, double j_hz) {
  require_positive_coupling(j_hz, "t_optimal");
  require_kappa(kappa, "t_optimal");
  return std::sqrt(kappa * (4.0 - kappa)) / (2.0 * j_hz);
}

std::vector<DurationRow> duration_table(double j_hz, double kappa) {
  require_positive_coupling(j_hz, "duration_table");
  require_kappa(kappa, "duration_table");
  const double sqrt3 = std::sqrt(3.0);
  auto row = [](std::string label, double conv, double geo) {
    return DurationRow{std::move(label), conv, geo, geo / conv};
  };
  return {
      row("exp(-i 2pi kappa I1aI2bI3c)", t_conventional(kappa, j_hz),
          t_star(kTwoPi * kappa, j_hz)),
      row("exp(-i 2pi I1aI2bI3c)", 3.0 / (2.0 * j_hz), sqrt3 / (2.0 * j_hz)),
      row("Swap(1,3)", 9.0 / (2.0 * j_hz), 3.0 * sqrt3 / (2.0 * j_hz)),
      row("I1- -> I3-", 3.0 / j_hz, 3.0 * sqrt3 / (2.0 * j_hz)),
  };
}

double table_builder_discrepancy(const std::vector<DurationRow>& rows,
                                 double j_hz, double kappa) {
  if (rows.size() != 4)
    throw ContractViolation("table_builder_discrepancy: expected four rows");
  using namespace sequences;
  const double theta = kTwoPi * kappa;
  const double built[4][2] = {
      {build_conventional(theta, j_hz).duration(),
       build_geodesic(theta, j_hz).duration()},
      {build_conventional(kTwoPi, j_hz).duration(),
       build_geodesic(kTwoPi, j_hz).duration()},
      {rows[2].tau_conventional_s, build_swap13(j_hz).duration()},
      {rows[3].tau_conventional_s, build_vf(j_hz).duration()},
  };
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    worst = std::max(worst, relative_gap(rows[i].tau_conventional_s, built[i][0]));
    worst = std::max(worst, relative_gap(rows[i].tau_geodesic_s, built[i][1]));
  }
  return worst;
}

std::vector<SweepRow> sweep(double kappa_min, double kappa_max, int n_points,
                            double j_hz) {
  require_positive_coupling(j_hz, "sweep");
  if (!(kappa_min >= 0.0 && kappa_min < kappa_max && kappa_max <= 2.0))
    throw ContractViolation("sweep: need 0 <= kappa_min < kappa_max <= 2");
  if (n_points < 2) throw ContractViolation("sweep: need at least two points");

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(n_points));
  const double span = kappa_max - kappa_min;
  for (int k = 0; k < n_points; ++k) {
    const double kappa =
        k + 1 == n_points ? kappa_max : kappa_min + span * k / (n_points - 1);
    rows.push_back({kappa, t_conventional(kappa, j_hz), t_improved(kappa, j_hz),
                    t_optimal(kappa, j_hz)});
  }
  return rows;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general, 17);
  return std::string(buf, end);
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "kappa,t_conventional,t_improved,t_optimal\n";
  for (const auto& r : rows) {
    out += format_double(r.kappa);
    out += ',';
    out += format_double(r.t_conventional);
    out += ',';
    out += format_double(r.t_improved);
    out += ',';
    out += format_double(r.t_optimal);
    out += '\n';
  }
  return out;
}

}  // namespace trispin::analysis
