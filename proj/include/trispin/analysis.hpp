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
#include <vector>

namespace trispin::analysis {

/// Minimum time for exp(-i theta I1zI2zI3z):
///   sqrt(2 pi theta - (theta/2)^2) / (2 pi J) = sqrt(kappa (4 - kappa)) / 2J.
/// Evaluates both forms and throws std::logic_error if they disagree beyond
/// 1e-12 relative. Uses |theta| and |J|; |theta| > 4pi or J == 0 throws
/// ContractViolation.
double t_star(double theta, double j_hz);

double t_conventional(double kappa, double j_hz);  // (2 + kappa) / 2J
double t_improved(double kappa, double j_hz);      // (1 + kappa) / 2J
double t_optimal(double kappa, double j_hz);       // sqrt(kappa(4 - kappa)) / 2J

struct DurationRow {
  std::string label;
  double tau_conventional_s = 0.0;
  double tau_geodesic_s = 0.0;
  double ratio = 0.0;  // tau_geodesic / tau_conventional
};

/// The four comparison rows: generic kappa, kappa = 1 trilinear, swap(1,3)
/// and I1- -> I3- transfer. Throws ContractViolation unless J > 0.
std::vector<DurationRow> duration_table(double j_hz, double kappa = 1.0);

/// Largest relative gap between each row's geodesic duration and the
/// duration accounted by the corresponding sequence builder (plus the
/// conventional builder for the trilinear rows).
double table_builder_discrepancy(const std::vector<DurationRow>& rows,
                                 double j_hz, double kappa);

struct SweepRow {
  double kappa = 0.0;
  double t_conventional = 0.0;
  double t_improved = 0.0;
  double t_optimal = 0.0;
};

/// n_points evenly spaced kappa values from kappa_min to kappa_max inclusive,
/// ascending. Requires 0 <= kappa_min < kappa_max <= 2, n_points >= 2, J > 0.
std::vector<SweepRow> sweep(double kappa_min, double kappa_max, int n_points,
                            double j_hz);

/// Header `kappa,t_conventional,t_improved,t_optimal`, 17 significant digits,
/// '.' decimal point regardless of locale, '\n' line endings.
std::string to_csv(const std::vector<SweepRow>& rows);

/// Locale-independent rendering with 17 significant digits (round-trips).
std::string format_double(double v);

}  // namespace trispin::analysis
