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

#include "selftest.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "trispin/analysis.hpp"
#include "trispin/dynamics.hpp"
#include "trispin/opalg.hpp"
#include "trispin/sequences.hpp"
#include "trispin/verify.hpp"

namespace trispin::cli {

namespace {

using opalg::Axis;

class Suite {
 public:
  explicit Suite(std::optional<double> tol_override) : override_(tol_override) {}

  void add(std::string name, double value, double tolerance) {
    const double tol = override_.value_or(tolerance);
    checks_.push_back({std::move(name), value, tol, std::isfinite(value) && value <= tol, {}});
  }

  // Runs body; an exception becomes a failed check named after the group.
  void group(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      checks_.push_back({name, NAN, override_.value_or(0.0), false, e.what()});
    }
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::optional<double> override_;
  std::vector<Check> checks_;
};

std::string angle_tag(double theta) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", theta / kPi);
  return std::string("theta=") + buf + "pi";
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

void algebra_checks(Suite& s) {
  s.group("opalg.cyclic", [&] {
    double worst = 0.0;
    const Axis cyc[3][3] = {{Axis::x, Axis::y, Axis::z},
                            {Axis::y, Axis::z, Axis::x},
                            {Axis::z, Axis::x, Axis::y}};
    for (int k = 1; k <= 3; ++k)
      for (const auto& c : cyc) {
        const auto lhs = opalg::commutator(opalg::embed(c[0], k, 3), opalg::embed(c[1], k, 3));
        worst = std::max(worst, max_abs(lhs - kI * opalg::embed(c[2], k, 3)));
      }
    s.add("opalg.cyclic", worst, 1e-14);
  });
  s.group("opalg.squares", [&] {
    double worst = 0.0;
    for (Axis a : {Axis::x, Axis::y, Axis::z}) {
      const auto p = opalg::pauli(a);
      worst = std::max(worst, max_abs(p * p - 0.25 * ComplexMatrix::Identity(2, 2)));
    }
    s.add("opalg.squares", worst, 1e-14);
  });
  for (int n : {2, 3}) {
    const std::string name = "opalg.orthogonality_n" + std::to_string(n);
    s.group(name, [&] {
      std::vector<ComplexMatrix> mats;
      for (const auto& t : opalg::basis(n)) mats.push_back(opalg::realize(t));
      const double norm = std::ldexp(1.0, n - 2);
      double worst = 0.0;
      for (std::size_t r = 0; r < mats.size(); ++r)
        for (std::size_t q = 0; q < mats.size(); ++q) {
          const Complex tr = (mats[r] * mats[q]).trace();
          worst = std::max(worst, std::abs(tr - Complex(r == q ? norm : 0.0)));
        }
      s.add(name, worst, 1e-12);
    });
  }
  s.group("so3.generators", [&] {
    const auto& g = verify::geodesic_generators();
    for (const auto& r : verify::check_so3_relations(g.a, g.b, g.c, g.d))
      s.add("so3." + r.name, r.value, r.tolerance);
  });
}

void period_checks(Suite& s, unsigned long long seed) {
  s.group("period.battery", [&] {
    double worst = 0.0;
    for (const auto& alpha : verify::period_identity_vectors(20, seed))
      worst = std::max(worst, verify::check_period_identity(alpha));
    s.add("period.battery_20", worst, 1e-9);
  });
}

void commutator_checks(Suite& s) {
  s.group("commutators", [&] {
    const auto r = verify::check_listed_commutators();
    for (std::size_t i = 0; i < r.listed.size(); ++i)
      s.add("commutators.listed_" + std::to_string(i + 1), r.listed[i].residual, 1e-12);
    s.add("commutators.completing", r.completing.residual, 1e-12);
    for (const auto& [theta, res] : r.sandwich)
      s.add("commutators.sandwich_" + angle_tag(theta), res, 1e-9);
  });
}

void extremal_checks(Suite& s) {
  for (double theta : {kPi / 2, kTwoPi}) {
    const std::string base = "extremal." + angle_tag(theta);
    s.group(base, [&] {
      const auto r = verify::check_extremal(theta, 1.0, 10000);
      s.add(base + ".costate", r.costate_residual, 1e-5);
      s.add(base + ".trajectory", r.trajectory_residual, 1e-5);
      s.add(base + ".control_law", r.control_law_residual, 1e-10 * kTwoPi);
      s.add(base + ".endpoint", 1.0 - r.endpoint_fidelity, 1e-9);
      s.add(base + ".coset", 1.0 - r.coset_fidelity, 1e-9);
    });
  }
}

void builder_checks(Suite& s) {
  constexpr double j = 1.0;
  const auto sys = sequences::canonical_system(j);
  const sequences::Axes zzz{Axis::z, Axis::z, Axis::z};
  auto infidelity = [&](const sequences::PulseSequence& seq, const ComplexMatrix& target) {
    return 1.0 - dynamics::fidelity(dynamics::evolve(seq, sys).matrix, target);
  };

  for (double theta : {kPi / 2, kPi, kTwoPi, 3 * kPi, 4 * kPi}) {
    const std::string base = "geodesic." + angle_tag(theta);
    s.group(base, [&] {
      const auto seq = sequences::build_geodesic(theta, j);
      s.add(base + ".fidelity", infidelity(seq, sequences::trilinear_target(theta, zzz)), 1e-9);
      s.add(base + ".duration", relative_gap(seq.duration(), analysis::t_star(theta, j)), 1e-12);
    });
  }
  for (double theta : {kPi / 2, kTwoPi}) {
    const double kappa = theta / kTwoPi;
    const auto target = sequences::trilinear_target(theta, zzz);
    const std::string tag = angle_tag(theta);
    s.group("conventional." + tag, [&] {
      const auto seq = sequences::build_conventional(theta, j);
      s.add("conventional." + tag + ".fidelity", infidelity(seq, target), 1e-9);
      s.add("conventional." + tag + ".duration",
            relative_gap(seq.duration(), analysis::t_conventional(kappa, j)), 1e-12);
      const auto refocused = sequences::expand_refocusing(seq, sys);
      s.add("conventional." + tag + ".refocused", infidelity(refocused, target), 1e-9);
    });
    s.group("improved." + tag, [&] {
      const auto seq = sequences::build_improved(theta, j);
      s.add("improved." + tag + ".fidelity", infidelity(seq, target), 1e-9);
      s.add("improved." + tag + ".duration",
            relative_gap(seq.duration(), analysis::t_improved(kappa, j)), 1e-12);
    });
  }
  for (const char* axes : {"xyz", "xzx", "yzy", "zxy"}) {
    const std::string name = std::string("trilinear_") + axes + "." + angle_tag(kPi);
    s.group(name, [&] {
      const auto ax = sequences::parse_axes(axes);
      const auto seq = sequences::build_trilinear(kPi, j, ax);
      s.add(name, infidelity(seq, sequences::trilinear_target(kPi, ax)), 1e-9);
    });
  }
  s.group("vf", [&] {
    const auto seq = sequences::build_vf(j);
    const auto u = dynamics::evolve(seq, sys).matrix;
    s.add("vf.fidelity", 1.0 - dynamics::fidelity(u, sequences::vf_target()), 1e-9);
    for (const auto& r : verify::check_coherence_transfer(u).residuals)
      s.add("vf." + r.name, r.value, r.tolerance);
  });
}

void gate_checks(Suite& s, unsigned long long seed) {
  const auto sys = sequences::canonical_system(1.0);
  s.group("swap13", [&] {
    const auto u = dynamics::evolve(sequences::build_swap13(1.0), sys).matrix;
    for (const auto& r : verify::check_swap(u, seed).residuals)
      s.add("swap13." + r.name, r.value, r.tolerance);
  });
  s.group("lambda2", [&] {
    const auto u = dynamics::expm(sequences::lambda2_hamiltonian(), 1.0).matrix;
    s.add("lambda2.diagonal", max_abs(u - sequences::lambda2_target()), 1e-12);
  });
  s.group("decoupling", [&] {
    s.add("decoupling.chain3_spin3",
          verify::check_decoupling_identity(sys, 3, 0.5), 1e-9);
    s.add("decoupling.chain3_spin1",
          verify::check_decoupling_identity(sys, 1, 0.5), 1e-9);
    s.add("decoupling.chain4_spin2",
          verify::check_decoupling_identity(dynamics::SpinSystem::chain(4, 1.0), 2, 0.3),
          1e-9);
  });
  s.group("table1", [&] {
    const auto rows = analysis::duration_table(1.0, 1.0);
    s.add("table1.builder_durations",
          analysis::table_builder_discrepancy(rows, 1.0, 1.0), 1e-12);
  });
}

}  // namespace

std::vector<Check> run_selftest(unsigned long long seed,
                                std::optional<double> tol_override) {
  Suite s(tol_override);
  algebra_checks(s);
  period_checks(s, seed);
  commutator_checks(s);
  extremal_checks(s);
  builder_checks(s);
  gate_checks(s, seed);
  return s.take();
}

std::string format_selftest(const std::vector<Check>& checks,
                            unsigned long long seed) {
  std::string out;
  std::size_t passed = 0;
  char buf[256];
  for (const auto& c : checks) {
    if (c.passed) ++passed;
    if (c.error.empty()) {
      std::snprintf(buf, sizeof buf, "%s %-40s %.3e  tol %.1e\n",
                    c.passed ? "PASS" : "FAIL", c.name.c_str(), c.value, c.tolerance);
      out += buf;
    } else {
      out += "FAIL " + c.name + " error: " + c.error + "\n";
    }
  }
  std::snprintf(buf, sizeof buf, "selftest: %zu/%zu checks passed (seed %llu)\n",
                passed, checks.size(), seed);
  out += buf;
  return out;
}

}  // namespace trispin::cli
