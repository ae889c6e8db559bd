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

#include "trispin/sequences.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace trispin::sequences {

using dynamics::RfField;
using opalg::Axis;

namespace {

constexpr double kHalfPi = kPi / 2;

void require_theta(double theta, const char* who) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > 4 * kPi) {
    std::ostringstream msg;
    msg << who << ": theta = " << theta << " outside [0, 4pi]";
    throw ContractViolation(msg.str());
  }
}

void require_coupling(double j_hz, const char* who) {
  if (!std::isfinite(j_hz) || j_hz <= 0.0)
    throw ContractViolation(std::string(who) + ": J must be positive");
}

std::string fmt_label(const char* name, double theta, double j_hz) {
  std::ostringstream out;
  out.precision(17);
  out << name << "(theta=" << theta << ",J=" << j_hz << ")";
  return out.str();
}

HardPulse pulse(int spin, Axis axis, double angle) { return {spin, axis, angle}; }

// R D R^dagger in time order: R^dagger, body, R.
void append_conjugated(std::vector<PulseEvent>& events, const HardPulse& r,
                       PulseEvent body) {
  events.push_back(pulse(r.spin, r.axis, -r.angle));
  events.push_back(std::move(body));
  events.push_back(r);
}

// Rotation R with R I_kz R^dagger = I_k,axis.
std::optional<HardPulse> z_to_axis(int spin, Axis axis) {
  switch (axis) {
    case Axis::x: return pulse(spin, Axis::y, kHalfPi);
    case Axis::y: return pulse(spin, Axis::x, -kHalfPi);
    case Axis::z: return std::nullopt;
    case Axis::identity: break;
  }
  throw ContractViolation("trilinear axes must be x, y or z");
}

std::vector<PulseEvent> geodesic_events(double theta, double j_hz,
                                        double beta_sign) {
  const auto p = GeodesicParams::from_theta(theta, j_hz);
  if (p.duration == 0.0) return {};
  const double beta = beta_sign * p.beta;
  // Control term +i beta/T I2x in the generator, i.e. 2pi nu = -beta / T.
  const double amplitude = -beta / (kTwoPi * p.duration);
  return {
      pulse(2, Axis::y, -kHalfPi),
      ShapedEvolution{p.duration, {RfField{2, Axis::x, amplitude}}},
      pulse(2, Axis::x, kPi + beta / 2),
      pulse(2, Axis::y, kHalfPi),
  };
}

std::vector<PulseEvent> trilinear_events(double theta, double j_hz,
                                         const Axes& axes, double beta_sign) {
  std::vector<HardPulse> rotations;
  for (int k = 0; k < 3; ++k)
    if (auto r = z_to_axis(k + 1, axes[static_cast<std::size_t>(k)]))
      rotations.push_back(*r);

  std::vector<PulseEvent> events;
  for (const auto& r : rotations) events.push_back(pulse(r.spin, r.axis, -r.angle));
  for (auto& e : geodesic_events(theta, j_hz, beta_sign)) events.push_back(e);
  for (const auto& r : rotations) events.push_back(r);
  return events;
}

void validate_against(const PulseSequence& seq, double j_hz,
                      const ComplexMatrix& target) {
  const auto u = dynamics::evolve(seq, canonical_system(j_hz)).matrix;
  const double f = dynamics::fidelity(u, target);
  if (!(f >= 1.0 - kBuilderTolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << seq.label << ": evolved propagator misses target, fidelity " << f;
    throw std::logic_error(msg.str());
  }
}

std::string axes_string(const Axes& axes) {
  std::string s;
  for (Axis a : axes) s += opalg::axis_char(a);
  return s;
}

}  // namespace

GeodesicParams GeodesicParams::from_theta(double theta, double j_hz) {
  require_theta(theta, "GeodesicParams");
  require_coupling(j_hz, "GeodesicParams");
  GeodesicParams p;
  p.theta = theta;
  p.kappa = theta / kTwoPi;
  p.beta = kTwoPi - theta / 2;
  const double radicand = p.kappa * (4.0 - p.kappa);
  if (radicand <= 0.0) return p;  // theta == 0: nothing to do
  const double root = std::sqrt(radicand);
  p.duration = root / (2.0 * j_hz);
  p.nu_rf = (2.0 - p.kappa) * j_hz / root;
  return p;
}

dynamics::SpinSystem canonical_system(double j_hz) {
  require_coupling(j_hz, "canonical_system");
  return dynamics::SpinSystem::three_spin_chain(j_hz);
}

ComplexMatrix trilinear_target(double theta, const Axes& axes) {
  // theta I1a I2b I3c = (theta / 4) B_abc
  const opalg::ProductOperatorTerm term({axes[0], axes[1], axes[2]}, theta / 4);
  return dynamics::expm(opalg::realize(term), 1.0).matrix;
}

ComplexMatrix vf_target() {
  opalg::OperatorSum h(3);
  h.add({{Axis::z, Axis::z, Axis::z}, kTwoPi / 4});
  h.add({{Axis::y, Axis::z, Axis::y}, kTwoPi / 4});
  h.add({{Axis::x, Axis::z, Axis::x}, kTwoPi / 4});
  return dynamics::expm(opalg::realize(h), 1.0).matrix;
}

ComplexMatrix swap13_target() {
  ComplexMatrix p = ComplexMatrix::Zero(8, 8);
  for (int s = 0; s < 8; ++s) {
    const int a = (s >> 2) & 1, b = (s >> 1) & 1, c = s & 1;
    p((c << 2) | (b << 1) | a, s) = 1.0;
  }
  return p;
}

ComplexMatrix lambda2_target() {
  ComplexMatrix m = ComplexMatrix::Identity(8, 8);
  m(7, 7) = -1.0;
  return m;
}

ComplexMatrix lambda2_hamiltonian() {
  const ComplexMatrix half = 0.5 * ComplexMatrix::Identity(8, 8);
  ComplexMatrix h = kPi * ComplexMatrix::Identity(8, 8);
  for (int k = 1; k <= 3; ++k) h = h * (half - opalg::embed(Axis::z, k, 3));
  return h;
}

PulseSequence build_conventional(double theta, double j_hz) {
  require_theta(theta, "build_conventional");
  require_coupling(j_hz, "build_conventional");
  const double block = 1.0 / (2.0 * j_hz);
  const double middle = theta / (4.0 * kPi * j_hz);
  const std::vector<SpinPair> spin3_off{{2, 3}};
  const std::vector<SpinPair> spin1_off{{1, 2}};

  PulseSequence seq{3, fmt_label("conventional", theta, j_hz), {}, {}};
  // exp(+i pi I1zI2x): I2z -> -I2x under the spin-3-decoupled delay.
  append_conjugated(seq.events, pulse(2, Axis::y, -kHalfPi),
                    Delay{block, spin3_off});
  // exp(-i theta I2yI3z / 2) with spin 1 decoupled.
  append_conjugated(seq.events, pulse(2, Axis::x, -kHalfPi),
                    Delay{middle, spin1_off});
  // exp(-i pi I1zI2x).
  append_conjugated(seq.events, pulse(2, Axis::y, kHalfPi),
                    Delay{block, spin3_off});

  validate_against(seq, j_hz, trilinear_target(theta, {Axis::z, Axis::z, Axis::z}));
  return seq;
}

PulseSequence build_improved(double theta, double j_hz) {
  require_theta(theta, "build_improved");
  require_coupling(j_hz, "build_improved");
  const double quarter = 1.0 / (4.0 * j_hz);
  const double middle = theta / (4.0 * kPi * j_hz);

  PulseSequence seq{3, fmt_label("improved", theta, j_hz), {}, {}};
  // exp(-pi/2 A), A = -i(I1zI2x + I2xI3z)
  append_conjugated(seq.events, pulse(2, Axis::y, -kHalfPi), Delay{quarter, {}});
  // exp(theta/2 B), B = -i(I1zI2y + I2yI3z)
  append_conjugated(seq.events, pulse(2, Axis::x, -kHalfPi), Delay{middle, {}});
  // exp(pi/2 A)
  append_conjugated(seq.events, pulse(2, Axis::y, kHalfPi), Delay{quarter, {}});
  // Q = exp(i theta I2z / 4) cancels the I2z/4 part of exp(theta C / 2).
  seq.events.push_back(pulse(2, Axis::z, -theta / 4));

  validate_against(seq, j_hz, trilinear_target(theta, {Axis::z, Axis::z, Axis::z}));
  return seq;
}

PulseSequence build_geodesic(double theta, double j_hz) {
  require_theta(theta, "build_geodesic");
  require_coupling(j_hz, "build_geodesic");
  return build_trilinear(theta, j_hz, {Axis::z, Axis::z, Axis::z});
}

PulseSequence build_trilinear(double theta, double j_hz, const Axes& axes) {
  require_theta(theta, "build_trilinear");
  require_coupling(j_hz, "build_trilinear");
  const bool plain = axes == Axes{Axis::z, Axis::z, Axis::z};
  PulseSequence seq{
      3,
      plain ? fmt_label("geodesic", theta, j_hz)
            : fmt_label(("trilinear_" + axes_string(axes)).c_str(), theta, j_hz),
      trilinear_events(theta, j_hz, axes, 1.0),
      {}};
  validate_against(seq, j_hz, trilinear_target(theta, axes));
  return seq;
}

PulseSequence build_vf(double j_hz) {
  require_coupling(j_hz, "build_vf");
  static constexpr Axes kBlocks[] = {{Axis::x, Axis::z, Axis::x},
                                     {Axis::y, Axis::z, Axis::y},
                                     {Axis::z, Axis::z, Axis::z}};
  const auto sys = canonical_system(j_hz);
  const ComplexMatrix target = vf_target();

  std::ostringstream label;
  label.precision(17);
  label << "vf(J=" << j_hz << ")";

  // The 2pi blocks are tried with beta = 2pi - theta/2 first, then -beta.
  for (double sign : {1.0, -1.0}) {
    PulseSequence seq{3, label.str(), {}, {}};
    // V_F = U1 U2 U3: U3 acts first.
    for (const auto& axes : kBlocks)
      for (auto& e : trilinear_events(kTwoPi, j_hz, axes, sign))
        seq.events.push_back(e);
    const double f = dynamics::fidelity(dynamics::evolve(seq, sys).matrix, target);
    if (f >= 1.0 - kBuilderTolerance) {
      seq.metadata["beta_sign"] = sign > 0 ? "standard" : "negated";
      return seq;
    }
  }
  throw std::logic_error("build_vf: neither beta sign reproduces V_F");
}

PulseSequence build_swap13(double j_hz) {
  PulseSequence seq = build_vf(j_hz);
  std::ostringstream label;
  label.precision(17);
  label << "swap13(J=" << j_hz << ")";
  seq.label = label.str();
  seq.events.push_back(pulse(2, Axis::z, -kHalfPi));
  validate_against(seq, j_hz, swap13_target());
  return seq;
}

PulseSequence compile_z_pulses(const PulseSequence& seq) {
  PulseSequence out{seq.n, seq.label, {}, seq.metadata};
  for (const auto& e : seq.events) {
    const auto* p = std::get_if<HardPulse>(&e);
    if (p == nullptr || p->axis != Axis::z) {
      out.events.push_back(e);
      continue;
    }
    append_conjugated(out.events, pulse(p->spin, Axis::x, kHalfPi),
                      pulse(p->spin, Axis::y, p->angle));
  }
  return out;
}

Axes parse_axes(std::string_view text) {
  if (text.size() != 3)
    throw ContractViolation("axes must be three characters from {x,y,z}");
  Axes out{};
  for (std::size_t k = 0; k < 3; ++k) {
    auto a = opalg::parse_axis(text[k]);
    if (!a) throw ContractViolation("axes must be three characters from {x,y,z}");
    out[k] = *a;
  }
  return out;
}

}  // namespace trispin::sequences
