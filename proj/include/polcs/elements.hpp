// Copyright 2026 The polcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Transforms for the optical elements: beam splitters, polarization-sensitive
// beam splitters, wave plates, polarizing beam splitters, phase shifters and
// the two-PBS / four-HWP variable splitter.
//
// Every constructor returns a Transform over the full registry that acts as
// the identity on modes it does not touch. Angles are in radians.

#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "polcs/engine.hpp"
#include "polcs/errors.hpp"
#include "polcs/fock.hpp"

namespace polcs {

// 2x2 action on the (V, H) creation operators of one spatial mode.
// Column 0 is the image of V, column 1 the image of H.
using JonesMatrix = Eigen::Matrix2cd;

namespace jones {

// V -> cos V + sin H, H -> -sin V + cos H (det +1)
inline JonesMatrix rot(double theta) {
  JonesMatrix j;
  j << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return j;
}

// V -> cos V + sin H, H -> sin V - cos H (det -1), the physical half-wave plate.
inline JonesMatrix refl(double theta) {
  JonesMatrix j;
  j << std::cos(theta), std::sin(theta), std::sin(theta), -std::cos(theta);
  return j;
}

inline JonesMatrix h45() { return refl(std::numbers::pi / 4); }
inline JonesMatrix r45() { return rot(std::numbers::pi / 4); }
inline JonesMatrix rm90() { return rot(-std::numbers::pi / 2); }
inline JonesMatrix rp90() { return rot(std::numbers::pi / 2); }

}  // namespace jones

inline double degrees_to_radians(double deg) { return deg * std::numbers::pi / 180.0; }
inline double radians_to_degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

namespace detail {

inline Matrix identity_matrix(const ModeRegistry& registry) {
  auto n = static_cast<Eigen::Index>(registry.size());
  return Matrix::Identity(n, n);
}

inline Eigen::Index at(const ModeRegistry& registry, const ModeId& m) {
  return static_cast<Eigen::Index>(registry.index_of(m));
}

inline void check_reflectivity(double r, const char* name) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError(std::string(name) + " = " + std::to_string(r) + " is outside [0, 1]");
  }
}

}  // namespace detail

// a1 -> sqrt(R) a1 + sqrt(1-R) a2,  a2 -> -sqrt(1-R) a1 + sqrt(R) a2.
// Output port 1 keeps the label of input 1 (the reflected path).
inline Transform beam_splitter(const ModeRegistry& registry, double reflectivity, const ModeId& in1,
                               const ModeId& in2) {
  detail::check_reflectivity(reflectivity, "reflectivity");
  const auto i = detail::at(registry, in1);
  const auto k = detail::at(registry, in2);
  if (i == k) throw StructuralError("beam splitter needs two distinct modes");
  const double r = std::sqrt(reflectivity);
  const double t = std::sqrt(1.0 - reflectivity);
  Matrix u = detail::identity_matrix(registry);
  u(i, i) = r;
  u(k, i) = t;
  u(i, k) = -t;
  u(k, k) = r;
  return Transform(registry, std::move(u));
}

inline Transform pol_beam_splitter(const ModeRegistry& registry, double r_v, double r_h, const std::string& spatial1,
                                   const std::string& spatial2) {
  detail::check_reflectivity(r_v, "R_V");
  detail::check_reflectivity(r_h, "R_H");
  return beam_splitter(registry, r_v, vmode(spatial1), vmode(spatial2))
      .then(beam_splitter(registry, r_h, hmode(spatial1), hmode(spatial2)));
}

inline Transform hwp(const ModeRegistry& registry, const JonesMatrix& j, const std::string& spatial) {
  if ((j.adjoint() * j - JonesMatrix::Identity()).cwiseAbs().maxCoeff() > kUnitarityTolerance) {
    throw DomainError("Jones matrix is not unitary");
  }
  const auto v = detail::at(registry, vmode(spatial));
  const auto h = detail::at(registry, hmode(spatial));
  Matrix u = detail::identity_matrix(registry);
  u(v, v) = j(0, 0);
  u(h, v) = j(1, 0);
  u(v, h) = j(0, 1);
  u(h, h) = j(1, 1);
  return Transform(registry, std::move(u));
}

// H passes straight through, V swaps spatial ports; all coefficients +1.
inline Transform pbs(const ModeRegistry& registry, const std::string& spatial1, const std::string& spatial2) {
  const auto v1 = detail::at(registry, vmode(spatial1));
  const auto v2 = detail::at(registry, vmode(spatial2));
  Matrix u = detail::identity_matrix(registry);
  u(v1, v1) = 0.0;
  u(v2, v2) = 0.0;
  u(v2, v1) = 1.0;
  u(v1, v2) = 1.0;
  return Transform(registry, std::move(u));
}

inline Transform phase_shifter(const ModeRegistry& registry, double phi, const ModeId& mode) {
  const auto i = detail::at(registry, mode);
  Matrix u = detail::identity_matrix(registry);
  u(i, i) = std::polar(1.0, phi);
  return Transform(registry, std::move(u));
}

// Polarization-sensitive splitter built from two PBSs and four wave plates:
// +90 deg plate on input 2, PBS, ROT(alpha) in the arm carrying the V
// photons (port 2), ROT(beta) in the H arm (port 1), phase phi on the V arm,
// PBS, -90 deg plate on output 2. At phi = 0 this is
// pol_beam_splitter(cos^2 alpha, cos^2 beta) for alpha, beta in [0, pi/2].
inline Transform composite_pol_bs(const ModeRegistry& registry, double alpha, double beta, double phi,
                                  const std::string& spatial1, const std::string& spatial2) {
  return hwp(registry, jones::rp90(), spatial2)
      .then(pbs(registry, spatial1, spatial2))
      .then(hwp(registry, jones::rot(alpha), spatial2))
      .then(hwp(registry, jones::rot(beta), spatial1))
      .then(phase_shifter(registry, phi, vmode(spatial2)))
      .then(phase_shifter(registry, phi, hmode(spatial2)))
      .then(pbs(registry, spatial1, spatial2))
      .then(hwp(registry, jones::rm90(), spatial2));
}

}  // namespace polcs
