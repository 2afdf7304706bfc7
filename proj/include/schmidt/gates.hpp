// Copyright 2026 The schmidt-gates Authors
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

/**
 * @file
 * Geometric Schmidt gates as explicit 4x4 unitaries.
 *
 * A loop enclosing solid angle Omega, based at r0 = (alpha0, beta0), gives
 * the phase e^{-i Omega/2} on one state of a coupled pair and e^{+i Omega/2}
 * on its orthogonal partner, and acts trivially on the other two states.
 * In the Gamma sector the pair lives in Span{|01>, |10>} (standard frame);
 * in the Lambda sector it lives in Span{|00>, |11>}.
 *
 * Omega is accepted on all of R. The gate depends on it only mod 4 pi.
 */
#pragma once

#include "schmidt/geometry.hpp"
#include "schmidt/linalg.hpp"

#include <array>

namespace schmidt {

enum class Sector { gamma, lambda };

/// Computational basis indices (first, second) of the coupled pair.
constexpr std::array<int, 2> sector_basis(Sector s) {
    return s == Sector::gamma ? std::array<int, 2>{1, 2} : std::array<int, 2>{0, 3};
}

/// Identity outside the sector, `block` on it.
inline Matrix4 embed_unitary(const Matrix2& block, Sector s) {
    const auto [p, q] = sector_basis(s);
    Matrix4 u = Matrix4::Identity();
    u(p, p) = block(0, 0);
    u(p, q) = block(0, 1);
    u(q, p) = block(1, 0);
    u(q, q) = block(1, 1);
    return u;
}

/// Zero outside the sector, `block` on it.
inline Matrix4 embed_operator(const Matrix2& block, Sector s) {
    const auto [p, q] = sector_basis(s);
    Matrix4 h = Matrix4::Zero();
    h(p, p) = block(0, 0);
    h(p, q) = block(0, 1);
    h(q, p) = block(1, 0);
    h(q, q) = block(1, 1);
    return h;
}

inline Matrix2 sector_block(const Matrix4& m, Sector s) {
    const auto [p, q] = sector_basis(s);
    Matrix2 b;
    b << m(p, p), m(p, q), m(q, p), m(q, q);
    return b;
}

struct GeometricGateSpec {
    double alpha0 = 0.0;
    double beta0 = 0.0;
    double omega = 0.0;
    Sector sector = Sector::gamma;
    LocalFrame frame = LocalFrame::standard();
};

/// e^{-i omega/2} |v+><v+| + e^{+i omega/2} |v-><v-| on the coupled pair,
/// with v+ = (f, g), v- = (-g*, f*) in the standard frame.
inline Matrix2 holonomy_block(double alpha0, double beta0, double omega) {
    const auto [f, g] = schmidt_amplitudes({alpha0, beta0});
    const Eigen::Vector2cd plus(f, g);
    const Eigen::Vector2cd minus(-std::conj(g), std::conj(f));
    return std::polar(1.0, -0.5 * omega) * plus * plus.adjoint() +
           std::polar(1.0, 0.5 * omega) * minus * minus.adjoint();
}

/**
 * The geometric Schmidt gate of `spec`, in either sector.
 *
 * Built in the standard frame as a projector sum, then conjugated by the
 * local unitary A (x) B of spec.frame.
 */
inline Matrix4 geometric_gate(const GeometricGateSpec& spec) {
    const Matrix4 standard = embed_unitary(holonomy_block(spec.alpha0, spec.beta0, spec.omega), spec.sector);
    const Matrix4 local = spec.frame.local_unitary();
    return local * standard * local.adjoint();
}

/// Gamma-sector gate: identity on |n0,-m0> and |-n0,m0>.
inline Matrix4 schmidt_gate(double alpha0, double beta0, double omega,
                            const LocalFrame& frame = LocalFrame::standard()) {
    return geometric_gate({alpha0, beta0, omega, Sector::gamma, frame});
}

/// Lambda-sector gate: identity on |01> and |10> (standard frame).
inline Matrix4 lambda_gate(double alpha0, double beta0, double omega,
                           const LocalFrame& frame = LocalFrame::standard()) {
    return geometric_gate({alpha0, beta0, omega, Sector::lambda, frame});
}

/**
 * The Gamma-sector gate at r0 = (0, 1, 0), written directly as the real
 * rotation by omega/2 on Span{|01>, |10>}:
 *
 *     1      0            0        0
 *     0  cos(omega/2) -sin(omega/2) 0
 *     0  sin(omega/2)  cos(omega/2) 0
 *     0      0            0        1
 */
inline Matrix4 equatorial_rotation_gate(double omega) {
    const double c = std::cos(0.5 * omega);
    const double s = std::sin(0.5 * omega);
    Matrix4 u = Matrix4::Identity();
    u(1, 1) = c;
    u(1, 2) = -s;
    u(2, 1) = s;
    u(2, 2) = c;
    return u;
}

/// The Omega = -pi equatorial gate, an iSWAP-type special perfect entangler.
inline Matrix4 iswap_type_gate() {
    return equatorial_rotation_gate(-pi);
}

/// Omega of a gate that has the equatorial rotation form, from its
/// Gamma block; returned in (-2 pi, 2 pi].
inline double rotation_angle(const Matrix4& u) {
    const double c = 0.5 * (u(1, 1).real() + u(2, 2).real());
    const double s = 0.5 * (u(2, 1).real() - u(1, 2).real());
    return 2.0 * std::atan2(s, c);
}

/// Largest entrywise deviation of u from equatorial_rotation_gate(rotation_angle(u)).
inline double rotation_form_error(const Matrix4& u) {
    return max_abs(u - equatorial_rotation_gate(rotation_angle(u)));
}

} // namespace schmidt
