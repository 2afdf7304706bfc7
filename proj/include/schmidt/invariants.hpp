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
 * Makhlin local invariants and perfect-entangler classification.
 */
#pragma once

#include "schmidt/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace schmidt {

/**
 * Q = sum_k |B_k><k| mapping the computational basis onto the Bell basis
 *
 *     B1 = (|00> + |11>)/sqrt2,    B2 = i(|01> + |10>)/sqrt2,
 *     B3 = (|01> - |10>)/sqrt2,    B4 = i(|00> - |11>)/sqrt2.
 */
inline Matrix4 bell_transform() {
    const double h = 1.0 / std::sqrt(2.0);
    const Complex ih(0.0, h);
    Matrix4 q;
    // columns are B1..B4
    q << h, 0, 0, ih,
         0, ih, h, 0,
         0, ih, -h, 0,
         h, 0, 0, -ih;
    return q;
}

struct LocalInvariants {
    Complex g1;
    double g2 = 0.0;
};

/**
 * Makhlin invariants of a two-qubit unitary:
 *
 *     m  = (Q^dagger U Q)^T (Q^dagger U Q)
 *     G1 = tr^2(m) / (16 det U)
 *     G2 = (tr^2(m) - tr(m^2)) / (4 det U)
 *
 * det U is renormalized to unit modulus. G2 is real for unitary input; its
 * imaginary residue is checked and dropped.
 */
inline LocalInvariants makhlin_invariants(const Matrix4& u) {
    require_finite(u, "makhlin_invariants");
    const double uerr = unitarity_error(u);
    if (uerr > tolerance::pipeline) {
        std::ostringstream msg;
        msg << "makhlin_invariants: input is not unitary (max |U^dagger U - 1| = " << uerr << ")";
        throw std::invalid_argument(msg.str());
    }
    const Matrix4 q = bell_transform();
    const Matrix4 ub = q.adjoint() * u * q;
    const Matrix4 m = ub.transpose() * ub;

    Complex det = u.partialPivLu().determinant();
    det /= std::abs(det);

    const Complex tr = m.trace();
    const Complex tr_sq = (m * m).trace();
    const Complex g1 = tr * tr / (16.0 * det);
    const Complex g2 = (tr * tr - tr_sq) / (4.0 * det);
    if (std::abs(g2.imag()) > tolerance::pipeline) {
        std::ostringstream msg;
        msg << "makhlin_invariants: G2 has imaginary part " << g2.imag();
        throw std::runtime_error(msg.str());
    }
    return {g1, g2.real()};
}

/**
 * Invariants of the Schmidt gate based at polar angle alpha0 with solid
 * angle omega, in closed form (independent of the azimuth beta0):
 *
 *     G1 = [4 - 2 sin^2(alpha0) (1 - cos omega)]^2 / 16
 *     G2 =  3 - 2 sin^2(alpha0) (1 - cos omega)
 */
inline LocalInvariants closed_form_invariants(double alpha0, double omega) {
    const double s = std::sin(alpha0);
    const double x = 2.0 * s * s * (1.0 - std::cos(omega));
    return {Complex((4.0 - x) * (4.0 - x) / 16.0, 0.0), 3.0 - x};
}

enum class EntanglerClass { not_pe, pe, spe };

inline constexpr double default_classification_tol = 1e-9;

/**
 * Perfect entangler iff |G1| <= 1/4 and -1 <= G2 <= 1; special perfect
 * entangler iff additionally G1 = 0. Comparisons are widened by `tol`.
 */
inline EntanglerClass classify(const LocalInvariants& inv, double tol = default_classification_tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("classify: tolerance must be positive");
    }
    const double g1 = std::abs(inv.g1);
    const bool pe = g1 <= 0.25 + tol && inv.g2 >= -1.0 - tol && inv.g2 <= 1.0 + tol;
    if (!pe) {
        return EntanglerClass::not_pe;
    }
    return g1 <= tol ? EntanglerClass::spe : EntanglerClass::pe;
}

inline bool is_perfect_entangler(EntanglerClass c) {
    return c != EntanglerClass::not_pe;
}

inline std::string_view to_string(EntanglerClass c) {
    switch (c) {
    case EntanglerClass::not_pe:
        return "NOT_PE";
    case EntanglerClass::pe:
        return "PE";
    case EntanglerClass::spe:
        return "SPE";
    }
    return "?";
}

} // namespace schmidt
