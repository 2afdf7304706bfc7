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
 * Schmidt-sphere coordinates, local frames and the Schmidt decomposition of
 * two-qubit pure states.
 *
 * A point (alpha, beta) on the Schmidt sphere fixes the amplitudes
 *
 *     f = e^{-i beta/2} cos(alpha/2),   g = e^{+i beta/2} sin(alpha/2),
 *
 * and together with a local frame (|n>, |m>) the orthonormal quadruple
 *
 *     Gamma+ =  f |n, m>  + g |-n,-m>      Lambda+ = |n,-m>
 *     Gamma- = -g*|n, m>  + f*|-n,-m>      Lambda- = |-n, m>
 *
 * Coordinates use an extended chart: alpha may leave [0, pi], with
 * (alpha, beta) and (-alpha, beta + pi) naming the same sphere point. Paths
 * through a pole keep beta fixed and carry alpha through the pole.
 */
#pragma once

#include "schmidt/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace schmidt {

struct SchmidtCoordinates {
    double alpha = 0.0;
    double beta = 0.0;
};

/// (sin a cos b, sin a sin b, cos a)
inline Vector3 sphere_point(SchmidtCoordinates c) {
    return {std::sin(c.alpha) * std::cos(c.beta), std::sin(c.alpha) * std::sin(c.beta),
            std::cos(c.alpha)};
}

struct SchmidtAmplitudes {
    Complex f;
    Complex g;
};

inline SchmidtAmplitudes schmidt_amplitudes(SchmidtCoordinates c) {
    return {std::polar(std::cos(0.5 * c.alpha), -0.5 * c.beta),
            std::polar(std::sin(0.5 * c.alpha), 0.5 * c.beta)};
}

/**
 * Local frame (|n>, |m>) of the two qubits.
 *
 * The antipodal states are fixed as |-n> = (-n1*, n0*) and
 * |-m> = (m1*, -m0*), so that the standard frame |n> = |0>, |m> = |1> has
 * |-n> = |1> and |-m> = |0>. The frame is then realized by the local unitary
 * A (x) B with A|0> = |n>, A|1> = |-n>, B|0> = |-m>, B|1> = |m>.
 */
class LocalFrame {
  public:
    LocalFrame() : LocalFrame(standard()) {}

    LocalFrame(const Qubit& n, const Qubit& m) : n_(n), m_(m) {
        if (!all_finite(n) || !all_finite(m)) {
            throw std::invalid_argument("LocalFrame: non-finite frame state");
        }
        if (std::abs(n.norm() - 1.0) > tolerance::algebraic ||
            std::abs(m.norm() - 1.0) > tolerance::algebraic) {
            throw std::invalid_argument("LocalFrame: frame states must be normalized");
        }
    }

    static LocalFrame standard() {
        return {Qubit(1.0, 0.0), Qubit(0.0, 1.0)};
    }

    const Qubit& n() const { return n_; }
    const Qubit& m() const { return m_; }
    Qubit neg_n() const { return {-std::conj(n_(1)), std::conj(n_(0))}; }
    Qubit neg_m() const { return {std::conj(m_(1)), -std::conj(m_(0))}; }

    Matrix2 a_unitary() const {
        Matrix2 a;
        a.col(0) = n_;
        a.col(1) = neg_n();
        return a;
    }

    Matrix2 b_unitary() const {
        Matrix2 b;
        b.col(0) = neg_m();
        b.col(1) = m_;
        return b;
    }

    /// A (x) B, mapping the standard frame onto this one.
    Matrix4 local_unitary() const { return tensor_product(a_unitary(), b_unitary()); }

  private:
    Qubit n_;
    Qubit m_;
};

enum class SchmidtBranch { gamma_plus, gamma_minus, lambda_plus, lambda_minus };

/// One member of the orthonormal quadruple {Gamma+(r), Gamma-(r), Lambda+, Lambda-}.
inline StateVector4 assemble_state(SchmidtCoordinates coords, const LocalFrame& frame,
                                   SchmidtBranch branch) {
    const auto [f, g] = schmidt_amplitudes(coords);
    const StateVector4 nm = tensor_product(frame.n(), frame.m());
    const StateVector4 nn_mm = tensor_product(frame.neg_n(), frame.neg_m());
    switch (branch) {
    case SchmidtBranch::gamma_plus:
        return f * nm + g * nn_mm;
    case SchmidtBranch::gamma_minus:
        return -std::conj(g) * nm + std::conj(f) * nn_mm;
    case SchmidtBranch::lambda_plus:
        return tensor_product(frame.n(), frame.neg_m());
    case SchmidtBranch::lambda_minus:
        return tensor_product(frame.neg_n(), frame.m());
    }
    throw std::invalid_argument("assemble_state: unknown branch");
}

inline StateVector4 assemble_state(SchmidtCoordinates coords, SchmidtBranch branch) {
    return assemble_state(coords, LocalFrame::standard(), branch);
}

struct SchmidtDecomposition {
    SchmidtCoordinates coords;
    Complex f;
    Complex g;
    LocalFrame frame;
    /// Set when the two Schmidt coefficients agree to 1e-9; the local
    /// frame is then not unique.
    bool degenerate = false;

    StateVector4 assemble() const {
        return f * tensor_product(frame.n(), frame.m()) +
               g * tensor_product(frame.neg_n(), frame.neg_m());
    }
};

namespace detail {

// First component with non-negligible magnitude made real positive.
inline Qubit fix_qubit_gauge(const Qubit& q) {
    const int lead = std::abs(q(0)) > 1e-10 ? 0 : 1;
    const Complex phase = q(lead) / std::abs(q(lead));
    return (q / phase).normalized();
}

} // namespace detail

/**
 * Schmidt decomposition of a normalized two-qubit state.
 *
 * Returns alpha in [0, pi/2] (|f| >= |g|). The local states carry their
 * first nonvanishing component real and positive; the remaining relative
 * phase goes into beta and the global phase is dropped. Product states get
 * beta = 0.
 */
inline SchmidtDecomposition schmidt_decompose(const StateVector4& state) {
    if (!all_finite(state)) {
        throw std::invalid_argument("schmidt_decompose: non-finite amplitudes");
    }
    const double norm = state.norm();
    if (std::abs(norm - 1.0) > tolerance::algebraic) {
        throw std::invalid_argument("schmidt_decompose: state is not normalized (norm = " +
                                    std::to_string(norm) + ")");
    }

    // psi = sum_k s_k u_k (x) conj(v_k) for M = U S V^dagger, M[a][b] = psi[2a+b].
    Matrix2 coeff;
    coeff << state(0), state(1), state(2), state(3);
    Eigen::JacobiSVD<Matrix2> svd(coeff, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();

    const Qubit n = detail::fix_qubit_gauge(svd.matrixU().col(0));
    const Qubit m = detail::fix_qubit_gauge(svd.matrixV().col(0).conjugate());
    LocalFrame frame(n, m);

    const Complex f_raw = tensor_product(frame.n(), frame.m()).dot(state);
    const Complex g_raw = tensor_product(frame.neg_n(), frame.neg_m()).dot(state);

    const double alpha = 2.0 * std::atan2(std::abs(g_raw), std::abs(f_raw));
    double beta = 0.0;
    if (std::abs(g_raw) > 1e-12 && std::abs(f_raw) > 1e-12) {
        beta = std::arg(g_raw * std::conj(f_raw));
    }

    SchmidtDecomposition out{{alpha, beta}, {}, {}, frame, std::abs(sv(0) - sv(1)) < 1e-9};
    const auto amps = schmidt_amplitudes(out.coords);
    out.f = amps.f;
    out.g = amps.g;
    return out;
}

/// Two-qubit concurrence 2 |psi00 psi11 - psi01 psi10|.
inline double concurrence(const StateVector4& state) {
    return 2.0 * std::abs(state(0) * state(3) - state(1) * state(2));
}

} // namespace schmidt
