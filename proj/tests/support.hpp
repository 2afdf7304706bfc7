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

// Shared helpers for the unit tests and the acceptance suite: seeded
// random draws and reference implementations that do not go through the
// library code under test.
#pragma once

#include "schmidt/schmidt.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <random>

namespace schmidt::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20260601);
    return engine;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline double normal() {
    return std::normal_distribution<double>(0.0, 1.0)(rng());
}

inline Complex complex_normal() {
    return {normal(), normal()};
}

inline Matrix4 random_hermitian(double scale = 1.0) {
    Matrix4 a;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            a(r, c) = complex_normal();
        }
    }
    return 0.5 * scale * (a + a.adjoint());
}

inline StateVector4 random_state() {
    StateVector4 v;
    for (int i = 0; i < 4; ++i) {
        v(i) = complex_normal();
    }
    return v.normalized();
}

inline Qubit random_qubit() {
    return Qubit(complex_normal(), complex_normal()).normalized();
}

/// Haar-ish random 2x2 unitary via QR of a Gaussian matrix.
inline Matrix2 random_unitary2() {
    Matrix2 a;
    a << complex_normal(), complex_normal(), complex_normal(), complex_normal();
    Eigen::HouseholderQR<Matrix2> qr(a);
    Matrix2 q = qr.householderQ();
    for (int k = 0; k < 2; ++k) {
        const Complex d = qr.matrixQR()(k, k);
        q.col(k) *= d / std::abs(d);
    }
    return q;
}

inline LocalFrame random_frame() {
    return {random_qubit(), random_qubit()};
}

/// exp(-i h t) by scaling and squaring a truncated Taylor series.
inline Matrix4 taylor_exp(const Matrix4& h, double t) {
    const Matrix4 x = Complex(0.0, -t) * h;
    const double norm = x.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm / std::pow(2.0, squarings) > 0.25) {
        ++squarings;
    }
    const Matrix4 y = x / std::pow(2.0, squarings);
    Matrix4 term = Matrix4::Identity();
    Matrix4 sum = Matrix4::Identity();
    for (int k = 1; k <= 30; ++k) {
        term = term * y / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

/// exp(-i h t) through Eigen's Pade-based matrix exponential.
inline Matrix4 eigen_exp(const Matrix4& h, double t) {
    const Matrix4 x = Complex(0.0, -t) * h;
    return x.exp();
}

/// Kronecker product written out entry by entry.
inline Matrix4 kron_loops(const Matrix2& a, const Matrix2& b) {
    Matrix4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

/**
 * Makhlin invariants from the spectrum of m = U_B^T U_B, with U_B the gate
 * in the magic basis (columns (|00>+|11>)/sqrt2, i(|00>-|11>)/sqrt2,
 * i(|01>+|10>)/sqrt2, (|01>-|10>)/sqrt2). With eigenvalues l_k of m and
 * det U = d:  G1 = (sum l)^2 / 16 d,  G2 = ((sum l)^2 - sum l^2) / 4 d.
 */
inline std::pair<Complex, Complex> makhlin_by_spectrum(const Matrix4& u) {
    const double h = 1.0 / std::sqrt(2.0);
    const Complex ih(0.0, h);
    Matrix4 q;
    q << h, ih, 0, 0,
         0, 0, ih, h,
         0, 0, ih, -h,
         h, -ih, 0, 0;
    const Matrix4 ub = q.adjoint() * u * q;
    const Matrix4 m = ub.transpose() * ub;
    Eigen::ComplexEigenSolver<Matrix4> es(m);
    const auto& ev = es.eigenvalues();
    Complex s1 = 0.0, s2 = 0.0;
    for (int k = 0; k < 4; ++k) {
        s1 += ev(k);
        s2 += ev(k) * ev(k);
    }
    const Complex d = u.determinant();
    return {s1 * s1 / (16.0 * d), (s1 * s1 - s2) / (4.0 * d)};
}

inline Matrix4 cnot() {
    Matrix4 u = Matrix4::Zero();
    u(0, 0) = u(1, 1) = u(2, 3) = u(3, 2) = 1.0;
    return u;
}

} // namespace schmidt::testing
