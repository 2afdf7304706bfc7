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
 * Fixed-size complex linear algebra for two-qubit problems.
 *
 * Basis convention, used by every header in this library: the two-qubit
 * computational basis is ordered |00>, |01>, |10>, |11>, with the first
 * (a) qubit as the most significant index. Kronecker products follow the
 * same order, so (A (x) B)[2i+k, 2j+l] = A[i,j] B[k,l].
 */
#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace schmidt {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Qubit = Eigen::Vector2cd;
using StateVector4 = Eigen::Vector4cd;
using Vector3 = Eigen::Vector3d;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex I{0.0, 1.0};

namespace tolerance {
/// Algebraic identities that hold to machine precision.
inline constexpr double algebraic = 1e-12;
/// Results of composed pipelines (path -> schedule -> propagator -> invariants).
inline constexpr double pipeline = 1e-10;
} // namespace tolerance

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const Complex z(m(r, c));
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                return false;
            }
        }
    }
    return true;
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, std::string_view where) {
    if (!all_finite(m)) {
        throw std::invalid_argument(std::string(where) + ": matrix has non-finite entries");
    }
}

inline double hermiticity_error(const Matrix4& h) {
    return max_abs(h - h.adjoint());
}

inline double unitarity_error(const Matrix4& u) {
    return max_abs(u.adjoint() * u - Matrix4::Identity());
}

inline bool is_hermitian(const Matrix4& h, double tol = tolerance::algebraic) {
    return hermiticity_error(h) <= tol;
}

inline bool is_unitary(const Matrix4& u, double tol = tolerance::algebraic) {
    return unitarity_error(u) <= tol;
}

inline Matrix2 pauli_x() {
    Matrix2 m;
    m << 0, 1, 1, 0;
    return m;
}

inline Matrix2 pauli_y() {
    Matrix2 m;
    m << 0, -I, I, 0;
    return m;
}

inline Matrix2 pauli_z() {
    Matrix2 m;
    m << 1, 0, 0, -1;
    return m;
}

/// Kronecker product, a-qubit major.
inline Matrix4 tensor_product(const Matrix2& a, const Matrix2& b) {
    Matrix4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

inline StateVector4 tensor_product(const Qubit& a, const Qubit& b) {
    StateVector4 out;
    out << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    return out;
}

/// Computational basis state |xy> with index 2x+y.
inline StateVector4 basis_state(int index) {
    if (index < 0 || index > 3) {
        throw std::out_of_range("basis_state: index must be in 0..3");
    }
    StateVector4 s = StateVector4::Zero();
    s(index) = 1.0;
    return s;
}

/**
 * exp(-i h t) for a Hermitian 2x2 matrix, in closed form.
 *
 * Writing h = a0 + a.sigma, the result is
 * e^{-i a0 t} (cos(|a| t) - i sin(|a| t) a.sigma / |a|).
 */
inline Matrix2 two_level_exp(const Matrix2& h, double t) {
    const double a0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const double az = 0.5 * (h(0, 0).real() - h(1, 1).real());
    const double ax = 0.5 * (h(0, 1).real() + h(1, 0).real());
    const double ay = 0.5 * (h(1, 0).imag() - h(0, 1).imag());
    const double r = std::sqrt(ax * ax + ay * ay + az * az);
    const double c = std::cos(r * t);
    // sin(r t) / r, continuous at r = 0
    const double s = r > 0.0 ? std::sin(r * t) / r : t;
    Matrix2 u;
    u << Complex(c, -s * az), Complex(-s * ay, -s * ax), Complex(s * ay, -s * ax),
        Complex(c, s * az);
    return std::exp(Complex(0.0, -a0 * t)) * u;
}

namespace detail {

// Connected components of the coupling graph of h (nonzero off-diagonals).
inline std::array<int, 4> coupling_components(const Matrix4& h) {
    std::array<int, 4> root{0, 1, 2, 3};
    auto find = [&root](int i) {
        while (root[i] != i) {
            i = root[i];
        }
        return i;
    };
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (h(i, j) != Complex(0.0) || h(j, i) != Complex(0.0)) {
                root[find(j)] = find(i);
            }
        }
    }
    for (int i = 0; i < 4; ++i) {
        root[i] = find(i);
    }
    return root;
}

} // namespace detail

/**
 * Propagator exp(-i h t) of a Hermitian 4x4 generator.
 *
 * When h only couples states pairwise (every connected component of its
 * coupling graph has at most two members, as for all Schmidt-gate
 * Hamiltonians) each block is exponentiated in closed form. Anything else
 * falls back to a Hermitian eigendecomposition.
 */
inline Matrix4 herm_exp(const Matrix4& h, double t) {
    require_finite(h, "herm_exp");
    if (!std::isfinite(t)) {
        throw std::invalid_argument("herm_exp: duration is not finite");
    }
    const double herr = hermiticity_error(h);
    if (herr > tolerance::algebraic) {
        std::ostringstream msg;
        msg << "herm_exp: generator is not Hermitian (max |H - H^dagger| = " << herr << ")";
        throw std::invalid_argument(msg.str());
    }

    const auto comp = detail::coupling_components(h);
    std::array<int, 4> size{};
    for (int c : comp) {
        ++size[c];
    }
    bool pairwise = true;
    for (int s : size) {
        pairwise = pairwise && s <= 2;
    }

    if (pairwise) {
        Matrix4 u = Matrix4::Zero();
        std::array<bool, 4> done{};
        for (int i = 0; i < 4; ++i) {
            if (done[i]) {
                continue;
            }
            int j = -1;
            for (int k = i + 1; k < 4; ++k) {
                if (comp[k] == comp[i]) {
                    j = k;
                }
            }
            if (j < 0) {
                u(i, i) = std::exp(Complex(0.0, -h(i, i).real() * t));
                done[i] = true;
                continue;
            }
            Matrix2 block;
            block << h(i, i), h(i, j), h(j, i), h(j, j);
            const Matrix2 ub = two_level_exp(block, t);
            u(i, i) = ub(0, 0);
            u(i, j) = ub(0, 1);
            u(j, i) = ub(1, 0);
            u(j, j) = ub(1, 1);
            done[i] = done[j] = true;
        }
        return u;
    }

    const Matrix4 hs = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4> eig(hs);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("herm_exp: eigendecomposition failed");
    }
    Eigen::Vector4cd phases;
    for (int k = 0; k < 4; ++k) {
        phases(k) = std::exp(Complex(0.0, -eig.eigenvalues()(k) * t));
    }
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

/// Global-phase-insensitive gate overlap |Tr(U^dagger V)| / 4, in [0, 1].
inline double gate_fidelity(const Matrix4& u, const Matrix4& v) {
    const double f = std::abs((u.adjoint() * v).trace()) / 4.0;
    return f > 1.0 ? 1.0 : f;
}

/// |<a|b>|^2 for normalized states.
inline double state_fidelity(const StateVector4& a, const StateVector4& b) {
    return std::norm(a.dot(b));
}

/**
 * Spectral-norm distance between U and V after removing the best global
 * phase. Scales linearly with small generator errors, unlike 1 - fidelity.
 */
inline double phase_aligned_distance(const Matrix4& u, const Matrix4& v) {
    const Complex overlap = (v.adjoint() * u).trace();
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
    const Matrix4 diff = u - phase * v;
    Eigen::JacobiSVD<Matrix4> svd(diff);
    return svd.singularValues()(0);
}

/// [a, b]
inline Matrix4 commutator(const Matrix4& a, const Matrix4& b) {
    return a * b - b * a;
}

} // namespace schmidt
