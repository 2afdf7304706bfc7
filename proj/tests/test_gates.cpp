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

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace schmidt;
using namespace schmidt::testing;

TEST_CASE("equatorial rotation is the Schmidt gate at (0, 1, 0)", "[gates]") {
    for (int k = 0; k <= 40; ++k) {
        const double omega = -2 * pi + 4 * pi * k / 40;
        CHECK(max_abs(equatorial_rotation_gate(omega) - schmidt_gate(pi / 2, pi / 2, omega)) < 1e-15);
    }
}

TEST_CASE("iSWAP-type gate entries", "[gates]") {
    Matrix4 expected = Matrix4::Zero();
    expected(0, 0) = 1.0;
    expected(1, 2) = 1.0;
    expected(2, 1) = -1.0;
    expected(3, 3) = 1.0;
    CHECK(max_abs(iswap_type_gate() - expected) < 1e-15);
}

TEST_CASE("Schmidt gate eigenstructure in random frames", "[gates]") {
    for (int k = 0; k < 200; ++k) {
        const SchmidtCoordinates r0{uniform(-pi, pi), uniform(-pi, pi)};
        const double omega = uniform(-4 * pi, 4 * pi);
        const LocalFrame frame = random_frame();
        const Matrix4 u = schmidt_gate(r0.alpha, r0.beta, omega, frame);
        CHECK(unitarity_error(u) < 1e-13);
        const StateVector4 gp = assemble_state(r0, frame, SchmidtBranch::gamma_plus);
        const StateVector4 gm = assemble_state(r0, frame, SchmidtBranch::gamma_minus);
        CHECK(max_abs(u * gp - std::polar(1.0, -omega / 2) * gp) < 1e-13);
        CHECK(max_abs(u * gm - std::polar(1.0, omega / 2) * gm) < 1e-13);
        for (auto br : {SchmidtBranch::lambda_plus, SchmidtBranch::lambda_minus}) {
            const StateVector4 l = assemble_state(r0, frame, br);
            CHECK(max_abs(u * l - l) < 1e-13);
        }
    }
}

TEST_CASE("Lambda-sector gate acts on the other pair", "[gates]") {
    for (int k = 0; k < 100; ++k) {
        const SchmidtCoordinates r0{uniform(-pi, pi), uniform(-pi, pi)};
        const double omega = uniform(-2 * pi, 2 * pi);
        const Matrix4 u = lambda_gate(r0.alpha, r0.beta, omega);
        const auto [f, g] = schmidt_amplitudes(r0);
        StateVector4 v = StateVector4::Zero();
        v(0) = f;
        v(3) = g;
        CHECK(max_abs(u * v - std::polar(1.0, -omega / 2) * v) < 1e-13);
        CHECK(max_abs(u * basis_state(1) - basis_state(1)) < 1e-15);
        CHECK(max_abs(u * basis_state(2) - basis_state(2)) < 1e-15);
    }
}

TEST_CASE("Gamma and Lambda gates commute", "[gates]") {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const LocalFrame frame = random_frame();
        const Matrix4 a = schmidt_gate(uniform(-pi, pi), uniform(-pi, pi), uniform(-2 * pi, 2 * pi), frame);
        const Matrix4 b = lambda_gate(uniform(-pi, pi), uniform(-pi, pi), uniform(-2 * pi, 2 * pi), frame);
        worst = std::max(worst, max_abs(commutator(a, b)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("solid angle composes additively at a fixed base point", "[gates]") {
    for (int k = 0; k < 100; ++k) {
        const double a = uniform(-pi, pi), b = uniform(-pi, pi);
        const double w1 = uniform(-2 * pi, 2 * pi), w2 = uniform(-2 * pi, 2 * pi);
        CHECK(max_abs(schmidt_gate(a, b, w1) * schmidt_gate(a, b, w2) - schmidt_gate(a, b, w1 + w2)) < 1e-13);
        CHECK(max_abs(schmidt_gate(a, b, w1 + 4 * pi) - schmidt_gate(a, b, w1)) < 1e-13);
        CHECK(max_abs(schmidt_gate(a, b, w1 + 2 * pi) + schmidt_gate(a, b, w1) -
                      2.0 * embed_unitary(Matrix2::Zero(), Sector::gamma)) < 1e-13);
    }
    CHECK(max_abs(schmidt_gate(0.4, 1.1, 0.0) - Matrix4::Identity()) < 1e-15);
}

TEST_CASE("rotation angle round trip", "[gates]") {
    for (int k = 1; k < 100; ++k) {
        const double omega = -2 * pi + 4 * pi * k / 100;
        CHECK(rotation_angle(equatorial_rotation_gate(omega)) == Catch::Approx(omega).margin(1e-13));
        CHECK(rotation_form_error(equatorial_rotation_gate(omega)) < 1e-15);
    }
    CHECK(rotation_form_error(schmidt_gate(0.3, 0.2, 1.0)) > 0.1);
}
