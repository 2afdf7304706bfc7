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

// Walks the orange-slice loop end to end and prints what comes out:
// the pulses, the enclosed solid angle, the gate and its class.

#include "schmidt/schmidt.hpp"

#include <cstdio>

int main() {
    using namespace schmidt;

    const auto path = orange_slice_path(1.0, 2.0);
    const auto schedule = reverse_engineer(path);
    const Matrix4 u = propagate(schedule);

    std::printf("pulses:\n");
    for (const auto& p : schedule.pulses()) {
        const auto& c = std::get<FieldCoefficients>(p.field);
        std::printf("  %.3f s   c_xy=% .6f  c_dm=% .6f  c_z=% .6f\n", p.duration, c.xy, c.dm, c.z);
    }
    std::printf("solid angle      %.12f\n", solid_angle(path));
    std::printf("dynamical phase  %.3e\n", dynamical_phase(path).plus);

    std::printf("gate:\n");
    for (int r = 0; r < 4; ++r) {
        std::printf(" ");
        for (int c = 0; c < 4; ++c) {
            std::printf("  % .3f%+.3fi", u(r, c).real(), u(r, c).imag());
        }
        std::printf("\n");
    }

    const auto inv = makhlin_invariants(u);
    std::printf("G1 = %.6f%+.6fi  G2 = %.6f  -> %s\n", inv.g1.real(), inv.g1.imag(), inv.g2,
                std::string(to_string(classify(inv))).c_str());
    std::printf("fidelity vs iSWAP-type gate  %.15f\n", gate_fidelity(u, iswap_type_gate()));

    // |+>|+> ends up maximally entangled
    const Qubit plus(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    std::printf("concurrence of U|++>  %.12f\n", concurrence(u * tensor_product(plus, plus)));
    return 0;
}
