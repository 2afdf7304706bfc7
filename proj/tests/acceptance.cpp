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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "schmidt/io/runner.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace schmidt;
using namespace schmidt::testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        for (std::string c; std::getline(ls, c, ',');) {
            cells.push_back(c);
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

Matrix4 literal_iswap_type() {
    Matrix4 u;
    u << 1, 0, 0, 0,
         0, 0, 1, 0,
         0, -1, 0, 0,
         0, 0, 0, 1;
    return u;
}

Outcome iswap_reproduction() {
    const auto t0 = std::chrono::steady_clock::now();
    const Matrix4 u = propagate(two_pulse_schedule(1.0, 2.0));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double f = gate_fidelity(u, literal_iswap_type());
    return {f >= 1 - 1e-12 && secs < 1.0,
            "1-F=" + fmt("%.2e", 1 - f) + " runtime=" + fmt("%.2e", secs) + "s"};
}

Outcome closed_form_equatorial() {
    double worst = 0.0;
    for (int k = 0; k <= 100; ++k) {
        const double w = -2 * pi + 4 * pi * k / 100;
        const auto inv = makhlin_invariants(equatorial_rotation_gate(w));
        const double c = std::cos(w / 2);
        worst = std::max({worst, std::abs(inv.g1 - Complex(c * c * c * c, 0.0)),
                          std::abs(inv.g2 - (1 + 2 * std::cos(w)))});
    }
    return {worst <= 1e-12, "max deviation " + fmt("%.2e", worst) + " over 101 points"};
}

Outcome closed_form_general() {
    double worst = 0.0, beta_spread = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double a0 = uniform(0.0, pi), b0 = uniform(-pi, pi), w = uniform(-2 * pi, 2 * pi);
        const auto inv = makhlin_invariants(schmidt_gate(a0, b0, w));
        const auto ref = closed_form_invariants(a0, w);
        worst = std::max({worst, std::abs(inv.g1 - ref.g1), std::abs(inv.g2 - ref.g2)});
        const auto other = makhlin_invariants(schmidt_gate(a0, uniform(-pi, pi), w));
        beta_spread = std::max({beta_spread, std::abs(inv.g1 - other.g1), std::abs(inv.g2 - other.g2)});
    }
    return {worst <= 1e-10 && beta_spread <= 1e-12,
            "max deviation " + fmt("%.2e", worst) + ", beta0 spread " + fmt("%.2e", beta_spread)};
}

struct SweepRow {
    double alpha0, omega, g1_re, g1_im, g2;
    std::string cls;
};

std::vector<SweepRow> entangling_map() {
    io::Scenario s;
    s.command = io::Command::sweep_map;
    s.body = io::SweepMapScenario{{0.0, pi / 2, 200}, {-pi, pi, 200}};
    std::vector<SweepRow> rows;
    for (const auto& c : parse_csv(io::run_sweep_map(s).text)) {
        rows.push_back({std::stod(c[0]), std::stod(c[1]), std::stod(c[2]), std::stod(c[3]), std::stod(c[4]), c[5]});
    }
    return rows;
}

Outcome entangling_regions(const std::vector<SweepRow>& rows) {
    const double step = 2 * pi / 199;
    bool ok = rows.size() == 200 * 200;
    double min_pe_alpha = pi;
    double min_pe_omega = pi, max_pe_omega = 0.0;
    int spe_off_equator = 0, misses = 0, pe_count = 0;
    for (const auto& r : rows) {
        const bool pe = r.cls != "NOT_PE";
        if (pe) {
            ++pe_count;
            min_pe_alpha = std::min(min_pe_alpha, r.alpha0);
        }
        if (r.cls == "SPE" && std::abs(r.alpha0 - pi / 2) > 1e-6) {
            ++spe_off_equator;
        }
        if (std::abs(r.alpha0 - pi / 2) <= 1e-12) {
            const double w = std::abs(r.omega);
            if (pe) {
                min_pe_omega = std::min(min_pe_omega, w);
                max_pe_omega = std::max(max_pe_omega, w);
            } else if (w >= pi / 2 + 1e-9) {
                ++misses; // should have been a PE
            }
        }
    }
    ok = ok && min_pe_alpha >= pi / 4 - 1e-6 && spe_off_equator == 0 && misses == 0 &&
         min_pe_omega >= pi / 2 - step && max_pe_omega <= pi + 1e-12;
    return {ok, std::to_string(pe_count) + " PE cells, min PE alpha0 " + fmt("%.6f", min_pe_alpha) +
                    ", SPE off equator " + std::to_string(spe_off_equator) + ", equator PE window |omega| in [" +
                    fmt("%.6f", min_pe_omega) + ", " + fmt("%.6f", max_pe_omega) + "]"};
}

Outcome g1_bound(const std::vector<SweepRow>& rows) {
    double worst = 1e300;
    for (const auto& r : rows) {
        const double c = std::cos(r.alpha0);
        worst = std::min(worst, std::hypot(r.g1_re, r.g1_im) - c * c * c * c);
    }
    return {worst >= -1e-10, "min(G1 - cos^4 alpha0) = " + fmt("%.2e", worst)};
}

Outcome orange_slice_geometry() {
    const auto path = orange_slice_path(1.0, 2.0);
    const double omega = solid_angle(path);
    const double phi = dynamical_phase(path).plus;
    return {std::abs(omega + pi) <= 1e-9 && std::abs(phi) <= 1e-10,
            "solid angle " + fmt("%.15f", omega) + ", dynamical phase " + fmt("%.2e", phi)};
}

// Equator arc from r0 to its antipode, back along the meridian over
// the north or the south pole.
SchmidtPath geodesic_pair_loop(int k) {
    const double b0 = uniform(-pi, pi);
    const double dir = uniform(0, 1) < 0.5 ? 1.0 : -1.0;
    const double b1 = b0 + dir * pi;
    const auto first = equator_arc(b0, b1, uniform(0.3, 2.0));
    const double t2 = uniform(0.3, 2.0);
    if (k % 2 == 0) {
        return {{first, meridian_arc(b1, pi / 2, -pi / 2, t2)}, true};
    }
    return {{first, meridian_arc(b1, pi / 2, 3 * pi / 2, t2)}, true};
}

Outcome holonomy_property() {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const auto loop = geodesic_pair_loop(k);
        const auto r0 = loop.start();
        const Matrix4 u = propagate(reverse_engineer(loop));
        worst = std::max(worst, 1 - gate_fidelity(u, schmidt_gate(r0.alpha, r0.beta, solid_angle(loop))));
    }
    return {worst <= 1e-8, "max 1-F " + fmt("%.2e", worst) + " over 50 loops"};
}

Outcome algebra() {
    const auto ops = spin_operators();
    const double su2 = std::max({max_abs(commutator(ops.h_xy, ops.h_dm) - 2.0 * I * ops.h_z),
                                 max_abs(commutator(ops.h_dm, ops.h_z) - 2.0 * I * ops.h_xy),
                                 max_abs(commutator(ops.h_z, ops.h_xy) - 2.0 * I * ops.h_dm)});
    double comm = 0.0;
    for (int k = 0; k < 100; ++k) {
        const LocalFrame frame = random_frame();
        const Matrix4 a = schmidt_gate(uniform(-pi, pi), uniform(-pi, pi), uniform(-2 * pi, 2 * pi), frame);
        const Matrix4 b = lambda_gate(uniform(-pi, pi), uniform(-pi, pi), uniform(-2 * pi, 2 * pi), frame);
        comm = std::max(comm, max_abs(commutator(a, b)));
    }
    return {su2 <= 1e-15 && comm <= 1e-12, "SU(2) residual " + fmt("%.2e", su2) + ", sector commutator " +
                                               fmt("%.2e", comm)};
}

Outcome entangling_action() {
    const Matrix4 u = literal_iswap_type();
    double worst = 0.0;
    for (double sa : {1.0, -1.0}) {
        for (double sb : {1.0, -1.0}) {
            const Qubit a = Qubit(1.0, sa) / std::sqrt(2.0);
            const Qubit b = Qubit(1.0, sb) / std::sqrt(2.0);
            worst = std::max(worst, std::abs(concurrence(u * tensor_product(a, b)) - 1.0));
        }
    }
    return {worst <= 1e-12, "max |C - 1| " + fmt("%.2e", worst)};
}

Outcome trotter_scaling() {
    const double theta = pi / 4;
    const Matrix4 exact = trotter_target(theta);
    std::string ratios = "infidelity ratios";
    std::string dist_ratios = "distance ratios";
    bool ok = true;
    double prev = 0.0, prev_d = 0.0;
    for (int n = 4; n <= 256; n *= 2) {
        const Matrix4 approx = trotter_propagate({theta, n});
        const double inf = 1 - gate_fidelity(approx, exact);
        const double d = phase_aligned_distance(approx, exact);
        if (n > 4) {
            const double r = prev / inf;
            ok = ok && r >= 1.7 && r <= 2.3;
            ratios += " " + fmt("%.3f", r);
            dist_ratios += " " + fmt("%.3f", prev_d / d);
        }
        prev = inf;
        prev_d = d;
    }
    double edge = 0.0;
    for (double t : {0.0, pi / 2}) {
        for (int n = 1; n <= 256; n *= 2) {
            edge = std::max(edge, 1 - gate_fidelity(trotter_propagate({t, n}), trotter_target(t)));
        }
    }
    ok = ok && edge <= 1e-13;
    return {ok, ratios + "; " + dist_ratios + "; theta in {0, pi/2} max 1-F " + fmt("%.2e", edge)};
}

Outcome round_trip() {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const StateVector4 psi = random_state();
        worst = std::max(worst, 1 - state_fidelity(psi, schmidt_decompose(psi).assemble()));
    }
    return {worst <= 1e-12, "max 1-F " + fmt("%.2e", worst)};
}

Outcome omega_theta_report() {
    io::Scenario s;
    s.command = io::Command::trotter_sweep;
    io::TrotterSweepScenario t;
    for (int k = 0; k <= 32; ++k) {
        t.thetas.push_back(pi * k / 32);
    }
    t.steps = {1, 16, 256};
    s.body = t;
    const auto rows = parse_csv(io::run_trotter_sweep(s).text);
    double consistency = 0.0, vs_shifted = 0.0, vs_plain = 0.0;
    for (const auto& r : rows) {
        const double theta = std::stod(r[0]);
        const double w = std::stod(r[5]);
        const double c = std::cos(w / 2);
        consistency = std::max({consistency, std::abs(std::stod(r[6]) - c * c * c * c), std::abs(std::stod(r[7])),
                                std::abs(std::stod(r[8]) - (1 + 2 * std::cos(w)))});
        vs_shifted = std::max(vs_shifted, std::abs(std::remainder(w - (2 * theta - pi), 4 * pi)));
        vs_plain = std::max(vs_plain, std::abs(std::remainder(w - 2 * theta, 4 * pi)));
    }
    const bool matches = vs_shifted <= 1e-9;
    std::string detail = std::to_string(rows.size()) + " rows; invariant self-consistency " +
                         fmt("%.2e", consistency) + "; max |omega - (2 theta - pi)| " + fmt("%.2e", vs_shifted) +
                         "; max |omega - 2 theta| " + fmt("%.3f", vs_plain);
    if (matches && vs_plain > 1e-6) {
        detail += " (curve follows 2 theta - pi, not 2 theta)";
    }
    return {consistency <= 1e-12 && (matches || vs_plain > 1e-6), detail};
}

} // namespace

int main() {
    const auto map = entangling_map();
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"iSWAP reproduction", iswap_reproduction},
        {"closed-form invariants (equatorial)", closed_form_equatorial},
        {"general invariants (1000 draws)", closed_form_general},
        {"entangling map regions (200x200)", [&] { return entangling_regions(map); }},
        {"G1 lower bound", [&] { return g1_bound(map); }},
        {"orange-slice geometry", orange_slice_geometry},
        {"holonomy property (50 geodesic loops)", holonomy_property},
        {"algebra and sector commutation", algebra},
        {"entangling action on product states", entangling_action},
        {"Trotter scaling", trotter_scaling},
        {"Schmidt round trip (1000 states)", round_trip},
        {"omega(theta) report", omega_theta_report},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
