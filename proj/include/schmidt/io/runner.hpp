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
 * Scenario execution: JSON reports for simulate/classify, CSV tables for
 * the two sweeps.
 */
#pragma once

#include "schmidt/io/format.hpp"
#include "schmidt/io/scenario.hpp"
#include "schmidt/schmidt.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace schmidt::io {

/// Output of one run. `passed` is false iff some tolerance check failed.
struct RunResult {
    std::string text;
    bool passed = true;
};

/**
 * Calls body(i) for i in [0, count) on up to `threads` workers. Callers
 * write into slot i of a preallocated buffer, so results do not depend on
 * scheduling. The first exception thrown by a worker is rethrown.
 */
template <typename Body>
void parallel_for(std::size_t count, Body&& body, unsigned threads = std::thread::hardware_concurrency()) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::size_t>(count, 64))));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> hold(error_lock);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next = count;
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

namespace detail {

inline std::string sector_name(Sector s) {
    return s == Sector::gamma ? "gamma" : "lambda";
}

inline nlohmann::json field_json(const FieldCoefficients& c) {
    return {{"xy", c.xy}, {"dm", c.dm}, {"z", c.z}};
}

inline nlohmann::json invariants_json(const LocalInvariants& inv) {
    return {{"g1", complex_to_json(inv.g1)}, {"g2", inv.g2}};
}

class Checks {
  public:
    void at_least(const std::string& name, double value, double threshold) {
        add(name, value, threshold, ">=", value >= threshold);
    }
    void at_most(const std::string& name, double value, double threshold) {
        add(name, value, threshold, "<=", value <= threshold);
    }

    bool passed() const { return passed_; }
    const nlohmann::json& json() const { return list_; }

  private:
    void add(const std::string& name, double value, double threshold, const char* op, bool ok) {
        list_.push_back({{"name", name}, {"value", value}, {"threshold", threshold}, {"op", op}, {"passed", ok}});
        passed_ = passed_ && ok;
    }

    nlohmann::json list_ = nlohmann::json::array();
    bool passed_ = true;
};

inline nlohmann::json schedule_json(const HamiltonianSchedule& schedule) {
    nlohmann::json pulses = nlohmann::json::array();
    for (const auto& p : schedule.pulses()) {
        nlohmann::json entry{{"duration", p.duration}};
        if (p.constant()) {
            entry["kind"] = "constant";
            entry["field"] = field_json(std::get<FieldCoefficients>(p.field));
        } else {
            const auto& samples = std::get<std::vector<FieldCoefficients>>(p.field);
            entry["kind"] = "sampled";
            entry["samples"] = samples.size();
            double peak = 0.0;
            for (const auto& c : samples) {
                peak = std::max(peak, c.vec().norm());
            }
            entry["peak_field_norm"] = peak;
        }
        pulses.push_back(std::move(entry));
    }
    return {{"sector", sector_name(schedule.sector())},
            {"duration", schedule.duration()},
            {"area", field_json(schedule.area())},
            {"pulses", std::move(pulses)}};
}

/// f|p> + g|q> on the coupled pair (p, q) of the sector, standard frame.
inline StateVector4 tracked_state(SchmidtCoordinates at, Sector s) {
    const auto [f, g] = schmidt_amplitudes(at);
    const auto [p, q] = sector_basis(s);
    StateVector4 v = StateVector4::Zero();
    v(p) = f;
    v(q) = g;
    return v;
}

} // namespace detail

inline RunResult run_simulate(const Scenario& scenario) {
    const auto& sim = std::get<SimulateScenario>(scenario.body);
    const double tol = scenario.tolerance;
    const auto schedule = reverse_engineer(sim.path, sim.sector, {sim.samples});
    const Matrix4 u = propagate(schedule);
    const auto inv = makhlin_invariants(u);
    const auto cls = classify(inv);
    const auto r0 = sim.path.start();

    detail::Checks checks;
    checks.at_most("unitarity_error", unitarity_error(u), tol);

    nlohmann::json report{{"command", "simulate"},
                          {"mode", sim.mode == SimulateMode::loop ? "loop" : "open"},
                          {"tolerance", tol},
                          {"start", {{"alpha", r0.alpha}, {"beta", r0.beta}}},
                          {"schedule", detail::schedule_json(schedule)},
                          {"propagator", matrix_to_json(u)},
                          {"invariants", detail::invariants_json(inv)},
                          {"class", std::string(to_string(cls))}};

    const auto phases = dynamical_phase(sim.path);
    report["dynamical_phases"] = {{"plus", phases.plus}, {"minus", phases.minus}};

    if (sim.mode == SimulateMode::loop) {
        const double omega = solid_angle(sim.path);
        const bool geometric = std::abs(phases.plus) <= tol;
        report["solid_angle"] = omega;
        report["geometric"] = geometric;

        const double hf = gate_fidelity(u, predicted_loop_gate(sim.path, sim.sector));
        report["holonomy_fidelity"] = hf;
        checks.at_least("holonomy_fidelity", hf, 1.0 - tol);

        const Matrix4 target = geometric_gate({r0.alpha, r0.beta, omega, sim.sector, LocalFrame::standard()});
        if (geometric) {
            const double gf = gate_fidelity(u, target);
            report["geometric_gate_fidelity"] = gf;
            checks.at_least("geometric_gate_fidelity", gf, 1.0 - tol);
        } else {
            report["geometric_gate_fidelity"] = "not_applicable";
        }
    } else {
        const auto r1 = sim.path.end();
        report["end"] = {{"alpha", r1.alpha}, {"beta", r1.beta}};
        const double tf = state_fidelity(u * detail::tracked_state(r0, sim.sector),
                                         detail::tracked_state(r1, sim.sector));
        report["tracking_fidelity"] = tf;
        checks.at_least("tracking_fidelity", tf, 1.0 - tol);
    }

    report["checks"] = checks.json();
    report["status"] = checks.passed() ? "pass" : "fail";
    return {to_json_text(report), checks.passed()};
}

inline RunResult run_classify(const Scenario& scenario) {
    const auto& c = std::get<ClassifyScenario>(scenario.body);
    const double tol = scenario.tolerance;
    const auto inv = makhlin_invariants(c.gate.matrix);
    const auto cls = classify(inv, c.classification_tolerance);

    detail::Checks checks;
    checks.at_most("unitarity_error", unitarity_error(c.gate.matrix), tol);

    nlohmann::json report{{"command", "classify"},
                          {"tolerance", tol},
                          {"classification_tolerance", c.classification_tolerance},
                          {"gate", {{"type", c.gate.kind}, {"matrix", matrix_to_json(c.gate.matrix)}}},
                          {"invariants", detail::invariants_json(inv)},
                          {"class", std::string(to_string(cls))},
                          {"perfect_entangler", is_perfect_entangler(cls)}};
    if (!c.gate.name.empty()) {
        report["gate"]["name"] = c.gate.name;
    }
    if (c.gate.spec) {
        const auto& s = *c.gate.spec;
        report["gate"]["alpha0"] = s.alpha0;
        report["gate"]["beta0"] = s.beta0;
        report["gate"]["omega"] = s.omega;
        report["gate"]["sector"] = detail::sector_name(s.sector);
        const auto closed = closed_form_invariants(s.alpha0, s.omega);
        report["closed_form_invariants"] = detail::invariants_json(closed);
        const double err = std::max(std::abs(closed.g1 - inv.g1), std::abs(closed.g2 - inv.g2));
        checks.at_most("closed_form_deviation", err, tol);
    }
    report["checks"] = checks.json();
    report["status"] = checks.passed() ? "pass" : "fail";
    return {to_json_text(report), checks.passed()};
}

inline constexpr const char* sweep_map_header = "alpha0,omega,g1_re,g1_im,g2,class";

/// Rows ordered alpha0-major, omega-minor.
inline RunResult run_sweep_map(const Scenario& scenario) {
    const auto& m = std::get<SweepMapScenario>(scenario.body);
    const auto na = static_cast<std::size_t>(m.alpha0.count);
    const auto no = static_cast<std::size_t>(m.omega.count);
    std::vector<std::string> rows(na * no);
    parallel_for(rows.size(), [&](std::size_t k) {
        const double a = m.alpha0.at(static_cast<int>(k / no));
        const double w = m.omega.at(static_cast<int>(k % no));
        const auto inv = makhlin_invariants(schmidt_gate(a, m.beta0, w));
        rows[k] = format_number(a) + "," + format_number(w) + "," + format_number(inv.g1.real()) + "," +
                  format_number(inv.g1.imag()) + "," + format_number(inv.g2) + "," +
                  std::string(to_string(classify(inv, m.classification_tolerance)));
    });
    std::string out = std::string(sweep_map_header) + "\n";
    for (const auto& r : rows) {
        out += r + "\n";
    }
    return {std::move(out), true};
}

inline constexpr const char* trotter_sweep_header =
    "theta,n,infidelity,operator_error,omega_trotter,omega_exact,g1_re,g1_im,g2";

/**
 * One row per (theta, n), theta-major. The composed gates are
 * (U_n)^n Z and U_exact Z with Z the Zeeman pulse; infidelity is
 * 1 - |tr(U^dagger V)|/4 between them, operator_error the phase-aligned
 * spectral distance. Both Omega columns come from the rotation block;
 * g1/g2 are the invariants of the exact composed gate.
 */
inline RunResult run_trotter_sweep(const Scenario& scenario) {
    const auto& t = std::get<TrotterSweepScenario>(scenario.body);
    const Matrix4 zeeman = zeeman_pulse();
    const std::size_t nn = t.steps.size();
    std::vector<std::string> rows(t.thetas.size() * nn);
    parallel_for(rows.size(), [&](std::size_t k) {
        const double theta = t.thetas[k / nn];
        const int n = t.steps[k % nn];
        const Matrix4 exact = trotter_target(theta) * zeeman;
        const Matrix4 approx = trotter_propagate({theta, n}) * zeeman;
        const auto inv = makhlin_invariants(exact);
        rows[k] = format_number(theta) + "," + std::to_string(n) + "," +
                  format_number(1.0 - gate_fidelity(approx, exact)) + "," +
                  format_number(phase_aligned_distance(approx, exact)) + "," +
                  format_number(rotation_angle(approx)) + "," + format_number(rotation_angle(exact)) + "," +
                  format_number(inv.g1.real()) + "," + format_number(inv.g1.imag()) + "," +
                  format_number(inv.g2);
    });
    std::string out = std::string(trotter_sweep_header) + "\n";
    for (const auto& r : rows) {
        out += r + "\n";
    }
    return {std::move(out), true};
}

inline RunResult run_scenario(const Scenario& scenario) {
    switch (scenario.command) {
    case Command::simulate:
        return run_simulate(scenario);
    case Command::classify:
        return run_classify(scenario);
    case Command::sweep_map:
        return run_sweep_map(scenario);
    case Command::trotter_sweep:
        return run_trotter_sweep(scenario);
    }
    return {};
}

} // namespace schmidt::io
