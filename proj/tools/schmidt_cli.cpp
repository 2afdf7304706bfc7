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

// schmidt-cli: batch front end for scenario files.
//
// Exit status: 0 all checks passed, 1 a tolerance check failed,
// 2 invalid scenario or usage, 3 runtime failure.

#include "schmidt/io/runner.hpp"
#include "schmidt/io/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct Invocation {
    std::string scenario_file;
    std::optional<std::string> out;
    std::optional<double> tol;
};

int run(schmidt::io::Command expected, const Invocation& inv) {
    using namespace schmidt::io;
    Scenario scenario;
    try {
        scenario = load_scenario(inv.scenario_file);
    } catch (const ScenarioError& e) {
        std::cerr << inv.scenario_file << ":" << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (scenario.command != expected) {
        std::cerr << inv.scenario_file << ":/command: scenario is a '" << to_string(scenario.command)
                  << "' scenario, not '" << to_string(expected) << "'\n";
        return 2;
    }
    if (inv.tol) {
        scenario.tolerance = *inv.tol;
    }

    RunResult result;
    try {
        result = run_scenario(scenario);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    const std::optional<std::string> target = inv.out ? inv.out : scenario.output;
    if (target && *target != "-") {
        std::ofstream file(*target, std::ios::binary);
        if (!file || !(file << result.text)) {
            std::cerr << "error: cannot write '" << *target << "'\n";
            return 3;
        }
    } else {
        std::cout << result.text;
    }
    if (!result.passed) {
        std::cerr << "tolerance check failed (see \"checks\" in the report)\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric Schmidt gate toolkit: simulate loops, classify gates, run sweeps"};
    app.require_subcommand(1);

    struct Entry {
        schmidt::io::Command command;
        const char* name;
        const char* help;
    };
    const Entry entries[] = {
        {schmidt::io::Command::simulate, "simulate", "Reverse-engineer and propagate a path; JSON report"},
        {schmidt::io::Command::classify, "classify", "Makhlin invariants and entangler class of a gate; JSON report"},
        {schmidt::io::Command::sweep_map, "sweep-map", "Invariants and class over an (alpha0, omega) grid; CSV"},
        {schmidt::io::Command::trotter_sweep, "trotter-sweep", "Trotter error and empirical omega(theta); CSV"},
    };

    Invocation inv;
    std::optional<schmidt::io::Command> chosen;
    for (const auto& e : entries) {
        auto* sub = app.add_subcommand(e.name, e.help);
        sub->add_option("scenario", inv.scenario_file, "Scenario file (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", inv.out, "Output path ('-' for stdout); overrides the scenario's output");
        sub->add_option("--tol", inv.tol, "Tolerance for pass/fail checks; overrides the scenario's tolerance")
            ->check(CLI::PositiveNumber);
        sub->callback([&chosen, c = e.command] { chosen = c; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return run(*chosen, inv);
}
