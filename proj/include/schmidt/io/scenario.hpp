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
 * Scenario files: parsing and validation.
 *
 * A scenario is a JSON document following schema/scenario.schema.json
 * (schema_version 1). Validation happens before anything runs; every
 * problem is reported with the JSON pointer of the offending field, and
 * syntax errors with line and column.
 */
#pragma once

#include "schmidt/dynamics.hpp"
#include "schmidt/gates.hpp"
#include "schmidt/invariants.hpp"
#include "schmidt/path.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace schmidt::io {

inline constexpr int schema_version = 1;

/// Invalid scenario; `where` is a JSON pointer or "line:column".
class ScenarioError : public std::runtime_error {
  public:
    ScenarioError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const { return where_; }

  private:
    std::string where_;
};

enum class SimulateMode { loop, open };

struct SimulateScenario {
    SchmidtPath path;
    SimulateMode mode = SimulateMode::loop;
    Sector sector = Sector::gamma;
    std::size_t samples = 1000;
};

struct GateInput {
    /// "schmidt", "equatorial_rotation", "matrix" or "named".
    std::string kind;
    Matrix4 matrix;
    /// Present for parametrized geometric gates; enables the closed-form check.
    std::optional<GeometricGateSpec> spec;
    std::string name;
};

struct ClassifyScenario {
    GateInput gate;
    double classification_tolerance = default_classification_tol;
};

struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    int count = 1;

    double at(int i) const {
        return count == 1 ? min : min + (max - min) * static_cast<double>(i) / (count - 1);
    }
};

struct SweepMapScenario {
    GridAxis alpha0;
    GridAxis omega;
    double beta0 = 0.0;
    double classification_tolerance = default_classification_tol;
};

struct TrotterSweepScenario {
    std::vector<double> thetas;
    std::vector<int> steps;
};

enum class Command { simulate, classify, sweep_map, trotter_sweep };

inline std::string to_string(Command c) {
    switch (c) {
    case Command::simulate:
        return "simulate";
    case Command::classify:
        return "classify";
    case Command::sweep_map:
        return "sweep-map";
    case Command::trotter_sweep:
        return "trotter-sweep";
    }
    return "?";
}

struct Scenario {
    Command command = Command::simulate;
    std::optional<std::string> output;
    /// Threshold for the pass/fail checks of a run.
    double tolerance = tolerance::pipeline;
    std::variant<std::monostate, SimulateScenario, ClassifyScenario, SweepMapScenario, TrotterSweepScenario> body;
};

namespace detail {

using nlohmann::json;

class Reader {
  public:
    Reader(const json& node, std::string pointer) : node_(node), pointer_(std::move(pointer)) {}

    const json& node() const { return node_; }
    const std::string& pointer() const { return pointer_; }

    [[noreturn]] void fail(const std::string& what) const { throw ScenarioError(where(), what); }

    std::string where() const { return pointer_.empty() ? "/" : pointer_; }

    Reader child(const std::string& key) const {
        if (!node_.contains(key)) {
            throw ScenarioError(pointer_ + "/" + key, "required field is missing");
        }
        return {node_.at(key), pointer_ + "/" + key};
    }

    Reader element(std::size_t i) const { return {node_.at(i), pointer_ + "/" + std::to_string(i)}; }

    bool has(const std::string& key) const { return node_.contains(key); }

    void require_object(const std::set<std::string>& allowed) const {
        if (!node_.is_object()) {
            fail("expected an object");
        }
        for (const auto& [key, value] : node_.items()) {
            if (!allowed.contains(key)) {
                throw ScenarioError(pointer_ + "/" + key, "unknown field");
            }
        }
    }

    double number() const {
        if (!node_.is_number()) {
            fail("expected a number");
        }
        const double x = node_.get<double>();
        if (!std::isfinite(x)) {
            fail("expected a finite number");
        }
        return x;
    }

    double positive() const {
        const double x = number();
        if (!(x > 0.0)) {
            fail("expected a positive number");
        }
        return x;
    }

    long long integer(long long min_value) const {
        if (!node_.is_number_integer()) {
            fail("expected an integer");
        }
        const auto v = node_.get<long long>();
        if (v < min_value) {
            fail("expected an integer >= " + std::to_string(min_value));
        }
        return v;
    }

    bool boolean() const {
        if (!node_.is_boolean()) {
            fail("expected true or false");
        }
        return node_.get<bool>();
    }

    std::string string(const std::set<std::string>& choices = {}) const {
        if (!node_.is_string()) {
            fail("expected a string");
        }
        auto s = node_.get<std::string>();
        if (!choices.empty() && !choices.contains(s)) {
            std::string list;
            for (const auto& c : choices) {
                list += (list.empty() ? "" : ", ") + c;
            }
            fail("expected one of: " + list);
        }
        return s;
    }

    std::size_t array(std::size_t min_size) const {
        if (!node_.is_array()) {
            fail("expected an array");
        }
        if (node_.size() < min_size) {
            fail("expected at least " + std::to_string(min_size) + " elements");
        }
        return node_.size();
    }

  private:
    const json& node_;
    std::string pointer_;
};

inline SchmidtCoordinates read_coords(const Reader& r) {
    r.require_object({"alpha", "beta"});
    return {r.child("alpha").number(), r.child("beta").number()};
}

inline Qubit read_qubit(const Reader& r) {
    r.array(2);
    if (r.node().size() != 2) {
        r.fail("expected two complex amplitudes");
    }
    Qubit q;
    for (std::size_t i = 0; i < 2; ++i) {
        const Reader z = r.element(i);
        z.array(2);
        if (z.node().size() != 2) {
            z.fail("expected [re, im]");
        }
        q(static_cast<Eigen::Index>(i)) = Complex(z.element(0).number(), z.element(1).number());
    }
    return q;
}

inline Sector read_sector(const Reader& r) {
    return r.string({"gamma", "lambda"}) == "gamma" ? Sector::gamma : Sector::lambda;
}

// Constructors of the library types throw std::invalid_argument; report
// those against the field being built.
template <typename F>
auto build(const Reader& at, F&& make) -> decltype(make()) {
    try {
        return make();
    } catch (const std::invalid_argument& e) {
        at.fail(e.what());
    }
}

inline PathSegment read_segment(const Reader& r) {
    if (!r.node().is_object()) {
        r.fail("expected an object");
    }
    const std::string type = r.child("type").string(
        {"linear", "equator", "meridian", "latitude", "hold", "great_circle", "tilted", "sampled"});
    if (type == "linear") {
        r.require_object({"type", "start", "end", "duration"});
        const auto a = read_coords(r.child("start"));
        const auto b = read_coords(r.child("end"));
        const double d = r.child("duration").positive();
        return build(r, [&] { return LinearArc(a, b, d); });
    }
    if (type == "equator") {
        r.require_object({"type", "beta_start", "beta_end", "duration"});
        const double b0 = r.child("beta_start").number();
        const double b1 = r.child("beta_end").number();
        const double d = r.child("duration").positive();
        return build(r, [&] { return equator_arc(b0, b1, d); });
    }
    if (type == "meridian") {
        r.require_object({"type", "beta", "alpha_start", "alpha_end", "duration"});
        const double b = r.child("beta").number();
        const double a0 = r.child("alpha_start").number();
        const double a1 = r.child("alpha_end").number();
        const double d = r.child("duration").positive();
        return build(r, [&] { return meridian_arc(b, a0, a1, d); });
    }
    if (type == "latitude") {
        r.require_object({"type", "alpha", "beta_start", "beta_end", "duration"});
        const double a = r.child("alpha").number();
        const double b0 = r.child("beta_start").number();
        const double b1 = r.child("beta_end").number();
        const double d = r.child("duration").positive();
        return build(r, [&] { return latitude_arc(a, b0, b1, d); });
    }
    if (type == "hold") {
        r.require_object({"type", "at", "duration"});
        const auto c = read_coords(r.child("at"));
        const double d = r.child("duration").positive();
        return build(r, [&] { return hold(c, d); });
    }
    if (type == "great_circle") {
        r.require_object({"type", "start", "axis", "sweep", "duration"});
        const auto c = read_coords(r.child("start"));
        const Reader axis = r.child("axis");
        if (axis.array(3) != 3) {
            axis.fail("expected [x, y, z]");
        }
        const Vector3 u(axis.element(0).number(), axis.element(1).number(), axis.element(2).number());
        const double sweep = r.child("sweep").number();
        const double d = r.child("duration").positive();
        return build(r, [&] { return GreatCircleArc(c, u, sweep, d); });
    }
    if (type == "tilted") {
        r.require_object({"type", "theta", "duration"});
        const double theta = r.child("theta").number();
        const double d = r.child("duration").positive();
        return build(r, [&] { return tilted_arc(theta, d); });
    }
    r.require_object({"type", "alpha", "beta", "duration"});
    const Reader alpha = r.child("alpha");
    const Reader beta = r.child("beta");
    const std::size_t n = alpha.array(4);
    if (beta.array(4) != n) {
        beta.fail("must have as many samples as alpha");
    }
    std::vector<SchmidtCoordinates> nodes(n);
    for (std::size_t k = 0; k < n; ++k) {
        nodes[k] = {alpha.element(k).number(), beta.element(k).number()};
    }
    const double d = r.child("duration").positive();
    return build(r, [&] { return SampledArc(std::move(nodes), d); });
}

inline SchmidtPath read_path(const Reader& r) {
    if (!r.node().is_object()) {
        r.fail("expected an object");
    }
    if (r.has("preset")) {
        r.require_object({"preset", "t1", "tau"});
        r.child("preset").string({"orange_slice"});
        const double t1 = r.child("t1").positive();
        const double tau = r.child("tau").positive();
        return build(r, [&] { return orange_slice_path(t1, tau); });
    }
    r.require_object({"closed", "segments"});
    const bool closed = r.child("closed").boolean();
    const Reader segs = r.child("segments");
    const std::size_t n = segs.array(1);
    std::vector<PathSegment> segments;
    segments.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        segments.push_back(read_segment(segs.element(i)));
    }
    return build(r, [&] { return SchmidtPath(std::move(segments), closed); });
}

inline Matrix4 named_gate(const std::string& name) {
    Matrix4 u = Matrix4::Identity();
    if (name == "cnot") {
        u << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
    } else if (name == "cz") {
        u(3, 3) = -1.0;
    } else if (name == "swap") {
        u << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
    } else if (name == "iswap") {
        u << 1, 0, 0, 0, 0, 0, I, 0, 0, I, 0, 0, 0, 0, 0, 1;
    } else if (name == "sqrt_swap") {
        const Complex a(0.5, 0.5), b(0.5, -0.5);
        u << 1, 0, 0, 0, 0, a, b, 0, 0, b, a, 0, 0, 0, 0, 1;
    } else if (name == "iswap_type") {
        u = iswap_type_gate();
    }
    return u;
}

inline GateInput read_gate(const Reader& r) {
    if (!r.node().is_object()) {
        r.fail("expected an object");
    }
    GateInput g;
    g.kind = r.child("type").string({"schmidt", "equatorial_rotation", "matrix", "named"});
    if (g.kind == "schmidt") {
        r.require_object({"type", "alpha0", "beta0", "omega", "sector", "frame"});
        GeometricGateSpec spec;
        spec.alpha0 = r.child("alpha0").number();
        spec.beta0 = r.child("beta0").number();
        spec.omega = r.child("omega").number();
        if (r.has("sector")) {
            spec.sector = read_sector(r.child("sector"));
        }
        if (r.has("frame")) {
            const Reader f = r.child("frame");
            f.require_object({"n", "m"});
            const Qubit n = read_qubit(f.child("n"));
            const Qubit m = read_qubit(f.child("m"));
            spec.frame = build(f, [&] { return LocalFrame(n, m); });
        }
        g.spec = spec;
        g.matrix = geometric_gate(spec);
    } else if (g.kind == "equatorial_rotation") {
        r.require_object({"type", "omega"});
        const double omega = r.child("omega").number();
        g.spec = GeometricGateSpec{pi / 2, pi / 2, omega, Sector::gamma, LocalFrame::standard()};
        g.matrix = equatorial_rotation_gate(omega);
    } else if (g.kind == "named") {
        r.require_object({"type", "name"});
        g.name = r.child("name").string({"identity", "cnot", "cz", "swap", "iswap", "sqrt_swap", "iswap_type"});
        g.matrix = named_gate(g.name);
    } else {
        r.require_object({"type", "re", "im"});
        for (const char* part : {"re", "im"}) {
            const Reader rows = r.child(part);
            if (rows.array(4) != 4) {
                rows.fail("expected 4 rows");
            }
            for (std::size_t i = 0; i < 4; ++i) {
                const Reader row = rows.element(i);
                if (row.array(4) != 4) {
                    row.fail("expected 4 entries");
                }
                for (std::size_t j = 0; j < 4; ++j) {
                    const double x = row.element(j).number();
                    auto& entry = g.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                    entry = std::string(part) == "re" ? Complex(x, entry.imag()) : Complex(entry.real(), x);
                }
            }
        }
        const double err = unitarity_error(g.matrix);
        if (err > tolerance::pipeline) {
            std::ostringstream msg;
            msg << "matrix is not unitary (max |U^dagger U - 1| = " << err << ")";
            r.fail(msg.str());
        }
    }
    return g;
}

inline GridAxis read_axis(const Reader& r) {
    r.require_object({"min", "max", "count"});
    GridAxis a{r.child("min").number(), r.child("max").number(),
               static_cast<int>(r.child("count").integer(1))};
    if (a.max < a.min) {
        r.child("max").fail("must not be below min");
    }
    return a;
}

} // namespace detail

/// Validate and convert a parsed scenario document.
inline Scenario parse_scenario(const nlohmann::json& doc) {
    using detail::Reader;
    const Reader root(doc, "");
    if (!doc.is_object()) {
        root.fail("scenario must be a JSON object");
    }
    const auto version = root.child("schema_version").integer(1);
    if (version != schema_version) {
        root.child("schema_version").fail("unsupported schema version " + std::to_string(version));
    }
    const std::string command =
        root.child("command").string({"simulate", "classify", "sweep-map", "trotter-sweep"});

    const std::set<std::string> common{"schema_version", "command", "output", "tolerance", "description"};
    auto allowed = [&common](std::initializer_list<std::string> extra) {
        std::set<std::string> keys = common;
        keys.insert(extra);
        return keys;
    };

    Scenario s;
    if (root.has("output")) {
        s.output = root.child("output").string();
    }
    if (root.has("tolerance")) {
        s.tolerance = root.child("tolerance").positive();
    }
    if (root.has("description")) {
        root.child("description").string();
    }

    if (command == "simulate") {
        root.require_object(allowed({"path", "mode", "sector", "samples"}));
        SimulateMode mode = SimulateMode::loop;
        if (root.has("mode")) {
            mode = root.child("mode").string({"loop", "open"}) == "loop" ? SimulateMode::loop
                                                                          : SimulateMode::open;
        }
        Sector sector = Sector::gamma;
        if (root.has("sector")) {
            sector = detail::read_sector(root.child("sector"));
        }
        std::size_t samples = 1000;
        if (root.has("samples")) {
            samples = static_cast<std::size_t>(root.child("samples").integer(1));
        }
        SchmidtPath path = detail::read_path(root.child("path"));
        if (mode == SimulateMode::loop && !path.closed()) {
            root.child("path").child("closed").fail("loop simulation needs a closed path (use \"mode\": \"open\")");
        }
        s.command = Command::simulate;
        s.body = SimulateScenario{std::move(path), mode, sector, samples};
    } else if (command == "classify") {
        root.require_object(allowed({"gate", "classification_tolerance"}));
        ClassifyScenario c{detail::read_gate(root.child("gate"))};
        if (root.has("classification_tolerance")) {
            c.classification_tolerance = root.child("classification_tolerance").positive();
        }
        s.command = Command::classify;
        s.body = std::move(c);
    } else if (command == "sweep-map") {
        root.require_object(allowed({"grid", "beta0", "classification_tolerance"}));
        const Reader grid = root.child("grid");
        grid.require_object({"alpha0", "omega"});
        SweepMapScenario m{detail::read_axis(grid.child("alpha0")), detail::read_axis(grid.child("omega"))};
        if (root.has("beta0")) {
            m.beta0 = root.child("beta0").number();
        }
        if (root.has("classification_tolerance")) {
            m.classification_tolerance = root.child("classification_tolerance").positive();
        }
        s.command = Command::sweep_map;
        s.body = m;
    } else {
        root.require_object(allowed({"theta", "steps"}));
        TrotterSweepScenario t;
        const Reader theta = root.child("theta");
        if (theta.node().is_array()) {
            const std::size_t n = theta.array(1);
            for (std::size_t i = 0; i < n; ++i) {
                t.thetas.push_back(theta.element(i).number());
            }
        } else {
            t.thetas.push_back(theta.number());
        }
        const Reader steps = root.child("steps");
        const std::size_t n = steps.array(1);
        for (std::size_t i = 0; i < n; ++i) {
            t.steps.push_back(static_cast<int>(steps.element(i).integer(1)));
        }
        s.command = Command::trotter_sweep;
        s.body = std::move(t);
    }
    return s;
}

/// Parse scenario text; syntax errors are reported as "line:column".
inline Scenario parse_scenario_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ScenarioError(std::to_string(line) + ":" + std::to_string(column), "syntax error");
    }
    return parse_scenario(doc);
}

inline Scenario load_scenario(const std::string& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("cannot open scenario file '" + file + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

} // namespace schmidt::io
