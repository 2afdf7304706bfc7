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
 * Deterministic text output: every floating-point value is written with 17
 * significant digits (%.17g), so reruns are byte-identical.
 */
#pragma once

#include "schmidt/linalg.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <string>

namespace schmidt::io {

inline std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    if (x == 0.0) {
        return "0"; // folds -0
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Row-major list of [re, im] pairs.
inline nlohmann::json matrix_to_json(const Matrix4& m) {
    auto out = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out.push_back({m(r, c).real(), m(r, c).imag()});
        }
    }
    return out;
}

inline nlohmann::json complex_to_json(Complex z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

namespace detail {

inline void write_string(std::string& out, const std::string& s) {
    out += nlohmann::json(s).dump();
}

inline void write_json(std::string& out, const nlohmann::json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (v.type()) {
    case nlohmann::json::value_t::object: {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : v.items()) {
            if (!first) {
                out += ",\n";
            }
            first = false;
            out += inner;
            write_string(out, key);
            out += ": ";
            write_json(out, value, indent + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    case nlohmann::json::value_t::array: {
        if (v.empty()) {
            out += "[]";
            return;
        }
        // arrays of scalars stay on one line
        bool flat = true;
        for (const auto& e : v) {
            flat = flat && !e.is_structured();
        }
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i > 0) {
                    out += ", ";
                }
                write_json(out, v[i], indent + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) {
                out += ",\n";
            }
            out += inner;
            write_json(out, v[i], indent + 1);
        }
        out += "\n" + pad + "]";
        return;
    }
    case nlohmann::json::value_t::number_float: {
        const double x = v.get<double>();
        // JSON has no literal for non-finite values
        out += std::isfinite(x) ? format_number(x) : "null";
        return;
    }
    default:
        out += v.dump();
        return;
    }
}

} // namespace detail

/// Pretty-printed JSON with keys in insertion-independent (sorted) order.
inline std::string to_json_text(const nlohmann::json& v) {
    std::string out;
    detail::write_json(out, v, 0);
    out += "\n";
    return out;
}

} // namespace schmidt::io
