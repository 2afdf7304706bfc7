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
 * Time-parametrized paths on the Schmidt sphere and their solid angles.
 *
 * A path is a sequence of segments expressed in the extended chart (see
 * geometry.hpp). Coordinates must be continuous across segment boundaries;
 * a pole is crossed by carrying alpha through 0 or pi at fixed beta, never
 * by a jump in beta.
 */
#pragma once

#include "schmidt/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace schmidt {

struct CoordinateRates {
    double alpha_dot = 0.0;
    double beta_dot = 0.0;
};

namespace detail {

inline void require_duration(double duration, const char* where) {
    if (!std::isfinite(duration) || duration <= 0.0) {
        throw std::invalid_argument(std::string(where) + ": duration must be positive and finite");
    }
}

inline void require_finite_coords(SchmidtCoordinates c, const char* where) {
    if (!std::isfinite(c.alpha) || !std::isfinite(c.beta)) {
        throw std::invalid_argument(std::string(where) + ": non-finite coordinates");
    }
}

// 5-point Gauss-Legendre on [0, 1].
inline constexpr std::array<double, 5> gl_nodes{0.04691007703066800, 0.23076534494715845, 0.5,
                                                0.76923465505284155, 0.95308992296933200};
inline constexpr std::array<double, 5> gl_weights{0.11846344252809454, 0.23931433524968324,
                                                  0.28444444444444444, 0.23931433524968324,
                                                  0.11846344252809454};

template <typename F>
double integrate(F&& integrand, double duration, int panels) {
    const double h = duration / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        for (std::size_t k = 0; k < gl_nodes.size(); ++k) {
            sum += gl_weights[k] * integrand((p + gl_nodes[k]) * h);
        }
    }
    return sum * h;
}

// Signed count of crossings of odd multiples of pi when alpha moves from a to b.
// Uses (min, max] so that reversal negates and concatenation adds.
inline int south_pole_crossings(double a, double b) {
    if (a == b) {
        return 0;
    }
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    // odd multiples (2k+1) pi in (lo, hi]
    const auto count = static_cast<int>(std::floor((hi - pi) / (2.0 * pi)) -
                                        std::floor((lo - pi) / (2.0 * pi)));
    return b > a ? count : -count;
}

} // namespace detail

/// Segment along which alpha and beta both vary linearly in time.
class LinearArc {
  public:
    LinearArc(SchmidtCoordinates start, SchmidtCoordinates end, double duration)
        : start_(start), end_(end), duration_(duration) {
        detail::require_finite_coords(start, "LinearArc");
        detail::require_finite_coords(end, "LinearArc");
        detail::require_duration(duration, "LinearArc");
    }

    double duration() const { return duration_; }
    SchmidtCoordinates start() const { return start_; }
    SchmidtCoordinates end() const { return end_; }

    SchmidtCoordinates at(double t) const {
        const double s = t / duration_;
        return {start_.alpha + s * (end_.alpha - start_.alpha),
                start_.beta + s * (end_.beta - start_.beta)};
    }

    CoordinateRates rates(double /*t*/) const {
        return {(end_.alpha - start_.alpha) / duration_, (end_.beta - start_.beta) / duration_};
    }

    /// True when the reverse-engineered field is constant along the arc.
    bool constant_field() const { return start_.alpha == end_.alpha || start_.beta == end_.beta; }

    LinearArc reversed() const { return {end_, start_, duration_}; }

  private:
    SchmidtCoordinates start_;
    SchmidtCoordinates end_;
    double duration_;
};

/// Arc of a great circle, swept at a constant angular rate about a fixed axis.
///
/// The axis must be perpendicular to the start point and not lie in the
/// equatorial plane (meridian circles pass through the poles and are
/// expressed as LinearArc in the extended chart).
class GreatCircleArc {
  public:
    GreatCircleArc(SchmidtCoordinates start, const Vector3& axis, double sweep, double duration)
        : start_(start), sweep_(sweep), duration_(duration) {
        detail::require_finite_coords(start, "GreatCircleArc");
        detail::require_duration(duration, "GreatCircleArc");
        if (!std::isfinite(sweep) || !axis.allFinite() || axis.norm() == 0.0) {
            throw std::invalid_argument("GreatCircleArc: invalid axis or sweep");
        }
        axis_ = axis.normalized();
        e1_ = sphere_point(start);
        if (std::abs(axis_.dot(e1_)) > 1e-9) {
            throw std::invalid_argument("GreatCircleArc: axis must be perpendicular to the start point");
        }
        if (std::abs(axis_.z()) < 1e-9) {
            throw std::invalid_argument(
                "GreatCircleArc: circle passes through the poles; use a meridian LinearArc");
        }
        e2_ = axis_.cross(e1_);
        const double reduced = std::remainder(start.alpha, 2.0 * pi);
        alpha_sign_ = reduced < 0.0 ? -1.0 : 1.0;
        alpha_offset_ = start.alpha - reduced;
    }

    double duration() const { return duration_; }
    double sweep() const { return sweep_; }
    const Vector3& axis() const { return axis_; }
    SchmidtCoordinates start() const { return start_; }
    SchmidtCoordinates end() const { return at(duration_); }

    Vector3 point(double t) const {
        const double phi = sweep_ * t / duration_;
        return std::cos(phi) * e1_ + std::sin(phi) * e2_;
    }

    SchmidtCoordinates at(double t) const {
        const Vector3 r = point(t);
        const double alpha_std = std::acos(std::clamp(r.z(), -1.0, 1.0));
        return {alpha_sign_ * alpha_std + alpha_offset_, start_.beta + beta_advance(t)};
    }

    CoordinateRates rates(double t) const {
        const double phi_dot = sweep_ / duration_;
        const double phi = sweep_ * t / duration_;
        const Vector3 r = point(t);
        const Vector3 r_dot = phi_dot * (-std::sin(phi) * e1_ + std::cos(phi) * e2_);
        const double rho2 = r.x() * r.x() + r.y() * r.y();
        return {alpha_sign_ * (-r_dot.z() / std::sqrt(rho2)), phi_dot * axis_.z() / rho2};
    }

    GreatCircleArc reversed() const { return {end(), axis_, -sweep_, duration_}; }

  private:
    // Unwrapped change of beta since the start. In the xy-plane the arc is
    // an origin-centered ellipse, so its argument is monotone with rate
    // sign(axis.z) per unit of sweep angle.
    double beta_advance(double t) const {
        const double phi = sweep_ * t / duration_;
        const Vector3 r = point(t);
        const double raw = std::atan2(r.y(), r.x()) - std::atan2(e1_.y(), e1_.x());
        const double dir = (phi >= 0.0 ? 1.0 : -1.0) * (axis_.z() > 0.0 ? 1.0 : -1.0);
        const double turns = std::floor(std::abs(phi) / (2.0 * pi));
        const double rem = std::abs(phi) - 2.0 * pi * turns;
        double w = std::fmod(dir * raw, 2.0 * pi);
        if (w < 0.0) {
            w += 2.0 * pi;
        }
        if (rem < 1e-12 && w > pi) {
            w = 0.0;
        }
        return dir * (2.0 * pi * turns + w);
    }

    SchmidtCoordinates start_;
    Vector3 axis_;
    Vector3 e1_;
    Vector3 e2_;
    double sweep_;
    double duration_;
    double alpha_sign_ = 1.0;
    double alpha_offset_ = 0.0;
};

/// Uniform time samples of (alpha, beta); node k sits at t = k * duration / (N - 1).
///
/// Values and rates between nodes come from 4-point Lagrange interpolation
/// (centered in the interior, one-sided at the two end cells).
class SampledArc {
  public:
    SampledArc(std::vector<SchmidtCoordinates> nodes, double duration)
        : nodes_(std::move(nodes)), duration_(duration) {
        detail::require_duration(duration, "SampledArc");
        if (nodes_.size() < 4) {
            throw std::invalid_argument("SampledArc: at least 4 samples are required");
        }
        for (const auto& c : nodes_) {
            detail::require_finite_coords(c, "SampledArc");
        }
    }

    double duration() const { return duration_; }
    const std::vector<SchmidtCoordinates>& nodes() const { return nodes_; }
    std::size_t cells() const { return nodes_.size() - 1; }
    double step() const { return duration_ / static_cast<double>(cells()); }
    SchmidtCoordinates start() const { return nodes_.front(); }
    SchmidtCoordinates end() const { return nodes_.back(); }

    SchmidtCoordinates at(double t) const {
        const auto [j, w, dw] = stencil(t);
        SchmidtCoordinates c{0.0, 0.0};
        for (int k = 0; k < 4; ++k) {
            c.alpha += w[k] * nodes_[j + k].alpha;
            c.beta += w[k] * nodes_[j + k].beta;
        }
        return c;
    }

    CoordinateRates rates(double t) const {
        const auto [j, w, dw] = stencil(t);
        CoordinateRates r;
        for (int k = 0; k < 4; ++k) {
            r.alpha_dot += dw[k] * nodes_[j + k].alpha;
            r.beta_dot += dw[k] * nodes_[j + k].beta;
        }
        r.alpha_dot /= step();
        r.beta_dot /= step();
        return r;
    }

    /// Index of the first node pair whose coordinates jump by more than
    /// max_step (folded-chart pole crossings, beta wrapping at +-pi).
    std::optional<std::size_t> find_jump(double max_step = pi / 2) const {
        for (std::size_t k = 0; k + 1 < nodes_.size(); ++k) {
            if (std::abs(nodes_[k + 1].alpha - nodes_[k].alpha) > max_step ||
                std::abs(nodes_[k + 1].beta - nodes_[k].beta) > max_step) {
                return k;
            }
        }
        return std::nullopt;
    }

    SampledArc reversed() const {
        return {std::vector<SchmidtCoordinates>(nodes_.rbegin(), nodes_.rend()), duration_};
    }

  private:
    struct Stencil {
        std::size_t first;
        std::array<double, 4> w;
        std::array<double, 4> dw;
    };

    Stencil stencil(double t) const {
        const double x = std::clamp(t / step(), 0.0, static_cast<double>(cells()));
        const auto cell = std::min(static_cast<std::size_t>(x), cells() - 1);
        const std::size_t first = std::min(cell > 0 ? cell - 1 : 0, nodes_.size() - 4);
        const double s = x - static_cast<double>(first);
        const double a = s, b = s - 1.0, c = s - 2.0, d = s - 3.0;
        return {first,
                {-b * c * d / 6.0, a * c * d / 2.0, -a * b * d / 2.0, a * b * c / 6.0},
                {-(c * d + b * d + b * c) / 6.0, (c * d + a * d + a * c) / 2.0,
                 -(b * d + a * d + a * b) / 2.0, (b * c + a * c + a * b) / 6.0}};
    }

    std::vector<SchmidtCoordinates> nodes_;
    double duration_;
};

using PathSegment = std::variant<LinearArc, GreatCircleArc, SampledArc>;

inline double segment_duration(const PathSegment& s) {
    return std::visit([](const auto& seg) { return seg.duration(); }, s);
}
inline SchmidtCoordinates segment_start(const PathSegment& s) {
    return std::visit([](const auto& seg) { return seg.start(); }, s);
}
inline SchmidtCoordinates segment_end(const PathSegment& s) {
    return std::visit([](const auto& seg) { return seg.end(); }, s);
}
inline SchmidtCoordinates segment_at(const PathSegment& s, double t) {
    return std::visit([t](const auto& seg) { return seg.at(t); }, s);
}
inline CoordinateRates segment_rates(const PathSegment& s, double t) {
    return std::visit([t](const auto& seg) { return seg.rates(t); }, s);
}

/// Tolerance for coordinate continuity and loop closure.
inline constexpr double path_continuity_tol = 1e-9;

class SchmidtPath {
  public:
    SchmidtPath(std::vector<PathSegment> segments, bool closed)
        : segments_(std::move(segments)), closed_(closed) {
        if (segments_.empty()) {
            throw std::invalid_argument("SchmidtPath: a path needs at least one segment");
        }
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            if (const auto* arc = std::get_if<SampledArc>(&segments_[i])) {
                if (const auto k = arc->find_jump()) {
                    std::ostringstream msg;
                    msg << "SchmidtPath: segment " << i << " jumps between samples " << *k << " and "
                        << *k + 1 << " (discontinuous coordinates; cross poles in the extended chart)";
                    throw std::invalid_argument(msg.str());
                }
            }
            if (i == 0) {
                continue;
            }
            const auto prev = segment_end(segments_[i - 1]);
            const auto next = segment_start(segments_[i]);
            if (std::abs(prev.alpha - next.alpha) > path_continuity_tol ||
                std::abs(prev.beta - next.beta) > path_continuity_tol) {
                std::ostringstream msg;
                msg << "SchmidtPath: segment " << i << " starts at (" << next.alpha << ", "
                    << next.beta << ") but segment " << i - 1 << " ends at (" << prev.alpha << ", "
                    << prev.beta << ")";
                throw std::invalid_argument(msg.str());
            }
        }
        if (closed_) {
            const double gap = (sphere_point(end()) - sphere_point(start())).norm();
            if (gap > path_continuity_tol) {
                std::ostringstream msg;
                msg << "SchmidtPath: path flagged closed ends " << gap << " away from its start";
                throw std::invalid_argument(msg.str());
            }
        }
    }

    const std::vector<PathSegment>& segments() const { return segments_; }
    bool closed() const { return closed_; }
    SchmidtCoordinates start() const { return segment_start(segments_.front()); }
    SchmidtCoordinates end() const { return segment_end(segments_.back()); }

    double duration() const {
        double total = 0.0;
        for (const auto& s : segments_) {
            total += segment_duration(s);
        }
        return total;
    }

    /// Segment index and local time for a global time in [0, duration()].
    std::pair<std::size_t, double> locate(double t) const {
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            const double d = segment_duration(segments_[i]);
            if (t <= d || i + 1 == segments_.size()) {
                return {i, std::clamp(t, 0.0, d)};
            }
            t -= d;
        }
        return {segments_.size() - 1, 0.0};
    }

    SchmidtCoordinates at(double t) const {
        const auto [i, local] = locate(t);
        return segment_at(segments_[i], local);
    }

    CoordinateRates rates(double t) const {
        const auto [i, local] = locate(t);
        return segment_rates(segments_[i], local);
    }

  private:
    std::vector<PathSegment> segments_;
    bool closed_;
};

// Builders for the closed-form arcs.

inline LinearArc equator_arc(double beta_start, double beta_end, double duration) {
    return {{pi / 2, beta_start}, {pi / 2, beta_end}, duration};
}

inline LinearArc latitude_arc(double alpha, double beta_start, double beta_end, double duration) {
    return {{alpha, beta_start}, {alpha, beta_end}, duration};
}

/// Meridian at fixed beta; alpha may pass through 0 or pi to cross a pole.
inline LinearArc meridian_arc(double beta, double alpha_start, double alpha_end, double duration) {
    return {{alpha_start, beta}, {alpha_end, beta}, duration};
}

inline LinearArc hold(SchmidtCoordinates at, double duration) {
    return {at, at, duration};
}

/**
 * Great-circle arc from (0,-1,0) back to (0,1,0), tilted by theta from the
 * yz plane towards +x. theta = 0 would pass the north pole; use
 * meridian_arc for that case.
 */
inline GreatCircleArc tilted_arc(double theta, double duration) {
    return {{pi / 2, -pi / 2}, Vector3(-std::cos(theta), 0.0, std::sin(theta)), pi, duration};
}

inline SchmidtPath reversed(const SchmidtPath& path) {
    std::vector<PathSegment> out;
    out.reserve(path.segments().size());
    for (auto it = path.segments().rbegin(); it != path.segments().rend(); ++it) {
        out.push_back(std::visit([](const auto& seg) -> PathSegment { return seg.reversed(); }, *it));
    }
    return {std::move(out), path.closed()};
}

/// Append b after a; b must start where a ends (same extended coordinates).
inline SchmidtPath concatenate(const SchmidtPath& a, const SchmidtPath& b) {
    std::vector<PathSegment> out = a.segments();
    out.insert(out.end(), b.segments().begin(), b.segments().end());
    return {std::move(out), a.closed() && b.closed()};
}

/**
 * Re-express a path in another copy of the extended chart so that it starts
 * at `new_start`, which must name the same sphere point as path.start() under
 * (alpha, beta) ~ (-alpha, beta + pi) ~ (alpha + 2 pi, beta) ~ (alpha, beta + 2 pi).
 *
 * Shifting beta by an odd multiple of 2 pi flips the sign of the amplitudes
 * f and g, so relabeling changes the lift of the path, not the path.
 */
inline SchmidtPath relabel(const SchmidtPath& path, SchmidtCoordinates new_start) {
    const auto old = path.start();
    double sign = 0.0;
    for (double s : {1.0, -1.0}) {
        const double da = new_start.alpha - s * old.alpha;
        const double db = new_start.beta - old.beta - (s < 0 ? pi : 0.0);
        const double ka = da / (2.0 * pi);
        const double kb = db / (2.0 * pi);
        if (std::abs(ka - std::round(ka)) < 1e-12 && std::abs(kb - std::round(kb)) < 1e-12) {
            sign = s;
            break;
        }
    }
    if (sign == 0.0) {
        throw std::invalid_argument("relabel: new start is not an equivalent chart point");
    }
    const double alpha_shift = new_start.alpha - sign * old.alpha;
    const double beta_shift = new_start.beta - old.beta;
    auto map = [&](SchmidtCoordinates c) {
        return SchmidtCoordinates{sign * c.alpha + alpha_shift, c.beta + beta_shift};
    };

    std::vector<PathSegment> out;
    for (const auto& seg : path.segments()) {
        if (const auto* lin = std::get_if<LinearArc>(&seg)) {
            out.emplace_back(LinearArc(map(lin->start()), map(lin->end()), lin->duration()));
        } else if (const auto* gc = std::get_if<GreatCircleArc>(&seg)) {
            out.emplace_back(GreatCircleArc(map(gc->start()), gc->axis(), gc->sweep(), gc->duration()));
        } else {
            const auto& sampled = std::get<SampledArc>(seg);
            std::vector<SchmidtCoordinates> nodes;
            nodes.reserve(sampled.nodes().size());
            for (const auto& c : sampled.nodes()) {
                nodes.push_back(map(c));
            }
            out.emplace_back(SampledArc(std::move(nodes), sampled.duration()));
        }
    }
    return {std::move(out), path.closed()};
}

struct SolidAngleOptions {
    /// Gauss-Legendre panels for great-circle arcs.
    int quadrature_panels = 256;
};

/// Signed solid angle contributed by one segment: the integral of
/// (1 - cos alpha) d(beta), plus 2 pi per crossing of the south pole.
inline double segment_solid_angle(const PathSegment& segment, const SolidAngleOptions& opts = {}) {
    double area = 0.0;
    int crossings = 0;
    if (const auto* lin = std::get_if<LinearArc>(&segment)) {
        const auto a = lin->start();
        const auto b = lin->end();
        const double d_alpha = b.alpha - a.alpha;
        const double d_beta = b.beta - a.beta;
        if (d_alpha == 0.0) {
            area = (1.0 - std::cos(a.alpha)) * d_beta;
        } else {
            area = d_beta - d_beta * (std::sin(b.alpha) - std::sin(a.alpha)) / d_alpha;
        }
        crossings = detail::south_pole_crossings(a.alpha, b.alpha);
    } else if (const auto* gc = std::get_if<GreatCircleArc>(&segment)) {
        area = detail::integrate(
            [gc](double t) { return (1.0 - std::cos(gc->at(t).alpha)) * gc->rates(t).beta_dot; },
            gc->duration(), opts.quadrature_panels);
    } else {
        // trapezoid rule on the samples
        const auto& nodes = std::get<SampledArc>(segment).nodes();
        for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
            area += 0.5 * ((1.0 - std::cos(nodes[k].alpha)) + (1.0 - std::cos(nodes[k + 1].alpha))) *
                    (nodes[k + 1].beta - nodes[k].beta);
            crossings += detail::south_pole_crossings(nodes[k].alpha, nodes[k + 1].alpha);
        }
    }
    return area + 2.0 * pi * crossings;
}

/**
 * Signed solid angle enclosed by a closed path.
 *
 * Sign follows traversal order, normalized so that the geometric Schmidt
 * gate acquires e^{-i Omega/2} on Gamma+ (the orange-slice loop gives -pi).
 * Only Omega mod 4 pi is physically meaningful.
 */
inline double solid_angle(const SchmidtPath& path, const SolidAngleOptions& opts = {}) {
    if (!path.closed()) {
        throw std::invalid_argument("solid_angle: path is not closed");
    }
    double total = 0.0;
    for (const auto& seg : path.segments()) {
        total += segment_solid_angle(seg, opts);
    }
    return total;
}

} // namespace schmidt
