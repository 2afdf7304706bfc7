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
 * Hamiltonians that drive the Schmidt vectors along prescribed paths,
 * their propagation, and the Trotterized tilted pulse.
 *
 * Within the coupled pair of a sector the effective Hamiltonian is
 * H = c_xy h_xy + c_dm h_dm + c_z h_z, and the three operators act as the
 * Pauli matrices on that pair. Driving the amplitudes
 * (f, g) = (e^{-i beta/2} cos(alpha/2), e^{i beta/2} sin(alpha/2)) along a
 * path requires
 *
 *     c_xy = -(alpha'/2) sin(beta),  c_dm = (alpha'/2) cos(beta),  c_z = beta'/2.
 *
 * Units have hbar = 1: times in arbitrary units, coefficients in inverse time.
 */
#pragma once

#include "schmidt/gates.hpp"
#include "schmidt/geometry.hpp"
#include "schmidt/linalg.hpp"
#include "schmidt/path.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace schmidt {

struct SpinOperators {
    Matrix4 h_xy;
    Matrix4 h_dm;
    Matrix4 h_z;
};

/**
 * XY, Dzyaloshinskii-Moriya and Zeeman operators of a sector.
 *
 * Gamma: h_xy = (XX + YY)/2, h_dm = (YX - XY)/2, h_z = (Z1 - 1Z)/2.
 * Lambda: h_xy = (XX - YY)/2, h_dm = (XY + YX)/2, h_z = (Z1 + 1Z)/2, the
 * operators that act as the same Pauli triple on Span{|00>, |11>}.
 */
inline SpinOperators spin_operators(Sector sector = Sector::gamma) {
    const Matrix2 x = pauli_x();
    const Matrix2 y = pauli_y();
    const Matrix2 z = pauli_z();
    const Matrix2 one = Matrix2::Identity();
    if (sector == Sector::gamma) {
        return {0.5 * (tensor_product(x, x) + tensor_product(y, y)),
                0.5 * (tensor_product(y, x) - tensor_product(x, y)),
                0.5 * (tensor_product(z, one) - tensor_product(one, z))};
    }
    return {0.5 * (tensor_product(x, x) - tensor_product(y, y)),
            0.5 * (tensor_product(x, y) + tensor_product(y, x)),
            0.5 * (tensor_product(z, one) + tensor_product(one, z))};
}

/// Coefficients (c_xy, c_dm, c_z); the effective magnetic field is twice this.
struct FieldCoefficients {
    double xy = 0.0;
    double dm = 0.0;
    double z = 0.0;

    Vector3 vec() const { return {xy, dm, z}; }
    static FieldCoefficients from(const Vector3& v) { return {v.x(), v.y(), v.z()}; }
};

inline Matrix4 hamiltonian(const FieldCoefficients& c, Sector sector = Sector::gamma) {
    const auto ops = spin_operators(sector);
    return c.xy * ops.h_xy + c.dm * ops.h_dm + c.z * ops.h_z;
}

/// Field that carries the Schmidt amplitudes along (alpha(t), beta(t)).
inline FieldCoefficients field_for(SchmidtCoordinates at, CoordinateRates rate) {
    return {-0.5 * rate.alpha_dot * std::sin(at.beta), 0.5 * rate.alpha_dot * std::cos(at.beta),
            0.5 * rate.beta_dot};
}

/// Matrix elements of the Gamma block: omega22 = -omega33, omega23.
struct BlockElements {
    double w22 = 0.0;
    double w33 = 0.0;
    Complex w23;
};

/// From the path: w22 = beta'/2, w23 = -(alpha'/2)(sin beta + i cos beta).
inline BlockElements block_elements(SchmidtCoordinates at, CoordinateRates rate) {
    return {0.5 * rate.beta_dot, -0.5 * rate.beta_dot,
            -0.5 * rate.alpha_dot * Complex(std::sin(at.beta), std::cos(at.beta))};
}

/// From the amplitudes: w22 = i(f' f* + g g'*), w23 = i(f' g* - f g'*).
/// w22 is real only when |f|^2 + |g|^2 is conserved; the imaginary residue is dropped.
inline BlockElements block_elements(Complex f, Complex f_dot, Complex g, Complex g_dot) {
    const Complex w22 = I * (f_dot * std::conj(f) + g * std::conj(g_dot));
    return {w22.real(), -w22.real(), I * (f_dot * std::conj(g) - f * std::conj(g_dot))};
}

struct Pulse {
    double duration = 0.0;
    /// Constant field, or samples at the midpoints of equal cells.
    std::variant<FieldCoefficients, std::vector<FieldCoefficients>> field;

    bool constant() const { return std::holds_alternative<FieldCoefficients>(field); }
};

class HamiltonianSchedule {
  public:
    HamiltonianSchedule(std::vector<Pulse> pulses, Sector sector = Sector::gamma)
        : pulses_(std::move(pulses)), sector_(sector) {
        if (pulses_.empty()) {
            throw std::invalid_argument("HamiltonianSchedule: no pulses");
        }
        for (std::size_t i = 0; i < pulses_.size(); ++i) {
            const auto& p = pulses_[i];
            if (!std::isfinite(p.duration) || p.duration <= 0.0) {
                throw std::invalid_argument("HamiltonianSchedule: pulse " + std::to_string(i) +
                                            " has non-positive duration");
            }
            auto finite = [](const FieldCoefficients& c) {
                return std::isfinite(c.xy) && std::isfinite(c.dm) && std::isfinite(c.z);
            };
            bool ok = true;
            if (const auto* c = std::get_if<FieldCoefficients>(&p.field)) {
                ok = finite(*c);
            } else {
                const auto& samples = std::get<std::vector<FieldCoefficients>>(p.field);
                ok = !samples.empty();
                for (const auto& c : samples) {
                    ok = ok && finite(c);
                }
            }
            if (!ok) {
                throw std::invalid_argument("HamiltonianSchedule: pulse " + std::to_string(i) +
                                            " has missing or non-finite coefficients");
            }
        }
    }

    const std::vector<Pulse>& pulses() const { return pulses_; }
    Sector sector() const { return sector_; }

    double duration() const {
        double total = 0.0;
        for (const auto& p : pulses_) {
            total += p.duration;
        }
        return total;
    }

    /// Time integral of each coefficient over the schedule.
    FieldCoefficients area() const {
        Vector3 total = Vector3::Zero();
        for (const auto& p : pulses_) {
            if (const auto* c = std::get_if<FieldCoefficients>(&p.field)) {
                total += p.duration * c->vec();
            } else {
                const auto& samples = std::get<std::vector<FieldCoefficients>>(p.field);
                const double h = p.duration / static_cast<double>(samples.size());
                for (const auto& c : samples) {
                    total += h * c.vec();
                }
            }
        }
        return FieldCoefficients::from(total);
    }

  private:
    std::vector<Pulse> pulses_;
    Sector sector_;
};

struct ReverseEngineerOptions {
    /// Cells per segment whose field varies in time (sampled input arcs keep their own grid).
    std::size_t samples = 1000;
};

/**
 * Hamiltonian schedule that drives the Schmidt vectors along `path`: one
 * pulse per segment. Segments with a constant field (fixed alpha or fixed
 * beta arcs) give exact constant pulses; the rest are sampled at cell
 * midpoints.
 *
 * Paths are continuous in the extended chart by construction (SchmidtPath
 * rejects folded-chart pole jumps), so no impulsive terms arise.
 */
inline HamiltonianSchedule reverse_engineer(const SchmidtPath& path, Sector sector = Sector::gamma,
                                            const ReverseEngineerOptions& opts = {}) {
    if (opts.samples == 0) {
        throw std::invalid_argument("reverse_engineer: samples must be positive");
    }
    std::vector<Pulse> pulses;
    pulses.reserve(path.segments().size());
    for (const auto& seg : path.segments()) {
        const double duration = segment_duration(seg);
        if (const auto* lin = std::get_if<LinearArc>(&seg); lin && lin->constant_field()) {
            pulses.push_back({duration, field_for(lin->start(), lin->rates(0.0))});
            continue;
        }
        std::size_t cells = opts.samples;
        if (const auto* sampled = std::get_if<SampledArc>(&seg)) {
            cells = sampled->cells();
        }
        const double h = duration / static_cast<double>(cells);
        std::vector<FieldCoefficients> samples;
        samples.reserve(cells);
        for (std::size_t k = 0; k < cells; ++k) {
            const double t = (static_cast<double>(k) + 0.5) * h;
            samples.push_back(field_for(segment_at(seg, t), segment_rates(seg, t)));
        }
        pulses.push_back({duration, std::move(samples)});
    }
    return {std::move(pulses), sector};
}

namespace detail {

// Fourth-order Magnus step for a sampled pulse. With c, c', c'' at the cell
// midpoint, the cell propagator is exp(-i h c_eff . sigma) with
// c_eff = c + h^2/24 c'' - h^2/6 (c x c'). Derivatives come from centered
// differences of neighbouring samples, one-sided second order at the ends.
inline Matrix4 propagate_sampled(const std::vector<FieldCoefficients>& samples, double duration,
                                 Sector sector) {
    const std::size_t n = samples.size();
    const double h = duration / static_cast<double>(n);
    Matrix4 u = Matrix4::Identity();
    for (std::size_t k = 0; k < n; ++k) {
        const Vector3 c = samples[k].vec();
        Vector3 d1 = Vector3::Zero();
        Vector3 d2 = Vector3::Zero();
        if (n >= 3) {
            if (k == 0) {
                d1 = (-3.0 * c + 4.0 * samples[1].vec() - samples[2].vec()) / (2.0 * h);
                d2 = (c - 2.0 * samples[1].vec() + samples[2].vec()) / (h * h);
            } else if (k + 1 == n) {
                d1 = (3.0 * c - 4.0 * samples[k - 1].vec() + samples[k - 2].vec()) / (2.0 * h);
                d2 = (c - 2.0 * samples[k - 1].vec() + samples[k - 2].vec()) / (h * h);
            } else {
                d1 = (samples[k + 1].vec() - samples[k - 1].vec()) / (2.0 * h);
                d2 = (samples[k + 1].vec() - 2.0 * c + samples[k - 1].vec()) / (h * h);
            }
        }
        const Vector3 eff = c + (h * h / 24.0) * d2 - (h * h / 6.0) * c.cross(d1);
        u = herm_exp(hamiltonian(FieldCoefficients::from(eff), sector), h) * u;
    }
    return u;
}

} // namespace detail

/// Time-ordered propagator of a schedule; later pulses multiply from the left.
inline Matrix4 propagate(const HamiltonianSchedule& schedule) {
    Matrix4 u = Matrix4::Identity();
    for (const auto& pulse : schedule.pulses()) {
        if (const auto* c = std::get_if<FieldCoefficients>(&pulse.field)) {
            u = herm_exp(hamiltonian(*c, schedule.sector()), pulse.duration) * u;
        } else {
            u = detail::propagate_sampled(std::get<std::vector<FieldCoefficients>>(pulse.field),
                                          pulse.duration, schedule.sector()) *
                u;
        }
    }
    return u;
}

struct DynamicalPhases {
    double plus = 0.0;
    double minus = 0.0;
};

/// -integral of <Gamma+|H|Gamma+> dt = -integral of (beta'/2) cos(alpha) dt
/// for the reverse-engineered H; Gamma- picks up the opposite phase.
inline DynamicalPhases dynamical_phase(const SchmidtPath& path, const SolidAngleOptions& opts = {}) {
    double plus = 0.0;
    for (const auto& seg : path.segments()) {
        if (const auto* lin = std::get_if<LinearArc>(&seg)) {
            const auto a = lin->start();
            const auto b = lin->end();
            const double d_alpha = b.alpha - a.alpha;
            const double d_beta = b.beta - a.beta;
            if (d_alpha == 0.0) {
                plus -= 0.5 * d_beta * std::cos(a.alpha);
            } else {
                plus -= 0.5 * d_beta * (std::sin(b.alpha) - std::sin(a.alpha)) / d_alpha;
            }
        } else if (const auto* gc = std::get_if<GreatCircleArc>(&seg)) {
            plus -= 0.5 * detail::integrate(
                              [gc](double t) { return gc->rates(t).beta_dot * std::cos(gc->at(t).alpha); },
                              gc->duration(), opts.quadrature_panels);
        } else {
            const auto& nodes = std::get<SampledArc>(seg).nodes();
            for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
                plus -= 0.25 * (std::cos(nodes[k].alpha) + std::cos(nodes[k + 1].alpha)) *
                        (nodes[k + 1].beta - nodes[k].beta);
            }
        }
    }
    return {plus, -plus};
}

/**
 * Propagator that reverse_engineer(path) must produce for a closed path:
 * the geometric gate at the base point with the dynamical phase folded in,
 * i.e. eigenvalues e^{-i Omega/2 + i phi+} on Gamma+(r0).
 */
inline Matrix4 predicted_loop_gate(const SchmidtPath& path, Sector sector = Sector::gamma) {
    const double omega = solid_angle(path);
    const double phi = dynamical_phase(path).plus;
    const auto r0 = path.start();
    return geometric_gate({r0.alpha, r0.beta, omega - 2.0 * phi, sector, LocalFrame::standard()});
}

namespace detail {

inline void require_pulse_times(double t1, double tau, const char* where) {
    if (!std::isfinite(t1) || !std::isfinite(tau) || !(t1 > 0.0) || !(tau > t1)) {
        throw std::invalid_argument(std::string(where) + ": need 0 < t1 < tau");
    }
}

} // namespace detail

/**
 * Closed loop from (0,1,0) along the equator to (0,-1,0) during [0, t1],
 * then back over the north pole during [t1, tau]. In the extended chart the
 * second leg is the meridian beta = -pi/2 with alpha running pi/2 -> -pi/2.
 */
inline SchmidtPath orange_slice_path(double t1, double tau) {
    detail::require_pulse_times(t1, tau, "orange_slice_path");
    return {{equator_arc(pi / 2, -pi / 2, t1), meridian_arc(-pi / 2, pi / 2, -pi / 2, tau - t1)},
            true};
}

/// -(pi / 2 t1) h_z on [0, t1], then -(pi / 2 (tau - t1)) h_xy on [t1, tau].
inline HamiltonianSchedule two_pulse_schedule(double t1, double tau) {
    detail::require_pulse_times(t1, tau, "two_pulse_schedule");
    return {{{t1, FieldCoefficients{0.0, 0.0, -pi / (2.0 * t1)}},
             {tau - t1, FieldCoefficients{-pi / (2.0 * (tau - t1)), 0.0, 0.0}}}};
}

/**
 * Two-pulse schedule whose second leg is tilted by theta:
 * -(pi / 2 (tau - t1)) (cos(theta) h_xy - sin(theta) h_z) on [t1, tau].
 * The composed gate is the equatorial rotation with Omega = 2 theta - pi.
 */
inline HamiltonianSchedule tilted_schedule(double theta, double t1, double tau) {
    detail::require_pulse_times(t1, tau, "tilted_schedule");
    const double k = pi / (2.0 * (tau - t1));
    return {{{t1, FieldCoefficients{0.0, 0.0, -pi / (2.0 * t1)}},
             {tau - t1, FieldCoefficients{-k * std::cos(theta), 0.0, k * std::sin(theta)}}}};
}

struct TrotterPlan {
    double theta = 0.0;
    int steps = 1;
};

/// exp(i (pi/2n) cos(theta) h_xy) exp(-i (pi/2n) sin(theta) h_z)
inline Matrix4 trotter_step(const TrotterPlan& plan) {
    if (plan.steps < 1) {
        throw std::invalid_argument("trotter_step: steps must be >= 1");
    }
    const auto ops = spin_operators();
    const double a = pi / (2.0 * plan.steps);
    return herm_exp(ops.h_xy, -a * std::cos(plan.theta)) * herm_exp(ops.h_z, a * std::sin(plan.theta));
}

/// (U_n)^n, the first-order Trotter approximation of trotter_target(theta).
inline Matrix4 trotter_propagate(const TrotterPlan& plan) {
    const Matrix4 step = trotter_step(plan);
    Matrix4 u = Matrix4::Identity();
    for (int k = 0; k < plan.steps; ++k) {
        u = step * u;
    }
    return u;
}

/// exp(i (pi/2) (cos(theta) h_xy - sin(theta) h_z)), the tilted second pulse.
inline Matrix4 trotter_target(double theta) {
    const auto ops = spin_operators();
    return herm_exp(std::cos(theta) * ops.h_xy - std::sin(theta) * ops.h_z, -pi / 2);
}

/// exp(i (pi/2) h_z), the first (Zeeman) pulse of the two-pulse schedules.
inline Matrix4 zeeman_pulse() {
    return herm_exp(spin_operators().h_z, -pi / 2);
}

} // namespace schmidt
