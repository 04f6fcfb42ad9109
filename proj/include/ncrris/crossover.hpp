// SPDX-License-Identifier: Apache-2.0
//
// ncrris - closed-form SNR analysis of RIS- and repeater-assisted uplinks
// Copyright (C) 2026 The ncrris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string_view>
#include <variant>

#include "ncrris/error.hpp"
#include "ncrris/types.hpp"

namespace ncrris {

enum class VerdictKind { Threshold, Interval, RisAlwaysWins, NcrAlwaysWins };

constexpr std::string_view to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Threshold: return "threshold";
        case VerdictKind::Interval: return "interval";
        case VerdictKind::RisAlwaysWins: return "ris-always-wins";
        case VerdictKind::NcrAlwaysWins: return "ncr-always-wins";
    }
    return "?";
}

/// The crossover condition SNR_NCR(alpha) >= SNR_RIS written as
/// A alpha^2 + B alpha + C >= 0.
template <typename Scalar = double>
struct CrossoverQuadratic {
    Scalar A = 0;
    Scalar B = 0;
    Scalar C = 0;

    Scalar operator()(Scalar alpha) const { return (A * alpha + B) * alpha + C; }
};

/// Set of NCR amplifications alpha > 0 for which the NCR matches or beats the
/// RIS. Threshold is [alpha_lo, inf), Interval is [alpha_lo, alpha_hi]; both
/// ends are closed.
template <typename Scalar = double>
struct CrossoverVerdict {
    VerdictKind kind = VerdictKind::RisAlwaysWins;
    Scalar alpha_lo = std::numeric_limits<Scalar>::infinity();
    Scalar alpha_hi = std::numeric_limits<Scalar>::infinity();
    std::optional<CrossoverQuadratic<Scalar>> coeffs;

    static CrossoverVerdict threshold(Scalar a) { return {VerdictKind::Threshold, a, std::numeric_limits<Scalar>::infinity(), {}}; }
    static CrossoverVerdict interval(Scalar lo, Scalar hi) { return {VerdictKind::Interval, lo, hi, {}}; }
    static CrossoverVerdict ris_always_wins() { return {}; }
    static CrossoverVerdict ncr_always_wins() { return {VerdictKind::NcrAlwaysWins, Scalar(0), std::numeric_limits<Scalar>::infinity(), {}}; }

    /// Smallest NCR gain that matches the RIS, +inf when none does.
    Scalar required_alpha() const { return alpha_lo; }

    bool contains(Scalar alpha) const {
        switch (kind) {
            case VerdictKind::Threshold: return alpha >= alpha_lo;
            case VerdictKind::Interval: return alpha >= alpha_lo && alpha <= alpha_hi;
            case VerdictKind::NcrAlwaysWins: return true;
            case VerdictKind::RisAlwaysWins: return false;
        }
        return false;
    }
};

namespace detail {

/// Solves A a^2 + B a + C >= 0 over a > 0 with cancellation-free roots.
///
/// With C < 0 (the RIS adds a positive cascaded term) this is exactly the
/// three-way split on the sign of A. C >= 0 only arises for an RIS
/// configuration that does worse than the direct link alone; there the set
/// starts at zero, and for A > 0 with two positive roots only the unbounded
/// upper part is reported.
template <typename Scalar>
CrossoverVerdict<Scalar> classify_quadratic(const CrossoverQuadratic<Scalar>& q) {
    using V = CrossoverVerdict<Scalar>;
    const Scalar A = q.A, B = q.B, C = q.C;
    V v;
    const Scalar disc = B * B - Scalar(4) * A * C;

    if (A > 0) {
        if (C >= 0 && (B >= 0 || disc < 0)) {
            v = V::ncr_always_wins();
        } else {
            const Scalar qq = -(B + std::copysign(std::sqrt(disc), B)) / Scalar(2);
            v = V::threshold(std::max(qq / A, C / qq));
        }
    } else if (A == 0) {
        if (B > 0) {
            v = C < 0 ? V::threshold(-C / B) : V::ncr_always_wins();
        } else if (B == 0) {
            v = C >= 0 ? V::ncr_always_wins() : V::ris_always_wins();
        } else {
            v = C > 0 ? V::interval(Scalar(0), -C / B) : V::ris_always_wins();
        }
    } else {  // A < 0
        if (C < 0) {
            if (B <= 0 || disc < 0) {
                v = V::ris_always_wins();
            } else {
                const Scalar qq = -(B + std::sqrt(disc)) / Scalar(2);
                v = V::interval(C / qq, qq / A);
            }
        } else {
            const Scalar qq = -(B + std::copysign(std::sqrt(disc), B)) / Scalar(2);
            const Scalar upper = std::max(qq / A, qq != 0 ? C / qq : Scalar(0));
            v = upper > 0 ? V::interval(Scalar(0), upper) : V::ris_always_wins();
        }
    }
    v.coeffs = q;
    return v;
}

/// The NCR condition f(alpha, x) >= g, with f the repeater term after
/// removing the common direct-link part, scaled by sigma2/P.
template <typename Scalar>
CrossoverQuadratic<Scalar> ncr_vs_gain(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& gains,
                                       Scalar x_mag_sq, Scalar x_real, Scalar g) {
    const Scalar M = Scalar(p.M);
    return {M * gains.beta1 * gains.beta2 - x_mag_sq * gains.beta2 - gains.beta2 * M * g,
            Scalar(2) * x_real * std::sqrt(gains.beta1 * gains.beta2), -g};
}

}  // namespace detail

/// NCR versus passive RIS without a direct link: alpha >= N / sqrt(1 - N^2 M beta2),
/// or RisAlwaysWins when N^2 M beta2 >= 1.
template <typename Scalar>
CrossoverVerdict<Scalar> required_alpha_vs_passive_nodirect(const SystemParams<Scalar>& p,
                                                            const ChannelGains<Scalar>& g) {
    const Scalar N = Scalar(p.N);
    const Scalar load = N * N * Scalar(p.M) * g.beta2;
    if (load >= Scalar(1)) return CrossoverVerdict<Scalar>::ris_always_wins();
    return CrossoverVerdict<Scalar>::threshold(N / std::sqrt(Scalar(1) - load));
}

/// NCR versus active RIS (per-element gain alpha_aris) without a direct link:
/// alpha >= alpha_aris N / sqrt(1 - (N^2 - N) alpha_aris^2 M beta2).
template <typename Scalar>
CrossoverVerdict<Scalar> required_alpha_vs_active_nodirect(const SystemParams<Scalar>& p,
                                                           const ChannelGains<Scalar>& g, Scalar alpha_aris) {
    detail::require(alpha_aris > 0, "active-RIS amplification must be positive");
    const Scalar N = Scalar(p.N);
    const Scalar load = (N * N - N) * alpha_aris * alpha_aris * Scalar(p.M) * g.beta2;
    if (load >= Scalar(1)) return CrossoverVerdict<Scalar>::ris_always_wins();
    return CrossoverVerdict<Scalar>::threshold(alpha_aris * N / std::sqrt(Scalar(1) - load));
}

/// Passive-RIS SNR excess over the direct link, times sigma2/P:
/// beta1 beta2 N^2 M + 2 sqrt(beta1 beta2) N |x|.
template <typename Scalar>
Scalar passive_ris_gain_term(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g, Scalar x_mag) {
    const Scalar N = Scalar(p.N);
    return g.beta1 * g.beta2 * N * N * Scalar(p.M) + Scalar(2) * std::sqrt(g.beta1 * g.beta2) * N * x_mag;
}

/// Active-RIS SNR excess over the direct link, times sigma2/P.
template <typename Scalar>
Scalar active_ris_gain_term(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g, Scalar x_mag,
                            Scalar alpha_aris) {
    const Scalar N = Scalar(p.N), M = Scalar(p.M), a2 = alpha_aris * alpha_aris;
    return (a2 * M * N * N * g.beta1 * g.beta2 - a2 * g.beta2 * N * x_mag * x_mag +
            Scalar(2) * alpha_aris * N * std::sqrt(g.beta1 * g.beta2) * x_mag) /
           (Scalar(1) + a2 * g.beta2 * M * N);
}

template <typename Scalar>
CrossoverVerdict<Scalar> required_alpha_vs_passive_direct(const SystemParams<Scalar>& p,
                                                          const ChannelGains<Scalar>& g,
                                                          const DirectCoupling<Scalar>& x) {
    const Scalar mag = x.magnitude();
    return detail::classify_quadratic(
        detail::ncr_vs_gain(p, g, mag * mag, x.real(), passive_ris_gain_term(p, g, mag)));
}

/// Pass the optimal alpha_aris (see optimal_alpha_active) for the
/// comparison against a best-configured active RIS.
template <typename Scalar>
CrossoverVerdict<Scalar> required_alpha_vs_active_direct(const SystemParams<Scalar>& p,
                                                         const ChannelGains<Scalar>& g,
                                                         const DirectCoupling<Scalar>& x, Scalar alpha_aris) {
    detail::require(alpha_aris >= 0, "active-RIS amplification must be non-negative");
    const Scalar mag = x.magnitude();
    return detail::classify_quadratic(
        detail::ncr_vs_gain(p, g, mag * mag, x.real(), active_ris_gain_term(p, g, mag, alpha_aris)));
}

struct VsPassive {};

template <typename Scalar = double>
struct VsActive {
    Scalar alpha_aris;
};

template <typename Scalar = double>
using WidebandRival = std::variant<VsPassive, VsActive<Scalar>>;

/// Crossover on the subcarrier-averaged SNRs. The averaged coupling has
/// E{Re(x)} = 0 and E{|x|^2} = quad = a21^H R3 a21. With quad = 0 the
/// no-direct verdict is returned unchanged.
template <typename Scalar>
CrossoverVerdict<Scalar> required_alpha_wideband(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g,
                                                 Scalar quad, const WidebandRival<Scalar>& rival) {
    if (quad < 0) throw InvalidArgument("a21^H R3 a21 must be non-negative");
    const Scalar N = Scalar(p.N), M = Scalar(p.M);
    if (const auto* active = std::get_if<VsActive<Scalar>>(&rival)) {
        if (quad == 0) return required_alpha_vs_active_nodirect(p, g, active->alpha_aris);
        const Scalar a2 = active->alpha_aris * active->alpha_aris;
        const Scalar gain = (a2 * M * N * N * g.beta1 * g.beta2 - a2 * g.beta2 * N * quad) /
                            (Scalar(1) + a2 * g.beta2 * M * N);
        return detail::classify_quadratic(detail::ncr_vs_gain(p, g, quad, Scalar(0), gain));
    }
    if (quad == 0) return required_alpha_vs_passive_nodirect(p, g);
    return detail::classify_quadratic(detail::ncr_vs_gain(p, g, quad, Scalar(0), g.beta1 * g.beta2 * N * N * M));
}

}  // namespace ncrris
