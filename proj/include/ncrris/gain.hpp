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

#include <algorithm>
#include <cmath>
#include <string_view>

#include "ncrris/coefficients.hpp"
#include "ncrris/error.hpp"
#include "ncrris/snr.hpp"
#include "ncrris/types.hpp"

namespace ncrris {

enum class GainCase {
    NoDirectMax,         ///< no coupling with the direct path, use the cap
    InteriorStationary,  ///< unconstrained maximizer lies below the cap
    BoundaryZero,        ///< switching the amplifier off is best
    BoundaryMax,         ///< the cap binds
};

constexpr std::string_view to_string(GainCase c) {
    switch (c) {
        case GainCase::NoDirectMax: return "no-direct-max";
        case GainCase::InteriorStationary: return "interior-stationary";
        case GainCase::BoundaryZero: return "boundary-zero";
        case GainCase::BoundaryMax: return "boundary-max";
    }
    return "?";
}

template <typename Scalar = double>
struct GainSolution {
    Scalar alpha_opt = 0;
    SnrResult<Scalar> snr_at_opt;
    GainCase case_tag = GainCase::BoundaryMax;
    QuadraticRatioCoeffs<Scalar> coeffs;
};

namespace detail {

// Maximizer of f over [0, alpha_max] given B > 0.
template <typename Scalar>
std::pair<Scalar, GainCase> positive_slope_optimum(const QuadraticRatioCoeffs<Scalar>& c, Scalar alpha_max) {
    const Scalar star = c.stationary_point();
    if (star < alpha_max) return {star, GainCase::InteriorStationary};
    return {alpha_max, GainCase::BoundaryMax};
}

// Maximizer of f over {0, alpha_max} when f has no interior maximum.
// f(0) = 0, so the cap wins only with a strictly positive objective.
template <typename Scalar>
std::pair<Scalar, GainCase> boundary_optimum(const QuadraticRatioCoeffs<Scalar>& c, Scalar alpha_max) {
    if (c.A * alpha_max * alpha_max + c.B * alpha_max > 0) return {alpha_max, GainCase::BoundaryMax};
    return {Scalar(0), GainCase::BoundaryZero};
}

}  // namespace detail

/// Optimal equal per-element amplitude of an active RIS under the cap
/// `alpha_max`. With |x| = 0 the SNR increases with alpha and the cap is
/// returned; otherwise min(alpha*, alpha_max) with alpha* the unique positive
/// stationary point of f.
template <typename Scalar>
GainSolution<Scalar> optimal_alpha_active(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g,
                                          Scalar x_mag, Scalar alpha_max, Scalar h3_norm2 = Scalar(0)) {
    detail::require(alpha_max > 0, "amplification cap must be positive");
    detail::require(x_mag >= 0, "coupling magnitude must be non-negative");
    const auto c = active_ris_coeffs(p, g, x_mag);

    std::pair<Scalar, GainCase> pick;
    if (x_mag == 0) {
        pick = {alpha_max, GainCase::NoDirectMax};
    } else if (c.B > 0) {
        pick = detail::positive_slope_optimum(c, alpha_max);
    } else {
        // |x| > 0 but beta1 beta2 = 0: no cascaded gain, only the penalty.
        pick = detail::boundary_optimum(c, alpha_max);
    }
    return {pick.first, snr_active_direct(p, g, DirectCoupling<Scalar>(x_mag, 0), h3_norm2, pick.first), pick.second,
            c};
}

/// Optimal NCR amplification under the cap, by the sign of B = 2 P
/// sqrt(beta1 beta2) Re(x):
///   x = 0            -> cap;
///   B <= 0           -> f has no interior maximum, best of {0, cap};
///   B > 0            -> min(alpha*, cap).
/// Re(x) within 1e-15 |x| of zero is treated as zero.
template <typename Scalar>
GainSolution<Scalar> optimal_alpha_ncr(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g,
                                       const DirectCoupling<Scalar>& x, Scalar alpha_max,
                                       Scalar h3_norm2 = Scalar(0)) {
    detail::require(alpha_max > 0, "amplification cap must be positive");
    auto c = ncr_coeffs(p, g, x);
    if (std::abs(x.real()) <= Scalar(1e-15) * x.magnitude()) c.B = 0;

    std::pair<Scalar, GainCase> pick;
    if (x.magnitude() == 0) {
        pick = {alpha_max, GainCase::NoDirectMax};
    } else if (c.B > 0) {
        pick = detail::positive_slope_optimum(c, alpha_max);
    } else {
        pick = detail::boundary_optimum(c, alpha_max);
    }
    return {pick.first, snr_ncr_direct(p, g, x, h3_norm2, pick.first), pick.second, c};
}

}  // namespace ncrris
