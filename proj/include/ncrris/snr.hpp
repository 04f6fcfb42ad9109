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

#include "ncrris/coefficients.hpp"
#include "ncrris/error.hpp"
#include "ncrris/types.hpp"
#include "ncrris/units.hpp"

namespace ncrris {

/// Named terms of an SNR expression, kept for diagnostics.
template <typename Scalar = double>
struct SnrBreakdown {
    Scalar signal = 0;          ///< cascaded-path numerator over sigma2
    Scalar noise_factor = 1;    ///< amplified-noise denominator factor, >= 1
    Scalar direct = 0;          ///< P ||h3||^2 / sigma2 (or its average)
};

template <typename Scalar = double>
struct SnrResult {
    Scalar snr_linear = 0;
    std::optional<SnrBreakdown<Scalar>> breakdown;

    /// -inf for a zero SNR.
    Scalar snr_db() const {
        if (snr_linear > 0) return linear_to_db_power(snr_linear);
        return -std::numeric_limits<Scalar>::infinity();
    }
};

namespace detail {

template <typename Scalar>
SnrResult<Scalar> make_snr(Scalar signal, Scalar noise_factor, Scalar direct) {
    return {signal / noise_factor + direct, SnrBreakdown<Scalar>{signal, noise_factor, direct}};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Narrowband, direct path blocked

/// P beta1 beta2 N^2 M / sigma2. beta3 is ignored.
template <typename Scalar>
SnrResult<Scalar> snr_passive_nodirect(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g) {
    const Scalar N = Scalar(p.N);
    return detail::make_snr(p.P * g.beta1 * g.beta2 * N * N * Scalar(p.M) / p.sigma2, Scalar(1), Scalar(0));
}

template <typename Scalar>
SnrResult<Scalar> snr_active_nodirect(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g, Scalar alpha) {
    detail::require(alpha >= 0, "amplification must be non-negative");
    const Scalar N = Scalar(p.N), M = Scalar(p.M), a2 = alpha * alpha;
    return detail::make_snr(a2 * p.P * g.beta1 * g.beta2 * N * N * M / p.sigma2, Scalar(1) + a2 * g.beta2 * M * N,
                            Scalar(0));
}

template <typename Scalar>
SnrResult<Scalar> snr_ncr_nodirect(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g, Scalar alpha) {
    detail::require(alpha >= 0, "amplification must be non-negative");
    const Scalar M = Scalar(p.M), a2 = alpha * alpha;
    return detail::make_snr(a2 * p.P * M * g.beta1 * g.beta2 / p.sigma2, Scalar(1) + a2 * g.beta2 * M, Scalar(0));
}

/// Limit of the NCR SNR as alpha grows without bound: P beta1 / sigma2, the
/// SNR of the UE-NCR hop if the repeater were a receiver with the same noise.
template <typename Scalar>
SnrResult<Scalar> ncr_snr_ceiling(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g) {
    return detail::make_snr(p.P * g.beta1 / p.sigma2, Scalar(1), Scalar(0));
}

// ---------------------------------------------------------------------------
// Narrowband with a direct path. Only |x| enters the RIS expressions because
// the optimal phases absorb the phase of x; the NCR keeps Re(x).

template <typename Scalar>
SnrResult<Scalar> snr_passive_direct(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g,
                                     const DirectCoupling<Scalar>& x, Scalar h3_norm2) {
    const Scalar N = Scalar(p.N);
    const Scalar cascaded = g.beta1 * g.beta2 * N * N * Scalar(p.M) +
                            Scalar(2) * std::sqrt(g.beta1 * g.beta2) * N * x.magnitude();
    return detail::make_snr(p.P * cascaded / p.sigma2, Scalar(1), p.P * h3_norm2 / p.sigma2);
}

template <typename Scalar>
SnrResult<Scalar> snr_active_direct(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g,
                                    const DirectCoupling<Scalar>& x, Scalar h3_norm2, Scalar alpha) {
    detail::require(alpha >= 0, "amplification must be non-negative");
    const auto c = active_ris_coeffs(p, g, x.magnitude());
    const Scalar a2 = alpha * alpha;
    return detail::make_snr((c.A * a2 + c.B * alpha) / p.sigma2, Scalar(1) + c.C * a2 / p.sigma2,
                            p.P * h3_norm2 / p.sigma2);
}

template <typename Scalar>
SnrResult<Scalar> snr_ncr_direct(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g,
                                 const DirectCoupling<Scalar>& x, Scalar h3_norm2, Scalar alpha) {
    detail::require(alpha >= 0, "amplification must be non-negative");
    const auto c = ncr_coeffs(p, g, x);
    const Scalar a2 = alpha * alpha;
    return detail::make_snr((c.A * a2 + c.B * alpha) / p.sigma2, Scalar(1) + c.C * a2 / p.sigma2,
                            p.P * h3_norm2 / p.sigma2);
}

// ---------------------------------------------------------------------------
// Wideband averages over h3 ~ CN(0, R3) with tr(R3) = M beta3.
// `quad` is a21^H R3 a21.

template <typename Scalar>
SnrResult<Scalar> avg_snr_passive_wideband(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g) {
    const Scalar N = Scalar(p.N), M = Scalar(p.M);
    return detail::make_snr(p.P * g.beta1 * g.beta2 * N * N * M / p.sigma2, Scalar(1), p.P * g.beta3 * M / p.sigma2);
}

template <typename Scalar>
SnrResult<Scalar> avg_snr_active_wideband(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g, Scalar alpha,
                                          Scalar quad) {
    detail::require(alpha >= 0, "amplification must be non-negative");
    if (quad < 0) throw InvalidArgument("a21^H R3 a21 must be non-negative");
    const Scalar N = Scalar(p.N), M = Scalar(p.M), a2 = alpha * alpha;
    const Scalar signal = (p.P * a2 * M * g.beta1 * g.beta2 * N * N - p.P * a2 * g.beta2 * N * quad) / p.sigma2;
    return detail::make_snr(signal, Scalar(1) + a2 * g.beta2 * M * N, p.P * g.beta3 * M / p.sigma2);
}

template <typename Scalar>
SnrResult<Scalar> avg_snr_ncr_wideband(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g, Scalar alpha,
                                       Scalar quad) {
    detail::require(alpha >= 0, "amplification must be non-negative");
    if (quad < 0) throw InvalidArgument("a21^H R3 a21 must be non-negative");
    const Scalar M = Scalar(p.M), a2 = alpha * alpha;
    const Scalar signal = (p.P * a2 * M * g.beta1 * g.beta2 - p.P * a2 * g.beta2 * quad) / p.sigma2;
    return detail::make_snr(signal, Scalar(1) + a2 * g.beta2 * M, p.P * g.beta3 * M / p.sigma2);
}

/// Direct link only: P ||h3||^2 / sigma2 (pass M beta3 for the wideband average).
template <typename Scalar>
SnrResult<Scalar> snr_direct_only(const SystemParams<Scalar>& p, Scalar h3_norm2) {
    return detail::make_snr(Scalar(0), Scalar(1), p.P * h3_norm2 / p.sigma2);
}

// ---------------------------------------------------------------------------
// Radiated power of the amplifying devices: amplified signal plus receiver
// noise at the device output.

template <typename Scalar>
Scalar ncr_radiated_power(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g, Scalar alpha) {
    return alpha * alpha * (p.P * g.beta1 + p.sigma2);
}

template <typename Scalar>
Scalar active_ris_radiated_power(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g, Scalar alpha) {
    return alpha * alpha * Scalar(p.N) * (p.P * g.beta1 + p.sigma2);
}

/// Largest NCR amplification whose radiated power stays within `power_max`.
template <typename Scalar>
Scalar ncr_alpha_for_power(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g, Scalar power_max) {
    return std::sqrt(power_max / (p.P * g.beta1 + p.sigma2));
}

template <typename Scalar>
Scalar active_ris_alpha_for_power(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g, Scalar power_max) {
    return std::sqrt(power_max / (Scalar(p.N) * (p.P * g.beta1 + p.sigma2)));
}

}  // namespace ncrris
