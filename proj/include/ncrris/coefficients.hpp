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

#include "ncrris/types.hpp"

namespace ncrris {

/// f(alpha) = (A alpha^2 + B alpha) / (sigma2 + C alpha^2), the amplification
/// dependent part of the active-RIS and NCR SNRs with a direct path.
template <typename Scalar = double>
struct QuadraticRatioCoeffs {
    Scalar A = 0;
    Scalar B = 0;
    Scalar C = 0;
    Scalar sigma2 = 1;

    Scalar value(Scalar alpha) const { return (A * alpha * alpha + B * alpha) / (sigma2 + C * alpha * alpha); }

    Scalar derivative(Scalar alpha) const {
        const Scalar den = sigma2 + C * alpha * alpha;
        return -(B * C * alpha * alpha - Scalar(2) * A * sigma2 * alpha - B * sigma2) / (den * den);
    }

    Scalar second_derivative(Scalar alpha) const {
        const Scalar den = sigma2 + C * alpha * alpha;
        const Scalar q = B * C * alpha * alpha - Scalar(2) * A * sigma2 * alpha - B * sigma2;
        return Scalar(4) * C * alpha * q / (den * den * den) -
               (Scalar(2) * B * C * alpha - Scalar(2) * A * sigma2) / (den * den);
    }

    /// The unique positive root of f' when B > 0 and C > 0; +inf when C = 0
    /// (f is then increasing for B > 0).
    Scalar stationary_point() const {
        if (C == 0) return std::numeric_limits<Scalar>::infinity();
        const Scalar As2 = A * sigma2;
        const Scalar disc = std::sqrt(As2 * As2 + B * B * C * sigma2);
        // Rationalized form for A < 0 avoids cancellation in As2 + disc.
        if (As2 >= 0) return (As2 + disc) / (B * C);
        return B * sigma2 / (disc - As2);
    }
};

/// Coefficients of the active-RIS SNR with equal per-element amplitudes.
template <typename Scalar>
QuadraticRatioCoeffs<Scalar> active_ris_coeffs(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g,
                                               Scalar x_mag) {
    const Scalar N = Scalar(p.N), M = Scalar(p.M);
    return {p.P * M * g.beta1 * g.beta2 * N * N - p.P * g.beta2 * N * x_mag * x_mag,
            Scalar(2) * p.P * N * std::sqrt(g.beta1 * g.beta2) * x_mag, p.sigma2 * g.beta2 * M * N, p.sigma2};
}

template <typename Scalar>
QuadraticRatioCoeffs<Scalar> ncr_coeffs(const SystemParams<Scalar>& p, const ChannelGains<Scalar>& g,
                                        const DirectCoupling<Scalar>& x) {
    const Scalar M = Scalar(p.M);
    const Scalar mag = x.magnitude();
    return {p.P * M * g.beta1 * g.beta2 - p.P * g.beta2 * mag * mag,
            Scalar(2) * p.P * std::sqrt(g.beta1 * g.beta2) * x.real(), p.sigma2 * g.beta2 * M, p.sigma2};
}

}  // namespace ncrris
