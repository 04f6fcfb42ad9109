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
#include <complex>
#include <numbers>

#include <Eigen/Core>

#include "ncrris/error.hpp"

namespace ncrris {

/// Scalar inputs shared by every SNR expression.
///
/// Powers are in watts, counts are element/antenna numbers and both
/// amplification caps are linear amplitude gains (0 disables the device).
template <typename Scalar = double>
struct SystemParams {
    Scalar P = Scalar(1);       ///< UE transmit power
    Scalar sigma2 = Scalar(1);  ///< noise power per receiver
    int M = 1;                  ///< BS antennas
    int N = 1;                  ///< RIS elements
    Scalar alpha_ncr_max = Scalar(0);
    Scalar alpha_aris_max = Scalar(0);

    void validate() const {
        detail::require(P > 0, "transmit power must be positive");
        detail::require(sigma2 > 0, "noise power must be positive");
        detail::require(M >= 1, "BS antenna count must be at least 1");
        detail::require(N >= 1, "RIS element count must be at least 1");
        detail::require(alpha_ncr_max >= 0, "NCR amplification cap must be non-negative");
        detail::require(alpha_aris_max >= 0, "active-RIS amplification cap must be non-negative");
    }
};

/// Large-scale power gains of the UE-node, node-BS and UE-BS links.
template <typename Scalar = double>
struct ChannelGains {
    Scalar beta1 = Scalar(0);
    Scalar beta2 = Scalar(0);
    Scalar beta3 = Scalar(0);

    void validate() const {
        detail::require(beta1 >= 0 && beta2 >= 0 && beta3 >= 0, "channel gains must be non-negative");
    }
};

/// The complex coupling x = h3^H a21 e^{j phi1} between the direct path and
/// the BS-side direction of the cascaded path, stored in polar form.
template <typename Scalar = double>
class DirectCoupling {
public:
    DirectCoupling() = default;

    DirectCoupling(Scalar magnitude, Scalar phase) : magnitude_(magnitude), phase_(normalize(phase)) {
        detail::require(magnitude >= 0, "coupling magnitude must be non-negative");
    }

    static DirectCoupling from_complex(std::complex<Scalar> x) {
        return DirectCoupling(std::abs(x), std::arg(x));
    }

    static DirectCoupling zero() { return DirectCoupling(); }

    Scalar magnitude() const { return magnitude_; }
    Scalar phase() const { return phase_; }
    std::complex<Scalar> value() const { return std::polar(magnitude_, phase_); }
    Scalar real() const { return magnitude_ * std::cos(phase_); }

private:
    // Maps to (-pi, pi].
    static Scalar normalize(Scalar phase) {
        const Scalar pi = std::numbers::pi_v<Scalar>;
        Scalar wrapped = std::remainder(phase, Scalar(2) * pi);
        if (wrapped <= -pi) wrapped += Scalar(2) * pi;
        return wrapped;
    }

    Scalar magnitude_ = Scalar(0);
    Scalar phase_ = Scalar(0);
};

template <typename Scalar = double>
using Position3 = Eigen::Matrix<Scalar, 3, 1>;

/// BS, UE and RIS/NCR positions in meters.
template <typename Scalar = double>
struct Deployment3D {
    Position3<Scalar> bs_pos = Position3<Scalar>::Zero();
    Position3<Scalar> ue_pos = Position3<Scalar>::Zero();
    Position3<Scalar> node_pos = Position3<Scalar>::Zero();
};

template <typename Scalar = double>
struct LinkDistances {
    Scalar d1;  ///< UE to node
    Scalar d2;  ///< BS to node
    Scalar d3;  ///< BS to UE
};

template <typename Scalar>
LinkDistances<Scalar> distances(const Deployment3D<Scalar>& dep) {
    LinkDistances<Scalar> d{(dep.ue_pos - dep.node_pos).norm(), (dep.bs_pos - dep.node_pos).norm(),
                            (dep.bs_pos - dep.ue_pos).norm()};
    if (!(d.d1 > 0) || !(d.d2 > 0) || !(d.d3 > 0))
        throw GeometryError("invalid deployment: co-located BS, UE or node");
    return d;
}

}  // namespace ncrris
