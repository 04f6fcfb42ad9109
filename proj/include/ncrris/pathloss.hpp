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
#include <numbers>

#include "ncrris/error.hpp"
#include "ncrris/units.hpp"

namespace ncrris {

/// Free-space gain with isotropic antennas, lambda^2 / (4 pi d)^2.
template <typename Scalar>
Scalar free_space_gain(Scalar distance, Scalar wavelength) {
    if (!(distance > 0)) throw InvalidArgument("free-space gain: distance must be positive");
    detail::require(wavelength > 0, "free-space gain: wavelength must be positive");
    const Scalar ratio = wavelength / (Scalar(4) * std::numbers::pi_v<Scalar> * distance);
    return ratio * ratio;
}

/// UMi street-canyon NLOS gain in dB: -32.4 - 20 log10(fc/GHz) - 31.9 log10(d/m).
template <typename Scalar>
Scalar umi_street_canyon_gain_db(Scalar distance, Scalar fc_ghz) {
    if (!(distance >= 1)) throw InvalidArgument("UMi gain: distance below the 1 m model reference");
    detail::require(fc_ghz > 0, "UMi gain: carrier frequency must be positive");
    return Scalar(-32.4) - Scalar(20) * std::log10(fc_ghz) - Scalar(31.9) * std::log10(distance);
}

template <typename Scalar>
Scalar umi_street_canyon_gain(Scalar distance, Scalar fc_ghz) {
    return db_to_linear_power(umi_street_canyon_gain_db(distance, fc_ghz));
}

inline constexpr double kSpeedOfLight = 299792458.0;

template <typename Scalar>
Scalar wavelength_from_ghz(Scalar fc_ghz) {
    return Scalar(kSpeedOfLight) / (fc_ghz * Scalar(1e9));
}

}  // namespace ncrris
