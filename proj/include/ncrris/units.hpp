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

namespace ncrris {

// Power-like quantities (channel gains, powers, SNR) use 10*log10.
template <typename Scalar>
inline Scalar db_to_linear_power(Scalar db) {
    return std::pow(Scalar(10), db / Scalar(10));
}

template <typename Scalar>
inline Scalar linear_to_db_power(Scalar linear) {
    return Scalar(10) * std::log10(linear);
}

// Amplitude gains use 20*log10, so that squaring the linear value maps to
// the power convention.
template <typename Scalar>
inline Scalar db_to_linear_amplitude(Scalar db) {
    return std::pow(Scalar(10), db / Scalar(20));
}

template <typename Scalar>
inline Scalar linear_to_db_amplitude(Scalar linear) {
    return Scalar(20) * std::log10(linear);
}

/// dBm to watts.
template <typename Scalar>
inline Scalar dbm_to_watts(Scalar dbm) {
    return db_to_linear_power(dbm - Scalar(30));
}

template <typename Scalar>
inline Scalar watts_to_dbm(Scalar watts) {
    return linear_to_db_power(watts) + Scalar(30);
}

}  // namespace ncrris
