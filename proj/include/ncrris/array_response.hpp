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
#include <complex>
#include <numbers>

#include <Eigen/Core>

#include "ncrris/error.hpp"
#include "ncrris/types.hpp"

namespace ncrris {

template <typename Scalar = double>
using ArrayResponse = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// Uniform linear array geometry used wherever an explicit response vector is
/// needed. `axis` is the array orientation (unit vector after normalization).
template <typename Scalar = double>
struct ArrayModel {
    Scalar spacing_over_lambda = Scalar(0.5);
    Position3<Scalar> axis = Position3<Scalar>::UnitY();
};

/// entry_m = exp(j 2 pi s (m-1) sin_angle), m = 1..M.
template <typename Scalar>
ArrayResponse<Scalar> ula_response(int M, Scalar spacing_over_lambda, Scalar sin_angle) {
    detail::require(M >= 1, "array size must be at least 1");
    detail::require(spacing_over_lambda > 0, "element spacing must be positive");
    if (!(std::abs(sin_angle) <= Scalar(1))) throw InvalidArgument("sin(angle) outside [-1, 1]");
    const Scalar step = Scalar(2) * std::numbers::pi_v<Scalar> * spacing_over_lambda * sin_angle;
    ArrayResponse<Scalar> a(M);
    for (int m = 0; m < M; ++m) a(m) = std::polar(Scalar(1), step * Scalar(m));
    return a;
}

/// Sine of the angle between the array broadside and the direction from
/// `origin` to `target`, i.e. the projection on the array axis.
template <typename Scalar>
Scalar direction_sine(const ArrayModel<Scalar>& model, const Position3<Scalar>& origin,
                      const Position3<Scalar>& target) {
    const Position3<Scalar> d = target - origin;
    const Scalar norm = d.norm();
    if (!(norm > 0)) throw GeometryError("direction to a co-located point is undefined");
    const Scalar s = model.axis.normalized().dot(d) / norm;
    return std::clamp(s, Scalar(-1), Scalar(1));
}

/// Response of an array at `origin` towards `target`.
template <typename Scalar>
ArrayResponse<Scalar> steering_vector(const ArrayModel<Scalar>& model, int M, const Position3<Scalar>& origin,
                                      const Position3<Scalar>& target) {
    return ula_response(M, model.spacing_over_lambda, direction_sine(model, origin, target));
}

}  // namespace ncrris
