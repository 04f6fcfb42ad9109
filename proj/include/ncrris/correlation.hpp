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

#include <complex>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "ncrris/array_response.hpp"
#include "ncrris/error.hpp"
#include "ncrris/types.hpp"

namespace ncrris {

/// Spatial correlation of the direct UE-BS channel, h3 ~ CN(0, R3).
template <typename Scalar = double>
using CorrelationMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
struct Scatterer {
    Position3<Scalar> position = Position3<Scalar>::Zero();
    Scalar weight = Scalar(1);
};

/// Builds R3 = beta3 M sum_k w_k a_k a_k^H / ||a_k||^2 with a_k the BS response
/// towards scatterer k. Weights are normalized to sum to one and the result is
/// rescaled so that trace(R3) = M beta3.
template <typename Scalar>
CorrelationMatrix<Scalar> scatterer_correlation(const Deployment3D<Scalar>& dep,
                                                const std::vector<Scatterer<Scalar>>& scatterers, Scalar beta3,
                                                int M, const ArrayModel<Scalar>& model = {}) {
    if (scatterers.empty()) throw InvalidArgument("scatterer correlation needs at least one scatterer");
    detail::require(beta3 >= 0, "beta3 must be non-negative");
    detail::require(M >= 1, "array size must be at least 1");

    Scalar total_weight = 0;
    for (const auto& s : scatterers) {
        detail::require(s.weight >= 0, "scatterer weights must be non-negative");
        total_weight += s.weight;
    }
    detail::require(total_weight > 0, "scatterer weights sum to zero");

    CorrelationMatrix<Scalar> R = CorrelationMatrix<Scalar>::Zero(M, M);
    for (const auto& s : scatterers) {
        const ArrayResponse<Scalar> a = steering_vector(model, M, dep.bs_pos, s.position);
        R.noalias() += (s.weight / total_weight / a.squaredNorm()) * (a * a.adjoint());
    }
    const Scalar trace = R.trace().real();
    if (trace > 0) R *= beta3 * Scalar(M) / trace;
    return R;
}

/// a^H R a (real by Hermitian symmetry).
template <typename Scalar>
Scalar quadratic_form(const CorrelationMatrix<Scalar>& R, const ArrayResponse<Scalar>& a) {
    detail::require(R.rows() == a.size() && R.cols() == a.size(), "quadratic form: dimension mismatch");
    return (a.adjoint() * R * a)(0, 0).real();
}

/// Entrywise, relative to the largest entry.
template <typename Scalar>
bool is_hermitian(const CorrelationMatrix<Scalar>& R, Scalar tol = Scalar(1e-12)) {
    if (R.rows() != R.cols()) return false;
    const Scalar scale = R.cwiseAbs().maxCoeff();
    if (scale == 0) return true;
    return (R - R.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

/// PSD up to eigenvalues >= -rel_tol * trace.
template <typename Scalar>
bool is_psd(const CorrelationMatrix<Scalar>& R, Scalar rel_tol = Scalar(1e-10)) {
    if (R.size() == 0) return true;
    Eigen::SelfAdjointEigenSolver<CorrelationMatrix<Scalar>> eig(R, Eigen::EigenvaluesOnly);
    const Scalar trace = std::abs(R.trace().real());
    return eig.eigenvalues().minCoeff() >= -rel_tol * trace;
}

}  // namespace ncrris
