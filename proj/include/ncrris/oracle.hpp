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

// Brute-force, explicit-vector reference evaluations. Nothing here uses the
// rank-one simplifications of snr.hpp: covariances are built entrywise and
// inverted densely, and averages are sampled.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>

#include <Eigen/Core>

#include "ncrris/correlation.hpp"
#include "ncrris/rng.hpp"
#include "ncrris/snr.hpp"
#include "ncrris/types.hpp"

namespace ncrris::oracle {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

/// LOS RIS channel: h1 = sqrt(beta1) a1, H2 = sqrt(beta2) a21 a22^T, plus an
/// arbitrary direct channel h3 (zero when blocked).
struct RisInstance {
    double beta1 = 0;
    double beta2 = 0;
    VectorXcd a1;   ///< UE-side response, length N
    VectorXcd a21;  ///< BS-side response, length M
    VectorXcd a22;  ///< RIS-side response towards the BS, length N
    VectorXcd h3;   ///< length M

    int M() const { return int(a21.size()); }
    int N() const { return int(a1.size()); }
    VectorXcd h1() const { return std::sqrt(beta1) * a1; }
    MatrixXcd H2() const { return std::sqrt(beta2) * a21 * a22.transpose(); }
};

/// Repeater channel: h1 = sqrt(beta1) e^{j phi1}, h2 = sqrt(beta2) a21.
struct NcrInstance {
    double beta1 = 0;
    double beta2 = 0;
    double phi1 = 0;
    VectorXcd a21;
    VectorXcd h3;

    int M() const { return int(a21.size()); }
    std::complex<double> h1() const { return std::polar(std::sqrt(beta1), phi1); }
    VectorXcd h2() const { return std::sqrt(beta2) * a21; }
};

enum class RisKind { Passive, Active };

/// x = h3^H a21 (RIS; only |x| matters) and x = h3^H a21 e^{j phi1} (NCR).
std::complex<double> coupling(const RisInstance& inst);
std::complex<double> coupling(const NcrInstance& inst);

/// Per-element responses with the SNR-maximizing phases
/// exp(j(-arg a1_n - arg a22_n - arg(h3^H a21))) and the given amplitudes.
VectorXcd aligned_ris_responses(const RisInstance& inst, const VectorXd& amplitudes);

/// s^H C^{-1} s with the signal s and noise covariance C written out and C
/// inverted densely. For the active RIS, C includes sigma2 H2 Psi Psi^H H2^H.
SnrResult<double> dense_mmse_snr(const RisInstance& inst, const SystemParams<double>& p, const VectorXcd& responses,
                                 RisKind kind);
SnrResult<double> dense_mmse_snr(const NcrInstance& inst, const SystemParams<double>& p, double alpha);

/// Sample mean estimate with its standard error.
struct Estimate {
    double mean = 0;
    double std_error = 0;
    std::size_t samples = 0;
};

struct EmpiricalSnr {
    SnrResult<double> snr;
    double std_error = 0;  ///< of snr.snr_linear, by the delta method
    std::size_t symbols = 0;
};

/// Symbol-level simulation of the uplink: draws unit-power Gaussian symbols
/// and all receiver noises, combines with MR (direct path blocked) or MMSE
/// (direct path present), and returns mean combined signal power over mean
/// combined noise power.
EmpiricalSnr simulate_link_snr(const RisInstance& inst, const SystemParams<double>& p, const VectorXcd& responses,
                               RisKind kind, std::size_t num_symbols, RngSeed seed);
EmpiricalSnr simulate_link_snr(const NcrInstance& inst, const SystemParams<double>& p, double alpha,
                               std::size_t num_symbols, RngSeed seed);

enum class WidebandVariant { PassiveRis, ActiveRis, Ncr, DirectOnly };

/// Square-root factor L (M x r) with L L^H = R3, from the eigendecomposition
/// and keeping the eigenvalues above 1e-12 trace. Throws when R3 is not PSD
/// within -1e-10 trace.
MatrixXcd correlation_factor(const CorrelationMatrix<double>& R3);

struct WidebandEstimate {
    Estimate snr;
    Estimate re_coupling;  ///< of Re(h3^H a21 e^{j phi1})
};

/// Average over h3 ~ CN(0, R3) and phi1 ~ U(-pi, pi] of the per-subcarrier
/// SNR with device settings fixed across subcarriers. RIS phases stay aligned
/// to the LOS cascade, so the direct-path cross term enters through Re(x).
WidebandEstimate mc_wideband_average(const SystemParams<double>& p, const ChannelGains<double>& g,
                                     const CorrelationMatrix<double>& R3, const VectorXcd& a21, double alpha,
                                     WidebandVariant variant, std::size_t num_draws, RngSeed seed);

struct GridMax {
    double alpha_best = 0;
    double value = 0;
};

/// Max over a uniform grid on [0, alpha_max] including both endpoints.
GridMax grid_search_alpha(const std::function<double(double)>& objective, double alpha_max, std::size_t points);

/// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double rel_tol = 1e-14);

/// Smallest alpha > 0 where `ncr_minus_ris` turns non-negative, located by
/// doubling and bisection. Returns +inf if none is found below alpha_limit.
double bisect_crossover(const std::function<double(double)>& ncr_minus_ris, double alpha_limit = 1e12);

struct JensenReport {
    std::size_t trials = 0;
    std::size_t counterexamples = 0;    ///< trials beating the equal optimum by > 1e-10 relative
    double max_relative_excess = 0;     ///< max of (snr_trial - snr_equal) / snr_equal
    double equal_alpha = 0;
    double equal_snr = 0;
};

/// Random unequal amplitude vectors within the cap, evaluated with explicit
/// vectors and aligned phases, against the equal-amplitude optimum. The
/// instance is random with |h3^H a21| = x_mag.
JensenReport jensen_counterexample_search(const SystemParams<double>& p, const ChannelGains<double>& g, double x_mag,
                                          double alpha_max, std::size_t trials, RngSeed seed);

/// Random unit-modulus vector of length n.
VectorXcd random_unit_modulus(int n, Rng& rng);

/// Random RIS instance with h3^H a21 = x and ||h3||^2 = h3_norm2.
RisInstance random_ris_instance(int M, int N, double beta1, double beta2, std::complex<double> x, double h3_norm2,
                                Rng& rng);

/// Random NCR instance whose coupling h3^H a21 e^{j phi1} equals x.
NcrInstance random_ncr_instance(int M, double beta1, double beta2, std::complex<double> x, double h3_norm2, Rng& rng);

/// Direct channel of squared norm h3_norm2 with h3^H a21 = x (requires
/// |x|^2 <= M h3_norm2); the part orthogonal to a21 has a random direction.
VectorXcd direct_channel_with_coupling(const VectorXcd& a21, std::complex<double> x, double h3_norm2, Rng& rng);

}  // namespace ncrris::oracle
