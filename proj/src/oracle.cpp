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

#include "ncrris/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "ncrris/gain.hpp"

namespace ncrris::oracle {

namespace {

constexpr std::size_t kChunks = 16;

// Runs fn(chunk) for chunk in [0, kChunks), on worker threads when available.
// Results must be written per chunk; merging happens in chunk order so the
// output does not depend on the thread count.
template <typename Fn>
void for_each_chunk(Fn&& fn) {
    const unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), kChunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < kChunks; ++c) fn(c);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t c = w; c < kChunks; c += workers) fn(c);
        });
    }
    for (auto& t : pool) t.join();
}

std::size_t chunk_size(std::size_t total, std::size_t chunk) {
    return total / kChunks + (chunk < total % kChunks ? 1 : 0);
}

// Running first and second moments of one variable (Welford, Chan merge).
struct Moments {
    std::size_t n = 0;
    double mean = 0;
    double m2 = 0;

    void add(double v) {
        ++n;
        const double d = v - mean;
        mean += d / double(n);
        m2 += d * (v - mean);
    }

    void merge(const Moments& o) {
        if (o.n == 0) return;
        const double total = double(n + o.n);
        const double d = o.mean - mean;
        mean += d * double(o.n) / total;
        m2 += o.m2 + d * d * double(n) * double(o.n) / total;
        n += o.n;
    }

    double variance() const { return n > 1 ? m2 / double(n - 1) : 0.0; }

    Estimate estimate() const { return {mean, n > 0 ? std::sqrt(variance() / double(n)) : 0.0, n}; }
};

// Joint moments of (signal power, noise power) for the ratio estimator.
struct PairMoments {
    Moments s, z;
    double cross = 0;  // sum of (s - mean_s)(z - mean_z)

    void add(double sv, double zv) {
        const double ds = sv - s.mean;
        s.add(sv);
        z.add(zv);
        cross += ds * (zv - z.mean);
    }

    void merge(const PairMoments& o) {
        if (o.s.n == 0) return;
        const double n1 = double(s.n), n2 = double(o.s.n);
        const double ds = o.s.mean - s.mean, dz = o.z.mean - z.mean;
        cross += o.cross + ds * dz * n1 * n2 / (n1 + n2);
        s.merge(o.s);
        z.merge(o.z);
    }

    // Delta-method standard error of mean(s) / mean(z).
    double ratio_std_error() const {
        const double n = double(s.n);
        if (s.n < 2 || z.mean == 0) return 0.0;
        const double r = s.mean / z.mean;
        const double cov = cross / (n - 1);
        const double var = (s.variance() - 2 * r * cov + r * r * z.variance()) / (z.mean * z.mean);
        return std::sqrt(std::max(var, 0.0) / n);
    }
};

EmpiricalSnr finish(const PairMoments& acc) {
    EmpiricalSnr out;
    out.snr.snr_linear = acc.s.mean / acc.z.mean;
    out.std_error = acc.ratio_std_error();
    out.symbols = acc.s.n;
    return out;
}

void check_dimensions(const RisInstance& inst) {
    detail::require(inst.a22.size() == inst.a1.size(), "RIS instance: a1 and a22 lengths differ");
    detail::require(inst.h3.size() == inst.a21.size(), "RIS instance: h3 and a21 lengths differ");
}

}  // namespace

std::complex<double> coupling(const RisInstance& inst) { return inst.h3.dot(inst.a21); }

std::complex<double> coupling(const NcrInstance& inst) {
    return inst.h3.dot(inst.a21) * std::polar(1.0, inst.phi1);
}

VectorXcd aligned_ris_responses(const RisInstance& inst, const VectorXd& amplitudes) {
    check_dimensions(inst);
    detail::require(amplitudes.size() == inst.a1.size(), "amplitude vector length differs from N");
    const double direct_phase = std::arg(coupling(inst));
    VectorXcd psi(inst.N());
    for (int n = 0; n < inst.N(); ++n)
        psi(n) = std::polar(amplitudes(n), -std::arg(inst.a1(n)) - std::arg(inst.a22(n)) - direct_phase);
    return psi;
}

SnrResult<double> dense_mmse_snr(const RisInstance& inst, const SystemParams<double>& p, const VectorXcd& responses,
                                 RisKind kind) {
    p.validate();
    check_dimensions(inst);
    detail::require(responses.size() == inst.a1.size(), "response vector length differs from N");
    const int M = inst.M();
    const MatrixXcd cascade = inst.H2() * responses.asDiagonal();
    const VectorXcd s = cascade * inst.h1() + inst.h3;
    MatrixXcd cov = p.sigma2 * MatrixXcd::Identity(M, M);
    if (kind == RisKind::Active) cov += p.sigma2 * cascade * cascade.adjoint();
    const MatrixXcd inv = cov.inverse();
    return {p.P * s.dot(inv * s).real(), {}};
}

SnrResult<double> dense_mmse_snr(const NcrInstance& inst, const SystemParams<double>& p, double alpha) {
    p.validate();
    detail::require(inst.h3.size() == inst.a21.size(), "NCR instance: h3 and a21 lengths differ");
    const int M = inst.M();
    const VectorXcd h2 = inst.h2();
    const VectorXcd s = alpha * inst.h1() * h2 + inst.h3;
    const MatrixXcd cov = alpha * alpha * p.sigma2 * h2 * h2.adjoint() + p.sigma2 * MatrixXcd::Identity(M, M);
    const MatrixXcd inv = cov.inverse();
    return {p.P * s.dot(inv * s).real(), {}};
}

EmpiricalSnr simulate_link_snr(const RisInstance& inst, const SystemParams<double>& p, const VectorXcd& responses,
                               RisKind kind, std::size_t num_symbols, RngSeed seed) {
    p.validate();
    check_dimensions(inst);
    const int M = inst.M(), N = inst.N();
    const MatrixXcd cascade = inst.H2() * responses.asDiagonal();
    const VectorXcd channel = std::sqrt(p.P) * (cascade * inst.h1() + inst.h3);
    const bool direct = inst.h3.squaredNorm() > 0;

    VectorXcd w;
    if (direct) {
        MatrixXcd cov = p.sigma2 * MatrixXcd::Identity(M, M);
        if (kind == RisKind::Active) cov += p.sigma2 * cascade * cascade.adjoint();
        w = cov.partialPivLu().solve(channel);
    } else {
        // MR: signal and amplified noise share the direction a21.
        w = kind == RisKind::Active ? inst.a21 : channel;
    }
    const std::complex<double> signal_gain = w.dot(channel);
    const Eigen::RowVectorXcd relay_noise_gain = w.adjoint() * cascade;
    const double noise_var = p.sigma2;

    std::vector<PairMoments> parts(kChunks);
    for_each_chunk([&](std::size_t c) {
        Rng rng(RngSeed{derive_seed(seed.value, c)});
        PairMoments acc;
        VectorXcd n1(N), n2(M);
        for (std::size_t i = 0, count = chunk_size(num_symbols, c); i < count; ++i) {
            const std::complex<double> sym = rng.complex_normal();
            for (int m = 0; m < M; ++m) n2(m) = rng.complex_normal(noise_var);
            std::complex<double> noise = w.dot(n2);
            if (kind == RisKind::Active) {
                for (int n = 0; n < N; ++n) n1(n) = rng.complex_normal(noise_var);
                noise += (relay_noise_gain * n1).value();
            }
            acc.add(std::norm(signal_gain * sym), std::norm(noise));
        }
        parts[c] = acc;
    });
    PairMoments total;
    for (const auto& part : parts) total.merge(part);
    return finish(total);
}

EmpiricalSnr simulate_link_snr(const NcrInstance& inst, const SystemParams<double>& p, double alpha,
                               std::size_t num_symbols, RngSeed seed) {
    p.validate();
    const int M = inst.M();
    const VectorXcd h2 = inst.h2();
    const VectorXcd channel = std::sqrt(p.P) * (alpha * inst.h1() * h2 + inst.h3);
    const bool direct = inst.h3.squaredNorm() > 0;

    VectorXcd w;
    if (direct) {
        const MatrixXcd cov = alpha * alpha * p.sigma2 * h2 * h2.adjoint() + p.sigma2 * MatrixXcd::Identity(M, M);
        w = cov.partialPivLu().solve(channel);
    } else {
        w = inst.a21;
    }
    const std::complex<double> signal_gain = w.dot(channel);
    const std::complex<double> relay_noise_gain = alpha * w.dot(h2);

    std::vector<PairMoments> parts(kChunks);
    for_each_chunk([&](std::size_t c) {
        Rng rng(RngSeed{derive_seed(seed.value, c)});
        PairMoments acc;
        VectorXcd n2(M);
        for (std::size_t i = 0, count = chunk_size(num_symbols, c); i < count; ++i) {
            const std::complex<double> sym = rng.complex_normal();
            const std::complex<double> n1 = rng.complex_normal(p.sigma2);
            for (int m = 0; m < M; ++m) n2(m) = rng.complex_normal(p.sigma2);
            const std::complex<double> noise = relay_noise_gain * n1 + w.dot(n2);
            acc.add(std::norm(signal_gain * sym), std::norm(noise));
        }
        parts[c] = acc;
    });
    PairMoments total;
    for (const auto& part : parts) total.merge(part);
    return finish(total);
}

MatrixXcd correlation_factor(const CorrelationMatrix<double>& R3) {
    detail::require(R3.rows() == R3.cols(), "correlation matrix must be square");
    if (!is_hermitian(R3)) throw InvalidArgument("correlation matrix is not Hermitian");
    const double trace = R3.trace().real();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(R3);
    if (eig.info() != Eigen::Success) throw InvalidArgument("eigendecomposition of R3 failed");
    const VectorXd& lambda = eig.eigenvalues();
    if (lambda.size() > 0 && lambda.minCoeff() < -1e-10 * std::abs(trace))
        throw InvalidArgument("correlation matrix is not positive semidefinite");

    std::vector<int> keep;
    for (int i = 0; i < lambda.size(); ++i)
        if (lambda(i) > 1e-12 * trace) keep.push_back(i);
    MatrixXcd L(R3.rows(), Eigen::Index(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k)
        L.col(Eigen::Index(k)) = eig.eigenvectors().col(keep[k]) * std::sqrt(lambda(keep[k]));
    return L;
}

WidebandEstimate mc_wideband_average(const SystemParams<double>& p, const ChannelGains<double>& g,
                                     const CorrelationMatrix<double>& R3, const VectorXcd& a21, double alpha,
                                     WidebandVariant variant, std::size_t num_draws, RngSeed seed) {
    p.validate();
    detail::require(R3.rows() == p.M && a21.size() == p.M, "R3 and a21 must match the antenna count");
    const MatrixXcd L = correlation_factor(R3);
    const int rank = int(L.cols());
    const double M = p.M, N = p.N, a2 = alpha * alpha;
    const double root = std::sqrt(g.beta1 * g.beta2);

    // Per-draw SNR given ||h3||^2 and x = h3^H a21 e^{j phi1}, with device
    // settings fixed: RIS phases aligned to the LOS cascade only.
    auto per_draw = [&](double h3_norm2, std::complex<double> x) {
        const double direct = p.P * h3_norm2 / p.sigma2;
        switch (variant) {
            case WidebandVariant::PassiveRis:
                return p.P * (h3_norm2 + g.beta1 * g.beta2 * N * N * M + 2 * root * N * x.real()) / p.sigma2;
            case WidebandVariant::ActiveRis: {
                const double A = p.P * M * g.beta1 * g.beta2 * N * N - p.P * g.beta2 * N * std::norm(x);
                const double B = 2 * p.P * N * root * x.real();
                const double C = p.sigma2 * g.beta2 * M * N;
                return (A * a2 + B * alpha) / (p.sigma2 + C * a2) + direct;
            }
            case WidebandVariant::Ncr:
                return snr_ncr_direct(p, g, DirectCoupling<double>::from_complex(x), h3_norm2, alpha).snr_linear;
            case WidebandVariant::DirectOnly: return direct;
        }
        return 0.0;
    };

    std::vector<Moments> snr_parts(kChunks), re_parts(kChunks);
    for_each_chunk([&](std::size_t c) {
        Rng rng(RngSeed{derive_seed(seed.value, c)});
        Eigen::VectorXcd z(rank), h3(p.M);
        for (std::size_t i = 0, count = chunk_size(num_draws, c); i < count; ++i) {
            for (int k = 0; k < rank; ++k) z(k) = rng.complex_normal();
            if (rank > 0)
                h3.noalias() = L * z;
            else
                h3.setZero();
            const std::complex<double> x = h3.dot(a21) * std::polar(1.0, rng.phase());
            snr_parts[c].add(per_draw(h3.squaredNorm(), x));
            re_parts[c].add(x.real());
        }
    });
    Moments snr_total, re_total;
    for (std::size_t c = 0; c < kChunks; ++c) {
        snr_total.merge(snr_parts[c]);
        re_total.merge(re_parts[c]);
    }
    return {snr_total.estimate(), re_total.estimate()};
}

GridMax grid_search_alpha(const std::function<double(double)>& objective, double alpha_max, std::size_t points) {
    detail::require(points >= 2, "grid needs at least two points");
    detail::require(alpha_max >= 0, "grid upper end must be non-negative");
    GridMax best{0.0, objective(0.0)};
    for (std::size_t i = 1; i < points; ++i) {
        const double alpha = i + 1 == points ? alpha_max : alpha_max * double(i) / double(points - 1);
        const double v = objective(alpha);
        if (v > best.value) best = {alpha, v};
    }
    return best;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0)) throw InvalidArgument("bisection: no sign change on the bracket");
    for (int it = 0; it < 2000 && hi - lo > rel_tol * std::abs(hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double bisect_crossover(const std::function<double(double)>& ncr_minus_ris, double alpha_limit) {
    double lo = 1e-9;
    if (ncr_minus_ris(lo) >= 0) return lo;
    for (double hi = 2 * lo; hi <= alpha_limit; lo = hi, hi *= 2) {
        if (ncr_minus_ris(hi) >= 0) return bisect_root(ncr_minus_ris, lo, hi);
    }
    return std::numeric_limits<double>::infinity();
}

VectorXcd random_unit_modulus(int n, Rng& rng) {
    VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = std::polar(1.0, rng.phase());
    return v;
}

VectorXcd direct_channel_with_coupling(const VectorXcd& a21, std::complex<double> x, double h3_norm2, Rng& rng) {
    const double M = double(a21.size());
    const double along = std::norm(x) / M;
    if (h3_norm2 < along * (1 - 1e-12)) throw InvalidArgument("|x|^2 exceeds M ||h3||^2");
    VectorXcd h3 = (std::conj(x) / M) * a21;
    const double rest = std::max(h3_norm2 - along, 0.0);
    if (rest > 0 && a21.size() > 1) {
        VectorXcd z(a21.size());
        for (int m = 0; m < z.size(); ++m) z(m) = rng.complex_normal();
        z -= a21 * (a21.dot(z) / M);
        h3 += std::sqrt(rest) / z.norm() * z;
    }
    return h3;
}

RisInstance random_ris_instance(int M, int N, double beta1, double beta2, std::complex<double> x, double h3_norm2,
                                Rng& rng) {
    RisInstance inst;
    inst.beta1 = beta1;
    inst.beta2 = beta2;
    inst.a1 = random_unit_modulus(N, rng);
    inst.a22 = random_unit_modulus(N, rng);
    inst.a21 = random_unit_modulus(M, rng);
    inst.h3 = direct_channel_with_coupling(inst.a21, x, h3_norm2, rng);
    return inst;
}

NcrInstance random_ncr_instance(int M, double beta1, double beta2, std::complex<double> x, double h3_norm2, Rng& rng) {
    NcrInstance inst;
    inst.beta1 = beta1;
    inst.beta2 = beta2;
    inst.phi1 = rng.phase();
    inst.a21 = random_unit_modulus(M, rng);
    inst.h3 = direct_channel_with_coupling(inst.a21, x * std::polar(1.0, -inst.phi1), h3_norm2, rng);
    return inst;
}

JensenReport jensen_counterexample_search(const SystemParams<double>& p, const ChannelGains<double>& g, double x_mag,
                                          double alpha_max, std::size_t trials, RngSeed seed) {
    p.validate();
    detail::require(p.N <= 8 && p.M <= 16, "explicit-vector search is limited to N <= 8, M <= 16");
    Rng rng(seed);
    RisInstance inst;
    inst.beta1 = g.beta1;
    inst.beta2 = g.beta2;
    inst.a1 = random_unit_modulus(p.N, rng);
    inst.a22 = random_unit_modulus(p.N, rng);
    inst.a21 = random_unit_modulus(p.M, rng);
    const double h3_norm2 = x_mag > 0 ? x_mag * x_mag / p.M * (1.0 + 2.0 * rng.uniform()) : rng.uniform();
    inst.h3 = direct_channel_with_coupling(inst.a21, std::polar(x_mag, rng.phase()), h3_norm2, rng);

    const auto best = optimal_alpha_active(p, g, x_mag, alpha_max, h3_norm2);
    JensenReport report;
    report.equal_alpha = best.alpha_opt;
    report.equal_snr =
        dense_mmse_snr(inst, p, aligned_ris_responses(inst, VectorXd::Constant(p.N, best.alpha_opt)), RisKind::Active)
            .snr_linear;

    VectorXd amplitudes(p.N);
    for (std::size_t t = 0; t < trials; ++t) {
        for (int n = 0; n < p.N; ++n) amplitudes(n) = alpha_max * rng.uniform();
        const double snr =
            dense_mmse_snr(inst, p, aligned_ris_responses(inst, amplitudes), RisKind::Active).snr_linear;
        const double excess = (snr - report.equal_snr) / report.equal_snr;
        report.max_relative_excess = t == 0 ? excess : std::max(report.max_relative_excess, excess);
        if (excess > 1e-10) ++report.counterexamples;
        ++report.trials;
    }
    return report;
}

}  // namespace ncrris::oracle
