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

#include <doctest.h>

#include <cmath>

#include "ncrris/array_response.hpp"
#include "ncrris/correlation.hpp"
#include "ncrris/pathloss.hpp"
#include "ncrris/snr.hpp"
#include "test_support.hpp"

using namespace ncrris;
using ncrris::testing::rel_err;
using doctest::Approx;

namespace {

SystemParams<double> unit_params(int M, int N) {
    SystemParams<double> p;
    p.P = 1.0;
    p.sigma2 = 1.0;
    p.M = M;
    p.N = N;
    return p;
}

double db_gap(double a, double b) { return std::abs(10 * std::log10(a / b)); }

}  // namespace

TEST_CASE("dense: amplifier off leaves the direct link") {
    Rng rng(RngSeed{1});
    const auto p = unit_params(8, 4);
    auto ncr = ncrris::testing::make_ncr(8, 0.3, 0.02, {0.4, -0.2}, 0.5, rng);
    CHECK(oracle::dense_mmse_snr(ncr, p, 0.0).snr_linear == Approx(0.5).epsilon(1e-13));
    auto ris = ncrris::testing::make_ris(8, 4, 0.3, 0.02, {0.4, -0.2}, 0.5, rng);
    const auto psi = oracle::aligned_ris_responses(ris, Eigen::VectorXd::Zero(4));
    CHECK(oracle::dense_mmse_snr(ris, p, psi, oracle::RisKind::Active).snr_linear == Approx(0.5).epsilon(1e-13));
}

TEST_CASE("dense: direct path orthogonal to a21 decouples") {
    Rng rng(RngSeed{2});
    const auto p = unit_params(8, 4);
    const ChannelGains<double> g{0.3, 0.02, 0};
    auto ncr = ncrris::testing::make_ncr(8, g.beta1, g.beta2, {0.0, 0.0}, 0.7, rng);
    CHECK(std::abs(oracle::coupling(ncr)) < 1e-14);
    const double closed = snr_ncr_direct(p, g, DirectCoupling<double>::zero(), 0.7, 3.0).snr_linear;
    CHECK(rel_err(oracle::dense_mmse_snr(ncr, p, 3.0).snr_linear, closed) <= 1e-12);
    CHECK(closed == Approx(snr_ncr_nodirect(p, g, 3.0).snr_linear + 0.7).epsilon(1e-14));
}

TEST_CASE("dense: zero noise is an error") {
    Rng rng(RngSeed{3});
    auto p = unit_params(4, 2);
    p.sigma2 = 0;
    auto ncr = ncrris::testing::make_ncr(4, 0.1, 0.1, {0.1, 0}, 0.1, rng);
    CHECK_THROWS_AS(oracle::dense_mmse_snr(ncr, p, 1.0), InvalidArgument);
}

TEST_CASE("direct channel construction") {
    Rng rng(RngSeed{4});
    const auto a21 = oracle::random_unit_modulus(16, rng);
    const std::complex<double> x{0.3, -0.7};
    const auto h3 = oracle::direct_channel_with_coupling(a21, x, 0.2, rng);
    CHECK(std::abs(h3.dot(a21) - x) < 1e-14);
    CHECK(h3.squaredNorm() == Approx(0.2).epsilon(1e-13));
    CHECK_THROWS_AS(oracle::direct_channel_with_coupling(a21, x, 0.01, rng), InvalidArgument);
}

TEST_CASE("simulation: NCR without direct path") {
    Rng rng(RngSeed{5});
    auto p = unit_params(8, 1);
    p.sigma2 = 1e-12;
    const ChannelGains<double> g{2e-9, 1e-10, 0};
    auto ncr = ncrris::testing::make_ncr(8, g.beta1, g.beta2, {0, 0}, 0.0, rng);
    const double alpha = 2e4;
    const auto emp = oracle::simulate_link_snr(ncr, p, alpha, 1000000, RngSeed{77});
    const double closed = snr_ncr_nodirect(p, g, alpha).snr_linear;
    CHECK(db_gap(emp.snr.snr_linear, closed) <= 0.1);
    CHECK(std::abs(emp.snr.snr_linear - closed) <= 5 * emp.std_error);
    CHECK(emp.symbols == 1000000);
}

TEST_CASE("simulation: passive RIS with aligned phases") {
    Rng rng(RngSeed{6});
    const auto p = unit_params(8, 4);
    const ChannelGains<double> g{0.05, 0.01, 0};
    auto ris = ncrris::testing::make_ris(8, 4, g.beta1, g.beta2, {0, 0}, 0.0, rng);
    const auto psi = oracle::aligned_ris_responses(ris, Eigen::VectorXd::Ones(4));
    const auto emp = oracle::simulate_link_snr(ris, p, psi, oracle::RisKind::Passive, 1000000, RngSeed{8});
    CHECK(db_gap(emp.snr.snr_linear, snr_passive_nodirect(p, g).snr_linear) <= 0.1);
}

TEST_CASE("simulation: noise-floor limit") {
    // alpha^2 beta2 M = 1e4: the repeater noise dominates, SNR -> P beta1 / sigma2.
    Rng rng(RngSeed{9});
    auto p = unit_params(4, 1);
    p.sigma2 = 1e-14;
    const ChannelGains<double> g{1e-10, 1e-6, 0};
    auto ncr = ncrris::testing::make_ncr(4, g.beta1, g.beta2, {0, 0}, 0.0, rng);
    const double alpha = std::sqrt(1e4 / (g.beta2 * 4));
    const auto emp = oracle::simulate_link_snr(ncr, p, alpha, 200000, RngSeed{10});
    const double floor = p.P * g.beta1 / p.sigma2;
    CHECK(db_gap(emp.snr.snr_linear, floor) <= 0.1);
    CHECK(emp.snr.snr_linear < 1.05 * floor);
}

TEST_CASE("simulation: determinism and error scaling") {
    Rng rng(RngSeed{12});
    const auto p = unit_params(4, 2);
    const ChannelGains<double> g{0.1, 0.05, 0};
    auto ris = ncrris::testing::make_ris(4, 2, g.beta1, g.beta2, {0.2, 0.1}, 0.05, rng);
    const auto psi = oracle::aligned_ris_responses(ris, Eigen::VectorXd::Constant(2, 3.0));
    const auto a = oracle::simulate_link_snr(ris, p, psi, oracle::RisKind::Active, 20000, RngSeed{42});
    const auto b = oracle::simulate_link_snr(ris, p, psi, oracle::RisKind::Active, 20000, RngSeed{42});
    const auto c = oracle::simulate_link_snr(ris, p, psi, oracle::RisKind::Active, 20000, RngSeed{43});
    CHECK(a.snr.snr_linear == b.snr.snr_linear);
    CHECK(a.std_error == b.std_error);
    CHECK(a.snr.snr_linear != c.snr.snr_linear);

    const auto small = oracle::simulate_link_snr(ris, p, psi, oracle::RisKind::Active, 10000, RngSeed{1});
    const auto large = oracle::simulate_link_snr(ris, p, psi, oracle::RisKind::Active, 1000000, RngSeed{1});
    const double ratio = small.std_error / large.std_error;
    CHECK(ratio > 7.0);
    CHECK(ratio < 14.0);
    // MMSE combining with the direct path reaches the dense value
    const double dense = oracle::dense_mmse_snr(ris, p, psi, oracle::RisKind::Active).snr_linear;
    CHECK(std::abs(large.snr.snr_linear - dense) <= 4 * large.std_error);
}

TEST_CASE("wideband: zero correlation") {
    const auto p = unit_params(8, 4);
    const ChannelGains<double> g{0.1, 0.01, 0};
    Rng rng(RngSeed{13});
    const auto a21 = oracle::random_unit_modulus(8, rng);
    const CorrelationMatrix<double> R = CorrelationMatrix<double>::Zero(8, 8);
    const auto est = oracle::mc_wideband_average(p, g, R, a21, 5.0, oracle::WidebandVariant::Ncr, 1000, RngSeed{1});
    CHECK(est.snr.std_error == 0.0);
    CHECK(est.snr.mean == Approx(snr_ncr_nodirect(p, g, 5.0).snr_linear).epsilon(1e-14));
}

TEST_CASE("wideband: non-PSD correlation is rejected") {
    const auto p = unit_params(2, 1);
    CorrelationMatrix<double> R(2, 2);
    R << 1.0, 2.0, 2.0, 1.0;
    const Eigen::VectorXcd a21 = Eigen::VectorXcd::Ones(2);
    CHECK_THROWS_AS(oracle::mc_wideband_average(p, {}, R, a21, 1.0, oracle::WidebandVariant::Ncr, 1000, RngSeed{1}),
                    InvalidArgument);
}

TEST_CASE("wideband: street scatterers, Monte Carlo against the averages") {
    Deployment3D<double> dep;
    dep.bs_pos = {0, 0, 10};
    dep.ue_pos = {1000, 0, 0};
    dep.node_pos = {700, 10, 10};
    const auto d = distances(dep);
    const int M = 64, N = 128;
    auto p = unit_params(M, N);
    p.P = 0.1;
    p.sigma2 = dbm_to_watts(-117.0);
    const ChannelGains<double> g{free_space_gain(d.d1, 0.02), free_space_gain(d.d2, 0.02),
                                 umi_street_canyon_gain(d.d3, 15.0)};
    const std::vector<Scatterer<double>> sc{
        {{1000, 5, 0}, 1}, {{1000, -5, 0}, 1}, {{990, 5, 0}, 1}, {{990, -5, 0}, 1}};
    const auto R3 = scatterer_correlation(dep, sc, g.beta3, M);
    const auto a21 = steering_vector(ArrayModel<double>{}, M, dep.bs_pos, dep.node_pos);
    const double quad = quadratic_form(R3, a21);

    const double alpha_ncr = 3000, alpha_aris = 20;
    struct Case {
        oracle::WidebandVariant v;
        double alpha;
        double closed;
    };
    const Case cases[] = {
        {oracle::WidebandVariant::Ncr, alpha_ncr, avg_snr_ncr_wideband(p, g, alpha_ncr, quad).snr_linear},
        {oracle::WidebandVariant::ActiveRis, alpha_aris, avg_snr_active_wideband(p, g, alpha_aris, quad).snr_linear},
        {oracle::WidebandVariant::PassiveRis, 0.0, avg_snr_passive_wideband(p, g).snr_linear},
        {oracle::WidebandVariant::DirectOnly, 0.0, snr_direct_only(p, M * g.beta3).snr_linear},
    };
    std::uint64_t seed = 100;
    for (const auto& c : cases) {
        const auto est = oracle::mc_wideband_average(p, g, R3, a21, c.alpha, c.v, 100000, RngSeed{seed++});
        CHECK(std::abs(est.snr.mean - c.closed) <= 3 * est.snr.std_error);
        CHECK(std::abs(est.re_coupling.mean) <= 3 * est.re_coupling.std_error);
    }
}

TEST_CASE("correlation factor reproduces R3") {
    Deployment3D<double> dep;
    dep.bs_pos = {0, 0, 10};
    dep.ue_pos = {1000, 0, 0};
    const std::vector<Scatterer<double>> sc{{{1000, 5, 0}, 1}, {{990, -5, 0}, 2}};
    const auto R3 = scatterer_correlation(dep, sc, 1.0, 32);
    const auto L = oracle::correlation_factor(R3);
    CHECK(L.cols() == 2);
    CHECK((L * L.adjoint() - R3).norm() <= 1e-12 * R3.norm());
}

TEST_CASE("grid search") {
    const auto best = oracle::grid_search_alpha([](double a) { return a * a; }, 3.5, 1000);
    CHECK(best.alpha_best == 3.5);
    CHECK(best.value == 3.5 * 3.5);
}

TEST_CASE("Jensen search") {
    SUBCASE("symmetric spread lowers the SNR") {
        Rng rng(RngSeed{14});
        const auto p = unit_params(4, 2);
        auto ris = ncrris::testing::make_ris(4, 2, 1.0, 0.01, {0.0, 1.0}, 0.25, rng);
        auto snr = [&](double u0, double u1) {
            Eigen::VectorXd u(2);
            u << u0, u1;
            return oracle::dense_mmse_snr(ris, p, oracle::aligned_ris_responses(ris, u), oracle::RisKind::Active)
                .snr_linear;
        };
        const double equal = snr(10, 10);
        for (double delta : {0.01, 1.0, 5.0}) CHECK(snr(10 + delta, 10 - delta) < equal);
    }
    SUBCASE("random search finds no counterexample") {
        auto p = unit_params(8, 4);
        const ChannelGains<double> g{0.5, 0.01, 0};
        const auto rep = oracle::jensen_counterexample_search(p, g, 0.8, 20.0, 1000, RngSeed{15});
        CHECK(rep.trials == 1000);
        CHECK(rep.counterexamples == 0);
        CHECK(rep.max_relative_excess <= 1e-10);
        CHECK(rep.equal_alpha > 0);
    }
    SUBCASE("no relay path: every configuration ties") {
        Rng rng(RngSeed{16});
        const auto p = unit_params(4, 3);
        auto ris = ncrris::testing::make_ris(4, 3, 1.0, 0.0, {0.5, 0.0}, 0.2, rng);
        Eigen::VectorXd u(3), v(3);
        u << 2, 2, 2;
        v << 1, 2, 3;
        const double a = oracle::dense_mmse_snr(ris, p, oracle::aligned_ris_responses(ris, u), oracle::RisKind::Active).snr_linear;
        const double b = oracle::dense_mmse_snr(ris, p, oracle::aligned_ris_responses(ris, v), oracle::RisKind::Active).snr_linear;
        CHECK(a == Approx(b).epsilon(1e-14));
    }
}

TEST_CASE("bisection helpers") {
    CHECK(oracle::bisect_root([](double a) { return a * a - 2; }, 0, 2) == Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(oracle::bisect_root([](double a) { return a * a + 1; }, 0, 2), InvalidArgument);
    CHECK(std::isinf(oracle::bisect_crossover([](double) { return -1.0; }, 1e6)));
    CHECK(oracle::bisect_crossover([](double a) { return a - 123.0; }) == Approx(123.0).epsilon(1e-13));
}
