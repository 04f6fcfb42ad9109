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
#include <numbers>

#include "ncrris/crossover.hpp"
#include "ncrris/gain.hpp"
#include "ncrris/pathloss.hpp"
#include "ncrris/snr.hpp"
#include "test_support.hpp"

using namespace ncrris;
using ncrris::testing::log_uniform;
using ncrris::testing::rel_err;
using doctest::Approx;

namespace {

SystemParams<double> params(int M, int N) {
    SystemParams<double> p;
    p.P = 0.1;
    p.sigma2 = dbm_to_watts(-117.0);
    p.M = M;
    p.N = N;
    return p;
}

// Checks that the verdict region matches a direct SNR comparison.
template <typename RisSnr, typename NcrSnr>
void check_soundness(const CrossoverVerdict<double>& v, RisSnr ris, NcrSnr ncr, double scale) {
    for (int i = 1; i <= 100; ++i) {
        const double a = scale * std::pow(10.0, -3.0 + 6.0 * i / 100.0);
        const double diff = ncr(a) - ris(a);
        const double tol = 1e-9 * std::abs(ris(a));
        if (v.contains(a))
            CHECK(diff >= -tol);
        else
            CHECK(diff <= tol);
    }
}

}  // namespace

TEST_CASE("passive, no direct: boundary case and asymptote") {
    SystemParams<double> p = params(100, 100);
    CHECK(required_alpha_vs_passive_nodirect(p, ChannelGains<double>{1e-9, 1e-6, 0}).kind ==
          VerdictKind::RisAlwaysWins);
    for (int N : {1, 7, 64}) {
        p.N = N;
        const auto v = required_alpha_vs_passive_nodirect(p, ChannelGains<double>{1e-9, 0, 0});
        CHECK(v.kind == VerdictKind::Threshold);
        CHECK(v.alpha_lo == Approx(double(N)));
    }
}

TEST_CASE("passive, no direct: N = 64, M = 1024") {
    const auto p = params(1024, 64);
    const ChannelGains<double> g{db_to_linear_power(-87.0), 2.533e-10, 0};
    const auto v = required_alpha_vs_passive_nodirect(p, g);
    const double root = oracle::bisect_crossover(
        [&](double a) { return snr_ncr_nodirect(p, g, a).snr_linear - snr_passive_nodirect(p, g).snr_linear; });
    CHECK(rel_err(v.alpha_lo, root) <= 1e-9);
    CHECK(v.alpha_lo == Approx(64.034).epsilon(1e-5));
}

TEST_CASE("active, no direct") {
    auto p = params(1024, 8);
    const ChannelGains<double> g{db_to_linear_power(-87.0), 2.533e-10, 0};
    const auto v = required_alpha_vs_active_nodirect(p, g, 30.0);
    const double root = oracle::bisect_crossover([&](double a) {
        return snr_ncr_nodirect(p, g, a).snr_linear - snr_active_nodirect(p, g, 30.0).snr_linear;
    });
    CHECK(rel_err(v.alpha_lo, root) <= 1e-9);
    CHECK(v.alpha_lo == Approx(241.58).epsilon(3e-5));

    CHECK(required_alpha_vs_active_nodirect(p, ChannelGains<double>{1e-9, 0, 0}, 30.0).alpha_lo == Approx(240.0));
    p.N = 1;
    CHECK(required_alpha_vs_active_nodirect(p, ChannelGains<double>{1e-9, 0.5, 0}, 30.0).alpha_lo == Approx(30.0));
    CHECK_THROWS_AS(required_alpha_vs_active_nodirect(p, g, 0.0), InvalidArgument);
}

TEST_CASE("passive, direct: constructed example") {
    SystemParams<double> p;
    p.M = 4;
    p.N = 1;
    const ChannelGains<double> g{1.0, 0.01, 0};
    const DirectCoupling<double> x(0.1, 0.0);
    const auto v = required_alpha_vs_passive_direct(p, g, x);
    REQUIRE(v.coeffs);
    CHECK(v.coeffs->A == Approx(0.0375));
    CHECK(v.coeffs->B == Approx(0.02));
    CHECK(v.coeffs->C == Approx(-0.06));
    CHECK(v.kind == VerdictKind::Threshold);
    // (-B + sqrt(B^2 - 4AC)) / 2A by hand
    CHECK(v.alpha_lo == Approx((-0.02 + std::sqrt(0.0004 + 4 * 0.0375 * 0.06)) / 0.075).epsilon(1e-12));
    CHECK(v.alpha_lo == Approx(1.02605).epsilon(1e-5));
    const double h3n2 = 0.01;
    const double root = oracle::bisect_crossover([&](double a) {
        return snr_ncr_direct(p, g, x, h3n2, a).snr_linear - snr_passive_direct(p, g, x, h3n2).snr_linear;
    });
    CHECK(rel_err(v.alpha_lo, root) <= 1e-9);
}

TEST_CASE("passive, direct: negative Re(x) with A < 0") {
    SystemParams<double> p;
    p.M = 4;
    p.N = 8;
    const ChannelGains<double> g{1.0, 0.01, 0};
    const auto v = required_alpha_vs_passive_direct(p, g, DirectCoupling<double>(0.5, 2.0));
    REQUIRE(v.coeffs);
    CHECK(v.coeffs->A < 0);
    CHECK(v.kind == VerdictKind::RisAlwaysWins);
}

TEST_CASE("passive, direct: zero coupling recovers the blocked threshold") {
    const auto p = params(1024, 64);
    const ChannelGains<double> g{1e-9, 2.533e-10, 0};
    const auto a = required_alpha_vs_passive_direct(p, g, DirectCoupling<double>::zero());
    const auto b = required_alpha_vs_passive_nodirect(p, g);
    CHECK(rel_err(a.alpha_lo, b.alpha_lo) <= 1e-12);
    const auto c = required_alpha_vs_active_direct(p, g, DirectCoupling<double>::zero(), 30.0);
    const auto d = required_alpha_vs_active_nodirect(p, g, 30.0);
    CHECK(rel_err(c.alpha_lo, d.alpha_lo) <= 1e-12);
}

TEST_CASE("quadratic classification") {
    using Q = CrossoverQuadratic<double>;
    CHECK(detail::classify_quadratic(Q{0, 0, -1}).kind == VerdictKind::RisAlwaysWins);
    CHECK(detail::classify_quadratic(Q{0, 2, -1}).alpha_lo == 0.5);
    CHECK(detail::classify_quadratic(Q{0, -2, -1}).kind == VerdictKind::RisAlwaysWins);
    CHECK(detail::classify_quadratic(Q{-1, 1, -1}).kind == VerdictKind::RisAlwaysWins);
    const auto iv = detail::classify_quadratic(Q{-1, 3, -2});
    CHECK(iv.kind == VerdictKind::Interval);
    CHECK(iv.alpha_lo == Approx(1.0));
    CHECK(iv.alpha_hi == Approx(2.0));
    const auto tangent = detail::classify_quadratic(Q{-1, 2, -1});
    CHECK(tangent.kind == VerdictKind::Interval);
    CHECK(tangent.alpha_lo == tangent.alpha_hi);
    CHECK(detail::classify_quadratic(Q{1, 1, 0}).kind == VerdictKind::NcrAlwaysWins);
}

TEST_CASE("short-range street regime: the active RIS always wins") {
    const double lambda = 0.02;
    const double beta1 = free_space_gain(20.0, lambda), beta2 = free_space_gain(90.0, lambda);
    const double beta3 = umi_street_canyon_gain(100.0, 15.0);
    auto p = params(1024, 512);
    const ChannelGains<double> g{beta1, beta2, beta3};
    const double mag = std::sqrt(1024 * beta3);
    for (double deg = 0; deg <= 180; deg += 15) {
        const DirectCoupling<double> x(mag, deg * std::numbers::pi / 180);
        const double aa = optimal_alpha_active(p, g, mag, 30.0).alpha_opt;
        CHECK(required_alpha_vs_active_direct(p, g, x, aa).kind == VerdictKind::RisAlwaysWins);
    }
}

TEST_CASE("long-range street regime: threshold above the blocked value") {
    const double lambda = 0.02;
    const double beta1 = free_space_gain(1000.0, lambda), beta2 = free_space_gain(900.0, lambda);
    const double beta3 = umi_street_canyon_gain(200.0, 15.0);
    auto p = params(1024, 512);
    const ChannelGains<double> g{beta1, beta2, beta3};
    const double mag = 0.3 * std::sqrt(1024 * beta3);
    const DirectCoupling<double> x(mag, 0.1);
    const auto act = optimal_alpha_active(p, g, mag, 30.0);
    const auto v = required_alpha_vs_active_direct(p, g, x, act.alpha_opt);
    REQUIRE(v.kind == VerdictKind::Threshold);
    const double blocked = required_alpha_vs_active_nodirect(p, g, 30.0).alpha_lo;
    CHECK(v.alpha_lo > blocked);
    const double h3n2 = 1024 * beta3;
    const double ris = snr_active_direct(p, g, x, h3n2, act.alpha_opt).snr_linear;
    const double root = oracle::bisect_crossover(
        [&](double a) { return snr_ncr_direct(p, g, x, h3n2, a).snr_linear - ris; });
    CHECK(rel_err(v.alpha_lo, root) <= 1e-6);
}

TEST_CASE("verdicts agree with direct SNR comparison") {
    Rng rng(RngSeed{5});
    int intervals = 0, thresholds = 0, ris_wins = 0;
    for (int trial = 0; trial < 300; ++trial) {
        SystemParams<double> p;
        p.M = 1 + int(rng.uniform() * 32);
        p.N = 1 + int(rng.uniform() * 16);
        const ChannelGains<double> g{log_uniform(rng, 1e-4, 1.0), log_uniform(rng, 1e-5, 1e-1), 0};
        const double h3n2 = log_uniform(rng, 1e-4, 10.0);
        const double mag = std::sqrt(p.M * h3n2) * rng.uniform();
        const DirectCoupling<double> x(mag, rng.phase());
        const auto v = required_alpha_vs_passive_direct(p, g, x);
        const double ris = snr_passive_direct(p, g, x, h3n2).snr_linear;
        check_soundness(
            v, [&](double) { return ris; }, [&](double a) { return snr_ncr_direct(p, g, x, h3n2, a).snr_linear; },
            std::isfinite(v.alpha_lo) ? std::max(v.alpha_lo, 1e-3) : 1.0);
        intervals += v.kind == VerdictKind::Interval;
        thresholds += v.kind == VerdictKind::Threshold;
        ris_wins += v.kind == VerdictKind::RisAlwaysWins;

        const double aa = log_uniform(rng, 0.5, 50.0);
        const auto va = required_alpha_vs_active_direct(p, g, x, aa);
        const double risa = snr_active_direct(p, g, x, h3n2, aa).snr_linear;
        check_soundness(
            va, [&](double) { return risa; }, [&](double a) { return snr_ncr_direct(p, g, x, h3n2, a).snr_linear; },
            std::isfinite(va.alpha_lo) ? std::max(va.alpha_lo, 1e-3) : 1.0);
    }
    CHECK(thresholds > 0);
    CHECK(ris_wins > 0);
    MESSAGE("interval verdicts seen: " << intervals);
}

TEST_CASE("wideband crossover") {
    const auto p = params(64, 32);
    const ChannelGains<double> g{1e-9, 2e-10, 1e-12};
    SUBCASE("quad = 0 equals the blocked verdict exactly") {
        const auto a = required_alpha_wideband(p, g, 0.0, WidebandRival<double>{VsPassive{}});
        const auto b = required_alpha_vs_passive_nodirect(p, g);
        CHECK(a.alpha_lo == b.alpha_lo);
        CHECK(a.kind == b.kind);
        const auto c = required_alpha_wideband(p, g, 0.0, WidebandRival<double>{VsActive<double>{20.0}});
        const auto d = required_alpha_vs_active_nodirect(p, g, 20.0);
        CHECK(c.alpha_lo == d.alpha_lo);
    }
    SUBCASE("R3 = beta3 I") {
        const double quad = 64 * g.beta3;
        const auto v = required_alpha_wideband(p, g, quad, WidebandRival<double>{VsPassive{}});
        REQUIRE(v.kind == VerdictKind::Threshold);
        const double ris = avg_snr_passive_wideband(p, g).snr_linear;
        const double root = oracle::bisect_crossover(
            [&](double a) { return avg_snr_ncr_wideband(p, g, a, quad).snr_linear - ris; });
        CHECK(rel_err(v.alpha_lo, root) <= 1e-6);

        const auto va = required_alpha_wideband(p, g, quad, WidebandRival<double>{VsActive<double>{10.0}});
        const double risa = avg_snr_active_wideband(p, g, 10.0, quad).snr_linear;
        const double roota = oracle::bisect_crossover(
            [&](double a) { return avg_snr_ncr_wideband(p, g, a, quad).snr_linear - risa; });
        CHECK(rel_err(va.alpha_lo, roota) <= 1e-6);
    }
    SUBCASE("a dominant direct path makes the NCR useless") {
        const double quad = 64 * g.beta1 * 1.01;
        CHECK(required_alpha_wideband(p, g, quad, WidebandRival<double>{VsPassive{}}).kind ==
              VerdictKind::RisAlwaysWins);
    }
    CHECK_THROWS_AS(required_alpha_wideband(p, g, -1.0, WidebandRival<double>{VsPassive{}}), InvalidArgument);
}

TEST_CASE("blocked-path threshold decreases towards N as d2 grows") {
    const auto p = params(1024, 64);
    double prev = std::numeric_limits<double>::infinity();
    for (double d2 = 50; d2 <= 5000; d2 *= 1.25) {
        const ChannelGains<double> g{1e-9, free_space_gain(d2, 0.02), 0};
        const double a = required_alpha_vs_passive_nodirect(p, g).alpha_lo;
        CHECK(a < prev);
        CHECK(a > 64.0);
        prev = a;
    }
    CHECK(prev == Approx(64.0).epsilon(1e-3));
}
