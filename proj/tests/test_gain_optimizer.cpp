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

#include "ncrris/gain.hpp"
#include "test_support.hpp"

using namespace ncrris;
using ncrris::testing::log_uniform;
using doctest::Approx;

namespace {

SystemParams<double> small_params() {
    SystemParams<double> p;
    p.M = 4;
    p.N = 2;
    return p;
}

const ChannelGains<double> kSmall{1.0, 0.01, 0};

}  // namespace

TEST_CASE("active RIS: no coupling uses the cap") {
    const auto sol = optimal_alpha_active(small_params(), kSmall, 0.0, 30.0);
    CHECK(sol.alpha_opt == 30.0);
    CHECK(sol.case_tag == GainCase::NoDirectMax);
}

TEST_CASE("active RIS: interior optimum at 10") {
    const auto p = small_params();
    const auto sol = optimal_alpha_active(p, kSmall, 1.0, 20.0);
    CHECK(sol.case_tag == GainCase::InteriorStationary);
    CHECK(sol.alpha_opt == Approx(10.0).epsilon(1e-14));
    CHECK(sol.snr_at_opt.snr_linear == Approx(2.0).epsilon(1e-14));

    const auto grid = oracle::grid_search_alpha(
        [&](double a) { return snr_active_direct(p, kSmall, DirectCoupling<double>(1.0, 0.0), 0.0, a).snr_linear; },
        20.0, 1000001);
    CHECK(std::abs(grid.alpha_best - 10.0) <= 2e-5);
    CHECK(sol.snr_at_opt.snr_linear >= grid.value - 1e-12);
}

TEST_CASE("active RIS: cap below the stationary point") {
    const auto p = small_params();
    const auto sol = optimal_alpha_active(p, kSmall, 1.0, 5.0);
    CHECK(sol.alpha_opt == 5.0);
    CHECK(sol.case_tag == GainCase::BoundaryMax);
    const auto grid = oracle::grid_search_alpha(
        [&](double a) { return snr_active_direct(p, kSmall, DirectCoupling<double>(1.0, 0.0), 0.0, a).snr_linear; },
        5.0, 100001);
    CHECK(grid.alpha_best == 5.0);
}

TEST_CASE("NCR: the three cases") {
    const auto p = small_params();
    SUBCASE("no coupling") {
        const auto sol = optimal_alpha_ncr(p, kSmall, DirectCoupling<double>::zero(), 7.0);
        CHECK(sol.alpha_opt == 7.0);
        CHECK(sol.case_tag == GainCase::NoDirectMax);
    }
    SUBCASE("negative Re(x), cap 5") {
        const DirectCoupling<double> x(1.0, std::numbers::pi);
        const auto c = ncr_coeffs(p, kSmall, x);
        CHECK(c.A == Approx(0.03));
        CHECK(c.B == Approx(-0.2));
        const auto sol = optimal_alpha_ncr(p, kSmall, x, 5.0);
        CHECK(sol.alpha_opt == 0.0);
        CHECK(sol.case_tag == GainCase::BoundaryZero);
        const auto grid = oracle::grid_search_alpha(
            [&](double a) { return snr_ncr_direct(p, kSmall, x, 0.0, a).snr_linear; }, 5.0, 100001);
        CHECK(grid.alpha_best == 0.0);
    }
    SUBCASE("negative Re(x), cap 10") {
        const DirectCoupling<double> x(1.0, std::numbers::pi);
        const auto sol = optimal_alpha_ncr(p, kSmall, x, 10.0);
        CHECK(sol.alpha_opt == 10.0);
        CHECK(sol.case_tag == GainCase::BoundaryMax);
        const auto grid = oracle::grid_search_alpha(
            [&](double a) { return snr_ncr_direct(p, kSmall, x, 0.0, a).snr_linear; }, 10.0, 100001);
        CHECK(grid.alpha_best == 10.0);
    }
    SUBCASE("positive Re(x)") {
        const DirectCoupling<double> x(1.0, 0.0);
        const auto sol = optimal_alpha_ncr(p, kSmall, x, 1e3);
        CHECK(sol.case_tag == GainCase::InteriorStationary);
        CHECK(std::abs(sol.coeffs.derivative(sol.alpha_opt)) <= 1e-12);
    }
    SUBCASE("purely imaginary x is routed to the boundary rule") {
        const DirectCoupling<double> x(1.0, std::numbers::pi / 2);
        const auto sol = optimal_alpha_ncr(p, kSmall, x, 10.0);
        CHECK(sol.coeffs.B == 0.0);
        // A > 0 here, so the cap wins
        CHECK(sol.alpha_opt == 10.0);
    }
}

TEST_CASE("NCR boundary tie resolves to zero") {
    // A a^2 + B a = 0 at a = cap when cap = -B / A.
    const auto p = small_params();
    const DirectCoupling<double> x(1.0, std::numbers::pi);
    const auto c = ncr_coeffs(p, kSmall, x);
    const double cap = -c.B / c.A;
    const auto sol = optimal_alpha_ncr(p, kSmall, x, cap);
    if (c.A * cap * cap + c.B * cap == 0) CHECK(sol.alpha_opt == 0.0);
}

TEST_CASE("random draws: the optimum dominates a uniform grid") {
    Rng rng(RngSeed{99});
    for (int trial = 0; trial < 1000; ++trial) {
        SystemParams<double> p;
        p.P = log_uniform(rng, 1e-3, 1.0);
        p.sigma2 = log_uniform(rng, 1e-15, 1e-10);
        p.M = 1 + int(rng.uniform() * 64);
        p.N = 1 + int(rng.uniform() * 64);
        const ChannelGains<double> g{log_uniform(rng, 1e-10, 1e-4), log_uniform(rng, 1e-12, 1e-4), 0};
        const double mag = log_uniform(rng, 1e-8, 1e-2);
        const DirectCoupling<double> x(mag, rng.phase());
        const double cap = log_uniform(rng, 0.1, 1e4);

        const auto act = optimal_alpha_active(p, g, mag, cap);
        const auto ncr = optimal_alpha_ncr(p, g, x, cap);
        CHECK(act.alpha_opt <= cap);
        CHECK(ncr.alpha_opt <= cap);
        const double fa = act.coeffs.value(act.alpha_opt);
        const double fn = ncr.coeffs.value(ncr.alpha_opt);
        const double scale_a = std::max(std::abs(fa), 1e-300);
        const double scale_n = std::max(std::abs(fn), 1e-300);
        for (int i = 0; i <= 10000; ++i) {
            const double a = cap * i / 10000.0;
            if (act.coeffs.value(a) > fa + 1e-10 * scale_a) {
                FAIL_CHECK("active grid point beats optimum at trial " << trial);
                break;
            }
            if (ncr.coeffs.value(a) > fn + 1e-10 * scale_n) {
                FAIL_CHECK("NCR grid point beats optimum at trial " << trial);
                break;
            }
        }
        if (act.case_tag == GainCase::InteriorStationary) {
            const auto& c = act.coeffs;
            const double scale = std::abs(c.B) / c.sigma2;
            CHECK(std::abs(c.derivative(act.alpha_opt)) <= 1e-8 * scale);
            CHECK(c.second_derivative(act.alpha_opt) < 0);
        }
    }
}

TEST_CASE("stationary point stays accurate for negative A") {
    QuadraticRatioCoeffs<double> c{-1e6, 1e-3, 1.0, 1.0};
    const double a = c.stationary_point();
    CHECK(a > 0);
    CHECK(std::abs(c.derivative(a)) <= 1e-12 * std::abs(c.B));
}

TEST_CASE("invalid caps are rejected") {
    CHECK_THROWS_AS(optimal_alpha_active(small_params(), kSmall, 1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(optimal_alpha_ncr(small_params(), kSmall, DirectCoupling<double>(1.0, 0.0), -1.0),
                    InvalidArgument);
}
