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

#include "ncrris/types.hpp"
#include "ncrris/units.hpp"

using namespace ncrris;
using doctest::Approx;

TEST_CASE("distances: co-located BS and node is rejected") {
    Deployment3D<double> dep;
    dep.bs_pos = {0, 0, 0};
    dep.ue_pos = {3, 4, 0};
    dep.node_pos = {0, 0, 0};
    CHECK_THROWS_AS(distances(dep), GeometryError);
}

TEST_CASE("distances: street deployment") {
    Deployment3D<double> dep;
    dep.bs_pos = {0, 0, 10};
    dep.ue_pos = {1000, 0, 0};
    dep.node_pos = {800, 10, 10};
    const auto d = distances(dep);
    // hand-expanded Euclidean norms
    CHECK(d.d2 == Approx(std::sqrt(800.0 * 800.0 + 100.0)).epsilon(1e-15));
    CHECK(d.d1 == Approx(std::sqrt(200.0 * 200.0 + 100.0 + 100.0)).epsilon(1e-15));
    CHECK(d.d3 == Approx(std::sqrt(1000.0 * 1000.0 + 100.0)).epsilon(1e-15));
    CHECK(d.d2 == Approx(800.0625).epsilon(1e-7));
    CHECK(d.d1 == Approx(200.4994).epsilon(1e-6));
    CHECK(d.d3 == Approx(1000.05).epsilon(1e-7));
}

TEST_CASE("distances: unit geometry") {
    Deployment3D<double> dep;
    dep.ue_pos = {0, 0, 1};
    dep.node_pos = {0, 1, 0};
    const auto d = distances(dep);
    CHECK(d.d1 == Approx(std::sqrt(2.0)));
    CHECK(d.d2 == 1.0);
    CHECK(d.d3 == 1.0);
}

TEST_CASE("distances: symmetric in the endpoints") {
    Deployment3D<double> a;
    a.bs_pos = {1, -2, 7};
    a.ue_pos = {-40, 3, 0.5};
    a.node_pos = {12, 9, 3};
    Deployment3D<double> b = a;
    std::swap(b.bs_pos, b.ue_pos);
    const auto da = distances(a), db = distances(b);
    CHECK(da.d1 == db.d2);
    CHECK(da.d2 == db.d1);
    CHECK(da.d3 == db.d3);
}

TEST_CASE("dB conversions") {
    CHECK(db_to_linear_power(-87.0) == Approx(std::pow(10.0, -8.7)).epsilon(1e-14));
    CHECK(db_to_linear_power(-87.0) == Approx(1.9953e-9).epsilon(1e-4));
    CHECK(db_to_linear_power(0.0) == 1.0);
    CHECK(db_to_linear_amplitude(0.0) == 1.0);
    CHECK(db_to_linear_amplitude(40.0) == Approx(100.0).epsilon(1e-14));
    CHECK(dbm_to_watts(20.0) == Approx(0.1).epsilon(1e-14));
    CHECK(dbm_to_watts(-117.0) == Approx(1.99526e-15).epsilon(1e-5));
    CHECK(watts_to_dbm(1.0) == Approx(30.0));
}

TEST_CASE("dB round trips over [-200, 200]") {
    for (double x = -200; x <= 200; x += 0.37) {
        CHECK(std::abs(linear_to_db_power(db_to_linear_power(x)) - x) <= 1e-12);
        CHECK(std::abs(linear_to_db_amplitude(db_to_linear_amplitude(x)) - x) <= 1e-12);
    }
}

TEST_CASE("SystemParams validation") {
    SystemParams<double> p;
    CHECK_NOTHROW(p.validate());
    p.sigma2 = 0;
    CHECK_THROWS_AS(p.validate(), InvalidArgument);
    p = {};
    p.M = 0;
    CHECK_THROWS_AS(p.validate(), InvalidArgument);
    p = {};
    p.alpha_ncr_max = -1;
    CHECK_THROWS_AS(p.validate(), InvalidArgument);

    ChannelGains<double> g{1.0, 1.0, 0.0};
    CHECK_NOTHROW(g.validate());
    g.beta3 = -1e-20;
    CHECK_THROWS_AS(g.validate(), InvalidArgument);
}

TEST_CASE("DirectCoupling phase normalization") {
    const double pi = std::numbers::pi;
    CHECK(DirectCoupling<double>(1.0, -pi).phase() == Approx(pi));
    CHECK(DirectCoupling<double>(1.0, pi).phase() == Approx(pi));
    CHECK(DirectCoupling<double>(1.0, 3 * pi / 2).phase() == Approx(-pi / 2));
    CHECK(DirectCoupling<double>(2.0, 0.25).real() == Approx(2.0 * std::cos(0.25)));
    const auto x = DirectCoupling<double>::from_complex({-0.3, 0.4});
    CHECK(x.magnitude() == Approx(0.5));
    CHECK(x.value().real() == Approx(-0.3));
    CHECK(x.value().imag() == Approx(0.4));
    CHECK_THROWS_AS(DirectCoupling<double>(-1.0, 0.0), InvalidArgument);
}
