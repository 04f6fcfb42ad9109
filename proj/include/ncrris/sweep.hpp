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

#include <string>
#include <variant>
#include <vector>

#include "ncrris/scenario.hpp"

namespace ncrris {

/// A numeric cell or a text cell (verdicts, optimizer cases, status).
using Cell = std::variant<double, std::string>;

/// Output of run_sweep. Every row has columns.size() cells. Infeasible
/// required-alpha entries hold +inf; failed rows hold NaN cells and the
/// error in the trailing `status` column.
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Column headers for a scenario, with units in parentheses.
std::vector<std::string> sweep_columns(const Scenario& s);

/// Evaluates every variant at every axis value, in axis order.
SweepTable run_sweep(const Scenario& s);

/// Gains and direct-path inputs at one axis value, exposed for tests.
struct PointInputs {
    SystemParams<double> params;
    ChannelGains<double> gains;
    Deployment3D<double> deployment;
    LinkDistances<double> distances{0, 0, 0};
    std::optional<DirectModel> direct;
};

PointInputs point_inputs(const Scenario& s, double axis_value);

/// Effective amplification caps after combining the alpha cap with the
/// radiated-power cap (the smaller one binds).
double effective_ncr_cap(const Scenario& s, const SystemParams<double>& p, const ChannelGains<double>& g);
double effective_aris_cap(const Scenario& s, const SystemParams<double>& p, const ChannelGains<double>& g);

}  // namespace ncrris
