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

// Acceptance suite: closed forms against the brute-force oracles, plus the
// figure-shape checks on the shipped scenarios. Shared by the acceptance
// test binary and `ncrris validate`.

#include <cstdint>
#include <string>
#include <vector>

namespace ncrris::validation {

struct Options {
    std::uint64_t seed = 20250101;
    std::string scenario_dir = "scenarios";
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

CriterionResult closed_form_identity(const Options& opt);
CriterionResult signal_level_agreement(const Options& opt);
CriterionResult threshold_correctness(const Options& opt);
CriterionResult threshold_asymptotes(const Options& opt);
CriterionResult active_gain_optimum(const Options& opt);
CriterionResult ncr_gain_cases(const Options& opt);
CriterionResult wideband_consistency(const Options& opt);
CriterionResult figure_shapes(const Options& opt);
CriterionResult snr_ceiling(const Options& opt);

/// All nine criteria in order.
std::vector<CriterionResult> run_all(const Options& opt);

/// "PASS [n] title (1.23 s): detail"
std::string format_line(const CriterionResult& r);

}  // namespace ncrris::validation
