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

// Scenario files: line-oriented, `[section]` headers, `key = value` pairs,
// `#` starts a comment. See README.md for the full grammar.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncrris/correlation.hpp"
#include "ncrris/types.hpp"

namespace ncrris {

/// How one link's large-scale gain is obtained.
struct LinkModel {
    enum class Kind { Fixed, FreeSpace, Umi, None };
    Kind kind = Kind::None;
    double fixed_linear = 0;  ///< Kind::Fixed only
};

enum class SweepVariable { D1, D2, D3, NodeX, NodeY, NodeZ, M, N, ThetaDeg, Rho };

std::string_view to_string(SweepVariable v);
std::string_view unit_of(SweepVariable v);

struct SweepAxis {
    SweepVariable variable = SweepVariable::D2;
    std::vector<double> values;  ///< strictly increasing, non-empty
};

enum class VariantKind { SnrPassive, SnrActive, SnrNcr, SnrDirect, RequiredAlphaPassive, RequiredAlphaActive };

std::string_view to_string(VariantKind k);

/// Gain choice for an amplifying device: the constrained optimum, the cap
/// itself, or a fixed value (still clipped to the cap).
struct GainPolicy {
    enum class Kind { Optimal, Cap, Fixed };
    Kind kind = Kind::Optimal;
    double value = 0;
};

struct Variant {
    std::string name;
    VariantKind kind = VariantKind::SnrPassive;
    GainPolicy gain;              ///< device gain (snr-active, snr-ncr) or rival gain (required-alpha-active)
    std::optional<int> M, N;      ///< per-variant overrides
};

/// Narrowband direct path: x = rho sqrt(M beta3) e^{j theta}, ||h3||^2 = M beta3.
struct DirectModel {
    double rho = 1;
    double theta_rad = 0;
};

struct Scenario {
    SystemParams<double> params;
    std::optional<double> ncr_power_max;   ///< watts of radiated power
    std::optional<double> aris_power_max;  ///< watts, total over all elements

    double wavelength = 0;  ///< meters
    LinkModel beta1, beta2, beta3;

    bool positions_mode = true;
    Deployment3D<double> deployment;
    LinkDistances<double> link_distances{0, 0, 0};  ///< distances mode only

    std::optional<DirectModel> direct;
    std::vector<Scatterer<double>> scatterers;  ///< non-empty selects the wideband model

    SweepAxis sweep;
    std::vector<Variant> variants;
};

/// Parses and validates a scenario; all dB fields are converted to linear.
/// Throws ParseError with the offending line number.
Scenario parse_scenario(std::string_view text);

/// Reads and parses a file; I/O failures throw IoError naming the path.
Scenario load_scenario(const std::string& path);

}  // namespace ncrris
