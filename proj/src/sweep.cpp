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

#include "ncrris/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "ncrris/array_response.hpp"
#include "ncrris/crossover.hpp"
#include "ncrris/error.hpp"
#include "ncrris/gain.hpp"
#include "ncrris/pathloss.hpp"
#include "ncrris/snr.hpp"

namespace ncrris {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double link_gain(const LinkModel& m, double d, double wavelength) {
    switch (m.kind) {
        case LinkModel::Kind::Fixed: return m.fixed_linear;
        case LinkModel::Kind::FreeSpace: return free_space_gain(d, wavelength);
        case LinkModel::Kind::Umi: return umi_street_canyon_gain(d, kSpeedOfLight / wavelength / 1e9);
        case LinkModel::Kind::None: return 0.0;
    }
    return 0.0;
}

// Direct-path description for one variant (M may differ per variant).
struct DirectInputs {
    enum class Kind { Blocked, Narrowband, Wideband } kind = Kind::Blocked;
    DirectCoupling<double> x;
    double h3_norm2 = 0;
    double quad = 0;  // a21^H R3 a21
};

std::string fmt_case(GainCase c) { return std::string(to_string(c)); }

struct Gain {
    double alpha;
    std::string tag;
};

double clip(double value, double cap) { return std::min(value, cap); }

Gain active_gain(const GainPolicy& pol, const SystemParams<double>& p, const ChannelGains<double>& g,
                 const DirectInputs& d, double cap) {
    switch (pol.kind) {
        case GainPolicy::Kind::Fixed: return {clip(pol.value, cap), "fixed"};
        case GainPolicy::Kind::Cap: return {cap, "cap"};
        case GainPolicy::Kind::Optimal: break;
    }
    if (cap == 0) return {0.0, fmt_case(GainCase::BoundaryZero)};
    switch (d.kind) {
        case DirectInputs::Kind::Blocked: return {cap, fmt_case(GainCase::NoDirectMax)};
        case DirectInputs::Kind::Narrowband: {
            const auto sol = optimal_alpha_active(p, g, d.x.magnitude(), cap, d.h3_norm2);
            return {sol.alpha_opt, fmt_case(sol.case_tag)};
        }
        case DirectInputs::Kind::Wideband: {
            // Averaged objective A a^2 / (sigma2 + C a^2) is monotone.
            const double N = p.N, M = p.M;
            const double A = p.P * M * g.beta1 * g.beta2 * N * N - p.P * g.beta2 * N * d.quad;
            if (A > 0) return {cap, fmt_case(GainCase::BoundaryMax)};
            return {0.0, fmt_case(GainCase::BoundaryZero)};
        }
    }
    return {cap, ""};
}

Gain ncr_gain(const GainPolicy& pol, const SystemParams<double>& p, const ChannelGains<double>& g,
              const DirectInputs& d, double cap) {
    switch (pol.kind) {
        case GainPolicy::Kind::Fixed: return {clip(pol.value, cap), "fixed"};
        case GainPolicy::Kind::Cap: return {cap, "cap"};
        case GainPolicy::Kind::Optimal: break;
    }
    if (cap == 0) return {0.0, fmt_case(GainCase::BoundaryZero)};
    switch (d.kind) {
        case DirectInputs::Kind::Blocked: return {cap, fmt_case(GainCase::NoDirectMax)};
        case DirectInputs::Kind::Narrowband: {
            const auto sol = optimal_alpha_ncr(p, g, d.x, cap, d.h3_norm2);
            return {sol.alpha_opt, fmt_case(sol.case_tag)};
        }
        case DirectInputs::Kind::Wideband: {
            const double A = p.P * p.M * g.beta1 * g.beta2 - p.P * g.beta2 * d.quad;
            if (A > 0) return {cap, fmt_case(GainCase::BoundaryMax)};
            return {0.0, fmt_case(GainCase::BoundaryZero)};
        }
    }
    return {cap, ""};
}

std::vector<Cell> verdict_cells(const CrossoverVerdict<double>& v) {
    return {v.alpha_lo, v.alpha_hi, std::string(to_string(v.kind))};
}

class RowEvaluator {
public:
    RowEvaluator(const Scenario& s, const PointInputs& in) : s_(s), in_(in) {}

    void append(const Variant& v, std::vector<Cell>& row) {
        SystemParams<double> p = in_.params;
        if (v.M) p.M = *v.M;
        if (v.N) p.N = *v.N;
        const ChannelGains<double>& g = in_.gains;
        const DirectInputs d = direct_for(p.M);

        switch (v.kind) {
            case VariantKind::SnrPassive: {
                double snr = 0;
                if (d.kind == DirectInputs::Kind::Blocked)
                    snr = snr_passive_nodirect(p, g).snr_linear;
                else if (d.kind == DirectInputs::Kind::Narrowband)
                    snr = snr_passive_direct(p, g, d.x, d.h3_norm2).snr_linear;
                else
                    snr = avg_snr_passive_wideband(p, g).snr_linear;
                row.push_back(to_db(snr));
                break;
            }
            case VariantKind::SnrActive: {
                const Gain gain = active_gain(v.gain, p, g, d, effective_aris_cap(s_, p, g));
                double snr = 0;
                if (d.kind == DirectInputs::Kind::Blocked)
                    snr = snr_active_nodirect(p, g, gain.alpha).snr_linear;
                else if (d.kind == DirectInputs::Kind::Narrowband)
                    snr = snr_active_direct(p, g, DirectCoupling<double>(d.x.magnitude(), 0), d.h3_norm2, gain.alpha)
                              .snr_linear;
                else
                    snr = avg_snr_active_wideband(p, g, gain.alpha, d.quad).snr_linear;
                row.insert(row.end(), {to_db(snr), gain.alpha, gain.tag});
                break;
            }
            case VariantKind::SnrNcr: {
                const Gain gain = ncr_gain(v.gain, p, g, d, effective_ncr_cap(s_, p, g));
                double snr = 0;
                if (d.kind == DirectInputs::Kind::Blocked)
                    snr = snr_ncr_nodirect(p, g, gain.alpha).snr_linear;
                else if (d.kind == DirectInputs::Kind::Narrowband)
                    snr = snr_ncr_direct(p, g, d.x, d.h3_norm2, gain.alpha).snr_linear;
                else
                    snr = avg_snr_ncr_wideband(p, g, gain.alpha, d.quad).snr_linear;
                row.insert(row.end(), {to_db(snr), gain.alpha, gain.tag});
                break;
            }
            case VariantKind::SnrDirect: {
                const double h3n2 = d.kind == DirectInputs::Kind::Narrowband ? d.h3_norm2
                                    : d.kind == DirectInputs::Kind::Wideband ? p.M * g.beta3
                                                                             : 0.0;
                row.push_back(to_db(snr_direct_only(p, h3n2).snr_linear));
                break;
            }
            case VariantKind::RequiredAlphaPassive: {
                CrossoverVerdict<double> verdict;
                if (d.kind == DirectInputs::Kind::Blocked)
                    verdict = required_alpha_vs_passive_nodirect(p, g);
                else if (d.kind == DirectInputs::Kind::Narrowband)
                    verdict = required_alpha_vs_passive_direct(p, g, d.x);
                else
                    verdict = required_alpha_wideband(p, g, d.quad, WidebandRival<double>{VsPassive{}});
                const auto cells = verdict_cells(verdict);
                row.insert(row.end(), cells.begin(), cells.end());
                break;
            }
            case VariantKind::RequiredAlphaActive: {
                const Gain gain = active_gain(v.gain, p, g, d, effective_aris_cap(s_, p, g));
                CrossoverVerdict<double> verdict;
                if (d.kind == DirectInputs::Kind::Narrowband) {
                    verdict = required_alpha_vs_active_direct(p, g, d.x, gain.alpha);
                } else if (gain.alpha == 0 && (d.kind == DirectInputs::Kind::Blocked || d.quad == 0)) {
                    // A switched-off active RIS with no direct link delivers nothing.
                    verdict = CrossoverVerdict<double>::ncr_always_wins();
                } else if (d.kind == DirectInputs::Kind::Blocked) {
                    verdict = required_alpha_vs_active_nodirect(p, g, gain.alpha);
                } else {
                    verdict = required_alpha_wideband(p, g, d.quad, WidebandRival<double>{VsActive<double>{gain.alpha}});
                }
                const auto cells = verdict_cells(verdict);
                row.insert(row.end(), cells.begin(), cells.end());
                row.push_back(gain.alpha);
                break;
            }
        }
    }

private:
    static double to_db(double snr) { return SnrResult<double>{snr, {}}.snr_db(); }

    DirectInputs direct_for(int M) {
        DirectInputs d;
        const double beta3 = in_.gains.beta3;
        if (in_.direct) {
            d.kind = DirectInputs::Kind::Narrowband;
            d.h3_norm2 = M * beta3;
            d.x = DirectCoupling<double>(in_.direct->rho * std::sqrt(M * beta3), in_.direct->theta_rad);
        } else if (!s_.scatterers.empty()) {
            d.kind = DirectInputs::Kind::Wideband;
            auto it = quad_cache_.find(M);
            if (it == quad_cache_.end()) {
                const auto R3 = scatterer_correlation(in_.deployment, s_.scatterers, beta3, M);
                const auto a21 = steering_vector(ArrayModel<double>{}, M, in_.deployment.bs_pos, in_.deployment.node_pos);
                it = quad_cache_.emplace(M, std::max(quadratic_form(R3, a21), 0.0)).first;
            }
            d.quad = it->second;
        }
        return d;
    }

    const Scenario& s_;
    const PointInputs& in_;
    std::map<int, double> quad_cache_;
};

std::size_t variant_width(VariantKind k) {
    switch (k) {
        case VariantKind::SnrPassive:
        case VariantKind::SnrDirect: return 1;
        case VariantKind::SnrActive:
        case VariantKind::SnrNcr:
        case VariantKind::RequiredAlphaPassive: return 3;
        case VariantKind::RequiredAlphaActive: return 4;
    }
    return 0;
}

}  // namespace

std::vector<std::string> sweep_columns(const Scenario& s) {
    std::vector<std::string> cols;
    cols.push_back(std::string(to_string(s.sweep.variable)) + " (" + std::string(unit_of(s.sweep.variable)) + ")");
    for (const auto& v : s.variants) {
        const std::string& n = v.name;
        switch (v.kind) {
            case VariantKind::SnrPassive:
            case VariantKind::SnrDirect: cols.push_back(n + " snr (dB)"); break;
            case VariantKind::SnrActive:
            case VariantKind::SnrNcr:
                cols.push_back(n + " snr (dB)");
                cols.push_back(n + " alpha (linear)");
                cols.push_back(n + " case");
                break;
            case VariantKind::RequiredAlphaPassive:
            case VariantKind::RequiredAlphaActive:
                cols.push_back(n + " alpha_required (linear)");
                cols.push_back(n + " alpha_upper (linear)");
                cols.push_back(n + " verdict");
                if (v.kind == VariantKind::RequiredAlphaActive) cols.push_back(n + " alpha_aris (linear)");
                break;
        }
    }
    cols.push_back("status");
    return cols;
}

PointInputs point_inputs(const Scenario& s, double axis_value) {
    PointInputs in;
    in.params = s.params;
    in.direct = s.direct;
    in.deployment = s.deployment;
    in.distances = s.link_distances;

    switch (s.sweep.variable) {
        case SweepVariable::D1: in.distances.d1 = axis_value; break;
        case SweepVariable::D2: in.distances.d2 = axis_value; break;
        case SweepVariable::D3: in.distances.d3 = axis_value; break;
        case SweepVariable::NodeX: in.deployment.node_pos.x() = axis_value; break;
        case SweepVariable::NodeY: in.deployment.node_pos.y() = axis_value; break;
        case SweepVariable::NodeZ: in.deployment.node_pos.z() = axis_value; break;
        case SweepVariable::M: in.params.M = int(axis_value); break;
        case SweepVariable::N: in.params.N = int(axis_value); break;
        case SweepVariable::ThetaDeg: in.direct->theta_rad = axis_value * std::numbers::pi / 180.0; break;
        case SweepVariable::Rho: in.direct->rho = axis_value; break;
    }
    if (s.positions_mode) in.distances = distances(in.deployment);

    in.gains.beta1 = link_gain(s.beta1, in.distances.d1, s.wavelength);
    in.gains.beta2 = link_gain(s.beta2, in.distances.d2, s.wavelength);
    in.gains.beta3 = link_gain(s.beta3, in.distances.d3, s.wavelength);
    // Re-wrap through the normalizing constructor.
    if (in.direct) in.direct->theta_rad = DirectCoupling<double>(1.0, in.direct->theta_rad).phase();
    return in;
}

double effective_ncr_cap(const Scenario& s, const SystemParams<double>& p, const ChannelGains<double>& g) {
    double cap = p.alpha_ncr_max;
    if (s.ncr_power_max) cap = std::min(cap, ncr_alpha_for_power(p, g, *s.ncr_power_max));
    return cap;
}

double effective_aris_cap(const Scenario& s, const SystemParams<double>& p, const ChannelGains<double>& g) {
    double cap = p.alpha_aris_max;
    if (s.aris_power_max) cap = std::min(cap, active_ris_alpha_for_power(p, g, *s.aris_power_max));
    return cap;
}

SweepTable run_sweep(const Scenario& s) {
    SweepTable table;
    table.columns = sweep_columns(s);
    for (const double value : s.sweep.values) {
        std::vector<Cell> row{value};
        try {
            const PointInputs in = point_inputs(s, value);
            RowEvaluator eval(s, in);
            for (const auto& v : s.variants) eval.append(v, row);
            row.push_back(std::string("ok"));
        } catch (const Error& e) {
            row.resize(1);
            for (const auto& v : s.variants) row.insert(row.end(), variant_width(v.kind), Cell{kNaN});
            row.push_back(std::string("error: ") + e.kind() + ": " + e.what());
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace ncrris
