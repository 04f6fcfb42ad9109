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

#include "ncrris/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "ncrris/error.hpp"
#include "ncrris/pathloss.hpp"
#include "ncrris/units.hpp"

namespace ncrris {

std::string_view to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::D1: return "d1";
        case SweepVariable::D2: return "d2";
        case SweepVariable::D3: return "d3";
        case SweepVariable::NodeX: return "node_x";
        case SweepVariable::NodeY: return "node_y";
        case SweepVariable::NodeZ: return "node_z";
        case SweepVariable::M: return "M";
        case SweepVariable::N: return "N";
        case SweepVariable::ThetaDeg: return "theta";
        case SweepVariable::Rho: return "rho";
    }
    return "?";
}

std::string_view unit_of(SweepVariable v) {
    switch (v) {
        case SweepVariable::M:
        case SweepVariable::N: return "count";
        case SweepVariable::ThetaDeg: return "deg";
        case SweepVariable::Rho: return "1";
        default: return "m";
    }
}

std::string_view to_string(VariantKind k) {
    switch (k) {
        case VariantKind::SnrPassive: return "snr-passive";
        case VariantKind::SnrActive: return "snr-active";
        case VariantKind::SnrNcr: return "snr-ncr";
        case VariantKind::SnrDirect: return "snr-direct";
        case VariantKind::RequiredAlphaPassive: return "required-alpha-passive";
        case VariantKind::RequiredAlphaActive: return "required-alpha-active";
    }
    return "?";
}

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

struct Entry {
    std::string value;
    std::size_t line = 0;
};

// Parsed but not yet interpreted file: section -> ordered (key, entry).
struct RawDoc {
    std::map<std::string, std::vector<std::pair<std::string, Entry>>> sections;
    std::map<std::string, std::size_t> section_line;
};

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"system",
         {"P_dbm", "P_w", "sigma2_dbm", "sigma2_w", "M", "N", "alpha_ncr_max", "alpha_ncr_max_db", "alpha_aris_max",
          "alpha_aris_max_db", "ncr_power_max_w", "aris_power_max_w"}},
        {"links", {"wavelength_m", "carrier_ghz", "beta1", "beta2", "beta3"}},
        {"geometry", {"mode", "bs", "ue", "node", "d1", "d2", "d3"}},
        {"direct", {"rho", "theta_deg"}},
        {"wideband", {"scatterer"}},
        {"sweep", {"variable", "from", "to", "points", "spacing", "values"}},
        {"variants", {}},  // free-form names
    };
    return keys;
}

RawDoc tokenize(std::string_view text) {
    RawDoc doc;
    std::string section;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            if (nl == text.size()) break;
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(line_no, "malformed section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (!known_keys().count(section)) throw ParseError(line_no, "unknown section [" + section + "]");
            if (doc.section_line.count(section)) throw ParseError(line_no, "duplicate section [" + section + "]");
            doc.section_line[section] = line_no;
            doc.sections[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        if (section.empty()) throw ParseError(line_no, "key outside of any section");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ParseError(line_no, "empty key");
        if (value.empty()) throw ParseError(line_no, "empty value for '" + key + "'");
        const auto& allowed = known_keys().at(section);
        if (section != "variants" && !allowed.count(key))
            throw ParseError(line_no, "unknown key '" + key + "' in [" + section + "]");
        auto& entries = doc.sections[section];
        if (key != "scatterer") {
            for (const auto& [k, e] : entries)
                if (k == key) throw ParseError(line_no, "duplicate key '" + key + "'");
        }
        entries.push_back({key, Entry{value, line_no}});
        if (nl == text.size()) break;
    }
    return doc;
}

double to_number(std::string_view s, std::size_t line) {
    double v = 0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v))
        throw ParseError(line, "not a finite number: '" + std::string(s) + "'");
    return v;
}

int to_count(std::string_view s, std::size_t line) {
    const double v = to_number(s, line);
    if (v != std::floor(v) || v < 1 || v > 1e7) throw ParseError(line, "expected a positive integer: '" + std::string(s) + "'");
    return int(v);
}

// Read access to one section; missing keys report the section header line.
class Section {
public:
    Section(const RawDoc& doc, const std::string& name) : name_(name) {
        if (auto it = doc.sections.find(name); it != doc.sections.end()) entries_ = &it->second;
        if (auto it = doc.section_line.find(name); it != doc.section_line.end()) line_ = it->second;
    }

    bool present() const { return entries_ != nullptr; }
    std::size_t line() const { return line_; }

    const Entry* find(const std::string& key) const {
        if (!entries_) return nullptr;
        for (const auto& [k, e] : *entries_)
            if (k == key) return &e;
        return nullptr;
    }

    const Entry& require(const std::string& key) const {
        if (const auto* e = find(key)) return *e;
        throw ParseError(line_, "missing required key '" + key + "' in [" + name_ + "]");
    }

    std::optional<double> number(const std::string& key) const {
        if (const auto* e = find(key)) return to_number(e->value, e->line);
        return std::nullopt;
    }

    // Exactly one of two alternative keys, returning (value, used_second).
    std::pair<const Entry*, bool> one_of(const std::string& a, const std::string& b, bool required) const {
        const auto* ea = find(a);
        const auto* eb = find(b);
        if (ea && eb) throw ParseError(eb->line, "give only one of '" + a + "' and '" + b + "'");
        if (!ea && !eb && required)
            throw ParseError(line_, "missing required key '" + a + "' (or '" + b + "') in [" + name_ + "]");
        return {ea ? ea : eb, eb != nullptr};
    }

    const std::vector<std::pair<std::string, Entry>>& entries() const {
        static const std::vector<std::pair<std::string, Entry>> empty;
        return entries_ ? *entries_ : empty;
    }

private:
    std::string name_;
    const std::vector<std::pair<std::string, Entry>>* entries_ = nullptr;
    std::size_t line_ = 1;
};

Position3<double> to_position(const Entry& e) {
    const auto parts = split_ws(e.value);
    if (parts.size() != 3) throw ParseError(e.line, "expected three coordinates 'x y z'");
    return {to_number(parts[0], e.line), to_number(parts[1], e.line), to_number(parts[2], e.line)};
}

LinkModel to_link(const Entry& e, bool allow_none) {
    const auto parts = split_ws(e.value);
    LinkModel m;
    if (parts[0] == "fixed") {
        if (parts.size() != 2) throw ParseError(e.line, "expected 'fixed <gain in dB>'");
        m.kind = LinkModel::Kind::Fixed;
        m.fixed_linear = db_to_linear_power(to_number(parts[1], e.line));
        return m;
    }
    if (parts.size() != 1) throw ParseError(e.line, "unexpected text after link model");
    if (parts[0] == "free-space") {
        m.kind = LinkModel::Kind::FreeSpace;
    } else if (parts[0] == "umi") {
        m.kind = LinkModel::Kind::Umi;
    } else if (parts[0] == "none" && allow_none) {
        m.kind = LinkModel::Kind::None;
    } else {
        throw ParseError(e.line, "unknown link model '" + std::string(parts[0]) + "'");
    }
    return m;
}

void parse_system(const Section& s, Scenario& sc) {
    auto [pe, p_watts] = s.one_of("P_dbm", "P_w", true);
    const double P = to_number(pe->value, pe->line);
    sc.params.P = p_watts ? P : dbm_to_watts(P);
    auto [ne, n_watts] = s.one_of("sigma2_dbm", "sigma2_w", true);
    const double sigma2 = to_number(ne->value, ne->line);
    sc.params.sigma2 = n_watts ? sigma2 : dbm_to_watts(sigma2);
    if (!(sc.params.P > 0)) throw ParseError(pe->line, "transmit power must be positive");
    if (!(sc.params.sigma2 > 0)) throw ParseError(ne->line, "noise power must be positive");
    sc.params.M = to_count(s.require("M").value, s.require("M").line);
    sc.params.N = to_count(s.require("N").value, s.require("N").line);

    const double inf = std::numeric_limits<double>::infinity();
    auto cap = [&](const std::string& lin, const std::string& db) {
        auto [e, is_db] = s.one_of(lin, db, false);
        if (!e) return inf;
        const double v = to_number(e->value, e->line);
        const double alpha = is_db ? db_to_linear_amplitude(v) : v;
        if (alpha < 0) throw ParseError(e->line, "amplification cap must be non-negative");
        return alpha;
    };
    sc.params.alpha_ncr_max = cap("alpha_ncr_max", "alpha_ncr_max_db");
    sc.params.alpha_aris_max = cap("alpha_aris_max", "alpha_aris_max_db");

    auto power = [&](const std::string& key) -> std::optional<double> {
        const auto* e = s.find(key);
        if (!e) return std::nullopt;
        const double v = to_number(e->value, e->line);
        if (!(v > 0)) throw ParseError(e->line, "radiated-power cap must be positive");
        return v;
    };
    sc.ncr_power_max = power("ncr_power_max_w");
    sc.aris_power_max = power("aris_power_max_w");
}

void parse_links(const Section& s, Scenario& sc) {
    if (!s.present()) throw ParseError(1, "missing section [links]");
    sc.beta1 = to_link(s.require("beta1"), false);
    sc.beta2 = to_link(s.require("beta2"), false);
    if (const auto* e = s.find("beta3")) sc.beta3 = to_link(*e, true);

    auto [we, is_ghz] = s.one_of("wavelength_m", "carrier_ghz", false);
    if (we) {
        const double v = to_number(we->value, we->line);
        if (!(v > 0)) throw ParseError(we->line, "wavelength/carrier must be positive");
        sc.wavelength = is_ghz ? kSpeedOfLight / (v * 1e9) : v;
    }
    const bool needs = sc.beta1.kind == LinkModel::Kind::FreeSpace || sc.beta1.kind == LinkModel::Kind::Umi ||
                       sc.beta2.kind == LinkModel::Kind::FreeSpace || sc.beta2.kind == LinkModel::Kind::Umi ||
                       sc.beta3.kind == LinkModel::Kind::FreeSpace || sc.beta3.kind == LinkModel::Kind::Umi;
    if (needs && !we) throw ParseError(s.line(), "distance-based link models need 'wavelength_m' or 'carrier_ghz'");
}

void parse_geometry(const Section& s, Scenario& sc) {
    if (!s.present()) throw ParseError(1, "missing section [geometry]");
    std::string mode = "positions";
    if (const auto* e = s.find("mode")) mode = e->value;
    if (mode == "positions") {
        sc.positions_mode = true;
        for (const char* k : {"d1", "d2", "d3"})
            if (const auto* e = s.find(k)) throw ParseError(e->line, std::string("'") + k + "' needs mode = distances");
        sc.deployment.bs_pos = to_position(s.require("bs"));
        sc.deployment.ue_pos = to_position(s.require("ue"));
        sc.deployment.node_pos = to_position(s.require("node"));
    } else if (mode == "distances") {
        sc.positions_mode = false;
        for (const char* k : {"bs", "ue", "node"})
            if (const auto* e = s.find(k)) throw ParseError(e->line, std::string("'") + k + "' needs mode = positions");
        auto dist = [&](const char* key, bool required) {
            const auto* e = required ? &s.require(key) : s.find(key);
            if (!e) return 0.0;
            const double v = to_number(e->value, e->line);
            if (!(v > 0)) throw ParseError(e->line, "distances must be positive");
            return v;
        };
        sc.link_distances.d1 = dist("d1", true);
        sc.link_distances.d2 = dist("d2", true);
        sc.link_distances.d3 = dist("d3", sc.beta3.kind != LinkModel::Kind::None);
    } else {
        throw ParseError(s.find("mode")->line, "mode must be 'positions' or 'distances'");
    }
}

void parse_direct(const Section& d, const Section& w, Scenario& sc) {
    if (d.present()) {
        if (sc.beta3.kind == LinkModel::Kind::None) throw ParseError(d.line(), "[direct] needs beta3 in [links]");
        DirectModel dm;
        if (auto rho = d.number("rho")) {
            if (!(*rho >= 0 && *rho <= 1)) throw ParseError(d.find("rho")->line, "rho must lie in [0, 1]");
            dm.rho = *rho;
        }
        if (auto th = d.number("theta_deg")) dm.theta_rad = *th * std::numbers::pi / 180.0;
        sc.direct = dm;
    }
    if (w.present()) {
        if (d.present()) throw ParseError(w.line(), "[wideband] and [direct] are mutually exclusive");
        if (sc.beta3.kind == LinkModel::Kind::None) throw ParseError(w.line(), "[wideband] needs beta3 in [links]");
        if (!sc.positions_mode) throw ParseError(w.line(), "[wideband] needs mode = positions");
        for (const auto& [k, e] : w.entries()) {
            const auto parts = split_ws(e.value);
            if (parts.size() != 3 && parts.size() != 4) throw ParseError(e.line, "expected 'x y z [weight]'");
            Scatterer<double> sct;
            sct.position = {to_number(parts[0], e.line), to_number(parts[1], e.line), to_number(parts[2], e.line)};
            if (parts.size() == 4) sct.weight = to_number(parts[3], e.line);
            if (!(sct.weight >= 0)) throw ParseError(e.line, "scatterer weight must be non-negative");
            sc.scatterers.push_back(sct);
        }
        if (sc.scatterers.empty()) throw ParseError(w.line(), "[wideband] lists no scatterers");
    }
}

SweepVariable to_variable(const Entry& e, const Scenario& sc) {
    static const std::map<std::string, SweepVariable> names{
        {"d1", SweepVariable::D1},        {"d2", SweepVariable::D2},       {"d3", SweepVariable::D3},
        {"node_x", SweepVariable::NodeX}, {"node_y", SweepVariable::NodeY}, {"node_z", SweepVariable::NodeZ},
        {"M", SweepVariable::M},          {"N", SweepVariable::N},         {"theta_deg", SweepVariable::ThetaDeg},
        {"rho", SweepVariable::Rho}};
    const auto it = names.find(e.value);
    if (it == names.end()) throw ParseError(e.line, "unknown sweep variable '" + e.value + "'");
    const SweepVariable v = it->second;
    switch (v) {
        case SweepVariable::D1:
        case SweepVariable::D2:
        case SweepVariable::D3:
            if (sc.positions_mode) throw ParseError(e.line, "sweeping '" + e.value + "' needs mode = distances");
            if (v == SweepVariable::D3 && sc.beta3.kind == LinkModel::Kind::None)
                throw ParseError(e.line, "sweeping d3 needs beta3");
            break;
        case SweepVariable::NodeX:
        case SweepVariable::NodeY:
        case SweepVariable::NodeZ:
            if (!sc.positions_mode) throw ParseError(e.line, "sweeping '" + e.value + "' needs mode = positions");
            break;
        case SweepVariable::ThetaDeg:
        case SweepVariable::Rho:
            if (!sc.direct) throw ParseError(e.line, "sweeping '" + e.value + "' needs a [direct] section");
            break;
        default: break;
    }
    return v;
}

void parse_sweep(const Section& s, Scenario& sc) {
    if (!s.present()) throw ParseError(1, "missing section [sweep]");
    const auto& ve = s.require("variable");
    sc.sweep.variable = to_variable(ve, sc);
    auto& vals = sc.sweep.values;

    if (const auto* e = s.find("values")) {
        for (const char* k : {"from", "to", "points", "spacing"})
            if (const auto* other = s.find(k)) throw ParseError(other->line, std::string("'") + k + "' conflicts with 'values'");
        std::string_view rest = e->value;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            vals.push_back(to_number(trim(rest.substr(0, comma)), e->line));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        for (std::size_t i = 1; i < vals.size(); ++i)
            if (!(vals[i] > vals[i - 1])) throw ParseError(e->line, "sweep values must be strictly increasing");
    } else {
        const auto& fe = s.require("from");
        const auto& te = s.require("to");
        const double from = to_number(fe.value, fe.line);
        const double to = to_number(te.value, te.line);
        int points = 2;
        if (const auto* pe = s.find("points")) points = to_count(pe->value, pe->line);
        bool log = false;
        if (const auto* se = s.find("spacing")) {
            if (se->value == "log")
                log = true;
            else if (se->value != "linear")
                throw ParseError(se->line, "spacing must be 'linear' or 'log'");
        }
        if (points == 1) {
            if (from != to) throw ParseError(te.line, "a single-point sweep needs from = to");
            vals.push_back(from);
        } else {
            if (!(to > from)) throw ParseError(te.line, "empty sweep range: 'to' must exceed 'from'");
            if (log && !(from > 0)) throw ParseError(fe.line, "log spacing needs a positive start");
            for (int i = 0; i < points; ++i) {
                const double t = double(i) / double(points - 1);
                double v = log ? std::exp(std::log(from) + t * (std::log(to) - std::log(from))) : from + t * (to - from);
                if (i == 0) v = from;
                if (i == points - 1) v = to;
                vals.push_back(v);
            }
            for (std::size_t i = 1; i < vals.size(); ++i)
                if (!(vals[i] > vals[i - 1])) throw ParseError(te.line, "sweep range too narrow for the point count");
        }
    }
    const std::size_t line = ve.line;
    for (const double v : vals) {
        switch (sc.sweep.variable) {
            case SweepVariable::M:
            case SweepVariable::N:
                if (v != std::floor(v) || v < 1) throw ParseError(line, "M and N sweeps need positive integers");
                break;
            case SweepVariable::D1:
            case SweepVariable::D2:
            case SweepVariable::D3:
                if (!(v > 0)) throw ParseError(line, "distance sweeps need positive values");
                break;
            case SweepVariable::Rho:
                if (v < 0 || v > 1) throw ParseError(line, "rho sweeps must stay in [0, 1]");
                break;
            default: break;
        }
    }
}

void parse_variants(const Section& s, Scenario& sc) {
    if (!s.present() || s.entries().empty()) throw ParseError(s.line(), "no variants given");
    static const std::map<std::string, VariantKind> kinds{
        {"snr-passive", VariantKind::SnrPassive},
        {"snr-active", VariantKind::SnrActive},
        {"snr-ncr", VariantKind::SnrNcr},
        {"snr-direct", VariantKind::SnrDirect},
        {"required-alpha-passive", VariantKind::RequiredAlphaPassive},
        {"required-alpha-active", VariantKind::RequiredAlphaActive},
    };
    std::set<std::string> names;
    for (const auto& [name, e] : s.entries()) {
        for (const char c : name)
            if (c == ',' || c == '"' || c == ' ') throw ParseError(e.line, "variant names may not contain ',', '\"' or spaces");
        if (!names.insert(name).second) throw ParseError(e.line, "duplicate variant '" + name + "'");
        const auto parts = split_ws(e.value);
        const auto it = kinds.find(std::string(parts[0]));
        if (it == kinds.end()) throw ParseError(e.line, "unknown variant kind '" + std::string(parts[0]) + "'");
        Variant v;
        v.name = name;
        v.kind = it->second;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            const auto eq = parts[i].find('=');
            if (eq == std::string_view::npos) throw ParseError(e.line, "expected 'option=value'");
            const auto key = parts[i].substr(0, eq);
            const auto val = parts[i].substr(eq + 1);
            if (key == "M") {
                v.M = to_count(val, e.line);
            } else if (key == "N") {
                v.N = to_count(val, e.line);
            } else if (key == "gain") {
                if (v.kind != VariantKind::SnrActive && v.kind != VariantKind::SnrNcr &&
                    v.kind != VariantKind::RequiredAlphaActive)
                    throw ParseError(e.line, "'gain' applies to snr-active, snr-ncr and required-alpha-active");
                if (val == "opt") {
                    v.gain.kind = GainPolicy::Kind::Optimal;
                } else if (val == "cap") {
                    v.gain.kind = GainPolicy::Kind::Cap;
                } else {
                    v.gain.kind = GainPolicy::Kind::Fixed;
                    v.gain.value = to_number(val, e.line);
                    if (v.gain.value < 0) throw ParseError(e.line, "gain must be non-negative");
                }
            } else {
                throw ParseError(e.line, "unknown variant option '" + std::string(key) + "'");
            }
        }
        if (v.M && sc.sweep.variable == SweepVariable::M) throw ParseError(e.line, "M is the sweep variable");
        if (v.N && sc.sweep.variable == SweepVariable::N) throw ParseError(e.line, "N is the sweep variable");

        // Devices whose gain comes from a cap need one.
        const bool uses_aris_cap = v.kind == VariantKind::SnrActive || v.kind == VariantKind::RequiredAlphaActive;
        const bool uses_ncr_cap = v.kind == VariantKind::SnrNcr;
        if (v.gain.kind != GainPolicy::Kind::Fixed) {
            if (uses_aris_cap && std::isinf(sc.params.alpha_aris_max) && !sc.aris_power_max)
                throw ParseError(e.line, "variant needs alpha_aris_max or aris_power_max_w in [system]");
            if (uses_ncr_cap && std::isinf(sc.params.alpha_ncr_max) && !sc.ncr_power_max)
                throw ParseError(e.line, "variant needs alpha_ncr_max or ncr_power_max_w in [system]");
        }
        sc.variants.push_back(v);
    }
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
    const RawDoc doc = tokenize(text);
    Scenario sc;
    const Section system(doc, "system");
    if (!system.present()) throw ParseError(1, "missing section [system]");
    parse_system(system, sc);
    parse_links(Section(doc, "links"), sc);
    parse_geometry(Section(doc, "geometry"), sc);
    parse_direct(Section(doc, "direct"), Section(doc, "wideband"), sc);
    parse_sweep(Section(doc, "sweep"), sc);
    parse_variants(Section(doc, "variants"), sc);
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read scenario file '" + path + "'");
    return parse_scenario(buf.str());
}

}  // namespace ncrris
