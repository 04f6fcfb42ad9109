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

// ncrris: SNR, gain and crossover calculator, scenario sweeps and the
// validation suite.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "ncrris/crossover.hpp"
#include "ncrris/csv.hpp"
#include "ncrris/error.hpp"
#include "ncrris/gain.hpp"
#include "ncrris/scenario.hpp"
#include "ncrris/snr.hpp"
#include "ncrris/sweep.hpp"
#include "ncrris/units.hpp"
#include "ncrris/validation.hpp"

namespace {

using namespace ncrris;

// Inline link parameters shared by snr, optimize and threshold.
struct LinkArgs {
    double P_dbm = 20;
    double sigma2_dbm = -117;
    int M = 1024;
    int N = 64;
    double beta1_db = -87;
    double beta2_db = -96;
    std::optional<double> x_mag;  // direct-path coupling |x|
    double x_phase_deg = 0;
    double h3_norm2 = 0;

    void add_to(CLI::App* app) {
        app->add_option("--P-dbm", P_dbm, "UE transmit power (dBm)")->capture_default_str();
        app->add_option("--sigma2-dbm", sigma2_dbm, "receiver noise power (dBm)")->capture_default_str();
        app->add_option("-M", M, "BS antennas")->capture_default_str()->check(CLI::PositiveNumber);
        app->add_option("-N", N, "RIS elements")->capture_default_str()->check(CLI::PositiveNumber);
        app->add_option("--beta1-db", beta1_db, "UE-node channel gain (dB)")->capture_default_str();
        app->add_option("--beta2-db", beta2_db, "node-BS channel gain (dB)")->capture_default_str();
        app->add_option("--x-mag", x_mag, "direct-path coupling |h3^H a21| (omit for a blocked direct path)");
        app->add_option("--x-phase-deg", x_phase_deg, "phase of the coupling seen by the NCR (deg)")
            ->capture_default_str();
        app->add_option("--h3-norm2", h3_norm2, "||h3||^2 of the direct channel")->capture_default_str();
    }

    SystemParams<double> params() const {
        SystemParams<double> p;
        p.P = dbm_to_watts(P_dbm);
        p.sigma2 = dbm_to_watts(sigma2_dbm);
        p.M = M;
        p.N = N;
        p.validate();
        return p;
    }

    ChannelGains<double> gains() const {
        return {db_to_linear_power(beta1_db), db_to_linear_power(beta2_db), 0};
    }

    bool direct() const { return x_mag.has_value(); }

    DirectCoupling<double> coupling() const {
        return DirectCoupling<double>(x_mag.value_or(0), x_phase_deg * std::numbers::pi / 180.0);
    }

    void check() const {
        if (direct() && *x_mag * *x_mag > M * h3_norm2 * (1 + 1e-12))
            throw InvalidArgument("--x-mag squared exceeds M * --h3-norm2");
    }
};

struct Output {
    std::string path;
    std::string format = "csv";

    void add_to(CLI::App* app) {
        app->add_option("--out", path, "output file (default: standard output)");
        app->add_option("--format", format, "output format")->check(CLI::IsMember({"csv"}))->capture_default_str();
    }

    void write(const SweepTable& t) const {
        if (path.empty())
            emit_csv(t, std::cout);
        else
            write_csv(t, path);
    }
};

SweepTable single_row(std::vector<std::string> columns, std::vector<Cell> row) {
    SweepTable t;
    t.columns = std::move(columns);
    t.rows.push_back(std::move(row));
    return t;
}

double db(double snr) { return SnrResult<double>{snr, {}}.snr_db(); }

void run_snr(const LinkArgs& a, const std::string& device, double alpha, const Output& out) {
    a.check();
    const auto p = a.params();
    const auto g = a.gains();
    const auto x = a.coupling();
    SnrResult<double> r;
    if (device == "passive")
        r = a.direct() ? snr_passive_direct(p, g, x, a.h3_norm2) : snr_passive_nodirect(p, g);
    else if (device == "active")
        r = a.direct() ? snr_active_direct(p, g, x, a.h3_norm2, alpha) : snr_active_nodirect(p, g, alpha);
    else
        r = a.direct() ? snr_ncr_direct(p, g, x, a.h3_norm2, alpha) : snr_ncr_nodirect(p, g, alpha);
    out.write(single_row({"device", "alpha (linear)", "snr (linear)", "snr (dB)"},
                         {device, device == "passive" ? 1.0 : alpha, r.snr_linear, db(r.snr_linear)}));
}

void run_optimize(const LinkArgs& a, const std::string& device, double alpha_max, const Output& out) {
    a.check();
    const auto p = a.params();
    const auto g = a.gains();
    const auto sol = device == "active" ? optimal_alpha_active(p, g, a.x_mag.value_or(0), alpha_max, a.h3_norm2)
                                        : optimal_alpha_ncr(p, g, a.coupling(), alpha_max, a.h3_norm2);
    out.write(single_row({"device", "alpha_opt (linear)", "snr (dB)", "case"},
                         {device, sol.alpha_opt, db(sol.snr_at_opt.snr_linear), std::string(to_string(sol.case_tag))}));
}

void run_threshold(const LinkArgs& a, const std::string& rival, double alpha_aris, const Output& out) {
    a.check();
    const auto p = a.params();
    const auto g = a.gains();
    CrossoverVerdict<double> v;
    if (rival == "passive")
        v = a.direct() ? required_alpha_vs_passive_direct(p, g, a.coupling())
                       : required_alpha_vs_passive_nodirect(p, g);
    else
        v = a.direct() ? required_alpha_vs_active_direct(p, g, a.coupling(), alpha_aris)
                       : required_alpha_vs_active_nodirect(p, g, alpha_aris);
    out.write(single_row({"rival", "alpha_required (linear)", "alpha_upper (linear)", "verdict"},
                         {rival, v.alpha_lo, v.alpha_hi, std::string(to_string(v.kind))}));
}

int run_validate(const validation::Options& opt) {
    int failed = 0;
    for (const auto& r : validation::run_all(opt)) {
        std::cout << validation::format_line(r) << std::endl;
        failed += !r.passed;
    }
    return failed ? 1 : 0;
}

void run_figures(const std::string& dir, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".scn") files.push_back(e.path());
    if (files.empty()) throw IoError("no .scn files in '" + dir + "'");
    std::sort(files.begin(), files.end());
    fs::create_directories(out_dir);
    for (const auto& f : files) {
        Scenario s;
        try {
            s = load_scenario(f.string());
        } catch (const ParseError& e) {
            throw ParseError(e.line(), f.filename().string() + ": " + e.detail());
        }
        const auto target = fs::path(out_dir) / f.filename().replace_extension(".csv");
        write_csv(run_sweep(s), target.string());
        std::cerr << f.filename().string() << " -> " << target.string() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uplink SNR comparison of network-controlled repeaters and passive/active RIS"};
    app.require_subcommand(1);

    LinkArgs link;
    Output out;
    std::uint64_t seed = validation::Options{}.seed;

    auto* snr = app.add_subcommand("snr", "closed-form SNR of one device");
    std::string snr_device = "ncr";
    double snr_alpha = 1000;
    snr->add_option("--device", snr_device)->check(CLI::IsMember({"passive", "active", "ncr"}))->capture_default_str();
    snr->add_option("--alpha", snr_alpha, "amplitude gain (active, ncr)")->capture_default_str();
    link.add_to(snr);
    out.add_to(snr);

    auto* opt = app.add_subcommand("optimize", "SNR-optimal amplification under a cap");
    std::string opt_device = "ncr";
    double alpha_max = 31622.7766;
    opt->add_option("--device", opt_device)->check(CLI::IsMember({"active", "ncr"}))->capture_default_str();
    opt->add_option("--alpha-max", alpha_max, "amplitude-gain cap")->capture_default_str();
    link.add_to(opt);
    out.add_to(opt);

    auto* thr = app.add_subcommand("threshold", "NCR gain needed to match a RIS");
    std::string rival = "passive";
    double alpha_aris = 30;
    thr->add_option("--rival", rival)->check(CLI::IsMember({"passive", "active"}))->capture_default_str();
    thr->add_option("--alpha-aris", alpha_aris, "active-RIS per-element gain")->capture_default_str();
    link.add_to(thr);
    out.add_to(thr);

    auto* sweep = app.add_subcommand("sweep", "run one scenario file");
    std::string scenario;
    sweep->add_option("--scenario", scenario, "scenario file")->required();
    sweep->add_option("--seed", seed, "accepted for uniformity; sweeps are deterministic");
    out.add_to(sweep);

    auto* val = app.add_subcommand("validate", "run the acceptance suite");
    std::string scenario_dir = "scenarios";
    val->add_option("--seed", seed, "base seed for the Monte Carlo stages")->capture_default_str();
    val->add_option("--scenarios", scenario_dir, "directory with fig1.scn .. fig10.scn")->capture_default_str();

    auto* figs = app.add_subcommand("figures", "run every .scn file in a directory");
    std::string out_dir = "figures";
    figs->add_option("--scenarios", scenario_dir, "scenario directory")->capture_default_str();
    figs->add_option("--out", out_dir, "output directory for the CSV files")->capture_default_str();
    figs->add_option("--seed", seed, "accepted for uniformity; sweeps are deterministic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: kind=usage message=" << e.what() << "\n";
        return 2;
    }

    try {
        if (*snr) run_snr(link, snr_device, snr_alpha, out);
        if (*opt) run_optimize(link, opt_device, alpha_max, out);
        if (*thr) run_threshold(link, rival, alpha_aris, out);
        if (*sweep) out.write(run_sweep(load_scenario(scenario)));
        if (*val) return run_validate({seed, scenario_dir});
        if (*figs) run_figures(scenario_dir, out_dir);
    } catch (const ParseError& e) {
        std::cerr << "error: kind=" << e.kind() << " line=" << e.line() << " message=" << e.detail() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: kind=" << e.kind() << " message=" << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: kind=internal message=" << e.what() << "\n";
        return 1;
    }
    return 0;
}
