// Copyright 2026 The numphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "numphase/atomic_qubit.hpp"
#include "numphase/errors.hpp"
#include "numphase/runner/config.hpp"
#include "numphase/runner/emit.hpp"
#include "numphase/runner/sweep.hpp"
#include "numphase/runner/verify.hpp"

#ifndef NUMPHASE_FIGURES_DIR
#define NUMPHASE_FIGURES_DIR "figures"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

namespace rn = numphase::runner;

int cmd_run(const std::string& config, const std::string& format, const std::string& out, const std::string& phase_out) {
    const rn::ScenarioConfig cfg = rn::load_config(config);
    const std::vector<rn::SweepRow> rows = rn::run_sweep(cfg);
    auto emit = [&](std::ostream& os) {
        if (format == "json") {
            rn::write_json(os, rows);
        } else {
            rn::write_csv(os, rows);
        }
    };
    if (out == "-") {
        emit(std::cout);
    } else {
        rn::write_file(out, emit);
    }
    if (!phase_out.empty()) rn::write_file(phase_out, [&](std::ostream& os) { rn::write_phase_csv(os, rows); });
    return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& figures_dir, const std::string& out_dir, bool convergence,
               std::size_t draws, std::uint64_t seed) {
    rn::VerifyReport rep;
    if (suite == "constants") {
        rep = rn::constants_checks();
    } else if (suite == "invariants") {
        rep = rn::invariant_checks(draws, seed);
    } else {
        rep = rn::figure_checks(figures_dir, out_dir, convergence);
    }
    rep.print(std::cout);
    std::cout << (rep.passed() ? "suite " + suite + ": all checks passed\n" : "suite " + suite + ": FAILED\n");
    return rep.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_mu_search(unsigned dim, double tol) {
    if (dim != 2) {
        numphase::fail(numphase::ErrorCode::ConfigError, "mu-search: only --dim 2 is supported");
    }
    const numphase::MuSearchResult r = numphase::mu_search_qubit(tol);
    std::printf("mu = %.12g\nargmin_alpha_p = %.12g\nevaluations = %zu\n", r.mu, r.argmin, r.evaluations);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"number-phase entropy excess calculator"};
    app.require_subcommand(1);

    std::string config, format = "csv", out = "-", phase_out;
    CLI::App* run = app.add_subcommand("run", "evaluate a scenario sweep");
    run->add_option("--config", config, "scenario JSON file")->required()->check(CLI::ExistingFile);
    run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    run->add_option("--out", out, "output path, - for stdout");
    run->add_option("--phase-out", phase_out, "also write P(theta) samples as CSV");

    std::string suite, figures_dir = NUMPHASE_FIGURES_DIR, out_dir;
    bool convergence = false;
    std::size_t draws = rn::kDefaultDraws;
    std::uint64_t seed = rn::kDefaultSeed;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "which suite to run")->required()->check(CLI::IsMember({"invariants", "constants", "figures"}));
    verify->add_option("--figures-dir", figures_dir, "directory holding fig*.json");
    verify->add_option("--out-dir", out_dir, "write the figure tables here");
    verify->add_flag("--convergence", convergence, "also re-run the figures at doubled cutoff and grid");
    verify->add_option("--draws", draws, "random draws per scenario")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "seed for the invariant draws");

    unsigned dim = 2;
    double tol = 1e-8;
    CLI::App* mu = app.add_subcommand("mu-search", "recompute the weight mu");
    mu->add_option("--dim", dim, "Hilbert-space dimension (only 2 is supported)")->required();
    mu->add_option("--tol", tol, "tolerance on the minimizing parameter")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*run) return cmd_run(config, format, out, phase_out);
        if (*verify) return cmd_verify(suite, figures_dir, out_dir, convergence, draws, seed);
        return cmd_mu_search(dim, tol);
    } catch (const numphase::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
