// rissec - RIS-assisted mm-Wave secrecy-rate simulator
// Copyright (C) 2026 the rissec authors
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
//
// Command-line entry point. Subcommands:
//   ergodic-sweep  Monte Carlo ergodic secrecy rate over a parameter sweep
//   secrecy-map    polar secrecy-rate grid with threshold contours
//   bound-check    Monte Carlo mean vs. the closed-form lower bound per N
//   eta-check      gain-expectation oracle vs. the eta(N) formula per N
//
// Exit codes: 0 success, 2 configuration error, 3 model-assumption violation.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rissec/bounds.hpp"
#include "rissec/config.hpp"
#include "rissec/csv.hpp"
#include "rissec/errors.hpp"
#include "rissec/secrecy_map.hpp"
#include "rissec/secrecy_metrics.hpp"
#include "rissec/simulation.hpp"

namespace
{
    namespace fs = std::filesystem;
    using nlohmann::json;

    constexpr int kExitOk = 0;
    constexpr int kExitConfig = 2;
    constexpr int kExitAssumption = 3;

    struct CliOptions
    {
        std::string config_path;
        std::string out_dir;
        std::string threads = "auto";
        std::uint64_t seed = 0;
        bool seed_set = false;
        std::uint64_t trials = 0;
        bool trials_set = false;
    };

    unsigned parse_threads(const std::string &value)
    {
        if (value == "auto")
            return 0;
        try
        {
            const unsigned long n = std::stoul(value);
            if (n == 0)
                throw std::invalid_argument("zero");
            return static_cast<unsigned>(n);
        }
        catch (const std::exception &)
        {
            throw rissec::config_error("--threads", "expected 'auto' or a positive integer");
        }
    }

    std::string fmt(double v) { return rissec::format_csv_double(v); }

    struct RunContext
    {
        rissec::RunConfig cfg;
        unsigned threads = 0;
        fs::path out_dir;
        std::uint64_t hash = 0;
        std::chrono::steady_clock::time_point start;
        rissec::RunManifest manifest;

        explicit RunContext(const std::string &subcommand)
            : start(std::chrono::steady_clock::now())
        {
            manifest.subcommand = subcommand;
        }

        fs::path output(const std::string &name)
        {
            manifest.outputs.push_back(name);
            return out_dir / name;
        }

        void finish()
        {
            manifest.config_hash = hash;
            manifest.seed = cfg.monte_carlo.seed;
            manifest.trials = cfg.monte_carlo.trials;
            manifest.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                       std::chrono::steady_clock::now() - start)
                                       .count();
            rissec::write_manifest(manifest, out_dir / "manifest.json");
            std::cout << manifest.subcommand << ": wrote "
                      << manifest.outputs.size() << " output file(s) to " << out_dir.string()
                      << " in " << manifest.duration_ms << " ms (config hash 0x" << std::hex
                      << hash << std::dec << ")\n";
        }
    };

    int run_ergodic_sweep(RunContext &ctx)
    {
        const auto points = rissec::sweep(ctx.cfg.system, ctx.cfg.sweep_parameter,
                                          ctx.cfg.sweep_values, ctx.cfg.geometry,
                                          ctx.cfg.monte_carlo, ctx.threads);
        rissec::CsvTable table;
        table.columns = {"param_value", "mean_rate_bps_hz", "std_error", "lower_bound"};
        std::size_t errors = 0;
        for (const auto &p : points)
        {
            if (!p.error.empty())
            {
                ++errors;
                std::cerr << "sweep value " << fmt(p.parameter_value)
                          << " skipped: " << p.error << '\n';
                continue;
            }
            table.rows.push_back({fmt(p.parameter_value), fmt(p.estimate->mean_rate_bps_hz),
                                  fmt(p.estimate->std_error),
                                  p.lower_bound ? fmt(*p.lower_bound) : std::string{}});
        }
        rissec::emit_csv(table, ctx.output("sweep.csv"));
        ctx.manifest.summary = {
            {"parameter", rissec::sweep_parameter_name(ctx.cfg.sweep_parameter)},
            {"points", points.size()},
            {"skipped", errors},
        };
        return kExitOk;
    }

    int run_bound_check(RunContext &ctx)
    {
        rissec::CsvTable table;
        table.columns = {"n_ris_elements", "mc_mean_bps_hz", "std_error", "lower_bound",
                         "margin"};
        double min_margin = std::numeric_limits<double>::infinity();
        for (const double value : ctx.cfg.bound_check_n)
        {
            if (!(value >= 1.0) || value != std::floor(value))
                throw rissec::config_error("/bound_check/n_values",
                                           "entries must be positive integers");
            rissec::SystemConfig sys = ctx.cfg.system;
            sys.n_ris_elements = static_cast<std::size_t>(value);

            const auto est = rissec::ergodic_secrecy_rate_mc(sys, ctx.cfg.geometry,
                                                             ctx.cfg.monte_carlo, ctx.threads);
            const double l_a = rissec::path_loss_linear(ctx.cfg.geometry.dist_alice_ris_m,
                                                        sys.pathloss_alpha_db,
                                                        sys.pathloss_beta);
            const double l_b = rissec::path_loss_linear(ctx.cfg.geometry.dist_ris_bob_m,
                                                        sys.pathloss_alpha_db,
                                                        sys.pathloss_beta);
            const double l_e = rissec::path_loss_linear(ctx.cfg.geometry.dist_ris_eve_m,
                                                        sys.pathloss_alpha_db,
                                                        sys.pathloss_beta);
            const double bound = rissec::ergodic_lower_bound(sys, l_a, l_b, l_e);
            const double margin = est.mean_rate_bps_hz - bound;
            min_margin = std::min(min_margin, margin);
            table.rows.push_back({fmt(value), fmt(est.mean_rate_bps_hz), fmt(est.std_error),
                                  fmt(bound), fmt(margin)});
        }
        rissec::emit_csv(table, ctx.output("bound_check.csv"));
        ctx.manifest.summary = {
            {"points", ctx.cfg.bound_check_n.size()},
            {"min_margin_bps_hz", min_margin},
        };
        return kExitOk;
    }

    int run_eta_check(RunContext &ctx)
    {
        rissec::CsvTable table;
        table.columns = {"n_ris_elements", "mc_estimate", "eta_formula", "relative_error"};
        double max_rel = 0.0;
        for (const double value : ctx.cfg.eta_check_n)
        {
            if (!(value >= 1.0) || value != std::floor(value))
                throw rissec::config_error("/eta_check/n_values",
                                           "entries must be positive integers");
            const std::size_t n = static_cast<std::size_t>(value);
            const auto est = rissec::expected_gain_sq_mc(n, ctx.cfg.monte_carlo, ctx.threads);
            const double formula = rissec::eta(n);
            const double rel = std::abs(est.mean_rate_bps_hz - formula) / formula;
            max_rel = std::max(max_rel, rel);
            table.rows.push_back({fmt(value), fmt(est.mean_rate_bps_hz), fmt(formula),
                                  fmt(rel)});
        }
        rissec::emit_csv(table, ctx.output("eta_check.csv"));
        ctx.manifest.summary = {
            {"points", ctx.cfg.eta_check_n.size()},
            {"max_relative_error", max_rel},
        };
        return kExitOk;
    }

    int run_secrecy_map(RunContext &ctx)
    {
        const auto mode = ctx.cfg.map_monte_carlo ? rissec::MapAveraging::MonteCarlo
                                                  : rissec::MapAveraging::ClosedForm;
        const auto grid = rissec::compute_map(ctx.cfg.system, ctx.cfg.geometry, ctx.cfg.map,
                                              ctx.cfg.monte_carlo, mode, ctx.threads,
                                              ctx.hash);

        rissec::CsvTable cells;
        cells.columns = {"psi_rad", "dist_m", "rate_bps_hz"};
        cells.rows.reserve(grid.psi_rad.size() * grid.dist_m.size());
        for (std::size_t i = 0; i < grid.psi_rad.size(); ++i)
            for (std::size_t j = 0; j < grid.dist_m.size(); ++j)
                cells.rows.push_back({fmt(grid.psi_rad[i]), fmt(grid.dist_m[j]),
                                      fmt(grid.rate_at(i, j))});
        rissec::emit_csv(cells, ctx.output("grid.csv"));

        json contour_summary = json::array();
        for (const double threshold : ctx.cfg.map.thresholds_bps_hz)
        {
            const auto contour = rissec::extract_contour(grid, threshold);
            rissec::CsvTable table;
            table.columns = {"psi_rad", "dist_m"};
            for (const auto &p : contour.points)
                table.rows.push_back({fmt(p.psi_rad), fmt(p.dist_m)});
            rissec::emit_csv(table, ctx.output("contour_r" + fmt(threshold) + ".csv"));
            contour_summary.push_back({{"threshold_bps_hz", threshold},
                                       {"points", contour.points.size()},
                                       {"full_area", contour.full_area},
                                       {"zero_area", contour.zero_area}});
        }
        ctx.manifest.summary = {
            {"cells", grid.rate_bps_hz.size()},
            {"averaging", ctx.cfg.map_monte_carlo ? "monte_carlo" : "closed_form"},
            {"contours", contour_summary},
        };
        return kExitOk;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"RIS-assisted mm-Wave secrecy-rate simulator"};
    app.set_version_flag("--version", std::string("rissec ") + rissec::tool_version);
    app.require_subcommand(1);
    app.fallthrough();

    CliOptions opts;
    app.add_option("--config", opts.config_path, "JSON run configuration file");
    app.add_option("--out", opts.out_dir, "output directory (overrides config)");
    app.add_option("--threads", opts.threads, "worker threads: 'auto' or a count");
    auto *seed_opt = app.add_option("--seed", opts.seed, "RNG seed (overrides config)");
    auto *trials_opt = app.add_option("--trials", opts.trials,
                                      "Monte Carlo trials (overrides config)");

    auto *sweep_cmd = app.add_subcommand("ergodic-sweep",
                                         "Monte Carlo secrecy rate over a parameter sweep");
    auto *map_cmd = app.add_subcommand("secrecy-map", "polar secrecy-rate map and contours");
    auto *bound_cmd = app.add_subcommand("bound-check",
                                         "Monte Carlo mean vs. the ergodic lower bound");
    auto *eta_cmd = app.add_subcommand("eta-check",
                                       "gain-expectation estimate vs. the eta formula");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kExitConfig;
    }
    opts.seed_set = seed_opt->count() > 0;
    opts.trials_set = trials_opt->count() > 0;

    const std::string subcommand = sweep_cmd->parsed()   ? "ergodic-sweep"
                                   : map_cmd->parsed()   ? "secrecy-map"
                                   : bound_cmd->parsed() ? "bound-check"
                                                         : "eta-check";
    RunContext ctx(subcommand);
    try
    {
        ctx.cfg = opts.config_path.empty() ? rissec::RunConfig{}
                                           : rissec::load_run_config(opts.config_path);
        if (opts.seed_set)
            ctx.cfg.monte_carlo.seed = opts.seed;
        if (opts.trials_set)
        {
            ctx.cfg.monte_carlo.trials = opts.trials;
            ctx.cfg.monte_carlo.validate();
        }
        if (!opts.out_dir.empty())
            ctx.cfg.output_dir = opts.out_dir;
        ctx.threads = parse_threads(opts.threads);
    }
    catch (const rissec::config_error &e)
    {
        std::cerr << "config error [" << e.field() << "]: " << e.what() << '\n';
        return kExitConfig;
    }

    try
    {
        if (ctx.cfg.system.element_spacing_ratio != 0.5)
            std::cerr << "warning: element_spacing_ratio overridden to "
                      << ctx.cfg.system.element_spacing_ratio
                      << "; the closed-form bounds assume half-wavelength spacing\n";

        ctx.out_dir = ctx.cfg.output_dir;
        fs::create_directories(ctx.out_dir);
        ctx.hash = rissec::config_hash(ctx.cfg);

        int rc = kExitOk;
        if (sweep_cmd->parsed())
            rc = run_ergodic_sweep(ctx);
        else if (map_cmd->parsed())
            rc = run_secrecy_map(ctx);
        else if (bound_cmd->parsed())
            rc = run_bound_check(ctx);
        else if (eta_cmd->parsed())
            rc = run_eta_check(ctx);
        ctx.finish();
        return rc;
    }
    catch (const rissec::assumption_error &e)
    {
        std::cerr << "model assumption violated: " << e.what() << '\n';
        return kExitAssumption;
    }
    catch (const rissec::config_error &e)
    {
        std::cerr << "config error [" << e.field() << "]: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
