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

#include "rissec/secrecy_map.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "rissec/secrecy_metrics.hpp"

namespace rissec
{

    namespace
    {
        constexpr double kHalfPi = 0.5 * std::numbers::pi;
        // Bisection resolution and the near-origin probe distance.
        constexpr double kDistTol = 0.01;

        void run_columns(std::size_t n_columns, unsigned threads,
                         const std::function<void(std::size_t)> &fn)
        {
            unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
            if (workers == 0)
                workers = 1;
            if (workers > n_columns)
                workers = static_cast<unsigned>(n_columns);

            if (workers <= 1)
            {
                for (std::size_t c = 0; c < n_columns; ++c)
                    fn(c);
                return;
            }

            std::atomic<std::size_t> next{0};
            std::exception_ptr first_error;
            std::mutex error_mutex;
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w)
            {
                pool.emplace_back([&]
                {
                    try
                    {
                        for (;;)
                        {
                            const std::size_t c = next.fetch_add(1);
                            if (c >= n_columns)
                                return;
                            fn(c);
                        }
                    }
                    catch (...)
                    {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error)
                            first_error = std::current_exception();
                    }
                });
            }
            for (auto &t : pool)
                t.join();
            if (first_error)
                std::rethrow_exception(first_error);
        }
    } // namespace

    void MapSpec::validate() const
    {
        if (psi_steps < 2)
            throw std::invalid_argument("map psi_steps must be >= 2");
        if (dist_steps < 2)
            throw std::invalid_argument("map dist_steps must be >= 2");
        if (!(psi_min_rad >= 0.0) || !(psi_max_rad <= kHalfPi + 1e-12) ||
            !(psi_min_rad < psi_max_rad))
            throw std::invalid_argument("map psi range must be a nondegenerate interval "
                                        "within [0, pi/2]");
        if (!(dist_max_m > 0.0) || !std::isfinite(dist_max_m))
            throw std::invalid_argument("map dist_max_m must be positive");
        double prev = -1.0;
        for (const double t : thresholds_bps_hz)
        {
            if (!(t >= 0.0) || !std::isfinite(t))
                throw std::invalid_argument("map thresholds must be nonnegative");
            if (t <= prev)
                throw std::invalid_argument("map thresholds must be strictly ascending");
            prev = t;
        }
    }

    SecrecyGrid compute_map(const SystemConfig &cfg, const LinkGeometry &geom,
                            const MapSpec &spec, const MonteCarloSpec &mc,
                            MapAveraging mode, unsigned threads, std::uint64_t config_hash)
    {
        cfg.validate();
        geom.validate();
        spec.validate();
        if (!(geom.aod_eve_rad > 0.0 && geom.aod_eve_rad < kHalfPi))
            throw std::invalid_argument("compute_map: Eve direction must lie in (0, pi/2)");
        if (mode == MapAveraging::MonteCarlo)
        {
            mc.validate();
            const RandomizeSet &set = mc.randomize;
            if (set.psi_bob || set.psi_eve || set.psi_shared)
                throw std::invalid_argument("compute_map: Monte Carlo averaging may only "
                                            "randomize the transmit-side angles; cell and "
                                            "Eve positions are fixed");
        }

        SecrecyGrid grid;
        grid.aod_eve_rad = geom.aod_eve_rad;
        grid.dist_eve_m = geom.dist_ris_eve_m;
        grid.provenance.config_hash = config_hash;
        grid.provenance.mode = mode;
        if (mode == MapAveraging::MonteCarlo)
        {
            grid.provenance.seed = mc.seed;
            grid.provenance.trials = mc.trials;
        }

        const double dpsi = (spec.psi_max_rad - spec.psi_min_rad) /
                            static_cast<double>(spec.psi_steps);
        const double ddist = spec.dist_max_m / static_cast<double>(spec.dist_steps);
        grid.psi_rad.resize(spec.psi_steps);
        for (std::size_t i = 0; i < spec.psi_steps; ++i)
            grid.psi_rad[i] = spec.psi_min_rad + (static_cast<double>(i) + 0.5) * dpsi;
        grid.dist_m.resize(spec.dist_steps);
        for (std::size_t j = 0; j < spec.dist_steps; ++j)
            grid.dist_m[j] = (static_cast<double>(j) + 0.5) * ddist;

        grid.rate_bps_hz.assign(spec.psi_steps * spec.dist_steps, 0.0);
        run_columns(spec.psi_steps, threads, [&](std::size_t i)
        {
            LinkGeometry cell = geom;
            cell.aod_bob_rad = grid.psi_rad[i];
            for (std::size_t j = 0; j < spec.dist_steps; ++j)
            {
                cell.dist_ris_bob_m = grid.dist_m[j];
                double rate;
                if (mode == MapAveraging::ClosedForm)
                    rate = secrecy_rate_closed_form(cfg, cell);
                else
                    rate = ergodic_secrecy_rate_mc(cfg, cell, mc, 1).mean_rate_bps_hz;
                grid.rate_bps_hz[i * spec.dist_steps + j] = rate;
            }
        });
        return grid;
    }

    std::optional<double> max_secure_distance(const SystemConfig &cfg,
                                              const LinkGeometry &geom, double psi_b_rad,
                                              double threshold_bps_hz, double dist_max_m)
    {
        if (!(threshold_bps_hz >= 0.0))
            throw std::invalid_argument("max_secure_distance: threshold must be >= 0");
        if (!(dist_max_m > kDistTol))
            throw std::invalid_argument("max_secure_distance: dist_max_m too small");

        LinkGeometry g = geom;
        g.aod_bob_rad = psi_b_rad;
        auto rate_at = [&](double d)
        {
            g.dist_ris_bob_m = d;
            return secrecy_rate_closed_form(cfg, g);
        };

        // The rate is strictly decreasing in d_B (the Eve term does not depend
        // on it), so a single bisection brackets the crossing.
        if (rate_at(dist_max_m) >= threshold_bps_hz)
            return dist_max_m;
        if (rate_at(kDistTol) < threshold_bps_hz)
            return std::nullopt;

        double lo = kDistTol;  // rate >= threshold
        double hi = dist_max_m; // rate < threshold
        while (hi - lo > kDistTol)
        {
            const double mid = 0.5 * (lo + hi);
            if (rate_at(mid) >= threshold_bps_hz)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

    ContourResult extract_contour(const SecrecyGrid &grid, double threshold_bps_hz)
    {
        ContourResult result;
        const std::size_t n_psi = grid.psi_rad.size();
        const std::size_t n_dist = grid.dist_m.size();

        bool all_above = true;
        bool all_below = true;
        for (const double r : grid.rate_bps_hz)
        {
            if (r >= threshold_bps_hz)
                all_below = false;
            else
                all_above = false;
        }
        result.full_area = all_above;
        result.zero_area = all_below;
        if (all_above || all_below)
            return result;

        for (std::size_t i = 0; i < n_psi; ++i)
        {
            for (std::size_t j = 0; j + 1 < n_dist; ++j)
            {
                const double here = grid.rate_at(i, j);
                const double next = grid.rate_at(i, j + 1);
                if (here >= threshold_bps_hz && next < threshold_bps_hz)
                {
                    const double frac = (here - threshold_bps_hz) / (here - next);
                    const double d = grid.dist_m[j] +
                                     frac * (grid.dist_m[j + 1] - grid.dist_m[j]);
                    result.points.push_back({grid.psi_rad[i], d});
                    break;
                }
            }
        }
        return result;
    }

} // namespace rissec
