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

#include "rissec/simulation.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "rissec/bounds.hpp"
#include "rissec/secrecy_metrics.hpp"

namespace rissec
{

    namespace
    {
        constexpr double kPi = std::numbers::pi;
        constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
        // Trials per work unit. Partial sums are accumulated per chunk in trial
        // order and combined in chunk order, which keeps the reduction
        // bit-identical for any worker count.
        constexpr std::uint64_t kChunkTrials = 4096;

        std::uint64_t mix64(std::uint64_t z)
        {
            z ^= z >> 30;
            z *= 0xBF58476D1CE4E5B9ull;
            z ^= z >> 27;
            z *= 0x94D049BB133111EBull;
            z ^= z >> 31;
            return z;
        }

        struct ChunkPartial
        {
            double sum = 0.0;
            double sum_sq = 0.0;
        };

        unsigned resolve_threads(unsigned requested)
        {
            if (requested != 0)
                return requested;
            const unsigned hw = std::thread::hardware_concurrency();
            return hw == 0 ? 1 : hw;
        }

        // Runs fn(first_trial, last_trial, chunk_index) over all chunks, on up
        // to `threads` workers. Rethrows the first worker exception.
        void run_chunked(std::uint64_t items, unsigned threads,
                         const std::function<void(std::uint64_t, std::uint64_t,
                                                  std::size_t)> &fn)
        {
            const std::size_t n_chunks =
                static_cast<std::size_t>((items + kChunkTrials - 1) / kChunkTrials);
            unsigned workers = resolve_threads(threads);
            if (workers > n_chunks)
                workers = static_cast<unsigned>(n_chunks);

            auto run_range = [&](std::size_t chunk)
            {
                const std::uint64_t lo = static_cast<std::uint64_t>(chunk) * kChunkTrials;
                const std::uint64_t hi = std::min(items, lo + kChunkTrials);
                fn(lo, hi, chunk);
            };

            if (workers <= 1)
            {
                for (std::size_t c = 0; c < n_chunks; ++c)
                    run_range(c);
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
                            if (c >= n_chunks)
                                return;
                            run_range(c);
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

        // Shared Monte Carlo skeleton: per-trial value from its own TrialRng,
        // deterministic chunked reduction.
        ErgodicEstimate monte_carlo_mean(std::uint64_t trials, std::uint64_t seed,
                                         unsigned threads,
                                         const std::function<double(TrialRng &)> &value)
        {
            const std::size_t n_chunks =
                static_cast<std::size_t>((trials + kChunkTrials - 1) / kChunkTrials);
            std::vector<ChunkPartial> partials(n_chunks);

            run_chunked(trials, threads,
                        [&](std::uint64_t lo, std::uint64_t hi, std::size_t chunk)
                        {
                            ChunkPartial p;
                            for (std::uint64_t t = lo; t < hi; ++t)
                            {
                                TrialRng rng(seed, t);
                                const double v = value(rng);
                                p.sum += v;
                                p.sum_sq += v * v;
                            }
                            partials[chunk] = p;
                        });

            double sum = 0.0;
            double sum_sq = 0.0;
            for (const ChunkPartial &p : partials)
            {
                sum += p.sum;
                sum_sq += p.sum_sq;
            }

            ErgodicEstimate est;
            est.trials = trials;
            const double n = static_cast<double>(trials);
            est.mean_rate_bps_hz = sum / n;
            if (trials > 1)
            {
                double var = (sum_sq - sum * sum / n) / (n - 1.0);
                if (var < 0.0)
                    var = 0.0; // rounding guard for zero-variance streams
                est.std_error = std::sqrt(var / n);
            }
            return est;
        }
    } // namespace

    TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial_index)
        : state_(mix64(seed ^ mix64(trial_index + kGolden)))
    {
    }

    std::uint64_t TrialRng::next_u64()
    {
        state_ += kGolden;
        return mix64(state_);
    }

    double TrialRng::next_open_unit()
    {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

    double TrialRng::next_open_angle()
    {
        return kPi * next_open_unit();
    }

    void MonteCarloSpec::validate() const
    {
        if (trials < 1)
            throw std::invalid_argument("monte_carlo trials must be >= 1");
        if (!randomize.any())
            throw std::invalid_argument("monte_carlo randomize set must not be empty");
    }

    namespace detail
    {
        LinkGeometry draw_trial_geometry(const LinkGeometry &base, const RandomizeSet &set,
                                         TrialRng &rng)
        {
            LinkGeometry g = base;
            if (set.psi_shared)
            {
                const double shared = rng.next_open_angle();
                g.aod_bob_rad = shared;
                g.aod_eve_rad = shared;
            }
            else
            {
                if (set.psi_bob)
                    g.aod_bob_rad = rng.next_open_angle();
                if (set.psi_eve)
                    g.aod_eve_rad = rng.next_open_angle();
            }
            if (set.aod_alice)
                g.aod_alice_rad = rng.next_open_angle();
            if (set.aoa_ris)
                g.aoa_ris_rad = rng.next_open_angle();
            return g;
        }
    } // namespace detail

    ErgodicEstimate ergodic_secrecy_rate_mc(const SystemConfig &cfg,
                                            const LinkGeometry &geom_template,
                                            const MonteCarloSpec &mc, unsigned threads)
    {
        cfg.validate();
        geom_template.validate();
        mc.validate();

        return monte_carlo_mean(mc.trials, mc.seed, threads,
                                [&](TrialRng &rng)
                                {
                                    const LinkGeometry g = detail::draw_trial_geometry(
                                        geom_template, mc.randomize, rng);
                                    return secrecy_rate_closed_form(cfg, g);
                                });
    }

    ErgodicEstimate expected_gain_sq_mc(std::size_t n, const MonteCarloSpec &mc,
                                        unsigned threads)
    {
        if (n < 1)
            throw std::invalid_argument("expected_gain_sq_mc: n must be >= 1");
        if (mc.trials < 1)
            throw std::invalid_argument("monte_carlo trials must be >= 1");

        return monte_carlo_mean(mc.trials, mc.seed, threads,
                                [n](TrialRng &rng)
                                {
                                    const double psi_b = rng.next_open_angle();
                                    const double psi_e = rng.next_open_angle();
                                    return steering_correlation_sq(n, std::cos(psi_e),
                                                                   std::cos(psi_b), 0.5);
                                });
    }

    const char *sweep_parameter_name(SweepParameter p)
    {
        switch (p)
        {
        case SweepParameter::TxAntennas:
            return "m_tx_antennas";
        case SweepParameter::RisElements:
            return "n_ris_elements";
        case SweepParameter::DistBob:
            return "dist_ris_bob_m";
        case SweepParameter::TxPower:
            return "tx_power_watts";
        }
        return "unknown";
    }

    namespace
    {
        std::size_t require_positive_integer(double value, const char *name)
        {
            if (!(value >= 1.0) || value != std::floor(value) || value > 9.007199254740992e15)
                throw std::invalid_argument(std::string(name) +
                                            " sweep value must be a positive integer");
            return static_cast<std::size_t>(value);
        }
    } // namespace

    std::vector<SweepPoint> sweep(const SystemConfig &cfg_base, SweepParameter parameter,
                                  const std::vector<double> &values,
                                  const LinkGeometry &geom, const MonteCarloSpec &mc,
                                  unsigned threads)
    {
        if (values.empty())
            throw std::invalid_argument("sweep: values must be nonempty");

        std::vector<SweepPoint> points;
        points.reserve(values.size());
        for (const double value : values)
        {
            SweepPoint point;
            point.parameter_value = value;
            try
            {
                SystemConfig cfg = cfg_base;
                LinkGeometry g = geom;
                switch (parameter)
                {
                case SweepParameter::TxAntennas:
                    cfg.m_tx_antennas = require_positive_integer(value, "m_tx_antennas");
                    break;
                case SweepParameter::RisElements:
                    cfg.n_ris_elements = require_positive_integer(value, "n_ris_elements");
                    break;
                case SweepParameter::DistBob:
                    g.dist_ris_bob_m = value;
                    break;
                case SweepParameter::TxPower:
                    cfg.tx_power_watts = value;
                    break;
                }

                point.estimate = ergodic_secrecy_rate_mc(cfg, g, mc, threads);

                const double l_b = path_loss_linear(g.dist_ris_bob_m, cfg.pathloss_alpha_db,
                                                    cfg.pathloss_beta);
                const double l_e = path_loss_linear(g.dist_ris_eve_m, cfg.pathloss_alpha_db,
                                                    cfg.pathloss_beta);
                if (l_b >= l_e)
                {
                    const double l_a = path_loss_linear(g.dist_alice_ris_m,
                                                        cfg.pathloss_alpha_db,
                                                        cfg.pathloss_beta);
                    point.lower_bound = ergodic_lower_bound(cfg, l_a, l_b, l_e);
                }
            }
            catch (const std::exception &e)
            {
                point.estimate.reset();
                point.lower_bound.reset();
                point.error = e.what();
            }
            points.push_back(std::move(point));
        }
        return points;
    }

} // namespace rissec
