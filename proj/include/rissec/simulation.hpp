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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rissec/channel_model.hpp"

namespace rissec
{

    // Counter-based splittable generator: every trial derives its own stream
    // from (seed, trial_index) alone, so serial and parallel execution produce
    // identical draws regardless of worker count or scheduling. splitmix64
    // underneath; the uint64 -> double mapping avoids platform-dependent
    // library distributions.
    class TrialRng
    {
    public:
        TrialRng(std::uint64_t seed, std::uint64_t trial_index);

        std::uint64_t next_u64();

        // Uniform draw strictly inside (0, 1).
        double next_open_unit();

        // Uniform angle strictly inside (0, pi).
        double next_open_angle();

    private:
        std::uint64_t state_;
    };

    // Which angles of the geometry template are redrawn U(0, pi) each trial.
    // psi_shared draws one value and assigns it to both psi_B and psi_E
    // (the clone-eavesdropper configuration); it takes precedence over the
    // individual psi flags.
    struct RandomizeSet
    {
        bool psi_bob = true;
        bool psi_eve = true;
        bool aod_alice = false;
        bool aoa_ris = false;
        bool psi_shared = false;

        bool any() const noexcept
        {
            return psi_bob || psi_eve || aod_alice || aoa_ris || psi_shared;
        }
    };

    struct MonteCarloSpec
    {
        std::uint64_t trials = 100000;
        std::uint64_t seed = 1;
        RandomizeSet randomize{};

        void validate() const;
    };

    // Monte Carlo mean with its standard error (sample std / sqrt(trials)).
    // For ergodic_secrecy_rate_mc the mean is a rate in bps/Hz; for
    // expected_gain_sq_mc the same field carries the dimensionless gain
    // expectation.
    struct ErgodicEstimate
    {
        double mean_rate_bps_hz = 0.0;
        double std_error = 0.0;
        std::uint64_t trials = 0;
    };

    namespace detail
    {
        // Applies the randomize set to a geometry template using draws from rng.
        // Draw order is fixed (shared psi, psi_B, psi_E, phi, varphi) so a given
        // (seed, trial) pair always maps to the same realization.
        LinkGeometry draw_trial_geometry(const LinkGeometry &base, const RandomizeSet &set,
                                         TrialRng &rng);
    } // namespace detail

    // Mean closed-form secrecy rate over mc.trials independent realizations of
    // the randomized angles. Deterministic for a fixed (spec, seed) and
    // independent of the thread count; threads = 0 uses all hardware threads.
    ErgodicEstimate ergodic_secrecy_rate_mc(const SystemConfig &cfg,
                                            const LinkGeometry &geom_template,
                                            const MonteCarloSpec &mc,
                                            unsigned threads = 0);

    // Brute-force estimate of E{|g_E^H g_B|^2} with psi_B, psi_E ~ U(0, pi)
    // i.i.d. and half-wavelength spacing; the simulation-side oracle for
    // eta(n). The randomize set of mc is ignored (the distribution is part of
    // the quantity's definition).
    ErgodicEstimate expected_gain_sq_mc(std::size_t n, const MonteCarloSpec &mc,
                                        unsigned threads = 0);

    enum class SweepParameter
    {
        TxAntennas, // M
        RisElements, // N
        DistBob,    // d_B in meters
        TxPower     // P in watts
    };

    const char *sweep_parameter_name(SweepParameter p);

    struct SweepPoint
    {
        double parameter_value = 0.0;
        std::optional<ErgodicEstimate> estimate;
        // Jensen bound, attached when the Bob link is no weaker than Eve's.
        std::optional<double> lower_bound;
        // Nonempty when this value failed validation; the sweep continues.
        std::string error;
    };

    // One Monte Carlo estimate per value, all sharing the same seed so the
    // underlying angle draws are common across points.
    std::vector<SweepPoint> sweep(const SystemConfig &cfg_base, SweepParameter parameter,
                                  const std::vector<double> &values,
                                  const LinkGeometry &geom, const MonteCarloSpec &mc,
                                  unsigned threads = 0);

} // namespace rissec
