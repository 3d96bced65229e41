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

#include "rissec/reflection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rissec
{

    namespace
    {
        constexpr double kPi = std::numbers::pi;
        constexpr double kTwoPi = 2.0 * std::numbers::pi;
        // Far below any physical cascade magnitude at the modelled scales;
        // separates true nulls from underflow.
        constexpr double kDegenerateCascade = 1e-30;

        double wrap_two_pi(double phase)
        {
            double p = std::fmod(phase, kTwoPi);
            if (p < 0.0)
                p += kTwoPi;
            return p;
        }

        // h^H Theta g over matching lengths.
        std::complex<double> cascade_inner(const std::vector<std::complex<double>> &h,
                                           const PhaseShiftProfile &profile,
                                           const std::vector<std::complex<double>> &g)
        {
            if (h.size() != profile.size() || g.size() != profile.size())
                throw std::invalid_argument("cascade length mismatch between channel vector "
                                            "and phase-shift profile");
            std::complex<double> sum{0.0, 0.0};
            for (std::size_t k = 0; k < profile.size(); ++k)
                sum += std::conj(h[k]) * std::polar(1.0, profile.phases_rad[k]) * g[k];
            return sum;
        }
    } // namespace

    PhaseShiftProfile optimal_phase_shifts(double aoa_ris_rad, double aod_bob_rad,
                                           std::size_t n, double spacing_ratio)
    {
        if (n < 1)
            throw std::invalid_argument("optimal_phase_shifts: n must be >= 1");
        if (!(aoa_ris_rad > 0.0 && aoa_ris_rad < kPi))
            throw std::invalid_argument("optimal_phase_shifts: aoa_ris_rad outside (0, pi)");
        if (!(aod_bob_rad > 0.0 && aod_bob_rad < kPi))
            throw std::invalid_argument("optimal_phase_shifts: aod_bob_rad outside (0, pi)");
        if (!(spacing_ratio > 0.0))
            throw std::invalid_argument("optimal_phase_shifts: spacing_ratio must be positive");

        const double theta = kTwoPi * spacing_ratio *
                             (std::cos(aoa_ris_rad) - std::cos(aod_bob_rad));
        PhaseShiftProfile profile;
        profile.phases_rad.resize(n);
        for (std::size_t k = 0; k < n; ++k)
            profile.phases_rad[k] = wrap_two_pi(static_cast<double>(k) * theta);
        return profile;
    }

    Precoder mrt_precoder(const ChannelSet &channels, const PhaseShiftProfile &profile)
    {
        // h_B^H Theta G = c g_A^H with c = l_A^{1/2} (h_B^H Theta g_R),
        // hence w = conj(c) g_A / (|c| sqrt(M)).
        const std::complex<double> c = std::sqrt(channels.pathloss_alice) *
                                       cascade_inner(channels.h_bob, profile,
                                                     channels.g_ris.entries);
        const std::size_t m = channels.g_alice_ris.size();
        const double norm = std::abs(c) * std::sqrt(static_cast<double>(m));
        if (norm < kDegenerateCascade)
            throw std::domain_error("mrt_precoder: degenerate cascade, Bob lies in a "
                                    "perfect reflection null");

        const std::complex<double> phase = std::conj(c) / std::abs(c);
        const double scale = 1.0 / std::sqrt(static_cast<double>(m));
        Precoder w;
        w.weights.resize(m);
        for (std::size_t i = 0; i < m; ++i)
            w.weights[i] = phase * scale * channels.g_alice_ris.entries[i];
        return w;
    }

    double beamforming_gain(const SteeringVector &g_target, const PhaseShiftProfile &profile,
                            const SteeringVector &g_ris)
    {
        return std::abs(cascade_inner(g_target.entries, profile, g_ris.entries));
    }

} // namespace rissec
