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

#include "rissec/secrecy_metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace rissec
{

    namespace
    {
        constexpr double kUnitLossTol = 1e-12;

        void check_snr(double snr, const char *name)
        {
            if (!(snr >= 0.0) || !std::isfinite(snr))
                throw std::invalid_argument(std::string(name) +
                                            " must be finite and nonnegative");
        }
    } // namespace

    std::pair<double, double> received_snrs(const SystemConfig &cfg, const ChannelSet &channels,
                                            const PhaseShiftProfile &profile)
    {
        cfg.validate();
        const double sigma2 = cfg.noise_power();
        if (!(sigma2 > 0.0))
            throw std::invalid_argument("received_snrs: noise power must be positive");
        if (channels.h_bob.size() != profile.size() ||
            channels.h_eve.size() != profile.size() ||
            channels.g_ris.size() != profile.size())
            throw std::invalid_argument("received_snrs: channel/profile length mismatch");

        // The path losses l_B, l_E are already folded into h_bob, h_eve.
        std::complex<double> cascade_bob{0.0, 0.0};
        std::complex<double> cascade_eve{0.0, 0.0};
        for (std::size_t k = 0; k < profile.size(); ++k)
        {
            const std::complex<double> rot = std::polar(1.0, profile.phases_rad[k]);
            cascade_bob += std::conj(channels.h_bob[k]) * rot * channels.g_ris.entries[k];
            cascade_eve += std::conj(channels.h_eve[k]) * rot * channels.g_ris.entries[k];
        }

        const double scale = channels.pathloss_alice *
                             static_cast<double>(cfg.m_tx_antennas) *
                             cfg.tx_power_watts / sigma2;
        return {scale * std::norm(cascade_bob), scale * std::norm(cascade_eve)};
    }

    double secrecy_rate(double snr_bob, double snr_eve)
    {
        check_snr(snr_bob, "snr_bob");
        check_snr(snr_eve, "snr_eve");
        const double rate = std::log2((1.0 + snr_bob) / (1.0 + snr_eve));
        return rate > 0.0 ? rate : 0.0;
    }

    SecrecySample make_secrecy_sample(double snr_bob, double snr_eve)
    {
        return {snr_bob, snr_eve, secrecy_rate(snr_bob, snr_eve)};
    }

    double secrecy_rate_closed_form(const SystemConfig &cfg, const LinkGeometry &geom)
    {
        cfg.validate();
        geom.validate();

        const double l_a = path_loss_linear(geom.dist_alice_ris_m, cfg.pathloss_alpha_db,
                                            cfg.pathloss_beta);
        const double l_b = path_loss_linear(geom.dist_ris_bob_m, cfg.pathloss_alpha_db,
                                            cfg.pathloss_beta);
        const double l_e = path_loss_linear(geom.dist_ris_eve_m, cfg.pathloss_alpha_db,
                                            cfg.pathloss_beta);
        if (l_a > 1.0 + kUnitLossTol || l_b > 1.0 + kUnitLossTol || l_e > 1.0 + kUnitLossTol)
            throw std::domain_error("secrecy_rate_closed_form: path loss exceeds unity");

        const double n = static_cast<double>(cfg.n_ris_elements);
        const double m = static_cast<double>(cfg.m_tx_antennas);
        const double base = m * cfg.tx_power_watts / cfg.noise_power();
        const double gain_eve = steering_correlation_sq(cfg.n_ris_elements,
                                                        std::cos(geom.aod_eve_rad),
                                                        std::cos(geom.aod_bob_rad),
                                                        cfg.element_spacing_ratio);
        const double snr_bob = l_a * l_b * n * n * base;
        const double snr_eve = l_a * l_e * gain_eve * base;
        return secrecy_rate(snr_bob, snr_eve);
    }

} // namespace rissec
