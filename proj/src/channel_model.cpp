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

#include "rissec/channel_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rissec
{

    namespace
    {
        constexpr double kPi = std::numbers::pi;
        constexpr double kTwoPi = 2.0 * std::numbers::pi;
        // Path losses may exceed 1 only by floating-point rounding.
        constexpr double kUnitLossTol = 1e-12;

        void check_angle_open(double angle_rad, const char *name)
        {
            if (!(angle_rad > 0.0) || !(angle_rad < kPi))
                throw std::invalid_argument(std::string(name) +
                                            " must lie strictly inside (0, pi)");
        }

        void check_positive(double value, const char *name)
        {
            if (!(value > 0.0) || !std::isfinite(value))
                throw std::invalid_argument(std::string(name) + " must be positive and finite");
        }

        double checked_path_loss(double distance_m, const SystemConfig &cfg, const char *name)
        {
            const double l = path_loss_linear(distance_m, cfg.pathloss_alpha_db, cfg.pathloss_beta);
            if (l > 1.0 + kUnitLossTol)
                throw std::domain_error(std::string(name) +
                                        ": path loss exceeds unity; distance below the model's "
                                        "unit-gain point");
            return l;
        }
    } // namespace

    void SystemConfig::validate() const
    {
        if (m_tx_antennas < 1)
            throw std::invalid_argument("m_tx_antennas must be >= 1");
        if (n_ris_elements < 1)
            throw std::invalid_argument("n_ris_elements must be >= 1");
        check_positive(tx_power_watts, "tx_power_watts");
        check_positive(bandwidth_hz, "bandwidth_hz");
        check_positive(element_spacing_ratio, "element_spacing_ratio");
        if (!std::isfinite(noise_density_dbm_hz))
            throw std::invalid_argument("noise_density_dbm_hz must be finite");
        if (!std::isfinite(pathloss_alpha_db))
            throw std::invalid_argument("pathloss_alpha_db must be finite");
        if (!std::isfinite(pathloss_beta))
            throw std::invalid_argument("pathloss_beta must be finite");
    }

    double SystemConfig::noise_power() const
    {
        return noise_power_watts(noise_density_dbm_hz, bandwidth_hz);
    }

    void LinkGeometry::validate() const
    {
        check_angle_open(aod_alice_rad, "aod_alice_rad");
        check_angle_open(aoa_ris_rad, "aoa_ris_rad");
        check_angle_open(aod_bob_rad, "aod_bob_rad");
        check_angle_open(aod_eve_rad, "aod_eve_rad");
        check_positive(dist_alice_ris_m, "dist_alice_ris_m");
        check_positive(dist_ris_bob_m, "dist_ris_bob_m");
        check_positive(dist_ris_eve_m, "dist_ris_eve_m");
    }

    SteeringVector steering_vector(std::size_t n, double angle_rad, double spacing_ratio)
    {
        if (n < 1)
            throw std::invalid_argument("steering_vector: n must be >= 1");
        check_angle_open(angle_rad, "steering_vector: angle_rad");
        check_positive(spacing_ratio, "steering_vector: spacing_ratio");

        const double step = -kTwoPi * spacing_ratio * std::cos(angle_rad);
        SteeringVector v;
        v.entries.resize(n);
        v.entries[0] = {1.0, 0.0};
        for (std::size_t k = 1; k < n; ++k)
            v.entries[k] = std::polar(1.0, static_cast<double>(k) * step);
        return v;
    }

    double path_loss_linear(double distance_m, double alpha_db, double beta)
    {
        check_positive(distance_m, "path_loss_linear: distance_m");
        const double loss_db = alpha_db + beta * 10.0 * std::log10(distance_m);
        return std::pow(10.0, -loss_db / 10.0);
    }

    double noise_power_watts(double density_dbm_hz, double bandwidth_hz)
    {
        check_positive(bandwidth_hz, "noise_power_watts: bandwidth_hz");
        const double dbm = density_dbm_hz + 10.0 * std::log10(bandwidth_hz);
        return std::pow(10.0, (dbm - 30.0) / 10.0);
    }

    ChannelSet build_channels(const SystemConfig &cfg, const LinkGeometry &geom)
    {
        cfg.validate();
        geom.validate();

        ChannelSet ch;
        ch.g_alice_ris = steering_vector(cfg.m_tx_antennas, geom.aod_alice_rad,
                                         cfg.element_spacing_ratio);
        ch.g_ris = steering_vector(cfg.n_ris_elements, geom.aoa_ris_rad,
                                   cfg.element_spacing_ratio);

        ch.pathloss_alice = checked_path_loss(geom.dist_alice_ris_m, cfg, "dist_alice_ris_m");
        ch.pathloss_bob = checked_path_loss(geom.dist_ris_bob_m, cfg, "dist_ris_bob_m");
        ch.pathloss_eve = checked_path_loss(geom.dist_ris_eve_m, cfg, "dist_ris_eve_m");

        const SteeringVector g_bob = steering_vector(cfg.n_ris_elements, geom.aod_bob_rad,
                                                     cfg.element_spacing_ratio);
        const SteeringVector g_eve = steering_vector(cfg.n_ris_elements, geom.aod_eve_rad,
                                                     cfg.element_spacing_ratio);
        const double amp_bob = std::sqrt(ch.pathloss_bob);
        const double amp_eve = std::sqrt(ch.pathloss_eve);

        ch.h_bob.resize(cfg.n_ris_elements);
        ch.h_eve.resize(cfg.n_ris_elements);
        for (std::size_t k = 0; k < cfg.n_ris_elements; ++k)
        {
            ch.h_bob[k] = amp_bob * g_bob.entries[k];
            ch.h_eve[k] = amp_eve * g_eve.entries[k];
        }
        return ch;
    }

    double steering_correlation_sq(std::size_t n, double cos_angle_a, double cos_angle_b,
                                   double spacing_ratio)
    {
        if (n < 1)
            throw std::invalid_argument("steering_correlation_sq: n must be >= 1");
        check_positive(spacing_ratio, "steering_correlation_sq: spacing_ratio");

        // g(a)^H g(b) = sum_k exp(j 2 pi k s (cos a - cos b))
        const double step = kTwoPi * spacing_ratio * (cos_angle_a - cos_angle_b);
        std::complex<double> sum{1.0, 0.0};
        for (std::size_t k = 1; k < n; ++k)
            sum += std::polar(1.0, static_cast<double>(k) * step);
        return std::norm(sum);
    }

} // namespace rissec
