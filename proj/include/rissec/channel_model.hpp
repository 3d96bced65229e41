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

#include <complex>
#include <cstddef>
#include <vector>

namespace rissec
{

    // Scalar parameters of the scenario. All powers are linear watts; dB and dBm
    // appear only at I/O boundaries. Defaults follow the 28 GHz measurement fit
    // (alpha = 61.4 dB, beta = 2) with -174 dBm/Hz noise density over 100 MHz.
    struct SystemConfig
    {
        std::size_t m_tx_antennas = 4;      // M, transmit antennas at Alice
        std::size_t n_ris_elements = 8;     // N, reflecting elements
        double tx_power_watts = 20.0;       // P
        double noise_density_dbm_hz = -174.0;
        double bandwidth_hz = 1e8;
        double pathloss_alpha_db = 61.4;    // floating intercept
        double pathloss_beta = 2.0;         // slope
        double element_spacing_ratio = 0.5; // d/lambda; closed-form bounds assume 0.5

        // Throws std::invalid_argument naming the offending field.
        void validate() const;

        // Noise power sigma_n^2 in watts for the configured density and bandwidth.
        double noise_power() const;
    };

    // Angles and distances of one channel realization. All angles are in the
    // open interval (0, pi); the endfire endpoints are measure-zero under the
    // uniform angle model and numerically degenerate, so they are rejected.
    struct LinkGeometry
    {
        double aod_alice_rad = 0.7853981633974483;   // phi, AoD at Alice (pi/4)
        double aoa_ris_rad = 2.356194490192345;      // varphi, AoA at the RIS (3pi/4)
        double aod_bob_rad = 0.7853981633974483;     // psi_B, reflected AoD toward Bob
        double aod_eve_rad = 0.7853981633974483;     // psi_E, reflected AoD toward Eve
        double dist_alice_ris_m = 15.0;              // d_A
        double dist_ris_bob_m = 20.0;                // d_B
        double dist_ris_eve_m = 30.0;                // d_E

        void validate() const;
    };

    // Unit-modulus signature vector of a uniform linear array. Entry 0 is
    // exactly 1; entry k is exp(-j 2 pi k (d/lambda) cos(angle)).
    struct SteeringVector
    {
        std::vector<std::complex<double>> entries;

        std::size_t size() const noexcept { return entries.size(); }
    };

    // LoS channels of one realization. The Alice-RIS channel G is rank one by
    // construction and kept factored as l_A^{1/2} g_R g_A^H; a dense M x N
    // matrix would waste memory and hide the MRT closed form. The receiver
    // channels absorb their path loss: h_B = l_B^{1/2} g_B, h_E = l_E^{1/2} g_E.
    struct ChannelSet
    {
        SteeringVector g_alice_ris;                 // g_A, length M
        SteeringVector g_ris;                       // g_R, length N
        std::vector<std::complex<double>> h_bob;    // length N
        std::vector<std::complex<double>> h_eve;    // length N
        double pathloss_alice = 0.0;                // l_A
        double pathloss_bob = 0.0;                  // l_B
        double pathloss_eve = 0.0;                  // l_E
    };

    // Builds the length-n signature vector for a plane wave at angle_rad.
    // Requires n >= 1, 0 < angle_rad < pi, spacing_ratio > 0.
    SteeringVector steering_vector(std::size_t n, double angle_rad, double spacing_ratio);

    // Linear power attenuation for the model -10 log10(l) = alpha + beta 10 log10(d).
    // Strictly decreasing in d for beta > 0. Requires distance_m > 0.
    double path_loss_linear(double distance_m, double alpha_db, double beta);

    // sigma_n^2 in watts from a dBm/Hz density and a bandwidth in Hz.
    double noise_power_watts(double density_dbm_hz, double bandwidth_hz);

    // Assembles all channels of one realization. Path losses must land in
    // (0, 1]; smaller distances than the model's unit-gain point are rejected.
    ChannelSet build_channels(const SystemConfig &cfg, const LinkGeometry &geom);

    // |g(angle_a)^H g(angle_b)|^2 for two length-n signature vectors, evaluated
    // without materializing them. This is the beam correlation that drives the
    // eavesdropper term of the closed-form secrecy rate.
    double steering_correlation_sq(std::size_t n, double cos_angle_a, double cos_angle_b,
                                   double spacing_ratio);

} // namespace rissec
