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

#include <cstddef>
#include <vector>

#include "rissec/channel_model.hpp"

namespace rissec
{

    // RIS phase configuration theta_1..theta_N. Phases are continuous reals
    // stored mod 2 pi; reflection is unit-modulus, so applying a profile never
    // changes an entry's magnitude.
    struct PhaseShiftProfile
    {
        std::vector<double> phases_rad;

        std::size_t size() const noexcept { return phases_rad.size(); }
    };

    // Unit-norm transmit precoder w at Alice.
    struct Precoder
    {
        std::vector<std::complex<double>> weights;
    };

    // Phase shifts that align the reflected cascade toward Bob:
    // theta_k = (k-1) theta with theta = 2 pi (d/lambda) (cos aoa_ris - cos aod_bob),
    // so that elementwise Theta* g_R = g_B and the gain toward Bob is exactly N.
    PhaseShiftProfile optimal_phase_shifts(double aoa_ris_rad, double aod_bob_rad,
                                           std::size_t n, double spacing_ratio);

    // Maximal-ratio transmission matched to the effective Bob cascade:
    // w = (h_B^H Theta G)^H / ||h_B^H Theta G||. By the rank-one factorization
    // of G the result is g_A / sqrt(M) up to a global phase. Throws
    // std::domain_error when Bob sits in a perfect cascade null.
    Precoder mrt_precoder(const ChannelSet &channels, const PhaseShiftProfile &profile);

    // |g_target^H Theta g_ris|, the reflect-beamforming gain toward a receiver
    // steered at g_target. Always in [0, N].
    double beamforming_gain(const SteeringVector &g_target, const PhaseShiftProfile &profile,
                            const SteeringVector &g_ris);

} // namespace rissec
