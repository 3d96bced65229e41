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

#include <utility>

#include "rissec/channel_model.hpp"
#include "rissec/reflection.hpp"

namespace rissec
{

    // One realization: linear SNRs at Bob and Eve plus the clamped secrecy
    // rate in bps/Hz. The atom of every Monte Carlo estimate.
    struct SecrecySample
    {
        double snr_bob = 0.0;            // gamma_B
        double snr_eve = 0.0;            // gamma_E
        double secrecy_rate_bps_hz = 0.0;
    };

    // Received SNRs under MRT precoding for a given reflection profile:
    // gamma_B = (l_A l_B M P / sigma^2) |g_B^H Theta g_R|^2 and the analogous
    // expression for Eve.
    std::pair<double, double> received_snrs(const SystemConfig &cfg, const ChannelSet &channels,
                                            const PhaseShiftProfile &profile);

    // [log2(1 + snr_bob) - log2(1 + snr_eve)]^+ in bps/Hz.
    double secrecy_rate(double snr_bob, double snr_eve);

    SecrecySample make_secrecy_sample(double snr_bob, double snr_eve);

    // Secrecy rate under the optimal reflection profile, evaluated in closed
    // form: the Bob term uses the exact alignment gain N^2, the Eve term uses
    // |g_E^H g_B|^2. Agrees with the explicit pipeline
    // (build_channels -> optimal_phase_shifts -> received_snrs -> secrecy_rate)
    // to floating-point accuracy, and is cheap enough to call per Monte Carlo
    // trial without allocating.
    double secrecy_rate_closed_form(const SystemConfig &cfg, const LinkGeometry &geom);

} // namespace rissec
