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

#include "rissec/channel_model.hpp"

namespace rissec
{

    // Euler's constant a = lim_{n->inf} (sum_{k<n} 1/k - ln n).
    inline constexpr double euler_constant = 0.57721566490153286;

    // Bessel function of the first kind, order zero. Implemented from scratch:
    // ascending power series for small arguments, Hankel asymptotic expansion
    // beyond. Absolute error stays below 1e-9 over |x| <= 1e4.
    double bessel_j0(double x);

    namespace detail
    {
        // Branch internals, exposed for cross-validation of the crossover region.
        inline constexpr double j0_series_limit = 14.0;
        double bessel_j0_series(double x);
        double bessel_j0_asymptotic(double x);
    } // namespace detail

    // Asymptotic expectation of |g_E^H g_B|^2 over independent uniform angles:
    // eta(N) = N - (2/pi^2)(N - 1) + (2N/pi^2)(ln N + a), natural log. The
    // formula is asymptotic in N; at small N it overshoots the exact
    // expectation by a few percent (about 12% at N = 1, where the true value
    // is exactly 1).
    double eta(std::size_t n);

    // Jensen lower bound on the ergodic secrecy rate under optimal reflection,
    //   log2(1 + l_A l_B M N^2 P / sigma^2) - log2(1 + l_A l_E M P eta(N) / sigma^2).
    // Valid for pathloss_bob >= pathloss_eve (throws assumption_error
    // otherwise). May be negative; the value is reported unclamped and callers
    // decide presentation.
    double ergodic_lower_bound(const SystemConfig &cfg, double pathloss_alice,
                               double pathloss_bob, double pathloss_eve);

    // Large-N, large-M limit form log2(N pi^2 l_B / (2 l_E)): independent of
    // M, P, sigma^2 and l_A. Doubling N raises it by exactly 1 bps/Hz. Note
    // that it exceeds ergodic_lower_bound by log2(pi^2 eta(N) / (2N)) >=
    // log2(pi^2 / 2) at every finite N, since eta(N) >= N; the two expressions
    // share growth rate, not value.
    double asymptotic_bound(std::size_t n, double pathloss_bob, double pathloss_eve);

} // namespace rissec
