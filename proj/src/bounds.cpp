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

#include "rissec/bounds.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rissec/errors.hpp"

namespace rissec
{

    namespace
    {
        constexpr double kPi = std::numbers::pi;
        constexpr double kPiSq = std::numbers::pi * std::numbers::pi;

        // Hankel coefficients a_k = (-1)^k ((2k-1)!!)^2 / (k! 8^k) for order 0.
        constexpr std::array<double, 9> hankel_coeffs()
        {
            std::array<double, 9> a{};
            a[0] = 1.0;
            for (std::size_t k = 1; k < a.size(); ++k)
            {
                const double odd = 2.0 * static_cast<double>(k) - 1.0;
                a[k] = a[k - 1] * (-(odd * odd)) / (8.0 * static_cast<double>(k));
            }
            return a;
        }

        constexpr std::array<double, 9> kHankel = hankel_coeffs();
    } // namespace

    namespace detail
    {

        double bessel_j0_series(double x)
        {
            // J0(x) = sum_m (-1)^m (x/2)^{2m} / (m!)^2, summed to convergence.
            const double q = 0.25 * x * x;
            double term = 1.0;
            double sum = 1.0;
            for (int m = 1; m < 200; ++m)
            {
                term *= -q / (static_cast<double>(m) * static_cast<double>(m));
                sum += term;
                if (std::abs(term) < 1e-18)
                    break;
            }
            return sum;
        }

        double bessel_j0_asymptotic(double x)
        {
            // J0(x) ~ sqrt(2/(pi x)) [cos(x - pi/4) P(x) - sin(x - pi/4) Q(x)]
            // with eight correction terms: P uses a2..a8 (even), Q uses a1..a7 (odd).
            const double z = std::abs(x);
            const double inv2 = 1.0 / (z * z);
            const double p = 1.0 + inv2 * (-kHankel[2] + inv2 * (kHankel[4] +
                             inv2 * (-kHankel[6] + inv2 * kHankel[8])));
            const double q = (kHankel[1] + inv2 * (-kHankel[3] + inv2 * (kHankel[5] +
                              inv2 * -kHankel[7]))) / z;
            const double chi = z - 0.25 * kPi;
            return std::sqrt(2.0 / (kPi * z)) * (std::cos(chi) * p - std::sin(chi) * q);
        }

    } // namespace detail

    double bessel_j0(double x)
    {
        if (!std::isfinite(x))
            throw std::invalid_argument("bessel_j0: argument must be finite");
        const double z = std::abs(x);
        return z < detail::j0_series_limit ? detail::bessel_j0_series(z)
                                           : detail::bessel_j0_asymptotic(z);
    }

    double eta(std::size_t n)
    {
        if (n < 1)
            throw std::invalid_argument("eta: n must be >= 1");
        const double nn = static_cast<double>(n);
        return nn - (2.0 / kPiSq) * (nn - 1.0) +
               (2.0 * nn / kPiSq) * (std::log(nn) + euler_constant);
    }

    namespace
    {
        void check_loss_unit_interval(double l, const char *name)
        {
            if (!(l > 0.0) || l > 1.0 || !std::isfinite(l))
                throw std::invalid_argument(std::string(name) + " must lie in (0, 1]");
        }
    } // namespace

    double ergodic_lower_bound(const SystemConfig &cfg, double pathloss_alice,
                               double pathloss_bob, double pathloss_eve)
    {
        cfg.validate();
        check_loss_unit_interval(pathloss_alice, "pathloss_alice");
        check_loss_unit_interval(pathloss_bob, "pathloss_bob");
        check_loss_unit_interval(pathloss_eve, "pathloss_eve");
        if (pathloss_bob < pathloss_eve)
            throw assumption_error("ergodic_lower_bound requires pathloss_bob >= "
                                   "pathloss_eve (Bob link no weaker than Eve link)");

        const double m = static_cast<double>(cfg.m_tx_antennas);
        const double n = static_cast<double>(cfg.n_ris_elements);
        const double base = m * cfg.tx_power_watts / cfg.noise_power();
        const double bob_term = 1.0 + pathloss_alice * pathloss_bob * n * n * base;
        const double eve_term = 1.0 + pathloss_alice * pathloss_eve *
                                      eta(cfg.n_ris_elements) * base;
        return std::log2(bob_term) - std::log2(eve_term);
    }

    double asymptotic_bound(std::size_t n, double pathloss_bob, double pathloss_eve)
    {
        if (n < 1)
            throw std::invalid_argument("asymptotic_bound: n must be >= 1");
        if (!(pathloss_bob > 0.0) || !(pathloss_eve > 0.0))
            throw std::invalid_argument("asymptotic_bound: path losses must be positive");
        return std::log2(static_cast<double>(n) * kPiSq * pathloss_bob /
                         (2.0 * pathloss_eve));
    }

} // namespace rissec
