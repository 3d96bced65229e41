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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rissec/bounds.hpp"
#include "rissec/secrecy_metrics.hpp"
#include "rissec/simulation.hpp"

#include "oracles.hpp"

using namespace rissec;

namespace
{
    LinkGeometry reference_geometry()
    {
        LinkGeometry geom;
        geom.dist_alice_ris_m = 15.0;
        geom.dist_ris_bob_m = 20.0;
        geom.dist_ris_eve_m = 30.0;
        return geom;
    }
}

TEST_CASE("trial rng: counter-based streams are stable and open-interval")
{
    TrialRng a(42, 7);
    TrialRng b(42, 7);
    for (int i = 0; i < 100; ++i)
        CHECK(a.next_u64() == b.next_u64());

    TrialRng c(42, 8);
    bool differs = false;
    TrialRng a2(42, 7);
    for (int i = 0; i < 16; ++i)
        differs |= (a2.next_u64() != c.next_u64());
    CHECK(differs);

    TrialRng d(1, 0);
    for (int i = 0; i < 10000; ++i)
    {
        const double u = d.next_open_unit();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("monte carlo: bit-identical across repeats and worker counts")
{
    SystemConfig cfg;
    MonteCarloSpec mc;
    mc.trials = 20000;
    mc.seed = 99;
    const LinkGeometry geom = reference_geometry();

    const ErgodicEstimate ref = ergodic_secrecy_rate_mc(cfg, geom, mc, 1);
    for (const unsigned threads : {1u, 2u, 3u, 8u})
    {
        const ErgodicEstimate est = ergodic_secrecy_rate_mc(cfg, geom, mc, threads);
        CHECK(est.mean_rate_bps_hz == ref.mean_rate_bps_hz);
        CHECK(est.std_error == ref.std_error);
        CHECK(est.trials == ref.trials);
    }
}

TEST_CASE("monte carlo: shared-psi randomization clones Eve and clamps to zero")
{
    SystemConfig cfg;
    LinkGeometry geom = reference_geometry();
    geom.dist_ris_eve_m = geom.dist_ris_bob_m;
    MonteCarloSpec mc;
    mc.trials = 5000;
    mc.randomize = RandomizeSet{false, false, false, false, true};
    const ErgodicEstimate est = ergodic_secrecy_rate_mc(cfg, geom, mc);
    CHECK(est.mean_rate_bps_hz == 0.0);
    CHECK(est.std_error == 0.0);
}

TEST_CASE("monte carlo: single passthrough trial equals the closed form")
{
    SystemConfig cfg;
    LinkGeometry geom = reference_geometry();
    MonteCarloSpec mc;
    mc.trials = 1;
    // varphi cancels out of the optimal-reflection rate, so randomizing it
    // only leaves the template's deterministic value
    mc.randomize = RandomizeSet{false, false, false, true, false};
    const ErgodicEstimate est = ergodic_secrecy_rate_mc(cfg, geom, mc);
    CHECK(est.mean_rate_bps_hz == secrecy_rate_closed_form(cfg, geom));
    CHECK(est.std_error == 0.0);
}

TEST_CASE("monte carlo: validation")
{
    SystemConfig cfg;
    MonteCarloSpec mc;
    mc.trials = 0;
    CHECK_THROWS_AS(ergodic_secrecy_rate_mc(cfg, reference_geometry(), mc),
                    std::invalid_argument);
    mc.trials = 10;
    mc.randomize = RandomizeSet{false, false, false, false, false};
    CHECK_THROWS_AS(ergodic_secrecy_rate_mc(cfg, reference_geometry(), mc),
                    std::invalid_argument);
}

TEST_CASE("expected gain: single element has unit gain with zero variance")
{
    MonteCarloSpec mc;
    mc.trials = 10000;
    const ErgodicEstimate est = expected_gain_sq_mc(1, mc);
    CHECK(est.mean_rate_bps_hz == 1.0);
    CHECK(est.std_error == 0.0);
}

TEST_CASE("expected gain: N = 2 lands on the exact finite-N expectation")
{
    MonteCarloSpec mc;
    mc.trials = 200000;
    mc.seed = 7;
    const ErgodicEstimate est = expected_gain_sq_mc(2, mc);
    const double j0pi = oracles::bessel_j0_series_quad(std::numbers::pi);
    const double exact = 2.0 + 2.0 * j0pi * j0pi;
    CHECK(std::abs(est.mean_rate_bps_hz - exact) < 3.0 * est.std_error);
}

TEST_CASE("expected gain: matches a direct long-double resampling")
{
    // same trials, same seed, independent evaluation path
    MonteCarloSpec mc;
    mc.trials = 2000;
    mc.seed = 1234;
    const ErgodicEstimate est = expected_gain_sq_mc(6, mc);
    double sum = 0.0;
    for (std::uint64_t t = 0; t < mc.trials; ++t)
    {
        TrialRng rng(mc.seed, t);
        const double psi_b = rng.next_open_angle();
        const double psi_e = rng.next_open_angle();
        sum += oracles::gain_sq_direct(6, psi_e, psi_b);
    }
    CHECK(est.mean_rate_bps_hz == doctest::Approx(sum / 2000.0).epsilon(1e-12));
}

TEST_CASE("std error: quadrupling trials halves the error")
{
    SystemConfig cfg;
    const LinkGeometry geom = reference_geometry();
    double ratio_sum = 0.0;
    for (std::uint64_t rep = 0; rep < 10; ++rep)
    {
        MonteCarloSpec small;
        small.trials = 2000;
        small.seed = 1000 + rep;
        MonteCarloSpec big = small;
        big.trials = 8000;
        const double se_small = ergodic_secrecy_rate_mc(cfg, geom, small).std_error;
        const double se_big = ergodic_secrecy_rate_mc(cfg, geom, big).std_error;
        ratio_sum += se_big / se_small;
    }
    CHECK(ratio_sum / 10.0 == doctest::Approx(0.5).epsilon(0.2));
}

TEST_CASE("sweep: single-value sweep equals a direct call")
{
    SystemConfig cfg;
    MonteCarloSpec mc;
    mc.trials = 4000;
    const LinkGeometry geom = reference_geometry();

    const auto points = sweep(cfg, SweepParameter::RisElements, {16.0}, geom, mc);
    REQUIRE(points.size() == 1);
    REQUIRE(points[0].error.empty());

    SystemConfig direct_cfg = cfg;
    direct_cfg.n_ris_elements = 16;
    const ErgodicEstimate direct = ergodic_secrecy_rate_mc(direct_cfg, geom, mc);
    CHECK(points[0].estimate->mean_rate_bps_hz == direct.mean_rate_bps_hz);
    CHECK(points[0].estimate->std_error == direct.std_error);
}

TEST_CASE("sweep: increasing N raises the mean under shared draws")
{
    SystemConfig cfg;
    cfg.m_tx_antennas = 4;
    MonteCarloSpec mc;
    mc.trials = 20000;
    const auto points = sweep(cfg, SweepParameter::RisElements, {8, 16, 32, 64},
                              reference_geometry(), mc);
    REQUIRE(points.size() == 4);
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        CHECK(points[i + 1].estimate->mean_rate_bps_hz >
              points[i].estimate->mean_rate_bps_hz);
    // bound attached everywhere (Bob closer than Eve) and dominated by the mean
    for (const auto &p : points)
    {
        REQUIRE(p.lower_bound.has_value());
        CHECK(p.estimate->mean_rate_bps_hz >=
              *p.lower_bound - 3.0 * p.estimate->std_error);
    }
}

TEST_CASE("sweep: invalid entries are reported per point, not fatal")
{
    SystemConfig cfg;
    MonteCarloSpec mc;
    mc.trials = 500;
    const auto points = sweep(cfg, SweepParameter::RisElements, {8.0, 0.0, 2.5, 16.0},
                              reference_geometry(), mc);
    REQUIRE(points.size() == 4);
    CHECK(points[0].error.empty());
    CHECK(!points[1].error.empty());
    CHECK(!points[2].error.empty());
    CHECK(points[3].error.empty());
    CHECK(!points[1].estimate.has_value());
    CHECK(points[3].estimate.has_value());
}

TEST_CASE("sweep: bound appears only while the Bob link dominates")
{
    SystemConfig cfg;
    MonteCarloSpec mc;
    mc.trials = 500;
    LinkGeometry geom = reference_geometry(); // d_E = 30
    const auto points = sweep(cfg, SweepParameter::DistBob, {10.0, 30.0, 35.0}, geom, mc);
    REQUIRE(points.size() == 3);
    CHECK(points[0].lower_bound.has_value());
    CHECK(points[1].lower_bound.has_value()); // equality is still admissible
    CHECK(!points[2].lower_bound.has_value());
    CHECK(points[2].error.empty()); // absent bound is not an error
}

TEST_CASE("sweep: empty value list is rejected")
{
    SystemConfig cfg;
    MonteCarloSpec mc;
    CHECK_THROWS_AS(sweep(cfg, SweepParameter::TxPower, {}, reference_geometry(), mc),
                    std::invalid_argument);
}
