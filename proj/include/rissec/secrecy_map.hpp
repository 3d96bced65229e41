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
#include <vector>

#include "rissec/channel_model.hpp"
#include "rissec/simulation.hpp"

namespace rissec
{

    // Polar sampling of Bob positions around the RIS at the coordinate origin.
    // Cells are centered: psi_i = psi_min + (i + 1/2) dpsi, d_j = (j + 1/2) dd,
    // so centers stay strictly inside the open angle interval and (0, dist_max].
    struct MapSpec
    {
        double psi_min_rad = 0.0;
        double psi_max_rad = 1.5707963267948966; // pi/2
        double dist_max_m = 40.0;
        std::size_t psi_steps = 181;
        std::size_t dist_steps = 400; // 0.1 m radial resolution at the default extent
        std::vector<double> thresholds_bps_hz = {1.0, 2.0, 4.0};

        void validate() const;
    };

    enum class MapAveraging
    {
        // Evaluate the closed form per cell. The rate under optimal reflection
        // depends only on (psi_B, d_B, psi_E, d_E); the transmit-side angles
        // cancel, so no averaging is needed.
        ClosedForm,
        // Per-cell Monte Carlo over the randomize set, kept for parity checks.
        // The set may only touch the transmit-side angles (phi, varphi); the
        // cell position and the fixed Eve are not redrawable.
        MonteCarlo
    };

    struct GridProvenance
    {
        std::uint64_t config_hash = 0;
        std::uint64_t seed = 0;
        std::uint64_t trials = 0;
        MapAveraging mode = MapAveraging::ClosedForm;
    };

    struct SecrecyGrid
    {
        std::vector<double> psi_rad;        // column centers, ascending
        std::vector<double> dist_m;         // radial centers, ascending
        std::vector<double> rate_bps_hz;    // row-major [psi_index * dist_steps + j]
        double aod_eve_rad = 0.0;
        double dist_eve_m = 0.0;
        GridProvenance provenance;

        double rate_at(std::size_t psi_index, std::size_t dist_index) const
        {
            return rate_bps_hz[psi_index * dist_m.size() + dist_index];
        }
    };

    // Ergodic secrecy rate at every Bob cell for the fixed Eve/Alice geometry
    // carried by geom (its Bob fields are overwritten per cell). Eve's
    // direction must lie in (0, pi/2), matching the mapped sector.
    SecrecyGrid compute_map(const SystemConfig &cfg, const LinkGeometry &geom,
                            const MapSpec &spec, const MonteCarloSpec &mc,
                            MapAveraging mode = MapAveraging::ClosedForm,
                            unsigned threads = 0, std::uint64_t config_hash = 0);

    // Largest d_B along direction psi_b with closed-form rate >= threshold,
    // found by bisection to 0.01 m. Returns dist_max_m when the whole ray
    // stays secure (the rate cannot cross below the threshold within range)
    // and nullopt when even d_B -> 0+ (probed at 1 cm) fails.
    std::optional<double> max_secure_distance(const SystemConfig &cfg,
                                              const LinkGeometry &geom, double psi_b_rad,
                                              double threshold_bps_hz,
                                              double dist_max_m = 40.0);

    struct ContourPoint
    {
        double psi_rad = 0.0;
        double dist_m = 0.0;
    };

    // Per angular column, the radial position where the rate crosses the
    // threshold (linear interpolation between adjacent cells). Columns that
    // never cross contribute no point. full_area: every cell meets the
    // threshold; zero_area: no cell does.
    struct ContourResult
    {
        std::vector<ContourPoint> points;
        bool full_area = false;
        bool zero_area = false;
    };

    ContourResult extract_contour(const SecrecyGrid &grid, double threshold_bps_hz);

} // namespace rissec
