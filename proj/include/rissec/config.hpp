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
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rissec/channel_model.hpp"
#include "rissec/secrecy_map.hpp"
#include "rissec/simulation.hpp"

namespace rissec
{

    inline constexpr const char *tool_version = "0.1.0";

    // Everything a run needs, with defaults that reproduce the case-study
    // scenario (P = 20 W, -174 dBm/Hz over 100 MHz, 28 GHz path-loss fit);
    // each figure is reachable with a short override file.
    struct RunConfig
    {
        SystemConfig system;
        LinkGeometry geometry;
        MonteCarloSpec monte_carlo;
        MapSpec map;
        bool map_monte_carlo = false;

        SweepParameter sweep_parameter = SweepParameter::RisElements;
        std::vector<double> sweep_values = {8, 16, 32, 64, 128};
        std::vector<double> bound_check_n = {8, 16, 32, 64, 128};
        std::vector<double> eta_check_n = {4, 8, 16, 32};

        std::string output_dir = "out";
    };

    // Parses and validates a JSON config file. Unknown keys and malformed
    // values raise config_error carrying the offending field path.
    RunConfig load_run_config(const std::filesystem::path &path);

    // Same validation applied to an already-parsed document (defaults filled
    // for missing fields).
    RunConfig run_config_from_json(const nlohmann::json &doc);

    // Canonical serialization of the effective config, defaults included.
    // Key order is sorted, so the encoding (and the hash below) is stable
    // across platforms and runs.
    nlohmann::json effective_config_json(const RunConfig &cfg);

    // FNV-1a 64-bit over the canonical serialization.
    std::uint64_t config_hash(const RunConfig &cfg);

    struct RunManifest
    {
        std::string subcommand;
        std::uint64_t config_hash = 0;
        std::uint64_t seed = 0;
        std::uint64_t trials = 0;
        std::int64_t duration_ms = 0;
        std::vector<std::string> outputs;
        nlohmann::json summary = nlohmann::json::object();
    };

    // Writes the manifest JSON next to the run outputs.
    void write_manifest(const RunManifest &manifest, const std::filesystem::path &path);

} // namespace rissec
