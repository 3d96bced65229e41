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

#include "rissec/config.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <set>

#include "rissec/errors.hpp"

namespace rissec
{

    namespace
    {
        using nlohmann::json;

        void check_known_keys(const json &obj, const std::string &section,
                              const std::set<std::string> &allowed)
        {
            for (const auto &item : obj.items())
                if (!allowed.contains(item.key()))
                    throw config_error(section + "/" + item.key(), "unknown key");
        }

        double get_number(const json &obj, const std::string &section, const char *key,
                          double fallback)
        {
            if (!obj.contains(key))
                return fallback;
            const json &v = obj.at(key);
            if (!v.is_number())
                throw config_error(section + "/" + key, "expected a number");
            return v.get<double>();
        }

        std::uint64_t get_uint(const json &obj, const std::string &section, const char *key,
                               std::uint64_t fallback)
        {
            if (!obj.contains(key))
                return fallback;
            const json &v = obj.at(key);
            if (!v.is_number_unsigned())
                throw config_error(section + "/" + key, "expected an unsigned integer");
            return v.get<std::uint64_t>();
        }

        bool get_bool(const json &obj, const std::string &section, const char *key,
                      bool fallback)
        {
            if (!obj.contains(key))
                return fallback;
            const json &v = obj.at(key);
            if (!v.is_boolean())
                throw config_error(section + "/" + key, "expected a boolean");
            return v.get<bool>();
        }

        std::vector<double> get_number_array(const json &obj, const std::string &section,
                                             const char *key,
                                             const std::vector<double> &fallback)
        {
            if (!obj.contains(key))
                return fallback;
            const json &v = obj.at(key);
            if (!v.is_array())
                throw config_error(section + "/" + key, "expected an array of numbers");
            std::vector<double> out;
            out.reserve(v.size());
            for (const json &e : v)
            {
                if (!e.is_number())
                    throw config_error(section + "/" + key, "expected an array of numbers");
                out.push_back(e.get<double>());
            }
            return out;
        }

        RandomizeSet parse_randomize(const json &arr, const std::string &section)
        {
            RandomizeSet set;
            set.psi_bob = set.psi_eve = false;
            for (const json &e : arr)
            {
                if (!e.is_string())
                    throw config_error(section, "randomize entries must be strings");
                const std::string name = e.get<std::string>();
                if (name == "psi_bob")
                    set.psi_bob = true;
                else if (name == "psi_eve")
                    set.psi_eve = true;
                else if (name == "aod_alice")
                    set.aod_alice = true;
                else if (name == "aoa_ris")
                    set.aoa_ris = true;
                else if (name == "psi_shared")
                    set.psi_shared = true;
                else
                    throw config_error(section + "/" + name,
                                       "unknown randomize entry (expected psi_bob, psi_eve, "
                                       "aod_alice, aoa_ris or psi_shared)");
            }
            return set;
        }

        json randomize_to_json(const RandomizeSet &set)
        {
            json arr = json::array();
            if (set.psi_bob)
                arr.push_back("psi_bob");
            if (set.psi_eve)
                arr.push_back("psi_eve");
            if (set.aod_alice)
                arr.push_back("aod_alice");
            if (set.aoa_ris)
                arr.push_back("aoa_ris");
            if (set.psi_shared)
                arr.push_back("psi_shared");
            return arr;
        }

        SweepParameter parse_sweep_parameter(const std::string &name,
                                             const std::string &section)
        {
            if (name == "m_tx_antennas")
                return SweepParameter::TxAntennas;
            if (name == "n_ris_elements")
                return SweepParameter::RisElements;
            if (name == "dist_ris_bob_m")
                return SweepParameter::DistBob;
            if (name == "tx_power_watts")
                return SweepParameter::TxPower;
            throw config_error(section, "unknown sweep parameter '" + name +
                                            "' (expected m_tx_antennas, n_ris_elements, "
                                            "dist_ris_bob_m or tx_power_watts)");
        }

        void validate_section(const std::string &section, const std::function<void()> &fn)
        {
            try
            {
                fn();
            }
            catch (const std::exception &e)
            {
                throw config_error(section, e.what());
            }
        }
    } // namespace

    RunConfig run_config_from_json(const json &doc)
    {
        if (!doc.is_object())
            throw config_error("/", "config root must be a JSON object");
        check_known_keys(doc, "", {"system", "geometry", "monte_carlo", "map", "sweep",
                                   "bound_check", "eta_check", "output_dir"});

        RunConfig cfg;

        if (doc.contains("system"))
        {
            const json &s = doc.at("system");
            if (!s.is_object())
                throw config_error("/system", "expected an object");
            check_known_keys(s, "/system",
                             {"m_tx_antennas", "n_ris_elements", "tx_power_watts",
                              "noise_density_dbm_hz", "bandwidth_hz", "pathloss_alpha_db",
                              "pathloss_beta", "element_spacing_ratio"});
            cfg.system.m_tx_antennas = static_cast<std::size_t>(
                get_uint(s, "/system", "m_tx_antennas", cfg.system.m_tx_antennas));
            cfg.system.n_ris_elements = static_cast<std::size_t>(
                get_uint(s, "/system", "n_ris_elements", cfg.system.n_ris_elements));
            cfg.system.tx_power_watts =
                get_number(s, "/system", "tx_power_watts", cfg.system.tx_power_watts);
            cfg.system.noise_density_dbm_hz = get_number(s, "/system", "noise_density_dbm_hz",
                                                         cfg.system.noise_density_dbm_hz);
            cfg.system.bandwidth_hz =
                get_number(s, "/system", "bandwidth_hz", cfg.system.bandwidth_hz);
            cfg.system.pathloss_alpha_db =
                get_number(s, "/system", "pathloss_alpha_db", cfg.system.pathloss_alpha_db);
            cfg.system.pathloss_beta =
                get_number(s, "/system", "pathloss_beta", cfg.system.pathloss_beta);
            cfg.system.element_spacing_ratio = get_number(s, "/system",
                                                          "element_spacing_ratio",
                                                          cfg.system.element_spacing_ratio);
        }

        if (doc.contains("geometry"))
        {
            const json &g = doc.at("geometry");
            if (!g.is_object())
                throw config_error("/geometry", "expected an object");
            check_known_keys(g, "/geometry",
                             {"aod_alice_rad", "aoa_ris_rad", "aod_bob_rad", "aod_eve_rad",
                              "dist_alice_ris_m", "dist_ris_bob_m", "dist_ris_eve_m"});
            cfg.geometry.aod_alice_rad =
                get_number(g, "/geometry", "aod_alice_rad", cfg.geometry.aod_alice_rad);
            cfg.geometry.aoa_ris_rad =
                get_number(g, "/geometry", "aoa_ris_rad", cfg.geometry.aoa_ris_rad);
            cfg.geometry.aod_bob_rad =
                get_number(g, "/geometry", "aod_bob_rad", cfg.geometry.aod_bob_rad);
            cfg.geometry.aod_eve_rad =
                get_number(g, "/geometry", "aod_eve_rad", cfg.geometry.aod_eve_rad);
            cfg.geometry.dist_alice_ris_m =
                get_number(g, "/geometry", "dist_alice_ris_m", cfg.geometry.dist_alice_ris_m);
            cfg.geometry.dist_ris_bob_m =
                get_number(g, "/geometry", "dist_ris_bob_m", cfg.geometry.dist_ris_bob_m);
            cfg.geometry.dist_ris_eve_m =
                get_number(g, "/geometry", "dist_ris_eve_m", cfg.geometry.dist_ris_eve_m);
        }

        if (doc.contains("monte_carlo"))
        {
            const json &m = doc.at("monte_carlo");
            if (!m.is_object())
                throw config_error("/monte_carlo", "expected an object");
            check_known_keys(m, "/monte_carlo", {"trials", "seed", "randomize"});
            cfg.monte_carlo.trials = get_uint(m, "/monte_carlo", "trials",
                                              cfg.monte_carlo.trials);
            cfg.monte_carlo.seed = get_uint(m, "/monte_carlo", "seed", cfg.monte_carlo.seed);
            if (m.contains("randomize"))
            {
                const json &arr = m.at("randomize");
                if (!arr.is_array())
                    throw config_error("/monte_carlo/randomize", "expected an array");
                cfg.monte_carlo.randomize = parse_randomize(arr, "/monte_carlo/randomize");
            }
        }

        if (doc.contains("map"))
        {
            const json &m = doc.at("map");
            if (!m.is_object())
                throw config_error("/map", "expected an object");
            check_known_keys(m, "/map",
                             {"psi_min_rad", "psi_max_rad", "dist_max_m", "psi_steps",
                              "dist_steps", "thresholds_bps_hz", "monte_carlo"});
            cfg.map.psi_min_rad = get_number(m, "/map", "psi_min_rad", cfg.map.psi_min_rad);
            cfg.map.psi_max_rad = get_number(m, "/map", "psi_max_rad", cfg.map.psi_max_rad);
            cfg.map.dist_max_m = get_number(m, "/map", "dist_max_m", cfg.map.dist_max_m);
            cfg.map.psi_steps = static_cast<std::size_t>(
                get_uint(m, "/map", "psi_steps", cfg.map.psi_steps));
            cfg.map.dist_steps = static_cast<std::size_t>(
                get_uint(m, "/map", "dist_steps", cfg.map.dist_steps));
            cfg.map.thresholds_bps_hz = get_number_array(m, "/map", "thresholds_bps_hz",
                                                         cfg.map.thresholds_bps_hz);
            cfg.map_monte_carlo = get_bool(m, "/map", "monte_carlo", cfg.map_monte_carlo);
        }

        if (doc.contains("sweep"))
        {
            const json &s = doc.at("sweep");
            if (!s.is_object())
                throw config_error("/sweep", "expected an object");
            check_known_keys(s, "/sweep", {"parameter", "values"});
            if (s.contains("parameter"))
            {
                if (!s.at("parameter").is_string())
                    throw config_error("/sweep/parameter", "expected a string");
                cfg.sweep_parameter = parse_sweep_parameter(
                    s.at("parameter").get<std::string>(), "/sweep/parameter");
            }
            cfg.sweep_values = get_number_array(s, "/sweep", "values", cfg.sweep_values);
            if (cfg.sweep_values.empty())
                throw config_error("/sweep/values", "must be nonempty");
        }

        if (doc.contains("bound_check"))
        {
            const json &b = doc.at("bound_check");
            if (!b.is_object())
                throw config_error("/bound_check", "expected an object");
            check_known_keys(b, "/bound_check", {"n_values"});
            cfg.bound_check_n = get_number_array(b, "/bound_check", "n_values",
                                                 cfg.bound_check_n);
            if (cfg.bound_check_n.empty())
                throw config_error("/bound_check/n_values", "must be nonempty");
        }

        if (doc.contains("eta_check"))
        {
            const json &e = doc.at("eta_check");
            if (!e.is_object())
                throw config_error("/eta_check", "expected an object");
            check_known_keys(e, "/eta_check", {"n_values"});
            cfg.eta_check_n = get_number_array(e, "/eta_check", "n_values", cfg.eta_check_n);
            if (cfg.eta_check_n.empty())
                throw config_error("/eta_check/n_values", "must be nonempty");
        }

        if (doc.contains("output_dir"))
        {
            if (!doc.at("output_dir").is_string())
                throw config_error("/output_dir", "expected a string");
            cfg.output_dir = doc.at("output_dir").get<std::string>();
            if (cfg.output_dir.empty())
                throw config_error("/output_dir", "must be nonempty");
        }

        validate_section("/system", [&] { cfg.system.validate(); });
        validate_section("/geometry", [&] { cfg.geometry.validate(); });
        validate_section("/monte_carlo", [&] { cfg.monte_carlo.validate(); });
        validate_section("/map", [&] { cfg.map.validate(); });
        return cfg;
    }

    RunConfig load_run_config(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw config_error(path.string(), "cannot open config file");
        json doc;
        try
        {
            doc = json::parse(in);
        }
        catch (const json::parse_error &e)
        {
            throw config_error(path.string(), e.what());
        }
        return run_config_from_json(doc);
    }

    nlohmann::json effective_config_json(const RunConfig &cfg)
    {
        json doc;
        doc["system"] = {
            {"m_tx_antennas", cfg.system.m_tx_antennas},
            {"n_ris_elements", cfg.system.n_ris_elements},
            {"tx_power_watts", cfg.system.tx_power_watts},
            {"noise_density_dbm_hz", cfg.system.noise_density_dbm_hz},
            {"bandwidth_hz", cfg.system.bandwidth_hz},
            {"pathloss_alpha_db", cfg.system.pathloss_alpha_db},
            {"pathloss_beta", cfg.system.pathloss_beta},
            {"element_spacing_ratio", cfg.system.element_spacing_ratio},
        };
        doc["geometry"] = {
            {"aod_alice_rad", cfg.geometry.aod_alice_rad},
            {"aoa_ris_rad", cfg.geometry.aoa_ris_rad},
            {"aod_bob_rad", cfg.geometry.aod_bob_rad},
            {"aod_eve_rad", cfg.geometry.aod_eve_rad},
            {"dist_alice_ris_m", cfg.geometry.dist_alice_ris_m},
            {"dist_ris_bob_m", cfg.geometry.dist_ris_bob_m},
            {"dist_ris_eve_m", cfg.geometry.dist_ris_eve_m},
        };
        doc["monte_carlo"] = {
            {"trials", cfg.monte_carlo.trials},
            {"seed", cfg.monte_carlo.seed},
            {"randomize", randomize_to_json(cfg.monte_carlo.randomize)},
        };
        doc["map"] = {
            {"psi_min_rad", cfg.map.psi_min_rad},
            {"psi_max_rad", cfg.map.psi_max_rad},
            {"dist_max_m", cfg.map.dist_max_m},
            {"psi_steps", cfg.map.psi_steps},
            {"dist_steps", cfg.map.dist_steps},
            {"thresholds_bps_hz", cfg.map.thresholds_bps_hz},
            {"monte_carlo", cfg.map_monte_carlo},
        };
        doc["sweep"] = {
            {"parameter", sweep_parameter_name(cfg.sweep_parameter)},
            {"values", cfg.sweep_values},
        };
        doc["bound_check"] = {{"n_values", cfg.bound_check_n}};
        doc["eta_check"] = {{"n_values", cfg.eta_check_n}};
        doc["output_dir"] = cfg.output_dir;
        return doc;
    }

    std::uint64_t config_hash(const RunConfig &cfg)
    {
        const std::string dump = effective_config_json(cfg).dump();
        std::uint64_t hash = 0xCBF29CE484222325ull;
        for (const unsigned char c : dump)
        {
            hash ^= c;
            hash *= 0x100000001B3ull;
        }
        return hash;
    }

    void write_manifest(const RunManifest &manifest, const std::filesystem::path &path)
    {
        char hash_hex[19];
        std::snprintf(hash_hex, sizeof(hash_hex), "0x%016llx",
                      static_cast<unsigned long long>(manifest.config_hash));
        json doc = {
            {"tool", "rissec"},
            {"version", tool_version},
            {"subcommand", manifest.subcommand},
            {"config_hash", hash_hex},
            {"seed", manifest.seed},
            {"trials", manifest.trials},
            {"duration_ms", manifest.duration_ms},
            {"outputs", manifest.outputs},
            {"summary", manifest.summary},
        };
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("write_manifest: cannot open " + path.string());
        out << doc.dump(2) << '\n';
        if (!out)
            throw std::runtime_error("write_manifest: write failed for " + path.string());
    }

} // namespace rissec
