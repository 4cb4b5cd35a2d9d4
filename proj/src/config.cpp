// SPDX-License-Identifier: Apache-2.0
//
// rischan: RIS-assisted MIMO channel customization simulator
// Copyright (C) 2026 The rischan authors
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

#include "rischan/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace rischan {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::invalid_config: return "invalid-config";
        case Errc::degenerate_geometry: return "degenerate-geometry";
        case Errc::coverage_violation: return "coverage-violation";
        case Errc::infeasible_stream_count: return "infeasible-stream-count";
        case Errc::invalid_input: return "invalid-input";
        case Errc::invalid_design: return "invalid-design";
        case Errc::budget_exceeded: return "budget-exceeded";
        case Errc::io_failure: return "io-failure";
    }
    return "unknown";
}

double norm(Vec2 a) { return std::hypot(a.x, a.y); }

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::hpg: return "hpg";
        case Strategy::mpg: return "mpg";
        case Strategy::rpg: return "rpg";
        case Strategy::off: return "off";
        case Strategy::none: return "none";
    }
    return "?";
}

const char* to_string(RaySelection r) {
    return r == RaySelection::nearest_boresight ? "nearest_boresight" : "exclude_boresight";
}

const char* to_string(Orientation o) {
    switch (o) {
        case Orientation::face_tx: return "face_tx";
        case Orientation::face_coverage: return "face_coverage";
        case Orientation::bisector: return "bisector";
        case Orientation::fixed_x: return "fixed_x";
    }
    return "?";
}

Strategy parse_strategy(const std::string& s) {
    if (s == "hpg") return Strategy::hpg;
    if (s == "mpg") return Strategy::mpg;
    if (s == "rpg") return Strategy::rpg;
    if (s == "off") return Strategy::off;
    if (s == "none" || s == "no-ris") return Strategy::none;
    throw Error(Errc::invalid_config, "unknown strategy '" + s + "' (hpg|mpg|rpg|off|none)");
}

namespace {

struct Ctx {
    std::string origin;
    [[noreturn]] void fail(const YAML::Node& n, const std::string& msg) const {
        std::ostringstream os;
        os << origin;
        if (n.IsDefined() && n.Mark().line >= 0) os << ':' << n.Mark().line + 1;
        os << ": " << msg;
        throw Error(Errc::invalid_config, os.str());
    }
};

template <class T>
T scalar_as(const Ctx& c, const YAML::Node& n, const std::string& key) {
    if (!n.IsScalar()) c.fail(n, key + ": expected a scalar");
    try {
        return n.as<T>();
    } catch (const YAML::Exception&) {
        c.fail(n, key + ": cannot parse '" + n.Scalar() + "'");
    }
}

double as_double(const Ctx& c, const YAML::Node& n, const std::string& key) {
    if (n.IsScalar()) {
        const std::string& s = n.Scalar();
        if (s == "inf" || s == "los" || s == ".inf") return std::numeric_limits<double>::infinity();
    }
    return scalar_as<double>(c, n, key);
}

Vec2 as_vec2(const Ctx& c, const YAML::Node& n, const std::string& key) {
    if (!n.IsSequence() || n.size() != 2) c.fail(n, key + ": expected [x, y]");
    return {as_double(c, n[0], key), as_double(c, n[1], key)};
}

template <class T>
std::vector<T> as_list(const Ctx& c, const YAML::Node& n, const std::string& key) {
    if (!n.IsSequence()) c.fail(n, key + ": expected a list");
    std::vector<T> out;
    for (const auto& e : n) out.push_back(scalar_as<T>(c, e, key));
    return out;
}

// Expands {start, stop, step} or an explicit list.
std::vector<double> as_sweep(const Ctx& c, const YAML::Node& n, const std::string& key) {
    if (n.IsSequence()) {
        std::vector<double> out;
        for (const auto& e : n) out.push_back(as_double(c, e, key));
        return out;
    }
    if (!n.IsMap()) c.fail(n, key + ": expected a list or {start, stop, step}");
    for (const auto& kv : n) {
        const auto k = kv.first.Scalar();
        if (k != "start" && k != "stop" && k != "step") c.fail(kv.first, key + ": unknown key '" + k + "'");
    }
    if (!n["start"] || !n["stop"] || !n["step"]) c.fail(n, key + ": needs start, stop and step");
    const double a = as_double(c, n["start"], key), b = as_double(c, n["stop"], key),
                 st = as_double(c, n["step"], key);
    if (!(st > 0) || b < a) c.fail(n, key + ": need step > 0 and stop >= start");
    std::vector<double> out;
    const int cnt = static_cast<int>(std::floor((b - a) / st + 1e-9)) + 1;
    for (int i = 0; i < cnt; ++i) out.push_back(a + i * st);
    return out;
}

using Setter = std::function<void(const YAML::Node&, const std::string&)>;

void walk_section(const Ctx& c, const YAML::Node& sec, const std::string& name,
                  const std::map<std::string, Setter>& keys) {
    if (!sec.IsMap()) c.fail(sec, name + ": expected a mapping");
    for (const auto& kv : sec) {
        const std::string k = kv.first.Scalar();
        auto it = keys.find(k);
        if (it == keys.end()) c.fail(kv.first, "unknown key '" + name + "." + k + "'");
        it->second(kv.second, name + "." + k);
    }
}

}  // namespace

ScenarioConfig parse_config(const std::string& text, const std::string& origin) {
    Ctx c{origin};
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw Error(Errc::invalid_config, origin + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    ScenarioConfig cfg;
    if (root.IsNull()) return cfg;
    if (!root.IsMap()) c.fail(root, "top level must be a mapping");

    auto& s = cfg.system;
    auto& p = cfg.campaign;
    auto dbl = [&](double& dst) { return [&c, &dst](const YAML::Node& n, const std::string& k) { dst = as_double(c, n, k); }; };
    auto integer = [&](int& dst) { return [&c, &dst](const YAML::Node& n, const std::string& k) { dst = scalar_as<int>(c, n, k); }; };
    auto boolean = [&](bool& dst) { return [&c, &dst](const YAML::Node& n, const std::string& k) { dst = scalar_as<bool>(c, n, k); }; };
    auto vec2 = [&](Vec2& dst) { return [&c, &dst](const YAML::Node& n, const std::string& k) { dst = as_vec2(c, n, k); }; };

    const std::map<std::string, Setter> system_keys{
        {"fc_ghz", dbl(s.fc_ghz)},
        {"c_mps", dbl(s.c_mps)},
        {"n_tx", integer(s.n_tx)},
        {"rf_tx", integer(s.rf_tx)},
        {"n_rx", integer(s.n_rx)},
        {"rf_rx", integer(s.rf_rx)},
        {"tx_spacing_wl", dbl(s.tx_spacing_wl)},
        {"rx_spacing_wl", dbl(s.rx_spacing_wl)},
        {"noise_dbm", dbl(s.noise_dbm)},
    };
    const std::map<std::string, Setter> ris_keys{
        {"count", integer(s.ris_count)},
        {"bits", [&](const YAML::Node& n, const std::string& k) {
             if (n.IsScalar() && n.Scalar() == "continuous") {
                 s.continuous_phase = true;
                 return;
             }
             s.continuous_phase = false;
             s.bits = scalar_as<int>(c, n, k);
             if (s.bits < 1) c.fail(n, "quantization bits must be ≥ 1");
         }},
        {"rows", integer(s.ris_rows)},
        {"spacing_wl", dbl(s.ris_spacing_wl)},
        {"sizing_quantization_loss", boolean(s.sizing_quantization_loss)},
        {"curve_rho_min_m", dbl(s.curve_rho_min_m)},
        {"curve_rho_max_m", dbl(s.curve_rho_max_m)},
        {"ray_selection", [&](const YAML::Node& n, const std::string& k) {
             const auto v = scalar_as<std::string>(c, n, k);
             if (v == "nearest_boresight") s.ray_selection = RaySelection::nearest_boresight;
             else if (v == "exclude_boresight") s.ray_selection = RaySelection::exclude_boresight;
             else c.fail(n, k + ": expected nearest_boresight or exclude_boresight");
         }},
        {"orientation", [&](const YAML::Node& n, const std::string& k) {
             const auto v = scalar_as<std::string>(c, n, k);
             if (v == "face_tx") s.orientation = Orientation::face_tx;
             else if (v == "face_coverage") s.orientation = Orientation::face_coverage;
             else if (v == "bisector") s.orientation = Orientation::bisector;
             else if (v == "fixed_x") s.orientation = Orientation::fixed_x;
             else c.fail(n, k + ": expected face_tx, face_coverage, bisector or fixed_x");
         }},
        {"positions_m", [&](const YAML::Node& n, const std::string& k) {
             if (!n.IsSequence()) c.fail(n, k + ": expected a list of [x, y]");
             s.ris_positions.clear();
             for (const auto& e : n) s.ris_positions.push_back(as_vec2(c, e, k));
         }},
    };
    const std::map<std::string, Setter> link_keys{
        {"quality_direct", dbl(s.quality_direct)},
        {"quality_tx_ris", dbl(s.quality_tx_ris)},
        {"quality_ris_rx", dbl(s.quality_ris_rx)},
        {"rician_db", dbl(s.rician_db)},
        {"nlos_paths", integer(s.nlos_paths)},
    };
    const std::map<std::string, Setter> geometry_keys{
        {"tx_m", vec2(s.tx)},
        {"coverage_center_m", vec2(s.coverage_center)},
        {"coverage_radius_m", dbl(s.coverage_radius_m)},
    };
    const std::map<std::string, Setter> campaign_keys{
        {"seed", [&](const YAML::Node& n, const std::string& k) { p.seed = scalar_as<std::uint64_t>(c, n, k); }},
        {"trials", integer(p.trials)},
        {"workers", integer(p.workers)},
        {"s_values", [&](const YAML::Node& n, const std::string& k) { p.s_values = as_list<int>(c, n, k); }},
        {"strategies", [&](const YAML::Node& n, const std::string& k) {
             p.strategies.clear();
             for (const auto& v : as_list<std::string>(c, n, k)) {
                 try {
                     p.strategies.push_back(parse_strategy(v));
                 } catch (const Error& e) {
                     c.fail(n, e.what());
                 }
             }
         }},
        {"se_streams", integer(p.se_streams)},
        {"tx_power_dbm", dbl(p.tx_power_dbm)},
        {"power_dbm", [&](const YAML::Node& n, const std::string& k) { p.power_dbm = as_sweep(c, n, k); }},
        {"rician_db", [&](const YAML::Node& n, const std::string& k) { p.rician_db = as_sweep(c, n, k); }},
        {"heatmap_grid", integer(p.heatmap_grid)},
        {"heatmap_s", [&](const YAML::Node& n, const std::string& k) { p.heatmap_s = as_list<int>(c, n, k); }},
        {"exhaustive_budget", dbl(p.exhaustive_budget)},
        {"output_dir", [&](const YAML::Node& n, const std::string& k) { p.output_dir = scalar_as<std::string>(c, n, k); }},
    };
    const std::map<std::string, const std::map<std::string, Setter>*> sections{
        {"system", &system_keys}, {"ris", &ris_keys},           {"link", &link_keys},
        {"geometry", &geometry_keys}, {"campaign", &campaign_keys},
    };

    for (const auto& kv : root) {
        const std::string name = kv.first.Scalar();
        auto it = sections.find(name);
        if (it == sections.end()) c.fail(kv.first, "unknown section '" + name + "'");
        walk_section(c, kv.second, name, *it->second);
    }
    try {
        validate(cfg);
    } catch (const Error& e) {
        throw Error(Errc::invalid_config, origin + ": " + e.what());
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_config, path + ": cannot open config file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

void validate(const ScenarioConfig& cfg) {
    const auto& s = cfg.system;
    const auto& p = cfg.campaign;
    auto bad = [](const std::string& m) { throw Error(Errc::invalid_config, m); };
    if (!(s.fc_ghz > 0)) bad("system.fc_ghz must be > 0");
    if (!(s.c_mps > 0)) bad("system.c_mps must be > 0");
    if (s.n_tx < 2) bad("system.n_tx must be ≥ 2");
    if (s.n_rx < 1) bad("system.n_rx must be ≥ 1");
    if (s.rf_tx < 1 || s.rf_tx > s.n_tx) bad("system.rf_tx must be in [1, n_tx]");
    if (s.rf_rx < 1 || s.rf_rx > s.n_rx) bad("system.rf_rx must be in [1, n_rx]");
    if (!(s.tx_spacing_wl > 0) || !(s.rx_spacing_wl > 0)) bad("antenna spacings must be > 0");
    if (!s.continuous_phase && s.bits < 1) bad("quantization bits must be ≥ 1");
    if (!s.continuous_phase && s.bits > 30) bad("ris.bits must be ≤ 30");
    if (s.ris_count < 0) bad("ris.count must be ≥ 0");
    if (s.ris_positions.empty() && s.ris_count + 1 > s.n_tx)
        bad("ris.count + 1 > system.n_tx: the curve end angle arcsin((K+1)/N_T) has no solution");
    if (!s.ris_positions.empty() && static_cast<int>(s.ris_positions.size()) != s.ris_count)
        bad("ris.positions_m must list exactly ris.count positions");
    if (s.ris_rows < 1) bad("ris.rows must be ≥ 1");
    if (!(s.ris_spacing_wl > 0)) bad("ris.spacing_wl must be > 0");
    if (!(s.curve_rho_min_m > 0) || s.curve_rho_max_m < s.curve_rho_min_m)
        bad("ris curve radii need 0 < curve_rho_min_m <= curve_rho_max_m");
    for (double q : {s.quality_direct, s.quality_tx_ris, s.quality_ris_rx})
        if (!(q > 0)) bad("link quality factors must be > 0");
    if (std::isnan(s.rician_db)) bad("link.rician_db must be a number or inf");
    if (s.nlos_paths < 0) bad("link.nlos_paths must be ≥ 0");
    if (!s.los_only() && s.nlos_paths == 0) bad("finite link.rician_db needs link.nlos_paths ≥ 1");
    if (!(s.coverage_radius_m > 0)) bad("geometry.coverage_radius_m must be > 0");
    if (p.trials < 1) bad("campaign.trials must be ≥ 1");
    if (p.workers < 1) bad("campaign.workers must be ≥ 1");
    const int smax = std::min({s.rf_tx, s.rf_rx, s.ris_count + 1});
    for (int v : p.s_values)
        if (v < 1 || v > smax) bad("campaign.s_values entries must be in [1, " + std::to_string(smax) + "]");
    for (int v : p.heatmap_s)
        if (v < 1 || v > smax) bad("campaign.heatmap_s entries must be in [1, " + std::to_string(smax) + "]");
    if (p.se_streams < 1 || p.se_streams > smax)
        bad("campaign.se_streams must be in [1, " + std::to_string(smax) + "]");
    if (p.heatmap_grid < 2) bad("campaign.heatmap_grid must be ≥ 2");
    if (p.strategies.empty()) bad("campaign.strategies must not be empty");
    if (p.power_dbm.empty()) bad("campaign.power_dbm must not be empty");
    if (p.rician_db.empty()) bad("campaign.rician_db must not be empty");
    if (!(p.exhaustive_budget >= 1)) bad("campaign.exhaustive_budget must be ≥ 1");
}

}  // namespace rischan
