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

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rischan/types.hpp"

namespace rischan {

enum class RaySelection { nearest_boresight, exclude_boresight };
enum class Orientation { face_tx, face_coverage, bisector, fixed_x };
// `none` removes the RISs altogether; `off` keeps them with all-zero phases.
enum class Strategy { hpg, mpg, rpg, off, none };

const char* to_string(Strategy s);
const char* to_string(RaySelection r);
const char* to_string(Orientation o);
Strategy parse_strategy(const std::string& s);

struct SystemConfig {
    double fc_ghz = 28.0;
    double c_mps = 3.0e8;
    int n_tx = 32;
    int rf_tx = 8;
    int n_rx = 8;
    int rf_rx = 8;
    double tx_spacing_wl = 0.5;
    double rx_spacing_wl = 0.5;
    double noise_dbm = -100.0;

    int ris_count = 25;
    int bits = 4;
    bool continuous_phase = false;
    int ris_rows = 1;
    double ris_spacing_wl = 0.125;
    bool sizing_quantization_loss = false;
    double curve_rho_min_m = 35.0;
    double curve_rho_max_m = 138.0;
    RaySelection ray_selection = RaySelection::nearest_boresight;
    Orientation orientation = Orientation::face_tx;
    std::vector<Vec2> ris_positions;  // overrides the curve when non-empty

    double quality_direct = 0.01;
    double quality_tx_ris = 1.0;
    double quality_ris_rx = 1.0;
    double rician_db = std::numeric_limits<double>::infinity();  // inf = LoS only
    int nlos_paths = 3;

    Vec2 tx{0.0, 0.0};
    Vec2 coverage_center{100.0, 0.0};
    double coverage_radius_m = 25.0;

    double lambda() const { return c_mps / (fc_ghz * 1e9); }
    double noise_w() const { return dbm_to_watt(noise_dbm); }
    std::optional<int> phase_bits() const {
        return continuous_phase ? std::nullopt : std::optional<int>(bits);
    }
    // I_k = I_T I_R / I_D, the link-quality ratio entering the sizing rule
    double quality_ratio() const { return quality_tx_ris * quality_ris_rx / quality_direct; }
    bool los_only() const { return std::isinf(rician_db) && rician_db > 0; }
};

struct CampaignConfig {
    std::uint64_t seed = 1;
    int trials = 1000;
    int workers = 1;
    std::vector<int> s_values{2, 3, 4, 5, 6, 7, 8};
    std::vector<Strategy> strategies{Strategy::hpg, Strategy::mpg, Strategy::rpg};
    int se_streams = 4;
    double tx_power_dbm = 40.0;
    std::vector<double> power_dbm{20, 25, 30, 35, 40, 45, 50, 55, 60};
    std::vector<double> rician_db{0, 3, 6, 9, 12, 15};
    int heatmap_grid = 101;
    std::vector<int> heatmap_s{2, 4};
    double exhaustive_budget = 1e6;
    std::string output_dir = "out";
};

struct ScenarioConfig {
    SystemConfig system;
    CampaignConfig campaign;
};

// Parses YAML text. Unknown keys and out-of-range values raise
// Error(invalid_config) with "origin:line: message".
ScenarioConfig parse_config(const std::string& text, const std::string& origin = "<config>");
ScenarioConfig load_config(const std::string& path);

// Semantic checks that do not depend on where the values came from.
void validate(const ScenarioConfig& cfg);

}  // namespace rischan
