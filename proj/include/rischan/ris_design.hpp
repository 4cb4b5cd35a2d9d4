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

#include <optional>
#include <vector>

#include "rischan/config.hpp"
#include "rischan/geometry.hpp"
#include "rischan/rng.hpp"
#include "rischan/types.hpp"

namespace rischan {

struct RisPanel {
    int n_v = 1;
    int n_h = 1;
    int n_s() const { return n_v * n_h; }
};

// sin(x)/x at x = pi/2^b; 1 for continuous phases.
double quantization_loss(std::optional<int> bits);

// Element count that keeps the cascade at least as strong as the direct link
// anywhere in the coverage. `bits` = nullopt drops the quantization divisor.
int size_ris(double r_t, double r_r_max, double r_0_min, double i_k, double lambda, std::optional<int> bits);

// Per-RIS element counts and panels (n_v rows, n_h = ceil(N_S / n_v) columns).
std::vector<int> element_counts(const SystemConfig& cfg, const std::vector<Vec2>& ris);
std::vector<RisPanel> size_panels(const SystemConfig& cfg, const std::vector<Vec2>& ris);

// Column n (zero-based) phase that aligns the column with column 0.
inline double optimal_phase_continuous(int n, double delta_theta) { return n * delta_theta; }

// Nearest point of {2 pi i / 2^b : i = 1..2^b}; ties round up. Returns i.
int quantize_index(double w, int bits);
double quantize_phase(double w, int bits);
double grid_phase(int index, int bits);

// f = n_v * sum_n exp(j (w_n - n dTheta))
cd array_gain(int n_v, const std::vector<double>& phases, double delta_theta);

// Number of leading columns HPG designs for this Rx position.
int hpg_gamma(double r_r, double r_t, double r_0, double i_k, double lambda, int n_v, std::optional<int> bits);

struct PanelDesign {
    std::vector<double> phases;    // radians, one per column
    std::vector<int> grid_index;   // 1..2^b, empty for continuous phases
    int gamma = 0;                 // designed columns
    cd f{0.0, 0.0};
};

PanelDesign design_mpg(const RisPanel& p, double delta_theta, std::optional<int> bits);
// First gamma columns quantized-optimal, the rest left at zero phase.
PanelDesign design_hpg(const RisPanel& p, double delta_theta, std::optional<int> bits, int gamma);
PanelDesign design_rpg(const RisPanel& p, double delta_theta, std::optional<int> bits, Rng& rng);
PanelDesign design_off(const RisPanel& p, double delta_theta, std::optional<int> bits);

struct RisDesign {
    Strategy strategy = Strategy::off;
    std::optional<int> bits;
    std::vector<PanelDesign> panels;
    std::vector<int> active;      // K-perp
    cd alpha0{0.0, 0.0};
    std::vector<cd> alpha;        // cascade gains, RIS k at index k
};

// Designs every panel for one deployment. Active RISs get the strategy's
// phases (RPG randomizes every panel); the rest stay at zero phase.
RisDesign design_link(Strategy strategy, const SystemConfig& cfg, const Deployment& dep,
                      const std::vector<RisPanel>& panels, const std::vector<int>& active, Rng* rng);

}  // namespace rischan
