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

#include <vector>

#include "rischan/config.hpp"
#include "rischan/rng.hpp"
#include "rischan/types.hpp"

namespace rischan {

struct CoverageDisk {
    Vec2 center;
    double radius = 1.0;
};

// arcsin(2i/N_T - 1) for i = 1..N_T
std::vector<double> dft_directions(int n_t);

struct RisLayout {
    std::vector<Vec2> positions;
    std::vector<int> ray_index;  // i in 1..N_T
    std::vector<double> eps;     // ray angle seen from the Tx
    double eps_max = 0.0;
};

// DFT-ray indices in placement order: boresight (if used), then the
// negative side outward, then the positive side outward.
std::vector<int> select_rays(int n_t, int k, RaySelection rule);
RisLayout place_ris_on_curve(const SystemConfig& cfg);

Vec2 disk_point(const CoverageDisk& disk, double u, double v);
Vec2 sample_rx(const CoverageDisk& disk, Rng& rng);

// Unit vector along the RIS columns (in-plane axis of the panel).
Vec2 panel_axis(Orientation o, Vec2 ris, Vec2 tx, Vec2 coverage_center);

struct Deployment {
    Vec2 tx, rx;
    std::vector<Vec2> ris;
    std::vector<Vec2> axis;  // per-RIS panel axis
    double r_0 = 0.0;
    std::vector<double> r_t, r_r;
    // index 0 = direct link, k+1 = RIS k
    std::vector<double> theta_t_d, theta_r_a;  // physical angles (rad) from the x-axis
    std::vector<double> Theta_t_d, Theta_r_a;  // phase steps 2 pi d sin(theta) / lambda
    // RIS faces, horizontal phase steps. Arrival from the Tx, departure to the Rx;
    // the departure step is measured on the mirrored side so that zero phases
    // form the specular reflection.
    std::vector<double> Theta_s_a, Theta_s_d;
    std::vector<double> phi;  // vertical angles, zero for co-altitude nodes

    int k() const { return static_cast<int>(ris.size()); }
    double delta_theta(int k) const { return Theta_s_d[k] - Theta_s_a[k]; }
};

Deployment solve_geometry(const SystemConfig& cfg, const std::vector<Vec2>& ris, const std::vector<Vec2>& axis,
                          Vec2 rx);

CoverageDisk coverage_of(const SystemConfig& cfg);

}  // namespace rischan
