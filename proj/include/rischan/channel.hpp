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
#include "rischan/geometry.hpp"
#include "rischan/ris_design.hpp"
#include "rischan/rng.hpp"
#include "rischan/types.hpp"

namespace rischan {

// Free-space amplitude lambda / (4 pi r)
double pathloss(double r, double lambda);

// ULA response exp(j n Y) / sqrt(N), n = 0..N-1
Vec steering(int n, double Y);
// a_v(Phi) kron a_h(Theta)
Vec upa_steering(int n_v, int n_h, double Phi, double Theta);

// alpha_0 = I_D sqrt(N_T N_R) g_0
double direct_gain(const SystemConfig& cfg, double r_0);
// alpha_k = I_T I_R sqrt(N_T N_R) g_R g_T f
cd cascade_gain(const SystemConfig& cfg, double r_t, double r_r, cd f);

struct ArrayEnd {
    int n_v = 1;
    int n_h = 1;
    double phi = 0.0;
    double theta = 0.0;
    int n() const { return n_v * n_h; }
    Vec response() const { return upa_steering(n_v, n_h, phi, theta); }
};

struct NlosPath {
    cd beta;
    ArrayEnd rx, tx;  // only the angles differ from the LoS ends
};

struct PathSet {
    std::vector<NlosPath> nlos;
};

// NLoS angles psi ~ U[0, pi] from the array axis, phase step 2 pi d cos(psi).
PathSet draw_paths(int count, const ArrayEnd& rx, double rx_spacing_wl, const ArrayEnd& tx, double tx_spacing_wl,
                   Rng& rng);

// sqrt(N_rx N_tx) g (I sqrt(k/(k+1)) a_rx a_tx^H + sqrt(1/(k+1)) L^-1/2 sum beta a a^H).
// kappa = +inf keeps only the LoS term.
Mat component_channel(const ArrayEnd& rx, const ArrayEnd& tx, double g, double quality, double kappa_lin,
                      const PathSet& paths);

struct ChannelRealization {
    Mat h_d;
    std::vector<Mat> h_t;  // N_S,k x N_T
    std::vector<Mat> h_r;  // N_R x N_S,k
    double g_0 = 0.0;
    std::vector<double> g_t, g_r;
    double kappa_lin = 0.0;
    std::vector<RisPanel> panels;
};

// kappa_db = +inf gives the LoS-only realization and ignores nlos_rng.
ChannelRealization build_channel(const SystemConfig& cfg, const Deployment& dep, const std::vector<RisPanel>& panels,
                                 double kappa_db, Rng* nlos_rng);

// H = H_D + sum_k H_R,k Gamma_k H_T,k. An empty design.panels means no RIS.
Mat compose(const ChannelRealization& ch, const RisDesign& design);

// LoS-only sum form: sum_k alpha_k a_R(Theta_R,k) a_T(Theta_T,k)^H, k = 0..K.
Mat compose_los(const SystemConfig& cfg, const Deployment& dep, const RisDesign& design);

}  // namespace rischan
