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
#include "rischan/types.hpp"

namespace rischan {

enum class Scheme { cc_hybrid, svd_full, svd_truncated };
enum class Allocation { equal, waterfill };

const char* to_string(Scheme s);
const char* to_string(Allocation a);

struct PowerAllocation {
    std::vector<double> p;
    double mu = 0.0;
    std::vector<bool> active;
    int active_count() const;
};

// p_i = max(mu - noise / lambda_i, 0) with sum p = E.
PowerAllocation waterfill(const std::vector<double>& lambdas, double E, double noise);
PowerAllocation equal_power(int n, double E);

struct Beamformers {
    Scheme scheme = Scheme::cc_hybrid;
    Mat f_rf, f_bb, w_rf, w_bb;
    PowerAllocation power;
    Mat precoder() const { return f_rf * f_bb; }
    Mat combiner() const { return w_rf * w_bb; }
};

// Analog stages are the steering vectors of the direct link and of K-perp
// (Tx side rotated by -arg(alpha)); the digital stages only carry power.
// Waterfill gains are |(W_RF^H H F_RF)_ii|^2.
Beamformers cc_hybrid_beamformers(const SystemConfig& cfg, const Deployment& dep, const std::vector<int>& k_perp,
                                  const RisDesign& design, const Mat& H, double E, double noise, Allocation alloc);

// streams = 0 uses every nonzero mode (svd-full); otherwise the top `streams`
// modes (svd-truncated), which must all be nonzero.
Beamformers svd_beamformers(const Mat& H, double E, double noise, int streams, Allocation alloc);

struct SeResult {
    double se = 0.0;
    bool whitened = false;  // combiner columns were not orthonormal
};

// log2 det(I + (W^H W)^-1 W^H H F F^H H^H W / noise), evaluated through the
// whitened combiner so the result stays correct for non-orthonormal W.
SeResult spectral_efficiency(const Mat& H, const Mat& F, const Mat& W, double noise);

struct ThresholdReport {
    double e_th = 0.0;
    double e_th_max = 0.0;
    bool alpha0_is_min = true;
    std::vector<double> delta_max;  // per candidate extra RIS
};

// E_Th = (s-1) noise/|a0|^2 - sum noise/|a_i|^2 with s-1 = gains.size()
double power_threshold(double alpha0, const std::vector<double>& gains, double noise);
double delta_threshold(double alpha0, double candidate_max, double noise);
ThresholdReport threshold_report(double alpha0, const std::vector<double>& gains, const std::vector<double>& gains_max,
                                 const std::vector<double>& candidates_max, double noise);

}  // namespace rischan
