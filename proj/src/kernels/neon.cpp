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

#include <arm_neon.h>

#include "rischan/kernels.hpp"

namespace rischan::kernels {
namespace {

// One complex per 128-bit register: [re, im].

inline float64x2_t load1(const cd* p) { return vld1q_f64(reinterpret_cast<const double*>(p)); }
inline float64x2_t swap_ri(float64x2_t v) { return vextq_f64(v, v, 1); }

inline float64x2_t cmul(float64x2_t g, float64x2_t b) {
    static const float64x2_t sign = {-1.0, 1.0};
    const float64x2_t p = vmulq_f64(vdupq_laneq_f64(g, 0), b);
    const float64x2_t q = vmulq_f64(vdupq_laneq_f64(g, 1), swap_ri(b));
    return vfmaq_f64(p, q, sign);
}

cd dotc_neon(const cd* x, const cd* y, std::size_t n) {
    float64x2_t s = vdupq_n_f64(0.0), w = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = load1(x + i), yv = load1(y + i);
        s = vfmaq_f64(s, xv, yv);
        w = vfmaq_f64(w, xv, swap_ri(yv));
    }
    return {vgetq_lane_f64(s, 0) + vgetq_lane_f64(s, 1), vgetq_lane_f64(w, 0) - vgetq_lane_f64(w, 1)};
}

cd dotu_neon(const cd* x, const cd* y, std::size_t n) {
    float64x2_t s = vdupq_n_f64(0.0), w = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = load1(x + i), yv = load1(y + i);
        s = vfmaq_f64(s, xv, yv);
        w = vfmaq_f64(w, xv, swap_ri(yv));
    }
    return {vgetq_lane_f64(s, 0) - vgetq_lane_f64(s, 1), vgetq_lane_f64(w, 0) + vgetq_lane_f64(w, 1)};
}

cd triple_dotc_neon(const cd* a, const cd* g, const cd* b, std::size_t n) {
    float64x2_t s = vdupq_n_f64(0.0), w = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t av = load1(a + i);
        const float64x2_t t = cmul(load1(g + i), load1(b + i));
        s = vfmaq_f64(s, av, t);
        w = vfmaq_f64(w, av, swap_ri(t));
    }
    return {vgetq_lane_f64(s, 0) + vgetq_lane_f64(s, 1), vgetq_lane_f64(w, 0) - vgetq_lane_f64(w, 1)};
}

cd triple_dotu_neon(const cd* a, const cd* g, const cd* b, std::size_t n) {
    float64x2_t s = vdupq_n_f64(0.0), w = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t av = load1(a + i);
        const float64x2_t t = cmul(load1(g + i), load1(b + i));
        s = vfmaq_f64(s, av, t);
        w = vfmaq_f64(w, av, swap_ri(t));
    }
    return {vgetq_lane_f64(s, 0) - vgetq_lane_f64(s, 1), vgetq_lane_f64(w, 0) + vgetq_lane_f64(w, 1)};
}

void axpy_neon(cd alpha, const cd* x, cd* y, std::size_t n) {
    const float64x2_t av = vld1q_f64(reinterpret_cast<const double*>(&alpha));
    for (std::size_t i = 0; i < n; ++i) {
        double* yp = reinterpret_cast<double*>(y + i);
        vst1q_f64(yp, vaddq_f64(vld1q_f64(yp), cmul(av, load1(x + i))));
    }
}

const Table kNeon{"neon", dotc_neon, dotu_neon, triple_dotc_neon, triple_dotu_neon, axpy_neon};

}  // namespace

const Table* neon_table() { return &kNeon; }

}  // namespace rischan::kernels
