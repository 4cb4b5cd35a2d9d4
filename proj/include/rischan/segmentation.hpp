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
#include <vector>

#include "rischan/config.hpp"
#include "rischan/geometry.hpp"
#include "rischan/types.hpp"

namespace rischan {

struct SegmentationResult {
    std::vector<int> k_perp;              // activated RISs, in selection order
    std::vector<int> k_bar;               // everything else, ascending
    std::vector<int> excluded_collinear;  // never candidates
    double objective = 0.0;               // ||A^H A - I||_F^2 of the final A
    std::uint64_t op_count = 0;           // complex MACs spent on Gram entries
};

// RISs whose Tx-side phase step is within pi/N_T of the direct link (inclusive).
std::vector<int> collinear_filter(const Deployment& dep, int n_t);

// ||M^H M - I||_F^2 for M = [cols...]; adds the MAC count to *ops if given.
double gram_objective(const std::vector<const Vec*>& cols, std::uint64_t* ops = nullptr);

// Greedy growth of A = [a0, a_k1, a_k2, ...]; each step takes the candidate
// with the smallest augmented objective, lowest index on ties.
SegmentationResult greedy_segment(const Vec& a0, const std::vector<Vec>& a, const std::vector<int>& excluded, int s);
// Global minimizer over all (s-1)-subsets; refuses when C(n, s-1) > budget.
SegmentationResult exhaustive_segment(const Vec& a0, const std::vector<Vec>& a, const std::vector<int>& excluded,
                                      int s, double budget = 1e6);

// Same, with Rx-side steering vectors taken from a deployment.
SegmentationResult greedy_segment(const SystemConfig& cfg, const Deployment& dep, int s);
SegmentationResult exhaustive_segment(const SystemConfig& cfg, const Deployment& dep, int s, double budget = 1e6);

// Picks the s-1 non-collinear RISs with the smallest cascaded path loss
// (smallest r_T r_R), lowest index on ties.
SegmentationResult by_pathloss(const Deployment& dep, int n_t, int s);

struct Complexity {
    double c1 = 0.0;  // exhaustive search
    double c2 = 0.0;  // greedy search, leading-order
    double ratio = 0.0;
};
Complexity complexity_estimate(int k, int s, int n_r);

double binomial(int n, int r);

}  // namespace rischan
