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

#include "rischan/types.hpp"

namespace rischan {

struct SpectrumReport {
    std::vector<double> singular_values;  // nonincreasing
    int rank = 0;
    double erank = 0.0;
    std::vector<double> t_s;  // t_s[s-1] = sigma_1 / sigma_s
};

SpectrumReport spectrum(const Mat& H, double rank_tol = 1e-8);

// exp of the Shannon entropy of sigma / sum(sigma); zeros contribute nothing.
double effective_rank(const std::vector<double>& sv);

// sigma_1 / sigma_s (1-based s); +inf when sigma_s is zero.
double truncated_condition(const std::vector<double>& sv, int s);

}  // namespace rischan
