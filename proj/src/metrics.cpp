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

#include "rischan/metrics.hpp"

#include <cmath>
#include <limits>

namespace rischan {

SpectrumReport spectrum(const Mat& H, double rank_tol) {
    if (!H.allFinite()) throw Error(Errc::invalid_input, "spectrum: matrix has non-finite entries");
    SpectrumReport r;
    if (H.size() == 0) return r;
    Eigen::JacobiSVD<Mat> svd(H);
    const auto& s = svd.singularValues();
    r.singular_values.assign(s.data(), s.data() + s.size());
    const double smax = r.singular_values.empty() ? 0.0 : r.singular_values[0];
    for (double v : r.singular_values)
        if (v > rank_tol * smax) ++r.rank;
    if (smax > 0) {
        r.erank = effective_rank(r.singular_values);
        for (std::size_t i = 1; i <= r.singular_values.size(); ++i)
            r.t_s.push_back(truncated_condition(r.singular_values, static_cast<int>(i)));
    }
    return r;
}

double effective_rank(const std::vector<double>& sv) {
    double total = 0.0;
    for (double v : sv) {
        if (v < 0 || !std::isfinite(v)) throw Error(Errc::invalid_input, "effective_rank: invalid singular value");
        total += v;
    }
    if (!(total > 0)) throw Error(Errc::invalid_input, "effective_rank: all-zero spectrum");
    double h = 0.0;
    for (double v : sv) {
        const double p = v / total;
        if (p > 0) h -= p * std::log(p);
    }
    return std::exp(h);
}

double truncated_condition(const std::vector<double>& sv, int s) {
    if (s < 1 || s > static_cast<int>(sv.size()))
        throw Error(Errc::invalid_input, "truncated_condition: s out of range");
    if (sv[s - 1] <= 0) return std::numeric_limits<double>::infinity();
    return sv[0] / sv[s - 1];
}

}  // namespace rischan
