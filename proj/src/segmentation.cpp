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

#include "rischan/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rischan/channel.hpp"
#include "rischan/kernels.hpp"

namespace rischan {

std::vector<int> collinear_filter(const Deployment& dep, int n_t) {
    std::vector<int> out;
    const double tol = kPi / n_t;
    for (int k = 0; k < dep.k(); ++k)
        if (std::abs(dep.Theta_t_d[0] - dep.Theta_t_d[k + 1]) <= tol * (1.0 + 1e-12)) out.push_back(k);
    return out;
}

double gram_objective(const std::vector<const Vec*>& cols, std::uint64_t* ops) {
    const auto& kt = kernels::active();
    double obj = 0.0;
    const std::size_t m = cols.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const cd g = kt.dotc(cols[i]->data(), cols[j]->data(), cols[i]->size());
            const cd e = (i == j) ? g - 1.0 : g;
            obj += std::norm(e);
        }
    }
    if (ops && m > 0) *ops += static_cast<std::uint64_t>(m * m * cols[0]->size());
    return obj;
}

namespace {

std::vector<int> candidates_of(std::size_t k, const std::vector<int>& excluded) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(k); ++i)
        if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) out.push_back(i);
    return out;
}

void fill_bar(SegmentationResult& r, std::size_t k) {
    r.k_bar.clear();
    for (int i = 0; i < static_cast<int>(k); ++i)
        if (std::find(r.k_perp.begin(), r.k_perp.end(), i) == r.k_perp.end()) r.k_bar.push_back(i);
}

void check_s(int s, std::size_t n_cand) {
    if (s < 1) throw Error(Errc::infeasible_stream_count, "stream count must be ≥ 1");
    if (static_cast<std::size_t>(s - 1) > n_cand)
        throw Error(Errc::infeasible_stream_count, "need " + std::to_string(s - 1) + " RISs but only " +
                                                       std::to_string(n_cand) + " non-collinear candidates");
}

std::vector<Vec> rx_steering(const SystemConfig& cfg, const Deployment& dep) {
    std::vector<Vec> a;
    for (int k = 0; k < dep.k(); ++k) a.push_back(steering(cfg.n_rx, dep.Theta_r_a[k + 1]));
    return a;
}

}  // namespace

SegmentationResult greedy_segment(const Vec& a0, const std::vector<Vec>& a, const std::vector<int>& excluded, int s) {
    SegmentationResult r;
    r.excluded_collinear = excluded;
    const auto cand = candidates_of(a.size(), excluded);
    check_s(s, cand.size());
    std::vector<const Vec*> cols{&a0};
    std::vector<char> used(a.size(), 0);
    for (int step = 0; step < s - 1; ++step) {
        int best = -1;
        double best_obj = 0.0;
        cols.push_back(nullptr);
        for (int k : cand) {
            if (used[k]) continue;
            cols.back() = &a[k];
            const double obj = gram_objective(cols, &r.op_count);
            if (best < 0 || obj < best_obj) {
                best = k;
                best_obj = obj;
            }
        }
        cols.back() = &a[best];
        used[best] = 1;
        r.k_perp.push_back(best);
        r.objective = best_obj;
    }
    if (s == 1) r.objective = gram_objective(cols);
    fill_bar(r, a.size());
    return r;
}

double binomial(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    r = std::min(r, n - r);
    double v = 1.0;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return std::round(v);
}

SegmentationResult exhaustive_segment(const Vec& a0, const std::vector<Vec>& a, const std::vector<int>& excluded,
                                      int s, double budget) {
    SegmentationResult r;
    r.excluded_collinear = excluded;
    const auto cand = candidates_of(a.size(), excluded);
    check_s(s, cand.size());
    const int m = s - 1;
    const double count = binomial(static_cast<int>(cand.size()), m);
    if (count > budget)
        throw Error(Errc::budget_exceeded, "exhaustive search over " + std::to_string(count) +
                                               " subsets exceeds the budget; use the greedy search");
    std::vector<int> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<const Vec*> cols(m + 1);
    cols[0] = &a0;
    bool first = true;
    while (true) {
        for (int i = 0; i < m; ++i) cols[i + 1] = &a[cand[pick[i]]];
        const double obj = gram_objective(cols, &r.op_count);
        if (first || obj < r.objective) {
            first = false;
            r.objective = obj;
            r.k_perp.clear();
            for (int i = 0; i < m; ++i) r.k_perp.push_back(cand[pick[i]]);
        }
        // next combination in lexicographic order
        int i = m - 1;
        while (i >= 0 && pick[i] == static_cast<int>(cand.size()) - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    fill_bar(r, a.size());
    return r;
}

SegmentationResult greedy_segment(const SystemConfig& cfg, const Deployment& dep, int s) {
    return greedy_segment(steering(cfg.n_rx, dep.Theta_r_a[0]), rx_steering(cfg, dep), collinear_filter(dep, cfg.n_tx),
                          s);
}

SegmentationResult exhaustive_segment(const SystemConfig& cfg, const Deployment& dep, int s, double budget) {
    return exhaustive_segment(steering(cfg.n_rx, dep.Theta_r_a[0]), rx_steering(cfg, dep),
                              collinear_filter(dep, cfg.n_tx), s, budget);
}

SegmentationResult by_pathloss(const Deployment& dep, int n_t, int s) {
    SegmentationResult r;
    r.excluded_collinear = collinear_filter(dep, n_t);
    auto cand = candidates_of(dep.ris.size(), r.excluded_collinear);
    check_s(s, cand.size());
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return dep.r_t[a] * dep.r_r[a] < dep.r_t[b] * dep.r_r[b]; });
    r.k_perp.assign(cand.begin(), cand.begin() + (s - 1));
    fill_bar(r, dep.ris.size());
    return r;
}

Complexity complexity_estimate(int k, int s, int n_r) {
    if (s - 1 < 1 || s - 1 > k) throw Error(Errc::invalid_input, "complexity_estimate needs 1 ≤ s-1 ≤ K");
    Complexity c;
    c.c1 = double(s) * s * n_r * binomial(k, s - 1);
    c.c2 = double(n_r) * (4.0 * k - 3.0 * s) * s * s * s / 12.0;
    c.ratio = c.c1 / c.c2;
    return c;
}

}  // namespace rischan
