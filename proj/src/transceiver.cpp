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

#include "rischan/transceiver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rischan/channel.hpp"

namespace rischan {

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::cc_hybrid: return "cc-hybrid";
        case Scheme::svd_full: return "svd-full";
        case Scheme::svd_truncated: return "svd-truncated";
    }
    return "?";
}

const char* to_string(Allocation a) { return a == Allocation::equal ? "equal" : "waterfill"; }

int PowerAllocation::active_count() const { return static_cast<int>(std::count(active.begin(), active.end(), true)); }

PowerAllocation waterfill(const std::vector<double>& lambdas, double E, double noise) {
    const std::size_t n = lambdas.size();
    PowerAllocation out;
    out.p.assign(n, 0.0);
    out.active.assign(n, false);
    if (n == 0) return out;
    if (!(E >= 0) || !(noise > 0)) throw Error(Errc::invalid_input, "waterfill: need E ≥ 0 and noise > 0");
    std::vector<double> floor_(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(lambdas[i] > 0)) throw Error(Errc::invalid_input, "waterfill: gains must be > 0");
        floor_[i] = noise / lambdas[i];
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return floor_[a] < floor_[b]; });
    // grow the active set from the lowest floor; prefix sums in ascending
    // order keep huge inactive floors out of the level
    std::size_t m = 1;
    double sum = floor_[order[0]];
    double mu = E + sum;
    while (m < n && mu > floor_[order[m]]) {
        sum += floor_[order[m]];
        ++m;
        mu = (E + sum) / static_cast<double>(m);
    }
    out.mu = mu;
    for (std::size_t a = 0; a < m; ++a) {
        const std::size_t i = order[a];
        // p_i = (E + sum_j (f_j - f_i)) / m, differences taken before summing
        double d = 0.0;
        for (std::size_t b = 0; b < m; ++b) d += floor_[order[b]] - floor_[i];
        const double p = (E + d) / static_cast<double>(m);
        if (p > 0) {
            out.p[i] = p;
            out.active[i] = true;
        }
    }
    return out;
}

PowerAllocation equal_power(int n, double E) {
    PowerAllocation out;
    out.p.assign(n, n > 0 ? E / n : 0.0);
    out.active.assign(n, E > 0);
    out.mu = n > 0 ? E / n : 0.0;
    return out;
}

namespace {

Mat diag_sqrt(const std::vector<double>& p) {
    Mat D = Mat::Zero(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) D(i, i) = std::sqrt(std::max(p[i], 0.0));
    return D;
}

}  // namespace

Beamformers cc_hybrid_beamformers(const SystemConfig& cfg, const Deployment& dep, const std::vector<int>& k_perp,
                                  const RisDesign& design, const Mat& H, double E, double noise, Allocation alloc) {
    const int s = static_cast<int>(k_perp.size()) + 1;
    if (s > cfg.rf_tx || s > cfg.rf_rx)
        throw Error(Errc::infeasible_stream_count, "more streams than RF chains");
    Beamformers bf;
    bf.scheme = Scheme::cc_hybrid;
    bf.f_rf.resize(cfg.n_tx, s);
    bf.w_rf.resize(cfg.n_rx, s);
    auto gain_phase = [&](int idx) -> double {
        if (idx == 0) return std::arg(design.alpha0);
        const auto k = static_cast<std::size_t>(idx - 1);
        return k < design.alpha.size() ? std::arg(design.alpha[k]) : 0.0;
    };
    for (int c = 0; c < s; ++c) {
        const int idx = c == 0 ? 0 : k_perp[c - 1] + 1;
        bf.f_rf.col(c) = steering(cfg.n_tx, dep.Theta_t_d[idx]) * std::polar(1.0, -gain_phase(idx));
        bf.w_rf.col(c) = steering(cfg.n_rx, dep.Theta_r_a[idx]);
    }
    if (alloc == Allocation::waterfill) {
        const Mat eff = bf.w_rf.adjoint() * H * bf.f_rf;
        std::vector<double> lam(s);
        for (int i = 0; i < s; ++i) lam[i] = std::max(std::norm(eff(i, i)), 1e-300);
        bf.power = waterfill(lam, E, noise);
    } else {
        bf.power = equal_power(s, E);
    }
    bf.f_bb = diag_sqrt(bf.power.p);
    bf.w_bb = Mat::Identity(s, s);
    return bf;
}

Beamformers svd_beamformers(const Mat& H, double E, double noise, int streams, Allocation alloc) {
    Eigen::JacobiSVD<Mat> svd(H, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const int full = static_cast<int>(sv.size());
    int rank = 0;
    for (int i = 0; i < full; ++i)
        if (sv[i] > 1e-12 * sv[0]) ++rank;
    int n = streams == 0 ? rank : streams;
    if (n < 1 || n > rank)
        throw Error(Errc::infeasible_stream_count, "channel rank " + std::to_string(rank) + " below " +
                                                       std::to_string(n) + " requested streams");
    Beamformers bf;
    bf.scheme = streams == 0 ? Scheme::svd_full : Scheme::svd_truncated;
    std::vector<double> lam(n);
    for (int i = 0; i < n; ++i) lam[i] = sv[i] * sv[i];
    bf.power = alloc == Allocation::waterfill ? waterfill(lam, E, noise) : equal_power(n, E);
    bf.f_rf = svd.matrixV().leftCols(n);
    bf.f_bb = diag_sqrt(bf.power.p);
    bf.w_rf = svd.matrixU().leftCols(n);
    bf.w_bb = Mat::Identity(n, n);
    return bf;
}

SeResult spectral_efficiency(const Mat& H, const Mat& F, const Mat& W, double noise) {
    SeResult r;
    const Mat Q = W.adjoint() * W;
    Mat M = W.adjoint() * H * F;
    const Mat I = Mat::Identity(Q.rows(), Q.cols());
    if ((Q - I).norm() > 1e-9) {
        r.whitened = true;
        Eigen::SelfAdjointEigenSolver<Mat> es(Q);
        const auto& d = es.eigenvalues();
        const double dmax = d.maxCoeff();
        Eigen::VectorXd inv_sqrt(d.size());
        for (Eigen::Index i = 0; i < d.size(); ++i) inv_sqrt[i] = d[i] > 1e-12 * dmax ? 1.0 / std::sqrt(d[i]) : 0.0;
        const Mat Qis = es.eigenvectors() * inv_sqrt.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
        M = Qis * M;
    }
    const Mat G = M * M.adjoint();
    Eigen::SelfAdjointEigenSolver<Mat> es(G, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        r.se += std::log2(1.0 + std::max(es.eigenvalues()[i], 0.0) / noise);
    return r;
}

double power_threshold(double alpha0, const std::vector<double>& gains, double noise) {
    if (!(alpha0 > 0)) throw Error(Errc::invalid_design, "power_threshold: direct-link gain is zero");
    double e = static_cast<double>(gains.size()) * noise / (alpha0 * alpha0);
    for (double g : gains) {
        if (!(g > 0)) throw Error(Errc::invalid_design, "power_threshold: an activated RIS has zero path gain");
        e -= noise / (g * g);
    }
    return e;
}

double delta_threshold(double alpha0, double candidate_max, double noise) {
    if (!(alpha0 > 0) || !(candidate_max > 0)) throw Error(Errc::invalid_design, "delta_threshold: zero path gain");
    return noise / (alpha0 * alpha0) - noise / (candidate_max * candidate_max);
}

ThresholdReport threshold_report(double alpha0, const std::vector<double>& gains, const std::vector<double>& gains_max,
                                 const std::vector<double>& candidates_max, double noise) {
    ThresholdReport r;
    r.e_th = power_threshold(alpha0, gains, noise);
    r.e_th_max = power_threshold(alpha0, gains_max, noise);
    for (double g : gains) r.alpha0_is_min = r.alpha0_is_min && g >= alpha0;
    for (double c : candidates_max) r.delta_max.push_back(delta_threshold(alpha0, c, noise));
    return r;
}

}  // namespace rischan
