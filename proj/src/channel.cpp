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

#include "rischan/channel.hpp"

#include <cmath>

#include "rischan/kernels.hpp"

namespace rischan {

double pathloss(double r, double lambda) { return lambda / (4.0 * kPi * r); }

Vec steering(int n, double Y) {
    Vec a(n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) a[i] = std::polar(s, i * Y);
    return a;
}

Vec upa_steering(int n_v, int n_h, double Phi, double Theta) {
    const Vec av = steering(n_v, Phi);
    const Vec ah = steering(n_h, Theta);
    Vec a(n_v * n_h);
    for (int v = 0; v < n_v; ++v)
        for (int h = 0; h < n_h; ++h) a[v * n_h + h] = av[v] * ah[h];
    return a;
}

double direct_gain(const SystemConfig& cfg, double r_0) {
    return cfg.quality_direct * std::sqrt(double(cfg.n_tx) * cfg.n_rx) * pathloss(r_0, cfg.lambda());
}

cd cascade_gain(const SystemConfig& cfg, double r_t, double r_r, cd f) {
    const double lam = cfg.lambda();
    return cfg.quality_tx_ris * cfg.quality_ris_rx * std::sqrt(double(cfg.n_tx) * cfg.n_rx) * pathloss(r_r, lam) *
           pathloss(r_t, lam) * f;
}

PathSet draw_paths(int count, const ArrayEnd& rx, double rx_spacing_wl, const ArrayEnd& tx, double tx_spacing_wl,
                   Rng& rng) {
    PathSet ps;
    auto step = [&rng](double d_wl) { return kTwoPi * d_wl * std::cos(kPi * rng.uniform()); };
    for (int l = 0; l < count; ++l) {
        NlosPath p;
        p.beta = rng.cn01();
        p.rx = rx;
        p.tx = tx;
        p.rx.phi = rx.n_v > 1 ? step(rx_spacing_wl) : 0.0;
        p.rx.theta = step(rx_spacing_wl);
        p.tx.phi = tx.n_v > 1 ? step(tx_spacing_wl) : 0.0;
        p.tx.theta = step(tx_spacing_wl);
        ps.nlos.push_back(p);
    }
    return ps;
}

Mat component_channel(const ArrayEnd& rx, const ArrayEnd& tx, double g, double quality, double kappa_lin,
                      const PathSet& paths) {
    const auto& kt = kernels::active();
    Mat H = Mat::Zero(rx.n(), tx.n());
    const double scale = std::sqrt(double(rx.n()) * tx.n()) * g;
    const bool los_only = std::isinf(kappa_lin);
    const double w_los = los_only ? 1.0 : std::sqrt(kappa_lin / (kappa_lin + 1.0));
    if (!los_only && paths.nlos.empty())
        throw Error(Errc::invalid_config, "finite Rician factor needs at least one NLoS path");
    if (w_los > 0.0) {
        const Vec ar = rx.response(), at = tx.response();
        kernels::rank1_update(kt, H.data(), H.rows(), H.rows(), H.cols(), scale * quality * w_los, ar.data(),
                              at.data());
    }
    if (!los_only) {
        const double w = scale * std::sqrt(1.0 / (kappa_lin + 1.0)) / std::sqrt(double(paths.nlos.size()));
        for (const auto& p : paths.nlos) {
            const Vec ar = p.rx.response(), at = p.tx.response();
            kernels::rank1_update(kt, H.data(), H.rows(), H.rows(), H.cols(), w * p.beta, ar.data(), at.data());
        }
    }
    return H;
}

ChannelRealization build_channel(const SystemConfig& cfg, const Deployment& dep, const std::vector<RisPanel>& panels,
                                 double kappa_db, Rng* nlos_rng) {
    if (panels.size() != dep.ris.size()) throw Error(Errc::invalid_config, "build_channel: panel count mismatch");
    ChannelRealization ch;
    ch.panels = panels;
    const bool los = std::isinf(kappa_db) && kappa_db > 0;
    ch.kappa_lin = los ? std::numeric_limits<double>::infinity() : db_to_lin(kappa_db);
    if (!los && !nlos_rng) throw Error(Errc::invalid_input, "build_channel: NLoS draw needs a random stream");
    const double lam = cfg.lambda();
    const int L = cfg.nlos_paths;
    auto paths = [&](const ArrayEnd& rx, double drx, const ArrayEnd& tx, double dtx) {
        return los ? PathSet{} : draw_paths(L, rx, drx, tx, dtx, *nlos_rng);
    };

    const ArrayEnd tx_d{1, cfg.n_tx, 0.0, dep.Theta_t_d[0]};
    const ArrayEnd rx_d{1, cfg.n_rx, 0.0, dep.Theta_r_a[0]};
    ch.g_0 = pathloss(dep.r_0, lam);
    ch.h_d = component_channel(rx_d, tx_d, ch.g_0, cfg.quality_direct, ch.kappa_lin,
                               paths(rx_d, cfg.rx_spacing_wl, tx_d, cfg.tx_spacing_wl));
    for (int k = 0; k < dep.k(); ++k) {
        const auto& p = panels[k];
        const ArrayEnd tx_k{1, cfg.n_tx, 0.0, dep.Theta_t_d[k + 1]};
        const ArrayEnd ris_a{p.n_v, p.n_h, dep.phi[k], dep.Theta_s_a[k]};
        const ArrayEnd ris_d{p.n_v, p.n_h, dep.phi[k], dep.Theta_s_d[k]};
        const ArrayEnd rx_k{1, cfg.n_rx, 0.0, dep.Theta_r_a[k + 1]};
        const double gt = pathloss(dep.r_t[k], lam), gr = pathloss(dep.r_r[k], lam);
        ch.g_t.push_back(gt);
        ch.g_r.push_back(gr);
        ch.h_t.push_back(component_channel(ris_a, tx_k, gt, cfg.quality_tx_ris, ch.kappa_lin,
                                           paths(ris_a, cfg.ris_spacing_wl, tx_k, cfg.tx_spacing_wl)));
        ch.h_r.push_back(component_channel(rx_k, ris_d, gr, cfg.quality_ris_rx, ch.kappa_lin,
                                           paths(rx_k, cfg.rx_spacing_wl, ris_d, cfg.ris_spacing_wl)));
    }
    return ch;
}

Mat compose(const ChannelRealization& ch, const RisDesign& design) {
    Mat H = ch.h_d;
    if (design.panels.empty()) return H;
    if (design.panels.size() != ch.h_t.size()) throw Error(Errc::invalid_config, "compose: design/channel size mismatch");
    const auto& kt = kernels::active();
    for (std::size_t k = 0; k < ch.h_t.size(); ++k) {
        const auto& panel = ch.panels[k];
        const auto& ph = design.panels[k].phases;
        if (static_cast<int>(ph.size()) != panel.n_h || ch.h_t[k].rows() != panel.n_s())
            throw Error(Errc::invalid_config, "compose: phase vector does not match RIS columns");
        // Gamma = I_{n_v} kron diag(exp(j w))
        Vec gam(panel.n_s());
        for (int v = 0; v < panel.n_v; ++v)
            for (int n = 0; n < panel.n_h; ++n) gam[v * panel.n_h + n] = std::polar(1.0, ph[n]);
        const Mat hr_t = ch.h_r[k].transpose();  // columns = rows of H_R, contiguous
        const Mat& ht = ch.h_t[k];
        for (Eigen::Index j = 0; j < H.cols(); ++j)
            for (Eigen::Index i = 0; i < H.rows(); ++i)
                H(i, j) += kt.triple_dotu(hr_t.col(i).data(), gam.data(), ht.col(j).data(), gam.size());
    }
    return H;
}

Mat compose_los(const SystemConfig& cfg, const Deployment& dep, const RisDesign& design) {
    const auto& kt = kernels::active();
    Mat H = Mat::Zero(cfg.n_rx, cfg.n_tx);
    auto add = [&](cd alpha, int idx) {
        const Vec ar = steering(cfg.n_rx, dep.Theta_r_a[idx]);
        const Vec at = steering(cfg.n_tx, dep.Theta_t_d[idx]);
        kernels::rank1_update(kt, H.data(), H.rows(), H.rows(), H.cols(), alpha, ar.data(), at.data());
    };
    add(design.alpha0, 0);
    for (std::size_t k = 0; k < design.alpha.size(); ++k) add(design.alpha[k], static_cast<int>(k) + 1);
    return H;
}

}  // namespace rischan
