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

#include "rischan/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace rischan {

std::vector<double> dft_directions(int n_t) {
    if (n_t < 2) throw Error(Errc::invalid_config, "dft_directions: N_T must be ≥ 2");
    std::vector<double> out(n_t);
    for (int i = 1; i <= n_t; ++i) out[i - 1] = std::asin(std::clamp(2.0 * i / n_t - 1.0, -1.0, 1.0));
    return out;
}

std::vector<int> select_rays(int n_t, int k, RaySelection rule) {
    if (k + 1 > n_t) throw Error(Errc::invalid_config, "K+1 > N_T: not enough DFT rays for the RIS curve");
    std::vector<int> cand;
    for (int i = 1; i < n_t; ++i) {
        if (rule == RaySelection::exclude_boresight && 2 * i == n_t) continue;
        cand.push_back(i);
    }
    // |sin eps| = |2i - N_T| / N_T; ties go to the positive side
    std::stable_sort(cand.begin(), cand.end(), [n_t](int a, int b) {
        const int da = std::abs(2 * a - n_t), db = std::abs(2 * b - n_t);
        if (da != db) return da < db;
        return a > b;
    });
    if (static_cast<int>(cand.size()) < k) throw Error(Errc::invalid_config, "not enough DFT rays for ris.count");
    cand.resize(k);
    std::vector<int> boresight, neg, pos;
    for (int i : cand) {
        if (2 * i == n_t) boresight.push_back(i);
        else if (2 * i < n_t) neg.push_back(i);
        else pos.push_back(i);
    }
    std::sort(neg.rbegin(), neg.rend());
    std::sort(pos.begin(), pos.end());
    std::vector<int> out = boresight;
    out.insert(out.end(), neg.begin(), neg.end());
    out.insert(out.end(), pos.begin(), pos.end());
    return out;
}

RisLayout place_ris_on_curve(const SystemConfig& cfg) {
    RisLayout lay;
    lay.ray_index = select_rays(cfg.n_tx, cfg.ris_count, cfg.ray_selection);
    for (int i : lay.ray_index) lay.eps.push_back(std::asin(2.0 * i / cfg.n_tx - 1.0));
    for (double e : lay.eps) lay.eps_max = std::max(lay.eps_max, std::abs(e));
    for (double e : lay.eps) {
        const double frac = lay.eps_max > 0 ? 1.0 - std::abs(e) / lay.eps_max : 1.0;
        const double rho = cfg.curve_rho_min_m + (cfg.curve_rho_max_m - cfg.curve_rho_min_m) * frac;
        lay.positions.push_back({cfg.tx.x + rho * std::cos(e), cfg.tx.y + rho * std::sin(e)});
    }
    return lay;
}

Vec2 disk_point(const CoverageDisk& disk, double u, double v) {
    const double r = disk.radius * std::sqrt(u);
    const double a = kTwoPi * v;
    return {disk.center.x + r * std::cos(a), disk.center.y + r * std::sin(a)};
}

Vec2 sample_rx(const CoverageDisk& disk, Rng& rng) {
    const double u = rng.uniform();
    const double v = rng.uniform();
    return disk_point(disk, u, v);
}

namespace {

Vec2 unit(Vec2 a) {
    const double n = norm(a);
    if (!(n > 1e-12)) throw Error(Errc::degenerate_geometry, "zero-length direction");
    return (1.0 / n) * a;
}

}  // namespace

Vec2 panel_axis(Orientation o, Vec2 ris, Vec2 tx, Vec2 coverage_center) {
    Vec2 normal;
    switch (o) {
        case Orientation::face_tx: normal = unit(tx - ris); break;
        case Orientation::face_coverage: normal = unit(coverage_center - ris); break;
        case Orientation::bisector: {
            const Vec2 b = unit(tx - ris) + unit(coverage_center - ris);
            normal = norm(b) > 1e-9 ? unit(b) : unit(tx - ris);
            break;
        }
        case Orientation::fixed_x: normal = {1.0, 0.0}; break;
    }
    return {-normal.y, normal.x};
}

CoverageDisk coverage_of(const SystemConfig& cfg) { return {cfg.coverage_center, cfg.coverage_radius_m}; }

Deployment solve_geometry(const SystemConfig& cfg, const std::vector<Vec2>& ris, const std::vector<Vec2>& axis,
                          Vec2 rx) {
    if (ris.size() != axis.size()) throw Error(Errc::invalid_input, "solve_geometry: axis count mismatch");
    const double ct = kTwoPi * cfg.tx_spacing_wl, cr = kTwoPi * cfg.rx_spacing_wl, cs = kTwoPi * cfg.ris_spacing_wl;

    Deployment d;
    d.tx = cfg.tx;
    d.rx = rx;
    d.ris = ris;
    d.axis = axis;
    auto dist = [](Vec2 a, Vec2 b, const char* what) {
        const double r = norm(a - b);
        if (!(r > 1e-9)) throw Error(Errc::degenerate_geometry, std::string("coincident positions: ") + what);
        return r;
    };
    d.r_0 = dist(d.tx, rx, "Tx and Rx");
    // Tx/Rx ULAs lie along y with broadside +x, so sin(theta) is the y-component
    // of the unit direction.
    const Vec2 u_tr = (1.0 / d.r_0) * (rx - d.tx);
    d.theta_t_d.push_back(std::atan2(u_tr.y, u_tr.x));
    d.theta_r_a.push_back(std::atan2(-u_tr.y, -u_tr.x));
    d.Theta_t_d.push_back(ct * u_tr.y);
    d.Theta_r_a.push_back(cr * -u_tr.y);

    for (std::size_t k = 0; k < ris.size(); ++k) {
        const double rt = dist(d.tx, ris[k], "Tx and RIS");
        const double rr = dist(rx, ris[k], "Rx and RIS");
        d.r_t.push_back(rt);
        d.r_r.push_back(rr);
        const Vec2 u_ts = (1.0 / rt) * (ris[k] - d.tx);  // Tx -> RIS
        const Vec2 u_rs = (1.0 / rr) * (ris[k] - rx);    // Rx -> RIS
        d.theta_t_d.push_back(std::atan2(u_ts.y, u_ts.x));
        d.theta_r_a.push_back(std::atan2(u_rs.y, u_rs.x));
        d.Theta_t_d.push_back(ct * u_ts.y);
        d.Theta_r_a.push_back(cr * u_rs.y);
        const Vec2 h = axis[k];
        const Vec2 to_tx = -1.0 * u_ts, to_rx = -1.0 * u_rs;
        d.Theta_s_a.push_back(cs * dot(to_tx, h));
        d.Theta_s_d.push_back(-cs * dot(to_rx, h));
        d.phi.push_back(0.0);
    }
    return d;
}

}  // namespace rischan
