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

#include "rischan/ris_design.hpp"

#include <algorithm>
#include <cmath>

#include "rischan/channel.hpp"
#include "rischan/kernels.hpp"

namespace rischan {

double quantization_loss(std::optional<int> bits) {
    if (!bits) return 1.0;
    const double x = kPi / std::ldexp(1.0, *bits);
    return std::sin(x) / x;
}

int size_ris(double r_t, double r_r_max, double r_0_min, double i_k, double lambda, std::optional<int> bits) {
    if (!(r_t > 0 && r_r_max > 0 && r_0_min > 0 && i_k > 0 && lambda > 0))
        throw Error(Errc::invalid_input, "size_ris: distances, link quality and wavelength must be > 0");
    const double n = 4.0 * kPi / quantization_loss(bits) * r_r_max * r_t / (i_k * r_0_min * lambda);
    // guard against 1360.0000000001 style round-off before the ceiling
    return static_cast<int>(std::ceil(n - 1e-9 * n));
}

std::vector<int> element_counts(const SystemConfig& cfg, const std::vector<Vec2>& ris) {
    const CoverageDisk cov = coverage_of(cfg);
    const double r0_min = norm(cfg.tx - cov.center) - cov.radius;
    if (!(r0_min > 0)) throw Error(Errc::invalid_config, "coverage disk contains the Tx; sizing undefined");
    const std::optional<int> b = cfg.sizing_quantization_loss ? cfg.phase_bits() : std::nullopt;
    std::vector<int> out;
    for (const auto& p : ris) {
        const double rt = norm(p - cfg.tx);
        const double rr_max = norm(p - cov.center) + cov.radius;
        out.push_back(size_ris(rt, rr_max, r0_min, cfg.quality_ratio(), cfg.lambda(), b));
    }
    return out;
}

std::vector<RisPanel> size_panels(const SystemConfig& cfg, const std::vector<Vec2>& ris) {
    std::vector<RisPanel> out;
    for (int n : element_counts(cfg, ris)) {
        RisPanel p;
        p.n_v = cfg.ris_rows;
        p.n_h = (n + p.n_v - 1) / p.n_v;
        out.push_back(p);
    }
    return out;
}

int quantize_index(double w, int bits) {
    const long long m = 1LL << bits;
    const double step = kTwoPi / static_cast<double>(m);
    long long i = static_cast<long long>(std::floor(w / step + 0.5)) % m;
    if (i < 0) i += m;
    return static_cast<int>(i == 0 ? m : i);
}

double grid_phase(int index, int bits) { return kTwoPi * index / std::ldexp(1.0, bits); }

double quantize_phase(double w, int bits) { return grid_phase(quantize_index(w, bits), bits); }

cd array_gain(int n_v, const std::vector<double>& phases, double delta_theta) {
    const std::size_t n = phases.size();
    Vec x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = std::polar(1.0, static_cast<double>(i) * delta_theta);
        y[i] = std::polar(1.0, phases[i]);
    }
    return static_cast<double>(n_v) * kernels::active().dotc(x.data(), y.data(), n);
}

int hpg_gamma(double r_r, double r_t, double r_0, double i_k, double lambda, int n_v, std::optional<int> bits) {
    const double g = 4.0 * kPi / quantization_loss(bits) * r_r * r_t / (i_k * r_0 * lambda * n_v);
    return static_cast<int>(std::ceil(g - 1e-9 * g));
}

namespace {

void set_column(PanelDesign& d, int n, double w, std::optional<int> bits) {
    if (bits) {
        const int i = quantize_index(w, *bits);
        d.grid_index[n] = i;
        d.phases[n] = grid_phase(i, *bits);
    } else {
        d.phases[n] = w - kTwoPi * std::floor(w / kTwoPi);
    }
}

PanelDesign blank(const RisPanel& p, std::optional<int> bits) {
    PanelDesign d;
    d.phases.assign(p.n_h, 0.0);
    // zero phase is grid point 2^b (= 2 pi)
    if (bits) {
        d.grid_index.assign(p.n_h, 1 << *bits);
        std::fill(d.phases.begin(), d.phases.end(), kTwoPi);
    }
    return d;
}

}  // namespace

PanelDesign design_off(const RisPanel& p, double delta_theta, std::optional<int> bits) {
    PanelDesign d = blank(p, bits);
    d.f = array_gain(p.n_v, d.phases, delta_theta);
    return d;
}

PanelDesign design_mpg(const RisPanel& p, double delta_theta, std::optional<int> bits) {
    PanelDesign d = blank(p, bits);
    for (int n = 0; n < p.n_h; ++n) set_column(d, n, optimal_phase_continuous(n, delta_theta), bits);
    d.gamma = p.n_h;
    d.f = array_gain(p.n_v, d.phases, delta_theta);
    return d;
}

PanelDesign design_hpg(const RisPanel& p, double delta_theta, std::optional<int> bits, int gamma) {
    if (gamma > p.n_h)
        throw Error(Errc::coverage_violation, "HPG needs " + std::to_string(gamma) + " columns but the panel has " +
                                                  std::to_string(p.n_h) + " (Rx outside the sized coverage)");
    gamma = std::max(gamma, 0);
    PanelDesign d = blank(p, bits);
    for (int n = 0; n < gamma; ++n) set_column(d, n, optimal_phase_continuous(n, delta_theta), bits);
    d.gamma = gamma;
    d.f = array_gain(p.n_v, d.phases, delta_theta);
    return d;
}

PanelDesign design_rpg(const RisPanel& p, double delta_theta, std::optional<int> bits, Rng& rng) {
    PanelDesign d = blank(p, bits);
    for (int n = 0; n < p.n_h; ++n) {
        if (bits) {
            const int i = rng.uniform_int(1, 1 << *bits);
            d.grid_index[n] = i;
            d.phases[n] = grid_phase(i, *bits);
        } else {
            d.phases[n] = kTwoPi * rng.uniform();
        }
    }
    d.f = array_gain(p.n_v, d.phases, delta_theta);
    return d;
}

RisDesign design_link(Strategy strategy, const SystemConfig& cfg, const Deployment& dep,
                      const std::vector<RisPanel>& panels, const std::vector<int>& active, Rng* rng) {
    RisDesign out;
    out.strategy = strategy;
    out.bits = cfg.phase_bits();
    out.active = active;
    out.alpha0 = direct_gain(cfg, dep.r_0);
    if (strategy == Strategy::none) return out;
    if (panels.size() != dep.ris.size()) throw Error(Errc::invalid_config, "design_link: panel count mismatch");
    if (strategy == Strategy::rpg && !rng) throw Error(Errc::invalid_input, "design_link: RPG needs a random stream");

    std::vector<char> is_active(panels.size(), 0);
    for (int k : active) {
        if (k < 0 || k >= static_cast<int>(panels.size())) throw Error(Errc::invalid_input, "active RIS index out of range");
        is_active[k] = 1;
    }
    const double lam = cfg.lambda();
    for (std::size_t k = 0; k < panels.size(); ++k) {
        const auto& p = panels[k];
        const double dt = dep.delta_theta(static_cast<int>(k));
        PanelDesign d;
        if (strategy == Strategy::rpg) {
            d = design_rpg(p, dt, out.bits, *rng);
        } else if (is_active[k] && strategy == Strategy::mpg) {
            d = design_mpg(p, dt, out.bits);
        } else if (is_active[k] && strategy == Strategy::hpg) {
            const int g = hpg_gamma(dep.r_r[k], dep.r_t[k], dep.r_0, cfg.quality_ratio(), lam, p.n_v, out.bits);
            d = design_hpg(p, dt, out.bits, g);
        } else {
            d = design_off(p, dt, out.bits);
        }
        out.alpha.push_back(cascade_gain(cfg, dep.r_t[k], dep.r_r[k], d.f));
        out.panels.push_back(std::move(d));
    }
    return out;
}

}  // namespace rischan
