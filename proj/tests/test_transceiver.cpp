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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rischan/experiments.hpp"
#include "rischan/transceiver.hpp"

using namespace rischan;

namespace {

// water level by bisection on sum max(mu - n/l, 0) = E
double level_oracle(const std::vector<double>& l, double E, double n) {
    double lo = 0, hi = E;
    for (double x : l) hi = std::max(hi, E + n / x);
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        double s = 0;
        for (double x : l) s += std::max(mid - n / x, 0.0);
        (s > E ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

Mat random_unitary(int n, Rng& rng) {
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.cn01();
    Eigen::HouseholderQR<Mat> qr(a);
    return qr.householderQ() * Mat::Identity(n, n);
}

}  // namespace

TEST_CASE("waterfill against bisection and KKT") {
    Rng rng(1);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 8;
        std::vector<double> l(n);
        for (auto& x : l) x = std::exp(6 * rng.normal());
        const double E = std::exp(4 * rng.normal()), noise = std::exp(rng.normal());
        const PowerAllocation pa = waterfill(l, E, noise);
        const double mu = level_oracle(l, E, noise);
        CHECK(pa.mu == doctest::Approx(mu).epsilon(1e-9));
        CHECK(std::accumulate(pa.p.begin(), pa.p.end(), 0.0) == doctest::Approx(E).epsilon(1e-10));
        for (int i = 0; i < n; ++i) {
            CHECK(pa.p[i] >= 0);
            if (pa.active[i])
                CHECK(pa.p[i] + noise / l[i] == doctest::Approx(pa.mu).epsilon(1e-10));
            else
                CHECK(noise / l[i] >= pa.mu * (1 - 1e-12));
        }
    }
}

TEST_CASE("waterfill two-mode cases") {
    // low power: everything on the strong mode
    PowerAllocation pa = waterfill({1.0, 0.01}, 10.0, 1.0);
    CHECK(pa.active_count() == 1);
    CHECK(pa.p[0] == doctest::Approx(10.0));
    // enough power: both on, equal level
    pa = waterfill({1.0, 0.01}, 1000.0, 1.0);
    CHECK(pa.active_count() == 2);
    CHECK(pa.p[0] - pa.p[1] == doctest::Approx(99.0));
    CHECK_THROWS_AS(waterfill({1.0, 0.0}, 1.0, 1.0), Error);
    const PowerAllocation eq = equal_power(4, 2.0);
    for (double p : eq.p) CHECK(p == 0.5);
}

TEST_CASE("spectral efficiency closed forms and invariances") {
    Mat H = Mat::Zero(3, 3);
    H(0, 0) = 2;
    H(1, 1) = cd(0, 1);
    const Mat I = Mat::Identity(3, 3);
    SeResult r = spectral_efficiency(H, I, I, 0.5);
    CHECK(r.se == doctest::Approx(std::log2(1 + 8.0) + std::log2(1 + 2.0)));
    CHECK(!r.whitened);
    // a scaled combiner is whitened back
    r = spectral_efficiency(H, I, 3.0 * I, 0.5);
    CHECK(r.whitened);
    CHECK(r.se == doctest::Approx(std::log2(9.0) + std::log2(3.0)));

    Rng rng(3);
    Mat G(8, 32);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 32; ++j) G(i, j) = rng.cn01();
    Mat F = Mat::Zero(32, 4), W = Mat::Zero(8, 4);
    for (int i = 0; i < 4; ++i) {
        F(i, i) = 1;
        W(i, i) = 1;
    }
    const double base = spectral_efficiency(G, F, W, 0.1).se;
    const Mat U = random_unitary(8, rng), V = random_unitary(32, rng);
    CHECK(spectral_efficiency(U * G * V, V.adjoint() * F, U * W, 0.1).se == doctest::Approx(base).epsilon(1e-10));
}

TEST_CASE("svd-full with waterfilling reaches capacity") {
    Rng rng(7);
    Mat H(8, 32);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 32; ++j) H(i, j) = rng.cn01();
    const double E = 3.0, noise = 1.0;
    const Beamformers bf = svd_beamformers(H, E, noise, 0, Allocation::waterfill);
    CHECK(bf.f_rf.cols() == 8);
    const double se = spectral_efficiency(H, bf.precoder(), bf.combiner(), noise).se;
    Eigen::JacobiSVD<Mat> svd(H);
    std::vector<double> l;
    for (int i = 0; i < 8; ++i) l.push_back(std::pow(svd.singularValues()[i], 2));
    const double mu = level_oracle(l, E, noise);
    double cap = 0;
    for (double x : l) cap += std::log2(std::max(1.0, mu * x / noise));
    CHECK(se == doctest::Approx(cap).epsilon(1e-9));
    const Beamformers tr = svd_beamformers(H, E, noise, 3, Allocation::equal);
    CHECK(spectral_efficiency(H, tr.precoder(), tr.combiner(), noise).se <= se + 1e-12);
    CHECK_THROWS_AS(svd_beamformers(H.col(0) * H.row(0), E, noise, 2, Allocation::equal), Error);
}

TEST_CASE("threshold power and waterfill activation") {
    Rng rng(9);
    for (int t = 0; t < 100; ++t) {
        const double noise = 1e-13;
        const double a0 = 1e-6 * (0.5 + rng.uniform());
        std::vector<double> gains;
        const int m = 1 + t % 6;
        for (int i = 0; i < m; ++i) gains.push_back(a0 * (1.0 + 5 * rng.uniform()));
        const double eth = power_threshold(a0, gains, noise);
        CHECK(eth >= 0);
        std::vector<double> l{a0 * a0};
        for (double g : gains) l.push_back(g * g);
        CHECK(waterfill(l, eth * (1 + 1e-6) + 1e-30, noise).active_count() == m + 1);
        if (eth > 0) CHECK(waterfill(l, eth * (1 - 1e-3), noise).active_count() <= m);
        // one more RIS raises the threshold by Delta E, bounded by noise/|a0|^2
        const double c = a0 * (1.0 + 10 * rng.uniform());
        std::vector<double> more(gains);
        more.push_back(c);
        CHECK(power_threshold(a0, more, noise) - eth ==
              doctest::Approx(delta_threshold(a0, c, noise)).epsilon(1e-9));
        CHECK(delta_threshold(a0, c, noise) < noise / (a0 * a0));
    }
    CHECK(delta_threshold(1.0, 1e9, 1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(power_threshold(0.0, {1.0}, 1.0), Error);
    const ThresholdReport r = threshold_report(1.0, {0.5, 2.0}, {2.0, 2.0}, {4.0}, 1.0);
    CHECK(!r.alpha0_is_min);
    CHECK(r.e_th_max == doctest::Approx(2 - 0.5));
    CHECK(r.delta_max.size() == 1);
}

TEST_CASE("cc-hybrid beams on the default deployment") {
    const Scenario sc = build_scenario(ScenarioConfig{});
    const auto& cfg = sc.cfg.system;
    const LinkResult lr = evaluate_link(sc, {100, 5}, Strategy::mpg, 4, nullptr);
    const double E = dbm_to_watt(40), noise = cfg.noise_w();
    const Beamformers bf = cc_hybrid_beamformers(cfg, lr.dep, lr.seg.k_perp, lr.design, lr.H, E, noise,
                                                 Allocation::waterfill);
    CHECK(bf.f_rf.cols() == 4);
    for (int c = 0; c < 4; ++c) CHECK(bf.f_rf.col(c).norm() == doctest::Approx(1.0));
    double p = 0;
    for (double x : bf.power.p) p += x;
    CHECK(p == doctest::Approx(E));
    const double cc = spectral_efficiency(lr.H, bf.precoder(), bf.combiner(), noise).se;
    const Beamformers full = svd_beamformers(lr.H, E, noise, 0, Allocation::waterfill);
    CHECK(cc <= spectral_efficiency(lr.H, full.precoder(), full.combiner(), noise).se + 1e-9);
    CHECK(cc > 0);
}
