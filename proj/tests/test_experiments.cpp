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
#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>

#include "rischan/experiments.hpp"

using namespace rischan;
namespace fs = std::filesystem;

namespace {

ScenarioConfig small(int trials, int workers) {
    ScenarioConfig c;
    c.campaign.trials = trials;
    c.campaign.workers = workers;
    c.campaign.s_values = {2, 4};
    c.campaign.heatmap_grid = 11;
    c.campaign.heatmap_s = {2};
    c.campaign.power_dbm = {20, 40};
    c.campaign.rician_db = {0, 9};
    return c;
}

int count_lines(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) ++n;
    return n;
}

}  // namespace

TEST_CASE("parallel_for visits each index once") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(1000, 7, [&](int i) { hits[i]++; });
    for (auto& h : hits) CHECK(h.load() == 1);
    parallel_for(0, 4, [&](int) { CHECK(false); });
}

TEST_CASE("CDF campaign is independent of the worker count") {
    const CdfReport a = run_cdf_campaign(build_scenario(small(16, 1)));
    const CdfReport b = run_cdf_campaign(build_scenario(small(16, 5)));
    REQUIRE(a.records.size() == b.records.size());
    CHECK(a.records.size() == 3 * 2 * 16);
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].trial == b.records[i].trial);
        CHECK(a.records[i].erank == b.records[i].erank);
        CHECK(a.records[i].sv == b.records[i].sv);
    }
    // strategies see the same receiver in a given trial
    const auto rx = trial_rx(build_scenario(small(16, 1)), 3);
    for (const auto& r : a.records)
        if (r.trial == 3) CHECK((r.rx.x == rx.x && r.rx.y == rx.y));
    for (const auto& r : a.records)
        if (r.ok) {
            CHECK(r.erank >= 1.0);
            CHECK(r.erank <= 8.0 + 1e-9);
            CHECK(r.t_s >= 1.0);
        }
}

TEST_CASE("different seeds give different receivers") {
    ScenarioConfig c = small(4, 1);
    const Vec2 a = trial_rx(build_scenario(c), 0);
    c.campaign.seed = 2;
    const Vec2 b = trial_rx(build_scenario(c), 0);
    CHECK(a.x != b.x);
    const Scenario sc = build_scenario(c);
    for (int t = 0; t < 200; ++t) CHECK(norm(trial_rx(sc, t) - sc.coverage.center) <= sc.coverage.radius + 1e-9);
}

TEST_CASE("heat map grid covers exactly the disk cells") {
    const Scenario sc = build_scenario(small(1, 3));
    for (int grid : {11, 101}) {
        int want = 0;
        const int h = (grid - 1) / 2;
        for (int iy = 0; iy < grid; ++iy)
            for (int ix = 0; ix < grid; ++ix) want += (ix - h) * (ix - h) + (iy - h) * (iy - h) <= h * h;
        CHECK(static_cast<int>(heatmap_points(sc.coverage, grid).size()) == want);
    }
    const HeatmapReport rep = run_heatmap_campaign(sc);
    CHECK(rep.masked_cells == static_cast<int>(heatmap_points(sc.coverage, 11).size()));
    CHECK(rep.cells.size() == 3 * static_cast<std::size_t>(rep.masked_cells));
}

TEST_CASE("statistics helpers") {
    CHECK(median({3, 1, 2}) == 2);
    CHECK(median({4, 1, 2, 3}) == 2.5);
    CHECK(quantile({0, 10}, 0.3) == doctest::Approx(3));
    CHECK(mean({1, 2, 3, 6}) == 3);
    CHECK(fraction({1, 5, 7, 9}, [](double v) { return v > 5; }) == 0.5);
    CHECK(ci95_half_width({1, 1, 1}) == 0);
    CHECK(std::isnan(median({})));
}

TEST_CASE("SE campaigns") {
    const Scenario sc = build_scenario(small(6, 2));
    const SeReport p = run_se_power_campaign(sc, {Allocation::waterfill});
    CHECK(p.excluded_trials == 0);
    // 4 strategies x 3 schemes x 2 powers
    CHECK(p.summary.size() == 4 * 3 * 2);
    for (const auto& s : p.summary) {
        CHECK(s.n == 6);
        CHECK(s.mean > 0);
    }
    // more power never lowers the mean SE of a scheme
    for (const auto& a : p.summary)
        for (const auto& b : p.summary)
            if (a.strategy == b.strategy && a.scheme == b.scheme && a.x < b.x) CHECK(a.mean <= b.mean + 1e-9);
    const SeReport r = run_se_rician_campaign(sc);
    for (const auto& s : r.summary)
        if (s.scheme == Scheme::cc_hybrid && s.strategy != Strategy::none) CHECK(!std::isnan(s.median_gap));
}

TEST_CASE("figure files") {
    const fs::path dir = fs::temp_directory_path() / "rischan_test_fig";
    fs::remove_all(dir);
    const ScenarioConfig c = small(5, 2);
    const auto files = run_figure(c, Figure::erank_cdf, dir);
    REQUIRE(files.size() == 3);
    for (const auto& f : files) CHECK(fs::exists(f));
    // header + one row per trial and strategy/s
    CHECK(count_lines(files[1]) == 1 + 3 * 2 * 5);
    const auto h = run_figure(c, Figure::heatmap, dir);
    CHECK(count_lines(h[0]) == 1 + 3 * static_cast<int>(heatmap_points(coverage_of(c.system), 11).size()));
    // rerun is byte-identical
    std::ifstream a(files[0]);
    const std::string first((std::istreambuf_iterator<char>(a)), {});
    run_figure(c, Figure::erank_cdf, dir);
    std::ifstream b(files[0]);
    CHECK(first == std::string((std::istreambuf_iterator<char>(b)), {}));
    fs::remove_all(dir);
}
