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

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rischan/channel.hpp"
#include "rischan/config.hpp"
#include "rischan/geometry.hpp"
#include "rischan/io.hpp"
#include "rischan/metrics.hpp"
#include "rischan/ris_design.hpp"
#include "rischan/segmentation.hpp"
#include "rischan/transceiver.hpp"

namespace rischan {

// Fixed part of a campaign: RIS positions, panel orientation and sizes.
struct Scenario {
    ScenarioConfig cfg;
    std::vector<Vec2> ris;
    std::vector<Vec2> axis;
    std::vector<int> element_counts;
    std::vector<RisPanel> panels;
    CoverageDisk coverage;
};

Scenario build_scenario(const ScenarioConfig& cfg);

// One LoS-only link: geometry, segmentation, design, composite channel, spectrum.
struct LinkResult {
    Deployment dep;
    SegmentationResult seg;
    RisDesign design;
    Mat H;
    SpectrumReport spec;
};

// rpg_rng is only used by Strategy::rpg. Strategy::none drops the RISs.
// LoS-only unless link.rician_db is finite and an NLoS stream is given.
LinkResult evaluate_link(const Scenario& sc, Vec2 rx, Strategy strategy, int s, Rng* rpg_rng, Rng* nlos_rng = nullptr);

// Runs body(i) for i in [0, n) on `workers` threads. Each index is handled
// exactly once; callers store results by index so output order never
// depends on scheduling.
void parallel_for(int n, int workers, const std::function<void(int)>& body);

Vec2 trial_rx(const Scenario& sc, int trial);

// ---- rank / effective rank / condition number CDFs
struct CdfRecord {
    Strategy strategy;
    int s = 0;
    int trial = 0;
    Vec2 rx;
    bool ok = false;
    std::string error;
    int rank = 0;
    double erank = 0.0;
    double t_s = 0.0;
    double t_3 = 0.0;
    std::vector<double> sv;
};

struct CdfReport {
    std::vector<CdfRecord> records;  // ordered by (strategy, s, trial)
    std::vector<double> values(Strategy st, int s, const std::function<double(const CdfRecord&)>& f) const;
    int excluded(Strategy st, int s) const;
};

CdfReport run_cdf_campaign(const Scenario& sc);

// ---- coverage heat map of T_s
struct HeatCell {
    Strategy strategy;
    int s = 0;
    int ix = 0, iy = 0;
    Vec2 pos;
    bool ok = false;
    double t_s = 0.0;
};

struct HeatmapReport {
    int grid = 0;
    int masked_cells = 0;
    std::vector<HeatCell> cells;  // ordered by (strategy, s, iy, ix)
};

std::vector<Vec2> heatmap_points(const CoverageDisk& disk, int grid, std::vector<std::pair<int, int>>* idx = nullptr);
HeatmapReport run_heatmap_campaign(const Scenario& sc);

// ---- spectral efficiency
struct SeRecord {
    Strategy strategy;
    Scheme scheme;
    Allocation allocation;
    double x = 0.0;  // transmit power (dBm) or Rician factor (dB)
    int trial = 0;
    bool ok = false;
    double se = 0.0;
};

struct SeSummary {
    Strategy strategy;
    Scheme scheme;
    Allocation allocation;
    double x = 0.0;
    int n = 0;
    double mean = 0.0, median = 0.0, ci95 = 0.0;
    double median_gap = std::numeric_limits<double>::quiet_NaN();  // cc-hybrid vs truncated SVD, Rician sweep
};

struct SeReport {
    std::vector<SeRecord> records;
    std::vector<SeSummary> summary;
    int excluded_trials = 0;
};

// Strategies evaluated in SE campaigns: the configured ones plus the no-RIS baseline.
std::vector<Strategy> se_strategies(const CampaignConfig& c);

SeReport run_se_power_campaign(const Scenario& sc, const std::vector<Allocation>& allocations);
SeReport run_se_rician_campaign(const Scenario& sc);

// ---- statistics helpers
double median(std::vector<double> v);
double quantile(std::vector<double> v, double q);
double mean(const std::vector<double>& v);
double ci95_half_width(const std::vector<double>& v);
double fraction(const std::vector<double>& v, const std::function<bool(double)>& pred);

// ---- file output (CSV + JSON summary); returns written paths
enum class Figure { erank_cdf, tcn_cdf, heatmap, se_power, se_rician };
Figure parse_figure(const std::string& name);
const char* to_string(Figure f);

std::vector<std::filesystem::path> run_figure(const ScenarioConfig& cfg, Figure fig, const std::filesystem::path& out_dir);

}  // namespace rischan
