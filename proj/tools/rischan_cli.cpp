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

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rischan/experiments.hpp"
#include "rischan/io.hpp"
#include "rischan/kernels.hpp"

using namespace rischan;

namespace {

struct Common {
    std::string config;
    ScenarioConfig load() const { return config.empty() ? ScenarioConfig{} : load_config(config); }
};

std::vector<Strategy> parse_strategies(const std::vector<std::string>& names) {
    std::vector<Strategy> out;
    for (const auto& n : names) {
        std::stringstream ss(n);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(parse_strategy(item));
    }
    return out;
}

json gains_json(const std::vector<int>& idx, const std::vector<cd>& alpha) {
    json a = json::array();
    for (int k : idx) a.push_back({{"ris", k}, {"abs_alpha", std::abs(alpha[k])}});
    return a;
}

int cmd_validate(const Common& c) {
    const ScenarioConfig cfg = c.load();
    const Scenario sc = build_scenario(cfg);
    json j = {{"valid", true},
              {"config", c.config.empty() ? "<defaults>" : c.config},
              {"scenario_hash", hex16(scenario_hash(cfg))},
              {"element_counts", sc.element_counts}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_run(const Common& c, const std::string& figure, std::optional<std::uint64_t> seed, std::optional<int> trials,
            std::optional<int> workers, const std::string& out_dir, std::optional<int> s,
            const std::vector<std::string>& strategies) {
    ScenarioConfig cfg = c.load();
    auto& p = cfg.campaign;
    if (seed) p.seed = *seed;
    if (trials) p.trials = *trials;
    if (workers) p.workers = *workers;
    if (!out_dir.empty()) p.output_dir = out_dir;
    if (s) {
        p.s_values = {*s};
        p.heatmap_s = {*s};
        p.se_streams = *s;
    }
    if (!strategies.empty()) p.strategies = parse_strategies(strategies);
    validate(cfg);
    const Figure fig = parse_figure(figure);
    const auto files = run_figure(cfg, fig, p.output_dir);
    json j = {{"figure", figure}, {"scenario_hash", hex16(scenario_hash(cfg))}, {"seed", p.seed}, {"files", json::array()}};
    for (const auto& f : files) j["files"].push_back(f.string());
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_threshold(const Common& c, const std::vector<double>& rx, int s) {
    const ScenarioConfig cfg = c.load();
    const Scenario sc = build_scenario(cfg);
    const auto& sys = cfg.system;
    const Vec2 pos{rx.at(0), rx.at(1)};
    if (norm(pos - sc.coverage.center) > sc.coverage.radius)
        std::cerr << "warning: Rx lies outside the coverage disk; the sizing guarantee does not hold\n";
    const Deployment dep = solve_geometry(sys, sc.ris, sc.axis, pos);
    const SegmentationResult seg = greedy_segment(sys, dep, s);
    const RisDesign mpg = design_link(Strategy::mpg, sys, dep, sc.panels, seg.k_perp, nullptr);
    // every non-collinear RIS at its maximal gain, for the per-candidate increments
    std::vector<int> all;
    for (int k = 0; k < dep.k(); ++k)
        if (std::find(seg.excluded_collinear.begin(), seg.excluded_collinear.end(), k) == seg.excluded_collinear.end())
            all.push_back(k);
    const RisDesign full = design_link(Strategy::mpg, sys, dep, sc.panels, all, nullptr);
    std::vector<double> gmax, cand;
    std::vector<int> cand_idx;
    for (int k : seg.k_perp) gmax.push_back(std::abs(mpg.alpha[k]));
    for (int k : all)
        if (std::find(seg.k_perp.begin(), seg.k_perp.end(), k) == seg.k_perp.end()) {
            cand.push_back(std::abs(full.alpha[k]));
            cand_idx.push_back(k);
        }
    const double noise = sys.noise_w();
    const double a0 = std::abs(mpg.alpha0);
    const ThresholdReport rep = threshold_report(a0, gmax, gmax, cand, noise);
    auto dbm = [](double w) { return w > 0 ? json(watt_to_dbm(w)) : json(nullptr); };
    json deltas = json::array();
    for (std::size_t i = 0; i < cand.size(); ++i)
        deltas.push_back({{"ris", cand_idx[i]},
                          {"elements", sc.element_counts[cand_idx[i]]},
                          {"abs_alpha_max", cand[i]},
                          {"delta_e_th_max_w", rep.delta_max[i]},
                          {"delta_e_th_max_dbm", dbm(rep.delta_max[i])}});
    json j = {{"rx_m", {pos.x, pos.y}},
              {"s", s},
              {"k_perp", seg.k_perp},
              {"abs_alpha0", a0},
              {"abs_alpha_max", gains_json(seg.k_perp, mpg.alpha)},
              {"alpha0_is_min", rep.alpha0_is_min},
              {"e_th_w", rep.e_th},
              {"e_th_dbm", dbm(rep.e_th)},
              {"e_th_max_w", rep.e_th_max},
              {"e_th_max_dbm", dbm(rep.e_th_max)},
              {"delta_limit_w", noise / (a0 * a0)},
              {"candidates", deltas}};
    if (!rep.alpha0_is_min) std::cerr << "warning: an activated RIS is weaker than the direct link\n";
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_inspect(const Common& c, const std::vector<double>& rx, int s, const std::string& strategy,
                const std::string& export_dir, std::uint64_t seed) {
    const ScenarioConfig cfg = c.load();
    const Scenario sc = build_scenario(cfg);
    const Vec2 pos{rx.at(0), rx.at(1)};
    Rng rng = substream(seed, 0, Stream::rpg);
    const LinkResult lr = evaluate_link(sc, pos, parse_strategy(strategy), s, &rng);
    json sv = json::array();
    for (double v : lr.spec.singular_values) sv.push_back(v);
    json ts = json::array();
    for (double v : lr.spec.t_s) ts.push_back(std::isfinite(v) ? json(v) : json(fmt_double(v)));
    json j = {{"kernels", kernels::active().name},
              {"element_counts", sc.element_counts},
              {"k_perp", lr.seg.k_perp},
              {"excluded_collinear", lr.seg.excluded_collinear},
              {"segmentation_objective", lr.seg.objective},
              {"singular_values", sv},
              {"rank", lr.spec.rank},
              {"erank", lr.spec.erank},
              {"t_s", ts}};
    if (!export_dir.empty()) {
        const std::filesystem::path d(export_dir);
        export_matrix(d / "H.bin", lr.H, "H");
        write_text(d / "deployment.json", to_json(lr.dep).dump(2) + "\n");
        write_text(d / "design.json", to_json(lr.design).dump(2) + "\n");
        j["exported"] = {(d / "H.bin").string(), (d / "deployment.json").string(), (d / "design.json").string()};
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rischan: multi-RIS MIMO channel customization simulator"};
    app.require_subcommand(1);
    Common common;

    auto* v = app.add_subcommand("validate", "check a scenario config");
    v->add_option("--config", common.config, "YAML scenario file")->check(CLI::ExistingFile);

    auto* r = app.add_subcommand("run", "run a Monte Carlo campaign and write CSV/JSON");
    std::string figure, out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials, workers, s_opt;
    std::vector<std::string> strategies;
    r->add_option("--config", common.config, "YAML scenario file")->check(CLI::ExistingFile);
    r->add_option("--figure", figure, "erank-cdf | tcn-cdf | heatmap | se-power | se-rician")->required();
    r->add_option("--seed", seed, "master seed");
    r->add_option("--trials", trials, "Monte Carlo trials");
    r->add_option("--workers", workers, "worker threads");
    r->add_option("--out-dir", out_dir, "output directory");
    r->add_option("--s", s_opt, "stream count (overrides s lists)");
    r->add_option("--strategy", strategies, "hpg, mpg, rpg, off, none (comma separated)");

    auto* t = app.add_subcommand("threshold", "transmit-power thresholds for one Rx position");
    std::vector<double> rx{100.0, 0.0};
    int s_thr = 4;
    t->add_option("--config", common.config, "YAML scenario file")->check(CLI::ExistingFile);
    t->add_option("--rx", rx, "Rx position x y (m)")->expected(2);
    t->add_option("--s", s_thr, "stream count");

    auto* in = app.add_subcommand("inspect", "single-link report, optional binary export");
    std::string strat = "hpg", export_dir;
    int s_in = 4;
    std::uint64_t seed_in = 1;
    in->add_option("--config", common.config, "YAML scenario file")->check(CLI::ExistingFile);
    in->add_option("--rx", rx, "Rx position x y (m)")->expected(2);
    in->add_option("--s", s_in, "stream count");
    in->add_option("--strategy", strat, "hpg | mpg | rpg | off | none");
    in->add_option("--seed", seed_in, "seed for RPG phases");
    in->add_option("--export", export_dir, "write H.bin (+ sidecar), deployment.json, design.json here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*v) return cmd_validate(common);
        if (*r) return cmd_run(common, figure, seed, trials, workers, out_dir, s_opt, strategies);
        if (*t) return cmd_threshold(common, rx, s_thr);
        if (*in) return cmd_inspect(common, rx, s_in, strat, export_dir, seed_in);
    } catch (const Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return e.code() == Errc::invalid_config ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
