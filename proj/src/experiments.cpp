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

#include "rischan/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace rischan {

Scenario build_scenario(const ScenarioConfig& cfg) {
    validate(cfg);
    Scenario sc;
    sc.cfg = cfg;
    const auto& s = cfg.system;
    sc.coverage = coverage_of(s);
    sc.ris = s.ris_positions.empty() ? place_ris_on_curve(s).positions : s.ris_positions;
    for (const auto& p : sc.ris) sc.axis.push_back(panel_axis(s.orientation, p, s.tx, s.coverage_center));
    sc.element_counts = element_counts(s, sc.ris);
    sc.panels = size_panels(s, sc.ris);
    return sc;
}

LinkResult evaluate_link(const Scenario& sc, Vec2 rx, Strategy strategy, int s, Rng* rpg_rng, Rng* nlos_rng) {
    const auto& cfg = sc.cfg.system;
    LinkResult r;
    r.dep = solve_geometry(cfg, sc.ris, sc.axis, rx);
    if (strategy != Strategy::none) r.seg = greedy_segment(cfg, r.dep, s);
    r.design = design_link(strategy, cfg, r.dep, sc.panels, r.seg.k_perp, rpg_rng);
    if (cfg.los_only() || !nlos_rng) {
        r.H = compose_los(cfg, r.dep, r.design);
    } else {
        const ChannelRealization ch = build_channel(cfg, r.dep, sc.panels, cfg.rician_db, nlos_rng);
        r.H = compose(ch, r.design);
    }
    r.spec = spectrum(r.H);
    return r;
}

void parallel_for(int n, int workers, const std::function<void(int)>& body) {
    if (workers <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto run = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(workers, n); ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

Vec2 trial_rx(const Scenario& sc, int trial) {
    Rng rng = substream(sc.cfg.campaign.seed, static_cast<std::uint64_t>(trial), Stream::rx);
    return sample_rx(sc.coverage, rng);
}

// ---------------------------------------------------------------- CDFs

std::vector<double> CdfReport::values(Strategy st, int s, const std::function<double(const CdfRecord&)>& f) const {
    std::vector<double> out;
    for (const auto& r : records)
        if (r.strategy == st && r.s == s && r.ok) out.push_back(f(r));
    return out;
}

int CdfReport::excluded(Strategy st, int s) const {
    int n = 0;
    for (const auto& r : records)
        if (r.strategy == st && r.s == s && !r.ok) ++n;
    return n;
}

CdfReport run_cdf_campaign(const Scenario& sc) {
    const auto& c = sc.cfg.campaign;
    std::vector<std::vector<CdfRecord>> per_trial(c.trials);
    parallel_for(c.trials, c.workers, [&](int t) {
        const Vec2 rx = trial_rx(sc, t);
        auto& out = per_trial[t];
        for (Strategy st : c.strategies) {
            for (int s : c.s_values) {
                CdfRecord rec;
                rec.strategy = st;
                rec.s = s;
                rec.trial = t;
                rec.rx = rx;
                try {
                    Rng rng = substream(c.seed, static_cast<std::uint64_t>(t), Stream::rpg);
                    Rng nlos = substream(c.seed, static_cast<std::uint64_t>(t), Stream::nlos);
                    const LinkResult lr = evaluate_link(sc, rx, st, s, &rng, &nlos);
                    rec.ok = true;
                    rec.rank = lr.spec.rank;
                    rec.erank = lr.spec.erank;
                    rec.sv = lr.spec.singular_values;
                    rec.t_s = truncated_condition(rec.sv, s);
                    rec.t_3 = rec.sv.size() >= 3 ? truncated_condition(rec.sv, 3) : 0.0;
                } catch (const Error& e) {
                    rec.ok = false;
                    rec.error = errc_name(e.code());
                }
                out.push_back(std::move(rec));
            }
        }
    });
    CdfReport rep;
    for (Strategy st : c.strategies)
        for (int s : c.s_values)
            for (int t = 0; t < c.trials; ++t)
                for (const auto& r : per_trial[t])
                    if (r.strategy == st && r.s == s) rep.records.push_back(r);
    return rep;
}

// ---------------------------------------------------------------- heat map

std::vector<Vec2> heatmap_points(const CoverageDisk& disk, int grid, std::vector<std::pair<int, int>>* idx) {
    std::vector<Vec2> pts;
    for (int iy = 0; iy < grid; ++iy) {
        for (int ix = 0; ix < grid; ++ix) {
            const double x = disk.center.x - disk.radius + 2.0 * disk.radius * ix / (grid - 1);
            const double y = disk.center.y - disk.radius + 2.0 * disk.radius * iy / (grid - 1);
            const double dx = x - disk.center.x, dy = y - disk.center.y;
            if (dx * dx + dy * dy > disk.radius * disk.radius * (1.0 + 1e-12)) continue;
            pts.push_back({x, y});
            if (idx) idx->push_back({ix, iy});
        }
    }
    return pts;
}

HeatmapReport run_heatmap_campaign(const Scenario& sc) {
    const auto& c = sc.cfg.campaign;
    std::vector<std::pair<int, int>> idx;
    const auto pts = heatmap_points(sc.coverage, c.heatmap_grid, &idx);
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<HeatCell>> per_point(n);
    parallel_for(n, c.workers, [&](int i) {
        for (Strategy st : c.strategies) {
            for (int s : c.heatmap_s) {
                HeatCell cell;
                cell.strategy = st;
                cell.s = s;
                cell.ix = idx[i].first;
                cell.iy = idx[i].second;
                cell.pos = pts[i];
                try {
                    Rng rng = substream(c.seed, static_cast<std::uint64_t>(i), Stream::rpg);
                    const LinkResult lr = evaluate_link(sc, pts[i], st, s, &rng);
                    cell.t_s = truncated_condition(lr.spec.singular_values, s);
                    cell.ok = true;
                } catch (const Error&) {
                    cell.ok = false;
                }
                per_point[i].push_back(cell);
            }
        }
    });
    HeatmapReport rep;
    rep.grid = c.heatmap_grid;
    rep.masked_cells = n;
    for (Strategy st : c.strategies)
        for (int s : c.heatmap_s)
            for (int i = 0; i < n; ++i)
                for (const auto& cell : per_point[i])
                    if (cell.strategy == st && cell.s == s) rep.cells.push_back(cell);
    return rep;
}

// ---------------------------------------------------------------- SE

std::vector<Strategy> se_strategies(const CampaignConfig& c) {
    std::vector<Strategy> out = c.strategies;
    if (std::find(out.begin(), out.end(), Strategy::none) == out.end()) out.push_back(Strategy::none);
    return out;
}

double median(std::vector<double> v) { return quantile(std::move(v), 0.5); }

double quantile(std::vector<double> v, double q) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const double pos = q * (v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, v.size() - 1);
    const double w = pos - lo;
    if (w == 0.0) return v[lo];
    return v[lo] * (1 - w) + v[hi] * w;
}

double mean(const std::vector<double>& v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    double s = 0.0;
    for (double x : v) s += x;
    return s / v.size();
}

double ci95_half_width(const std::vector<double>& v) {
    if (v.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    const double m = mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return 1.96 * std::sqrt(ss / (v.size() - 1)) / std::sqrt(double(v.size()));
}

double fraction(const std::vector<double>& v, const std::function<bool(double)>& pred) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(std::count_if(v.begin(), v.end(), pred)) / v.size();
}

namespace {

int stream_count(Strategy st, int s) { return st == Strategy::none ? 1 : s; }

double evaluate_scheme(const SystemConfig& cfg, const LinkResult& lr, const Mat& H, Scheme scheme, Allocation alloc,
                       double E, int s) {
    const double noise = cfg.noise_w();
    Beamformers bf;
    switch (scheme) {
        case Scheme::cc_hybrid:
            bf = cc_hybrid_beamformers(cfg, lr.dep, lr.seg.k_perp, lr.design, H, E, noise, alloc);
            break;
        case Scheme::svd_full: bf = svd_beamformers(H, E, noise, 0, alloc); break;
        case Scheme::svd_truncated: {
            int rank = 0;
            for (double v : spectrum(H, 1e-12).singular_values)
                if (v > 0) ++rank;
            bf = svd_beamformers(H, E, noise, std::min(s, std::max(rank, 1)), alloc);
            break;
        }
    }
    return spectral_efficiency(H, bf.precoder(), bf.combiner(), noise).se;
}

void summarize(SeReport& rep, bool with_gap) {
    std::map<std::tuple<int, int, int, double>, std::vector<double>> groups;
    std::vector<std::tuple<int, int, int, double>> order;
    for (const auto& r : rep.records) {
        if (!r.ok) continue;
        auto key = std::make_tuple(int(r.strategy), int(r.scheme), int(r.allocation), r.x);
        if (!groups.count(key)) order.push_back(key);
        groups[key].push_back(r.se);
    }
    for (const auto& key : order) {
        const auto& v = groups[key];
        SeSummary s;
        s.strategy = Strategy(std::get<0>(key));
        s.scheme = Scheme(std::get<1>(key));
        s.allocation = Allocation(std::get<2>(key));
        s.x = std::get<3>(key);
        s.n = static_cast<int>(v.size());
        s.mean = mean(v);
        s.median = median(v);
        s.ci95 = ci95_half_width(v);
        if (with_gap && s.scheme == Scheme::cc_hybrid) {
            // per-trial relative gap to the truncated SVD of the same channel
            std::map<int, double> cc, tr;
            for (const auto& r : rep.records) {
                if (!r.ok || r.strategy != s.strategy || r.allocation != s.allocation || r.x != s.x) continue;
                if (r.scheme == Scheme::cc_hybrid) cc[r.trial] = r.se;
                if (r.scheme == Scheme::svd_truncated) tr[r.trial] = r.se;
            }
            std::vector<double> gaps;
            for (const auto& [t, v_cc] : cc)
                if (tr.count(t) && tr[t] > 0) gaps.push_back((tr[t] - v_cc) / tr[t]);
            s.median_gap = median(gaps);
        }
        rep.summary.push_back(s);
    }
}

}  // namespace

SeReport run_se_power_campaign(const Scenario& sc, const std::vector<Allocation>& allocations) {
    const auto& c = sc.cfg.campaign;
    const auto& cfg = sc.cfg.system;
    const auto strategies = se_strategies(c);
    const Scheme schemes[] = {Scheme::cc_hybrid, Scheme::svd_full, Scheme::svd_truncated};
    std::vector<std::vector<SeRecord>> per_trial(c.trials);
    parallel_for(c.trials, c.workers, [&](int t) {
        const Vec2 rx = trial_rx(sc, t);
        for (Strategy st : strategies) {
            const int s = stream_count(st, c.se_streams);
            std::optional<LinkResult> lr;
            try {
                Rng rng = substream(c.seed, static_cast<std::uint64_t>(t), Stream::rpg);
                lr = evaluate_link(sc, rx, st, s, &rng);
            } catch (const Error&) {
            }
            for (double p : c.power_dbm)
                for (Allocation a : allocations)
                    for (Scheme sch : schemes) {
                        SeRecord r{st, sch, a, p, t, false, 0.0};
                        if (lr) {
                            try {
                                r.se = evaluate_scheme(cfg, *lr, lr->H, sch, a, dbm_to_watt(p), s);
                                r.ok = true;
                            } catch (const Error&) {
                            }
                        }
                        per_trial[t].push_back(r);
                    }
        }
    });
    SeReport rep;
    for (auto& v : per_trial) {
        bool bad = false;
        for (auto& r : v) {
            bad = bad || !r.ok;
            rep.records.push_back(r);
        }
        rep.excluded_trials += bad;
    }
    std::stable_sort(rep.records.begin(), rep.records.end(), [](const SeRecord& a, const SeRecord& b) {
        return std::tie(a.strategy, a.scheme, a.allocation, a.x, a.trial) <
               std::tie(b.strategy, b.scheme, b.allocation, b.x, b.trial);
    });
    summarize(rep, false);
    return rep;
}

SeReport run_se_rician_campaign(const Scenario& sc) {
    const auto& c = sc.cfg.campaign;
    const auto& cfg = sc.cfg.system;
    const auto strategies = se_strategies(c);
    const double E = dbm_to_watt(c.tx_power_dbm);
    std::vector<std::vector<SeRecord>> per_trial(c.trials);
    parallel_for(c.trials, c.workers, [&](int t) {
        const Vec2 rx = trial_rx(sc, t);
        std::optional<Deployment> dep;
        try {
            dep = solve_geometry(cfg, sc.ris, sc.axis, rx);
        } catch (const Error&) {
        }
        for (double kdb : c.rician_db) {
            std::optional<ChannelRealization> ch;
            if (dep) {
                // same NLoS draw at every kappa for this trial
                Rng nlos = substream(c.seed, static_cast<std::uint64_t>(t), Stream::nlos);
                ch = build_channel(cfg, *dep, sc.panels, kdb, &nlos);
            }
            for (Strategy st : strategies) {
                const int s = stream_count(st, c.se_streams);
                std::optional<LinkResult> lr;
                if (ch) {
                    try {
                        LinkResult l;
                        l.dep = *dep;
                        if (st != Strategy::none) l.seg = greedy_segment(cfg, l.dep, s);
                        Rng rng = substream(c.seed, static_cast<std::uint64_t>(t), Stream::rpg);
                        l.design = design_link(st, cfg, l.dep, sc.panels, l.seg.k_perp, &rng);
                        l.H = compose(*ch, l.design);
                        lr = std::move(l);
                    } catch (const Error&) {
                    }
                }
                for (Scheme sch : {Scheme::cc_hybrid, Scheme::svd_truncated}) {
                    SeRecord r{st, sch, Allocation::waterfill, kdb, t, false, 0.0};
                    if (lr) {
                        try {
                            r.se = evaluate_scheme(cfg, *lr, lr->H, sch, Allocation::waterfill, E, s);
                            r.ok = true;
                        } catch (const Error&) {
                        }
                    }
                    per_trial[t].push_back(r);
                }
            }
        }
    });
    SeReport rep;
    for (auto& v : per_trial) {
        bool bad = false;
        for (auto& r : v) {
            bad = bad || !r.ok;
            rep.records.push_back(r);
        }
        rep.excluded_trials += bad;
    }
    std::stable_sort(rep.records.begin(), rep.records.end(), [](const SeRecord& a, const SeRecord& b) {
        return std::tie(a.strategy, a.scheme, a.allocation, a.x, a.trial) <
               std::tie(b.strategy, b.scheme, b.allocation, b.x, b.trial);
    });
    summarize(rep, true);
    return rep;
}

// ---------------------------------------------------------------- output

Figure parse_figure(const std::string& name) {
    if (name == "erank-cdf") return Figure::erank_cdf;
    if (name == "tcn-cdf") return Figure::tcn_cdf;
    if (name == "heatmap") return Figure::heatmap;
    if (name == "se-power") return Figure::se_power;
    if (name == "se-rician") return Figure::se_rician;
    throw Error(Errc::invalid_config, "unknown figure '" + name + "' (erank-cdf|tcn-cdf|heatmap|se-power|se-rician)");
}

const char* to_string(Figure f) {
    switch (f) {
        case Figure::erank_cdf: return "erank-cdf";
        case Figure::tcn_cdf: return "tcn-cdf";
        case Figure::heatmap: return "heatmap";
        case Figure::se_power: return "se-power";
        case Figure::se_rician: return "se-rician";
    }
    return "?";
}

namespace {

json base_summary(const Scenario& sc, Figure fig) {
    json j;
    j["figure"] = to_string(fig);
    j["scenario_hash"] = hex16(scenario_hash(sc.cfg));
    j["seed"] = sc.cfg.campaign.seed;
    json cfgj = to_json(sc.cfg);
    cfgj["campaign"].erase("workers");
    cfgj["campaign"].erase("output_dir");
    j["config"] = cfgj;
    j["element_counts"] = sc.element_counts;
    j["assumptions"] = {
        "LoS-only channels for CDF and heat-map figures unless link.rician_db is finite",
        "power and Rician sweep points are configuration defaults",
        "RPG draws grid phases on every RIS; no-RIS baseline removes the RISs and uses one stream",
    };
    return j;
}

json num_or_str(double v) {
    if (std::isfinite(v)) return v;
    return fmt_double(v);
}

void write_cdf_rows(CsvWriter& w, const std::string& strat, int s, const std::string& metric, std::vector<double> v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        w << strat << s << metric << v[i] << static_cast<double>(i + 1) / v.size();
        w.end_row();
    }
}

}  // namespace

std::vector<std::filesystem::path> run_figure(const ScenarioConfig& cfg, Figure fig, const std::filesystem::path& out_dir) {
    const Scenario sc = build_scenario(cfg);
    const auto& c = cfg.campaign;
    const std::string stem = std::string(to_string(fig)) + "_" + hex16(scenario_hash(cfg)) + "_seed" + std::to_string(c.seed);
    std::vector<std::filesystem::path> written;
    json summary = base_summary(sc, fig);
    const int full_rank = std::min(cfg.system.n_rx, cfg.system.n_tx);

    if (fig == Figure::erank_cdf || fig == Figure::tcn_cdf) {
        const CdfReport rep = run_cdf_campaign(sc);
        CsvWriter cdf(out_dir / (stem + ".csv"), {"strategy", "s", "metric", "value", "cdf"});
        CsvWriter trials(out_dir / (stem + "_trials.csv"),
                         {"strategy", "s", "trial", "rx_x_m", "rx_y_m", "status", "rank", "erank", "t_s", "t_3"});
        for (const auto& r : rep.records) {
            trials << to_string(r.strategy) << r.s << r.trial << r.rx.x << r.rx.y << (r.ok ? "ok" : r.error);
            if (r.ok) trials << r.rank << r.erank << r.t_s << r.t_3;
            else trials << "" << "" << "" << "";
            trials.end_row();
        }
        json groups = json::array();
        for (Strategy st : c.strategies) {
            for (int s : c.s_values) {
                const auto er = rep.values(st, s, [](const CdfRecord& r) { return r.erank; });
                const auto rk = rep.values(st, s, [](const CdfRecord& r) { return double(r.rank); });
                const auto ts = rep.values(st, s, [](const CdfRecord& r) { return r.t_s; });
                const auto t3 = rep.values(st, s, [](const CdfRecord& r) { return r.t_3; });
                if (fig == Figure::erank_cdf) {
                    write_cdf_rows(cdf, to_string(st), s, "rank", rk);
                    write_cdf_rows(cdf, to_string(st), s, "erank", er);
                } else {
                    write_cdf_rows(cdf, to_string(st), s, "t_s", ts);
                }
                groups.push_back({{"strategy", to_string(st)},
                                  {"s", s},
                                  {"n", er.size()},
                                  {"excluded", rep.excluded(st, s)},
                                  {"median_erank", num_or_str(median(er))},
                                  {"mean_erank", num_or_str(mean(er))},
                                  {"p_erank_gt_5", num_or_str(fraction(er, [](double x) { return x > 5; }))},
                                  {"p_full_rank", num_or_str(fraction(rk, [&](double x) { return x == full_rank; }))},
                                  {"median_t_s", num_or_str(median(ts))},
                                  {"p_t_s_le_8", num_or_str(fraction(ts, [](double x) { return x <= 8; }))},
                                  {"p_t_s_gt_16", num_or_str(fraction(ts, [](double x) { return x > 16; }))},
                                  {"p_t_3_gt_16", num_or_str(fraction(t3, [](double x) { return x > 16; }))}});
            }
        }
        summary["groups"] = groups;
        cdf.close();
        trials.close();
        written.push_back(out_dir / (stem + ".csv"));
        written.push_back(out_dir / (stem + "_trials.csv"));
    } else if (fig == Figure::heatmap) {
        const HeatmapReport rep = run_heatmap_campaign(sc);
        CsvWriter w(out_dir / (stem + ".csv"), {"strategy", "s", "ix", "iy", "x_m", "y_m", "status", "t_s"});
        for (const auto& cell : rep.cells) {
            w << to_string(cell.strategy) << cell.s << cell.ix << cell.iy << cell.pos.x << cell.pos.y
              << (cell.ok ? "ok" : "error");
            if (cell.ok) w << cell.t_s;
            else w << "";
            w.end_row();
        }
        w.close();
        written.push_back(out_dir / (stem + ".csv"));
        json groups = json::array();
        for (Strategy st : c.strategies)
            for (int s : c.heatmap_s) {
                std::vector<double> v;
                int bad = 0;
                for (const auto& cell : rep.cells)
                    if (cell.strategy == st && cell.s == s) {
                        if (cell.ok) v.push_back(cell.t_s);
                        else ++bad;
                    }
                groups.push_back({{"strategy", to_string(st)},
                                  {"s", s},
                                  {"cells", v.size()},
                                  {"failed_cells", bad},
                                  {"max_t_s", num_or_str(v.empty() ? NAN : *std::max_element(v.begin(), v.end()))},
                                  {"p99_t_s", num_or_str(quantile(v, 0.99))},
                                  {"median_t_s", num_or_str(median(v))},
                                  {"fraction_t_s_le_8", num_or_str(fraction(v, [](double x) { return x <= 8; }))}});
            }
        summary["grid"] = rep.grid;
        summary["masked_cells"] = rep.masked_cells;
        summary["groups"] = groups;
    } else {
        const bool power = fig == Figure::se_power;
        const SeReport rep = power ? run_se_power_campaign(sc, {Allocation::waterfill, Allocation::equal})
                                   : run_se_rician_campaign(sc);
        const std::string xname = power ? "power_dbm" : "kappa_db";
        CsvWriter w(out_dir / (stem + ".csv"), {"strategy", "scheme", "allocation", xname, "n", "mean_se", "median_se",
                                                 "ci95_half_width", "median_rel_gap_to_truncated"});
        for (const auto& s : rep.summary) {
            w << to_string(s.strategy) << to_string(s.scheme) << to_string(s.allocation) << s.x << s.n << s.mean
              << s.median << s.ci95;
            if (std::isnan(s.median_gap)) w << "";
            else w << s.median_gap;
            w.end_row();
        }
        CsvWriter tw(out_dir / (stem + "_trials.csv"), {"strategy", "scheme", "allocation", xname, "trial", "status", "se"});
        for (const auto& r : rep.records) {
            tw << to_string(r.strategy) << to_string(r.scheme) << to_string(r.allocation) << r.x << r.trial
               << (r.ok ? "ok" : "error");
            if (r.ok) tw << r.se;
            else tw << "";
            tw.end_row();
        }
        w.close();
        tw.close();
        written.push_back(out_dir / (stem + ".csv"));
        written.push_back(out_dir / (stem + "_trials.csv"));
        summary["streams"] = c.se_streams;
        if (!power) summary["tx_power_dbm"] = c.tx_power_dbm;
        summary["excluded_trials"] = rep.excluded_trials;
        summary["excluded_fraction"] = double(rep.excluded_trials) / c.trials;
    }
    write_text(out_dir / (stem + ".json"), summary.dump(2) + "\n");
    written.push_back(out_dir / (stem + ".json"));
    return written;
}

}  // namespace rischan
