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

#include "rischan/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace rischan {

std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header) : path_(path) {
    for (const auto& h : header) *this << h;
    end_row();
}

void CsvWriter::sep() {
    if (row_started_) buf_ += ',';
    row_started_ = true;
}

CsvWriter& CsvWriter::operator<<(const std::string& s) {
    sep();
    buf_ += s;
    return *this;
}

CsvWriter& CsvWriter::operator<<(double v) {
    sep();
    buf_ += fmt_double(v);
    return *this;
}

CsvWriter& CsvWriter::operator<<(int v) {
    sep();
    buf_ += std::to_string(v);
    return *this;
}

CsvWriter& CsvWriter::operator<<(std::int64_t v) {
    sep();
    buf_ += std::to_string(v);
    return *this;
}

CsvWriter& CsvWriter::operator<<(std::uint64_t v) {
    sep();
    buf_ += std::to_string(v);
    return *this;
}

void CsvWriter::end_row() {
    buf_ += '\n';
    row_started_ = false;
}

void CsvWriter::close() { write_text(path_, buf_); }

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw Error(Errc::io_failure, "cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::io_failure, "cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw Error(Errc::io_failure, "write failed: " + path.string());
}

namespace {

json num(double v) {
    if (std::isfinite(v)) return v;
    return fmt_double(v);
}

json vec2(Vec2 p) { return json::array({p.x, p.y}); }

json dlist(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(num(x));
    return a;
}

}  // namespace

json to_json(const ScenarioConfig& cfg) {
    const auto& s = cfg.system;
    const auto& p = cfg.campaign;
    json j;
    j["system"] = {{"fc_ghz", s.fc_ghz},          {"c_mps", s.c_mps},     {"n_tx", s.n_tx},
                   {"rf_tx", s.rf_tx},            {"n_rx", s.n_rx},       {"rf_rx", s.rf_rx},
                   {"tx_spacing_wl", s.tx_spacing_wl}, {"rx_spacing_wl", s.rx_spacing_wl},
                   {"noise_dbm", s.noise_dbm}};
    json pos = json::array();
    for (auto q : s.ris_positions) pos.push_back(vec2(q));
    j["ris"] = {{"count", s.ris_count},
                {"bits", s.continuous_phase ? json("continuous") : json(s.bits)},
                {"rows", s.ris_rows},
                {"spacing_wl", s.ris_spacing_wl},
                {"sizing_quantization_loss", s.sizing_quantization_loss},
                {"curve_rho_min_m", s.curve_rho_min_m},
                {"curve_rho_max_m", s.curve_rho_max_m},
                {"ray_selection", to_string(s.ray_selection)},
                {"orientation", to_string(s.orientation)},
                {"positions_m", pos}};
    j["link"] = {{"quality_direct", s.quality_direct},
                 {"quality_tx_ris", s.quality_tx_ris},
                 {"quality_ris_rx", s.quality_ris_rx},
                 {"rician_db", num(s.rician_db)},
                 {"nlos_paths", s.nlos_paths}};
    j["geometry"] = {{"tx_m", vec2(s.tx)},
                     {"coverage_center_m", vec2(s.coverage_center)},
                     {"coverage_radius_m", s.coverage_radius_m}};
    json strat = json::array();
    for (auto st : p.strategies) strat.push_back(to_string(st));
    j["campaign"] = {{"seed", p.seed},
                     {"trials", p.trials},
                     {"workers", p.workers},
                     {"s_values", p.s_values},
                     {"strategies", strat},
                     {"se_streams", p.se_streams},
                     {"tx_power_dbm", p.tx_power_dbm},
                     {"power_dbm", dlist(p.power_dbm)},
                     {"rician_db", dlist(p.rician_db)},
                     {"heatmap_grid", p.heatmap_grid},
                     {"heatmap_s", p.heatmap_s},
                     {"exhaustive_budget", p.exhaustive_budget},
                     {"output_dir", p.output_dir}};
    return j;
}

std::uint64_t scenario_hash(const ScenarioConfig& cfg) {
    json j = to_json(cfg);
    j["campaign"].erase("workers");
    j["campaign"].erase("output_dir");
    const std::string text = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex16(std::uint64_t v) {
    char b[17];
    std::snprintf(b, sizeof b, "%016llx", static_cast<unsigned long long>(v));
    return b;
}

json to_json(const Deployment& dep) {
    json j;
    j["tx_m"] = vec2(dep.tx);
    j["rx_m"] = vec2(dep.rx);
    json ris = json::array();
    for (int k = 0; k < dep.k(); ++k) {
        ris.push_back({{"index", k},
                       {"position_m", vec2(dep.ris[k])},
                       {"axis", vec2(dep.axis[k])},
                       {"r_t_m", dep.r_t[k]},
                       {"r_r_m", dep.r_r[k]},
                       {"theta_t_d_rad", dep.theta_t_d[k + 1]},
                       {"theta_r_a_rad", dep.theta_r_a[k + 1]},
                       {"Theta_t_d", dep.Theta_t_d[k + 1]},
                       {"Theta_r_a", dep.Theta_r_a[k + 1]},
                       {"Theta_s_a", dep.Theta_s_a[k]},
                       {"Theta_s_d", dep.Theta_s_d[k]},
                       {"phi_rad", dep.phi[k]}});
    }
    j["r_0_m"] = dep.r_0;
    j["theta_t0_d_rad"] = dep.theta_t_d[0];
    j["theta_r0_a_rad"] = dep.theta_r_a[0];
    j["Theta_t0_d"] = dep.Theta_t_d[0];
    j["Theta_r0_a"] = dep.Theta_r_a[0];
    j["ris"] = ris;
    return j;
}

json to_json(const RisDesign& d) {
    json j;
    j["strategy"] = to_string(d.strategy);
    j["bits"] = d.bits ? json(*d.bits) : json("continuous");
    j["active"] = d.active;
    j["alpha0"] = {d.alpha0.real(), d.alpha0.imag()};
    json panels = json::array();
    for (std::size_t k = 0; k < d.panels.size(); ++k) {
        const auto& p = d.panels[k];
        json e;
        e["index"] = k;
        e["gamma"] = p.gamma;
        e["f"] = {p.f.real(), p.f.imag()};
        e["alpha"] = {d.alpha[k].real(), d.alpha[k].imag()};
        if (d.bits) e["grid_index"] = p.grid_index;
        else e["phases_rad"] = p.phases;
        panels.push_back(e);
    }
    j["panels"] = panels;
    return j;
}

void export_matrix(const std::filesystem::path& path, const Mat& m, const std::string& name) {
    std::string bytes;
    bytes.reserve(static_cast<std::size_t>(m.size()) * 16);
    auto put = [&bytes](double v) {
        std::uint64_t u;
        std::memcpy(&u, &v, 8);
        if constexpr (std::endian::native == std::endian::big) u = __builtin_bswap64(u);
        for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<char>((u >> (8 * i)) & 0xff));
    };
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            put(m(r, c).real());
            put(m(r, c).imag());
        }
    write_text(path, bytes);
    json side = {{"name", name},
                 {"rows", m.rows()},
                 {"cols", m.cols()},
                 {"dtype", "float64"},
                 {"endianness", "little"},
                 {"layout", "row-major, interleaved re/im"},
                 {"file", path.filename().string()}};
    write_text(path.string() + ".json", side.dump(2) + "\n");
}

}  // namespace rischan
