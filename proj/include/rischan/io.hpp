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

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rischan/config.hpp"
#include "rischan/geometry.hpp"
#include "rischan/ris_design.hpp"
#include "rischan/types.hpp"

namespace rischan {

using json = nlohmann::ordered_json;

// 17 significant digits, round-trippable; "inf"/"-inf"/"nan" for non-finite.
std::string fmt_double(double v);

class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
    CsvWriter& operator<<(const std::string& s);
    CsvWriter& operator<<(const char* s) { return *this << std::string(s); }
    CsvWriter& operator<<(double v);
    CsvWriter& operator<<(int v);
    CsvWriter& operator<<(std::int64_t v);
    CsvWriter& operator<<(std::uint64_t v);
    void end_row();
    void close();

private:
    void sep();
    std::filesystem::path path_;
    std::string buf_;
    bool row_started_ = false;
};

json to_json(const ScenarioConfig& cfg);
// FNV-1a over the canonical config JSON, excluding worker count and output dir.
std::uint64_t scenario_hash(const ScenarioConfig& cfg);
std::string hex16(std::uint64_t v);

json to_json(const Deployment& dep);
json to_json(const RisDesign& design);

void write_text(const std::filesystem::path& path, const std::string& text);

// Little-endian float64, (re, im) interleaved, row-major, plus a JSON sidecar
// "<path>.json" describing the shape.
void export_matrix(const std::filesystem::path& path, const Mat& m, const std::string& name);

}  // namespace rischan
