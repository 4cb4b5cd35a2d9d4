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
#include <random>

#include "rischan/types.hpp"

namespace rischan {

// Independent draw families inside one trial; keeping them apart lets
// strategies and sweep points share the same Rx position / NLoS draw.
enum class Stream : std::uint64_t {
    rx = 1,
    nlos = 2,
    rpg = 3,
    instance = 4,
};

std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, Stream tag, std::uint64_t extra = 0);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
    // circularly-symmetric CN(0,1)
    cd cn01() {
        const double re = normal();
        const double im = normal();
        return cd(re, im) * std::sqrt(0.5);
    }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

inline Rng substream(std::uint64_t master, std::uint64_t trial, Stream tag, std::uint64_t extra = 0) {
    return Rng(derive_seed(master, trial, tag, extra));
}

}  // namespace rischan
