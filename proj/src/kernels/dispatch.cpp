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

#include <cstdlib>
#include <cstring>

#include "rischan/kernels.hpp"

namespace rischan::kernels {

#if defined(RISCHAN_HAVE_AVX2)
const Table* avx2_table();
#endif
#if defined(RISCHAN_HAVE_NEON)
const Table* neon_table();
#endif

const Table* avx2() {
#if defined(RISCHAN_HAVE_AVX2)
    return avx2_table();
#else
    return nullptr;
#endif
}

const Table* neon() {
#if defined(RISCHAN_HAVE_NEON)
    return neon_table();
#else
    return nullptr;
#endif
}

const Table& active() {
    static const Table& chosen = [&]() -> const Table& {
        const char* env = std::getenv("RISCHAN_KERNELS");
        if (env && std::strcmp(env, "scalar") == 0) return scalar();
        if (const Table* t = avx2()) return *t;
        if (const Table* t = neon()) return *t;
        return scalar();
    }();
    return chosen;
}

void rank1_update(const Table& t, cd* c, std::size_t ldc, std::size_t m, std::size_t n, cd alpha,
                  const cd* u, const cd* v) {
    for (std::size_t j = 0; j < n; ++j) t.axpy(alpha * std::conj(v[j]), u, c + j * ldc, m);
}

}  // namespace rischan::kernels
