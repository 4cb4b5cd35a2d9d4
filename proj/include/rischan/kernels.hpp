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

// Small complex-vector kernels used on the hot paths (array gains, cascade
// products, LoS channel assembly). A scalar reference and SIMD variants share
// one table; the variant is picked once at startup.

#include <cstddef>
#include <string>

#include "rischan/types.hpp"

namespace rischan::kernels {

struct Table {
    const char* name;
    // sum conj(x[i]) * y[i]
    cd (*dotc)(const cd* x, const cd* y, std::size_t n);
    // sum x[i] * y[i]
    cd (*dotu)(const cd* x, const cd* y, std::size_t n);
    // sum conj(a[i]) * g[i] * b[i]
    cd (*triple_dotc)(const cd* a, const cd* g, const cd* b, std::size_t n);
    // sum a[i] * g[i] * b[i]
    cd (*triple_dotu)(const cd* a, const cd* g, const cd* b, std::size_t n);
    // y[i] += alpha * x[i]
    void (*axpy)(cd alpha, const cd* x, cd* y, std::size_t n);
};

const Table& scalar();
// nullptr when the variant is not compiled in or the CPU lacks the ISA.
const Table* avx2();
const Table* neon();

// Active table: best supported variant unless RISCHAN_KERNELS=scalar.
const Table& active();

// C (m x n, column-major, leading dim ldc) += alpha * u v^H
void rank1_update(const Table& t, cd* c, std::size_t ldc, std::size_t m, std::size_t n, cd alpha,
                  const cd* u, const cd* v);

inline cd dotc(const Vec& x, const Vec& y) { return active().dotc(x.data(), y.data(), x.size()); }

}  // namespace rischan::kernels
