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

#include <immintrin.h>

#include "rischan/kernels.hpp"

namespace rischan::kernels {
namespace {

inline __m256d load2(const cd* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

// [re0, im0, re1, im1] -> [im0, re0, im1, re1]
inline __m256d swap_ri(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline __m256d cmul(__m256d g, __m256d b) {
    const __m256d gr = _mm256_movedup_pd(g);
    const __m256d gi = _mm256_permute_pd(g, 0b1111);
    return _mm256_fmaddsub_pd(gr, b, _mm256_mul_pd(gi, swap_ri(b)));
}

inline void lanes(__m256d v, double out[4]) { _mm256_storeu_pd(out, v); }

// acc_same collects x*y lane products, acc_swap collects x*swap(y).
inline cd finish_conj(__m256d acc_same, __m256d acc_swap) {
    double p[4], q[4];
    lanes(acc_same, p);
    lanes(acc_swap, q);
    return {(p[0] + p[1]) + (p[2] + p[3]), (q[0] - q[1]) + (q[2] - q[3])};
}

inline cd finish_plain(__m256d acc_same, __m256d acc_swap) {
    double p[4], q[4];
    lanes(acc_same, p);
    lanes(acc_swap, q);
    return {(p[0] - p[1]) + (p[2] - p[3]), (q[0] + q[1]) + (q[2] + q[3])};
}

cd dotc_avx2(const cd* x, const cd* y, std::size_t n) {
    __m256d s = _mm256_setzero_pd(), w = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = load2(x + i), yv = load2(y + i);
        s = _mm256_fmadd_pd(xv, yv, s);
        w = _mm256_fmadd_pd(xv, swap_ri(yv), w);
    }
    cd r = finish_conj(s, w);
    for (; i < n; ++i) r += std::conj(x[i]) * y[i];
    return r;
}

cd dotu_avx2(const cd* x, const cd* y, std::size_t n) {
    __m256d s = _mm256_setzero_pd(), w = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = load2(x + i), yv = load2(y + i);
        s = _mm256_fmadd_pd(xv, yv, s);
        w = _mm256_fmadd_pd(xv, swap_ri(yv), w);
    }
    cd r = finish_plain(s, w);
    for (; i < n; ++i) r += x[i] * y[i];
    return r;
}

cd triple_dotc_avx2(const cd* a, const cd* g, const cd* b, std::size_t n) {
    __m256d s = _mm256_setzero_pd(), w = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d av = load2(a + i);
        const __m256d t = cmul(load2(g + i), load2(b + i));
        s = _mm256_fmadd_pd(av, t, s);
        w = _mm256_fmadd_pd(av, swap_ri(t), w);
    }
    cd r = finish_conj(s, w);
    for (; i < n; ++i) r += std::conj(a[i]) * g[i] * b[i];
    return r;
}

cd triple_dotu_avx2(const cd* a, const cd* g, const cd* b, std::size_t n) {
    __m256d s = _mm256_setzero_pd(), w = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d av = load2(a + i);
        const __m256d t = cmul(load2(g + i), load2(b + i));
        s = _mm256_fmadd_pd(av, t, s);
        w = _mm256_fmadd_pd(av, swap_ri(t), w);
    }
    cd r = finish_plain(s, w);
    for (; i < n; ++i) r += a[i] * g[i] * b[i];
    return r;
}

void axpy_avx2(cd alpha, const cd* x, cd* y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = load2(x + i);
        const __m256d t = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, swap_ri(xv)));
        double* yp = reinterpret_cast<double*>(y + i);
        _mm256_storeu_pd(yp, _mm256_add_pd(_mm256_loadu_pd(yp), t));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

const Table kAvx2{"avx2", dotc_avx2, dotu_avx2, triple_dotc_avx2, triple_dotu_avx2, axpy_avx2};

}  // namespace

const Table* avx2_table() {
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok ? &kAvx2 : nullptr;
}

}  // namespace rischan::kernels
