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

#include "rischan/kernels.hpp"

namespace rischan::kernels {
namespace {

// Plain real arithmetic; std::complex operator* goes through the NaN-checking
// slow path on GCC without -fcx-limited-range.

cd dotc_ref(const cd* x, const cd* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

cd dotu_ref(const cd* x, const cd* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr - xi * yi;
        im += xr * yi + xi * yr;
    }
    return {re, im};
}

cd triple_dotc_ref(const cd* a, const cd* g, const cd* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double tr = g[i].real() * b[i].real() - g[i].imag() * b[i].imag();
        const double ti = g[i].real() * b[i].imag() + g[i].imag() * b[i].real();
        re += a[i].real() * tr + a[i].imag() * ti;
        im += a[i].real() * ti - a[i].imag() * tr;
    }
    return {re, im};
}

cd triple_dotu_ref(const cd* a, const cd* g, const cd* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double tr = g[i].real() * b[i].real() - g[i].imag() * b[i].imag();
        const double ti = g[i].real() * b[i].imag() + g[i].imag() * b[i].real();
        re += a[i].real() * tr - a[i].imag() * ti;
        im += a[i].real() * ti + a[i].imag() * tr;
    }
    return {re, im};
}

void axpy_ref(cd alpha, const cd* x, cd* y, std::size_t n) {
    const double ar = alpha.real(), ai = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = cd(y[i].real() + ar * xr - ai * xi, y[i].imag() + ar * xi + ai * xr);
    }
}

const Table kScalar{"scalar", dotc_ref, dotu_ref, triple_dotc_ref, triple_dotu_ref, axpy_ref};

}  // namespace

const Table& scalar() { return kScalar; }

}  // namespace rischan::kernels
