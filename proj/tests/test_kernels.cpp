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

#include <doctest.h>

#include <random>
#include <vector>

#include "rischan/kernels.hpp"

using namespace rischan;

namespace {

std::vector<cd> rand_vec(std::mt19937_64& g, std::size_t n) {
    std::normal_distribution<double> nd;
    std::vector<cd> v(n);
    for (auto& x : v) x = cd(nd(g), nd(g));
    return v;
}

// long-double oracle, independent of both kernel variants
cd oracle_dotc(const std::vector<cd>& x, const std::vector<cd>& y) {
    long double re = 0, im = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        re += (long double)x[i].real() * y[i].real() + (long double)x[i].imag() * y[i].imag();
        im += (long double)x[i].real() * y[i].imag() - (long double)x[i].imag() * y[i].real();
    }
    return {double(re), double(im)};
}

double rel(cd a, cd b, double scale) { return std::abs(a - b) / std::max(scale, 1e-300); }

std::vector<const kernels::Table*> variants() {
    std::vector<const kernels::Table*> v{&kernels::scalar()};
    if (auto* t = kernels::avx2()) v.push_back(t);
    if (auto* t = kernels::neon()) v.push_back(t);
    return v;
}

}  // namespace

TEST_CASE("active kernel table is one of the compiled variants") {
    const auto& a = kernels::active();
    bool found = false;
    for (auto* t : variants()) found = found || t == &a;
    CHECK(found);
    MESSAGE("active kernels: " << a.name);
}

TEST_CASE("dot products match a long-double oracle for every length 0..67") {
    std::mt19937_64 g(11);
    for (std::size_t n = 0; n < 68; ++n) {
        const auto x = rand_vec(g, n), y = rand_vec(g, n);
        const cd ref = oracle_dotc(x, y);
        double scale = 1.0;
        for (std::size_t i = 0; i < n; ++i) scale += std::abs(x[i]) * std::abs(y[i]);
        std::vector<cd> xc(n);
        for (std::size_t i = 0; i < n; ++i) xc[i] = std::conj(x[i]);
        const cd ref_u = oracle_dotc(xc, y);
        for (auto* t : variants()) {
            CHECK(rel(t->dotc(x.data(), y.data(), n), ref, scale) < 1e-14);
            CHECK(rel(t->dotu(x.data(), y.data(), n), ref_u, scale) < 1e-14);
        }
    }
}

TEST_CASE("triple products and axpy agree across variants") {
    std::mt19937_64 g(5);
    for (std::size_t n : {1u, 2u, 3u, 7u, 8u, 64u, 1023u, 1360u}) {
        const auto a = rand_vec(g, n), m = rand_vec(g, n), b = rand_vec(g, n);
        std::vector<cd> mb(n), am(n);
        for (std::size_t i = 0; i < n; ++i) mb[i] = m[i] * b[i];
        double scale = 1.0;
        for (std::size_t i = 0; i < n; ++i) scale += std::abs(a[i]) * std::abs(mb[i]);
        const cd ref_c = oracle_dotc(a, mb);
        std::vector<cd> ac(n);
        for (std::size_t i = 0; i < n; ++i) ac[i] = std::conj(a[i]);
        const cd ref_u = oracle_dotc(ac, mb);
        const cd alpha(0.3, -1.7);
        std::vector<cd> y0 = rand_vec(g, n);
        for (auto* t : variants()) {
            CHECK(rel(t->triple_dotc(a.data(), m.data(), b.data(), n), ref_c, scale) < 1e-14);
            CHECK(rel(t->triple_dotu(a.data(), m.data(), b.data(), n), ref_u, scale) < 1e-14);
            std::vector<cd> y = y0;
            t->axpy(alpha, a.data(), y.data(), n);
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y[i] - (y0[i] + alpha * a[i])) < 1e-13);
        }
    }
}

TEST_CASE("rank-1 update equals the dense outer product") {
    std::mt19937_64 g(3);
    const std::size_t m = 8, n = 32;
    const auto u = rand_vec(g, m), v = rand_vec(g, n);
    const cd alpha(-0.25, 2.0);
    for (auto* t : variants()) {
        Mat C = Mat::Zero(m, n);
        kernels::rank1_update(*t, C.data(), m, m, n, alpha, u.data(), v.data());
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < m; ++i) CHECK(std::abs(C(i, j) - alpha * u[i] * std::conj(v[j])) < 1e-13);
    }
}
