// Copyright 2026 The QET Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "qet/kernels.h"

namespace qet::kernels {
namespace {

// Explicit component arithmetic; std::complex operator* carries inf/nan recovery we do not want
// in the reference path.
inline void cmul_acc(const Complex &a, const Complex &b, double &re, double &im) {
    re += a.real() * b.real() - a.imag() * b.imag();
    im += a.real() * b.imag() + a.imag() * b.real();
}

void cmatvec4_scalar(const Complex *m, const Complex *x, Complex *y) {
    Complex out[4];
    for (std::size_t r = 0; r < 4; ++r) {
        double re = 0, im = 0;
        for (std::size_t c = 0; c < 4; ++c) {
            cmul_acc(m[4 * r + c], x[c], re, im);
        }
        out[r] = {re, im};
    }
    for (std::size_t r = 0; r < 4; ++r) {
        y[r] = out[r];
    }
}

void cmatmul4_scalar(const Complex *a, const Complex *b, Complex *c) {
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t col = 0; col < 4; ++col) {
            double re = 0, im = 0;
            for (std::size_t j = 0; j < 4; ++j) {
                cmul_acc(a[4 * r + j], b[4 * j + col], re, im);
            }
            c[4 * r + col] = {re, im};
        }
    }
}

void model_energies_scalar(const double *h, const double *k, std::size_t n, double *e0, double *h1, double *v) {
    for (std::size_t i = 0; i < n; ++i) {
        double hh = h[i] * h[i];
        double kk = k[i] * k[i];
        double scale = std::sqrt(hh + kk);
        double a = hh + 2 * kk;
        double hk = h[i] * k[i];
        double r = std::sqrt(a * a + hk * hk);
        double one_minus_cos = 1 - a / r;
        double sin2 = hk / r;
        if (e0 != nullptr) {
            e0[i] = hh / scale;
        }
        if (h1 != nullptr) {
            h1[i] = h[i] * (h[i] * one_minus_cos + k[i] * sin2) / scale;
        }
        if (v != nullptr) {
            v[i] = 2 * k[i] * (k[i] * one_minus_cos - h[i] * sin2) / scale;
        }
    }
}

}  // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{Backend::scalar, cmatvec4_scalar, cmatmul4_scalar, model_energies_scalar};
    return table;
}

}  // namespace qet::kernels
