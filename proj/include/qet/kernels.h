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

#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference implementation and,
// on x86-64, an AVX2+FMA variant selected at runtime. The variants are required to agree
// to rounding (see tests/kernels_test.cc).

#include <cstddef>
#include <string_view>

#include "qet/linalg.h"

namespace qet::kernels {

enum class Backend { scalar, avx2 };

struct KernelTable {
    Backend backend;
    /// y = m * x for a row-major 4x4 complex matrix.
    void (*cmatvec4)(const Complex *m, const Complex *x, Complex *y);
    /// c = a * b for row-major 4x4 complex matrices. `c` must not alias `a` or `b`.
    void (*cmatmul4)(const Complex *a, const Complex *b, Complex *c);
    /// Closed-form <E0>, <H1>, <V> of the teleportation protocol for n (h, k) pairs.
    /// Any output pointer may be null.
    void (*model_energies)(const double *h, const double *k, std::size_t n, double *e0, double *h1, double *v);
};

const KernelTable &scalar_kernels();

/// Null when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable *avx2_kernels();

/// Table used by the library. Chosen on first use: the best supported backend, unless the
/// QET_KERNELS environment variable is "scalar" (or "avx2", honoured only if supported).
const KernelTable &active();

std::string_view backend_name(Backend b);

}  // namespace qet::kernels
