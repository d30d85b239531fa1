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

// Compiled with -mavx2 -mfma. Only reachable through avx2_kernels(), which checks the CPU first.

#include <immintrin.h>

#include "qet/kernels.h"

namespace qet::kernels::detail {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d a, __m256d b) {
    __m256d b_re = _mm256_movedup_pd(b);
    __m256d b_im = _mm256_permute_pd(b, 0xF);
    __m256d a_swapped = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swapped, b_im));
}

inline const double *dptr(const Complex *p) {
    return reinterpret_cast<const double *>(p);
}

void cmatvec4_avx2(const Complex *m, const Complex *x, Complex *y) {
    __m256d x01 = _mm256_loadu_pd(dptr(x));
    __m256d x23 = _mm256_loadu_pd(dptr(x + 2));
    __m128d out[4];
    for (int r = 0; r < 4; ++r) {
        __m256d row01 = _mm256_loadu_pd(dptr(m + 4 * r));
        __m256d row23 = _mm256_loadu_pd(dptr(m + 4 * r + 2));
        __m256d p = _mm256_add_pd(cmul(row01, x01), cmul(row23, x23));
        out[r] = _mm_add_pd(_mm256_castpd256_pd128(p), _mm256_extractf128_pd(p, 1));
    }
    double *dst = reinterpret_cast<double *>(y);
    for (int r = 0; r < 4; ++r) {
        _mm_storeu_pd(dst + 2 * r, out[r]);
    }
}

void cmatmul4_avx2(const Complex *a, const Complex *b, Complex *c) {
    __m256d brow[4][2];
    for (int j = 0; j < 4; ++j) {
        brow[j][0] = _mm256_loadu_pd(dptr(b + 4 * j));
        brow[j][1] = _mm256_loadu_pd(dptr(b + 4 * j + 2));
    }
    double *dst = reinterpret_cast<double *>(c);
    for (int r = 0; r < 4; ++r) {
        __m256d acc0 = _mm256_setzero_pd();
        __m256d acc1 = _mm256_setzero_pd();
        for (int j = 0; j < 4; ++j) {
            __m256d s = _mm256_broadcast_pd(reinterpret_cast<const __m128d *>(dptr(a + 4 * r + j)));
            acc0 = _mm256_add_pd(acc0, cmul(s, brow[j][0]));
            acc1 = _mm256_add_pd(acc1, cmul(s, brow[j][1]));
        }
        _mm256_storeu_pd(dst + 8 * r, acc0);
        _mm256_storeu_pd(dst + 8 * r + 4, acc1);
    }
}

void model_energies_avx2(const double *h, const double *k, std::size_t n, double *e0, double *h1, double *v) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d hv = _mm256_loadu_pd(h + i);
        __m256d kv = _mm256_loadu_pd(k + i);
        __m256d hh = _mm256_mul_pd(hv, hv);
        __m256d kk = _mm256_mul_pd(kv, kv);
        __m256d scale = _mm256_sqrt_pd(_mm256_add_pd(hh, kk));
        __m256d a = _mm256_fmadd_pd(two, kk, hh);
        __m256d hk = _mm256_mul_pd(hv, kv);
        __m256d r = _mm256_sqrt_pd(_mm256_fmadd_pd(a, a, _mm256_mul_pd(hk, hk)));
        __m256d one_minus_cos = _mm256_sub_pd(one, _mm256_div_pd(a, r));
        __m256d sin2 = _mm256_div_pd(hk, r);
        if (e0 != nullptr) {
            _mm256_storeu_pd(e0 + i, _mm256_div_pd(hh, scale));
        }
        if (h1 != nullptr) {
            __m256d inner = _mm256_fmadd_pd(hv, one_minus_cos, _mm256_mul_pd(kv, sin2));
            _mm256_storeu_pd(h1 + i, _mm256_div_pd(_mm256_mul_pd(hv, inner), scale));
        }
        if (v != nullptr) {
            __m256d inner = _mm256_fmsub_pd(kv, one_minus_cos, _mm256_mul_pd(hv, sin2));
            _mm256_storeu_pd(v + i, _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(two, kv), inner), scale));
        }
    }
    if (i < n) {
        scalar_kernels().model_energies(h + i, k + i, n - i, e0 ? e0 + i : nullptr, h1 ? h1 + i : nullptr,
                                        v ? v + i : nullptr);
    }
}

}  // namespace

const KernelTable &avx2_table() {
    static const KernelTable table{Backend::avx2, cmatvec4_avx2, cmatmul4_avx2, model_energies_avx2};
    return table;
}

}  // namespace qet::kernels::detail
