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

#include <cstdlib>
#include <string>

#include "qet/kernels.h"

namespace qet::kernels {

#ifdef QET_HAVE_AVX2_KERNELS
namespace detail {
const KernelTable &avx2_table();
}
#endif

const KernelTable *avx2_kernels() {
#ifdef QET_HAVE_AVX2_KERNELS
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    if (supported) {
        return &detail::avx2_table();
    }
#endif
    return nullptr;
}

const KernelTable &active() {
    static const KernelTable &table = []() -> const KernelTable & {
        const char *env = std::getenv("QET_KERNELS");
        std::string choice = env != nullptr ? env : "auto";
        if (choice == "scalar") {
            return scalar_kernels();
        }
        if (const KernelTable *avx2 = avx2_kernels()) {
            return *avx2;
        }
        return scalar_kernels();
    }();
    return table;
}

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
    }
    return "unknown";
}

}  // namespace qet::kernels
