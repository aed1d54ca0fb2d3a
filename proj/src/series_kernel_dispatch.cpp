/*
 * Copyright 2026 The gmseries Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <string>

#include "series_kernel_impl.hpp"

namespace gmseries {

const SeriesKernel* avx2_series_kernel() {
#if defined(GMSERIES_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return &detail::avx2_kernel();
#endif
    return nullptr;
}

const SeriesKernel& active_series_kernel() {
    static const SeriesKernel& selected = []() -> const SeriesKernel& {
        const char* env = std::getenv("GM_SERIES_KERNEL");
        const std::string mode = env ? env : "auto";
        if (mode == "scalar") return scalar_series_kernel();
        if (const SeriesKernel* v = avx2_series_kernel()) return *v;
        return scalar_series_kernel();
    }();
    return selected;
}

}  // namespace gmseries
