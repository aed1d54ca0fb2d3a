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

#ifndef GMSERIES_SERIES_KERNEL_IMPL_HPP
#define GMSERIES_SERIES_KERNEL_IMPL_HPP

#include "gmseries/series_kernel.hpp"

namespace gmseries::detail {

#if defined(GMSERIES_HAVE_AVX2)
const SeriesKernel& avx2_kernel();
#endif

// Rotation state drifts by ~1 ulp per step; resynchronizing against libm
// every kRotationResync steps bounds the basis error at ~kRotationResync*eps.
inline constexpr std::size_t kRotationResync = 1024;

}  // namespace gmseries::detail

#endif  // GMSERIES_SERIES_KERNEL_IMPL_HPP
