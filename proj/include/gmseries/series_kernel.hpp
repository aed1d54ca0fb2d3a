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

#ifndef GMSERIES_SERIES_KERNEL_HPP
#define GMSERIES_SERIES_KERNEL_HPP

#include <complex>
#include <cstddef>
#include <cstdint>

namespace gmseries {

enum class SeriesKind { Sine, Cosine, Exponential };

const char* series_kind_name(SeriesKind k) noexcept;

/// A contiguous run of coefficients a_{k0} .. a_{k0+count-1}.
/// `im` may be null for real-valued runs.
struct SeriesTermBlock {
    const double* re = nullptr;
    const double* im = nullptr;
    std::size_t count = 0;
    std::int64_t k0 = 1;
};

/// Accumulates, for each grid point x = xs[i],
///
///   out[i] += sum_j a_{k0+j} * basis((k0+j) * w_i),   w_i = step * xs[i]
///
/// where basis is sin, cos, or e^{i.} per `kind`. The basis argument is
/// defined as the exact product of the integer index with the once-rounded
/// w_i, so independent implementations of this contract agree to a few ulps
/// per term.
using SeriesAccumulateFn = void (*)(SeriesKind kind, const SeriesTermBlock& block, double step,
                                    const double* xs, std::size_t nx,
                                    std::complex<double>* out);

struct SeriesKernel {
    const char* name;
    SeriesAccumulateFn accumulate;
};

/// Reference kernel: one libm sin/cos evaluation per term and grid point.
const SeriesKernel& scalar_series_kernel();

/// AVX2+FMA kernel (4 grid points per lane group, rotation recurrence with
/// periodic resynchronization against libm). Null when the binary was built
/// without AVX2 support or the CPU lacks it.
const SeriesKernel* avx2_series_kernel();

/// Kernel selected at startup: AVX2 when available, otherwise scalar.
/// GM_SERIES_KERNEL=scalar|avx2|auto overrides the choice (an unavailable
/// request falls back to scalar).
const SeriesKernel& active_series_kernel();

}  // namespace gmseries

#endif  // GMSERIES_SERIES_KERNEL_HPP
