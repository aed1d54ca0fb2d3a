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

#include "gmseries/series_kernel.hpp"

#include <cmath>

#include "trig_product.hpp"

namespace gmseries {

namespace {

using detail::cos_prod;
using detail::sin_prod;

// Reference path: one libm evaluation per term and grid point, no recurrences.
void accumulate_scalar(SeriesKind kind, const SeriesTermBlock& blk, double step, const double* xs,
                       std::size_t nx, std::complex<double>* out) {
    for (std::size_t i = 0; i < nx; ++i) {
        const double w = step * xs[i];
        double rec = 0.0, res = 0.0, imc = 0.0, ims = 0.0;
        for (std::size_t j = 0; j < blk.count; ++j) {
            const double k = static_cast<double>(blk.k0 + static_cast<std::int64_t>(j));
            const double ar = blk.re[j];
            switch (kind) {
                case SeriesKind::Sine: {
                    const double s = sin_prod(k, w);
                    res += ar * s;
                    if (blk.im) ims += blk.im[j] * s;
                    break;
                }
                case SeriesKind::Cosine: {
                    const double c = cos_prod(k, w);
                    rec += ar * c;
                    if (blk.im) imc += blk.im[j] * c;
                    break;
                }
                case SeriesKind::Exponential: {
                    const double c = cos_prod(k, w);
                    const double s = sin_prod(k, w);
                    rec += ar * c;
                    res += ar * s;
                    if (blk.im) {
                        const double ai = blk.im[j];
                        imc += ai * c;
                        ims += ai * s;
                    }
                    break;
                }
            }
        }
        switch (kind) {
            case SeriesKind::Sine: out[i] += std::complex<double>(res, ims); break;
            case SeriesKind::Cosine: out[i] += std::complex<double>(rec, imc); break;
            case SeriesKind::Exponential:
                out[i] += std::complex<double>(rec - ims, res + imc);
                break;
        }
    }
}

}  // namespace

const char* series_kind_name(SeriesKind k) noexcept {
    switch (k) {
        case SeriesKind::Sine: return "sine";
        case SeriesKind::Cosine: return "cosine";
        case SeriesKind::Exponential: return "exponential";
    }
    return "unknown";
}

const SeriesKernel& scalar_series_kernel() {
    static const SeriesKernel kernel{"scalar", &accumulate_scalar};
    return kernel;
}

}  // namespace gmseries
