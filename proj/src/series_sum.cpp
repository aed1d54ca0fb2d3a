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

#include "gmseries/series_sum.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gmseries/dirichlet.hpp"
#include "gmseries/parallel.hpp"

namespace gmseries {

namespace {

constexpr std::int64_t kCoefficientChunk = 1 << 16;

void validate_spec(const SeriesSpec& spec) {
    if (!(spec.c > 0.0)) throw std::invalid_argument("series: frequency scale c > 0 required");
}

// Buffers one chunk of coefficients and feeds it to the kernel for a
// contiguous slice of grid points.
struct CoefficientChunk {
    std::vector<double> re, im;
    bool has_imag = false;

    SeriesTermBlock fill(const Sequence& seq, std::int64_t k0, std::int64_t count) {
        re.resize(static_cast<std::size_t>(count));
        im.resize(static_cast<std::size_t>(count));
        has_imag = false;
        for (std::int64_t j = 0; j < count; ++j) {
            const std::complex<double> v = seq.term(k0 + j);
            re[static_cast<std::size_t>(j)] = v.real();
            im[static_cast<std::size_t>(j)] = v.imag();
            if (v.imag() != 0.0) has_imag = true;
        }
        SeriesTermBlock blk;
        blk.re = re.data();
        blk.im = has_imag ? im.data() : nullptr;
        blk.count = static_cast<std::size_t>(count);
        blk.k0 = k0;
        return blk;
    }
};

void accumulate_range(const SeriesSpec& spec, std::int64_t k_first, std::int64_t k_last,
                      const double* xs, std::size_t nx, std::complex<double>* out) {
    const SeriesKernel& kernel = active_series_kernel();
    CoefficientChunk chunk;
    for (std::int64_t k0 = k_first; k0 <= k_last; k0 += kCoefficientChunk) {
        const std::int64_t count = std::min(kCoefficientChunk, k_last - k0 + 1);
        const SeriesTermBlock blk = chunk.fill(spec.seq, k0, count);
        kernel.accumulate(spec.kind, blk, spec.c, xs, nx, out);
    }
}

}  // namespace

std::complex<double> partial_sum(const SeriesSpec& spec, std::int64_t N, double x,
                                 SumMethod method, int r) {
    validate_spec(spec);
    if (N < 1) throw std::invalid_argument("partial_sum: N >= 1 required");

    if (method == SumMethod::SummationByParts) {
        const double w = spec.c * x;
        switch (spec.kind) {
            case SeriesKind::Sine: return sbp_sin(spec.seq, 1, N, r, w);
            case SeriesKind::Cosine: return sbp_cos(spec.seq, 1, N, r, w);
            case SeriesKind::Exponential: return sbp_exp(spec.seq, 1, N, r, w);
        }
        throw std::invalid_argument("unknown series kind");
    }

    std::complex<double> out{};
    accumulate_range(spec, 1, N, &x, 1, &out);
    return out;
}

void partial_sum_batch(const SeriesSpec& spec, std::int64_t k_first, std::int64_t k_last,
                       std::span<const double> xs, std::span<std::complex<double>> out) {
    validate_spec(spec);
    if (k_first < 1 || k_last < k_first)
        throw std::invalid_argument("partial_sum_batch: need 1 <= k_first <= k_last");
    if (xs.size() != out.size())
        throw std::invalid_argument("partial_sum_batch: xs/out size mismatch");
    std::fill(out.begin(), out.end(), std::complex<double>{});

    // Chunk boundaries stay multiples of the vector width so lane grouping
    // (and therefore the result bits) cannot depend on the thread count.
    parallel_for_chunks(xs.size(), 4, [&](std::size_t begin, std::size_t end) {
        accumulate_range(spec, k_first, k_last, xs.data() + begin, end - begin,
                         out.data() + begin);
    });
}

}  // namespace gmseries
