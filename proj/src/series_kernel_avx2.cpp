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

// AVX2+FMA series accumulation: four grid points per register, angles
// advanced by one complex rotation per term instead of a libm call. The
// rotation is resynchronized against libm every kRotationResync terms, and
// leftover lanes run a scalar mirror of the exact FMA sequence so results do
// not depend on how the grid is chunked.

#include <immintrin.h>

#include <cmath>

#include "series_kernel_impl.hpp"
#include "trig_product.hpp"

namespace gmseries::detail {

namespace {

struct LaneState {
    double w, wc, ws;  // per-term angle increment and its rotation factors
    double c, s;       // cos/sin at the current index
};

LaneState init_lane(double step, double x, std::int64_t k0) {
    LaneState st;
    st.w = step * x;
    st.wc = std::cos(st.w);
    st.ws = std::sin(st.w);
    st.c = cos_prod(static_cast<double>(k0), st.w);
    st.s = sin_prod(static_cast<double>(k0), st.w);
    return st;
}

// One leftover lane; every floating-point step mirrors the vector path
// (fma-for-fma) so lane position cannot change the result.
template <bool kHasImag>
void lane_scalar(SeriesKind kind, const SeriesTermBlock& blk, double step, double x,
                 std::complex<double>* out) {
    LaneState st = init_lane(step, x, blk.k0);
    double rec = 0.0, res = 0.0, imc = 0.0, ims = 0.0;
    for (std::size_t j = 0; j < blk.count; ++j) {
        const double ar = blk.re[j];
        rec = std::fma(ar, st.c, rec);
        res = std::fma(ar, st.s, res);
        if constexpr (kHasImag) {
            const double ai = blk.im[j];
            imc = std::fma(ai, st.c, imc);
            ims = std::fma(ai, st.s, ims);
        }
        if ((j + 1) % kRotationResync == 0) {
            const double k = static_cast<double>(blk.k0 + static_cast<std::int64_t>(j) + 1);
            st.c = cos_prod(k, st.w);
            st.s = sin_prod(k, st.w);
        } else {
            const double sw = st.s * st.ws;
            const double cw = st.c * st.ws;
            const double t = std::fma(st.c, st.wc, -sw);
            st.s = std::fma(st.s, st.wc, cw);
            st.c = t;
        }
    }
    switch (kind) {
        case SeriesKind::Sine: *out += std::complex<double>(res, ims); break;
        case SeriesKind::Cosine: *out += std::complex<double>(rec, imc); break;
        case SeriesKind::Exponential: *out += std::complex<double>(rec - ims, res + imc); break;
    }
}

template <bool kHasImag>
void group4(SeriesKind kind, const SeriesTermBlock& blk, double step, const double* xs,
            std::complex<double>* out) {
    alignas(32) double wbuf[4], cbuf[4], sbuf[4], wcbuf[4], wsbuf[4];
    for (int l = 0; l < 4; ++l) {
        const LaneState st = init_lane(step, xs[l], blk.k0);
        wbuf[l] = st.w;
        wcbuf[l] = st.wc;
        wsbuf[l] = st.ws;
        cbuf[l] = st.c;
        sbuf[l] = st.s;
    }
    __m256d c = _mm256_load_pd(cbuf);
    __m256d s = _mm256_load_pd(sbuf);
    const __m256d wc = _mm256_load_pd(wcbuf);
    const __m256d ws = _mm256_load_pd(wsbuf);
    __m256d rec = _mm256_setzero_pd();
    __m256d res = _mm256_setzero_pd();
    __m256d imc = _mm256_setzero_pd();
    __m256d ims = _mm256_setzero_pd();

    for (std::size_t j = 0; j < blk.count; ++j) {
        const __m256d ar = _mm256_set1_pd(blk.re[j]);
        rec = _mm256_fmadd_pd(ar, c, rec);
        res = _mm256_fmadd_pd(ar, s, res);
        if constexpr (kHasImag) {
            const __m256d ai = _mm256_set1_pd(blk.im[j]);
            imc = _mm256_fmadd_pd(ai, c, imc);
            ims = _mm256_fmadd_pd(ai, s, ims);
        }
        if ((j + 1) % kRotationResync == 0) {
            const double k = static_cast<double>(blk.k0 + static_cast<std::int64_t>(j) + 1);
            for (int l = 0; l < 4; ++l) {
                cbuf[l] = cos_prod(k, wbuf[l]);
                sbuf[l] = sin_prod(k, wbuf[l]);
            }
            c = _mm256_load_pd(cbuf);
            s = _mm256_load_pd(sbuf);
        } else {
            const __m256d t = _mm256_fmsub_pd(c, wc, _mm256_mul_pd(s, ws));
            s = _mm256_fmadd_pd(s, wc, _mm256_mul_pd(c, ws));
            c = t;
        }
    }

    alignas(32) double rec4[4], res4[4], imc4[4], ims4[4];
    _mm256_store_pd(rec4, rec);
    _mm256_store_pd(res4, res);
    _mm256_store_pd(imc4, imc);
    _mm256_store_pd(ims4, ims);
    for (int l = 0; l < 4; ++l) {
        switch (kind) {
            case SeriesKind::Sine: out[l] += std::complex<double>(res4[l], ims4[l]); break;
            case SeriesKind::Cosine: out[l] += std::complex<double>(rec4[l], imc4[l]); break;
            case SeriesKind::Exponential:
                out[l] += std::complex<double>(rec4[l] - ims4[l], res4[l] + imc4[l]);
                break;
        }
    }
}

void accumulate_avx2(SeriesKind kind, const SeriesTermBlock& blk, double step, const double* xs,
                     std::size_t nx, std::complex<double>* out) {
    const bool has_imag = blk.im != nullptr;
    std::size_t i = 0;
    for (; i + 4 <= nx; i += 4) {
        if (has_imag)
            group4<true>(kind, blk, step, xs + i, out + i);
        else
            group4<false>(kind, blk, step, xs + i, out + i);
    }
    for (; i < nx; ++i) {
        if (has_imag)
            lane_scalar<true>(kind, blk, step, xs[i], out + i);
        else
            lane_scalar<false>(kind, blk, step, xs[i], out + i);
    }
}

}  // namespace

const SeriesKernel& avx2_kernel() {
    static const SeriesKernel kernel{"avx2", &accumulate_avx2};
    return kernel;
}

}  // namespace gmseries::detail
