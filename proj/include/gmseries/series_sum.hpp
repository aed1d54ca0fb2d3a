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

#ifndef GMSERIES_SERIES_SUM_HPP
#define GMSERIES_SERIES_SUM_HPP

#include <complex>
#include <cstdint>
#include <span>

#include "gmseries/sequence.hpp"
#include "gmseries/series_kernel.hpp"

namespace gmseries {

/// One of the three series sum b_k sin(ckx), sum a_k cos(ckx), sum c_k e^{ickx}.
struct SeriesSpec {
    SeriesKind kind = SeriesKind::Sine;
    Sequence seq{};
    double c = 1.0;  ///< frequency scale, c > 0
};

enum class SumMethod { Direct, SummationByParts };

/// Partial sum over k in [1, N] at a single point. The summation-by-parts
/// method applies the r-step transform at argument c*x and must agree with
/// Direct to 1e-9 relative away from singular points; it throws
/// singularity_error when |sin(r*c*x/2)| < kSingularityEps.
std::complex<double> partial_sum(const SeriesSpec& spec, std::int64_t N, double x,
                                 SumMethod method = SumMethod::Direct, int r = 1);

/// Direct-method range sum over k in [k_first, k_last] for every grid point,
/// evaluated through the active kernel and split across the configured
/// threads. out must have xs.size() entries; results are added to zeros.
void partial_sum_batch(const SeriesSpec& spec, std::int64_t k_first, std::int64_t k_last,
                       std::span<const double> xs, std::span<std::complex<double>> out);

}  // namespace gmseries

#endif  // GMSERIES_SERIES_SUM_HPP
