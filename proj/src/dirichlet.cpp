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

#include "gmseries/dirichlet.hpp"

#include <cmath>
#include <string>

#include "trig_product.hpp"

namespace gmseries {

namespace {

using detail::cos_prod;
using detail::sin_prod;

void require_range(std::int64_t n, std::int64_t m, int r) {
    if (n < 1) throw std::invalid_argument("summation by parts: n >= 1 required");
    if (m < n) throw std::invalid_argument("summation by parts: m >= n required");
    if (r < 1) throw std::invalid_argument("summation by parts: r >= 1 required");
}

double half_denominator(int r, double x) {
    const double margin = singularity_margin(r, x);
    if (margin < kSingularityEps) throw singularity_error(r, x, margin);
    return 2.0 * std::sin(static_cast<double>(r) * x * 0.5);
}

// cos((k + r/2) x) evaluated at the exact product (2k + r) * (x/2).
double cos_half_angle(std::int64_t k, int r, double x) {
    return cos_prod(static_cast<double>(2 * k + r), x * 0.5);
}

double sin_half_angle(std::int64_t k, int r, double x) {
    return sin_prod(static_cast<double>(2 * k + r), x * 0.5);
}

}  // namespace

singularity_error::singularity_error(int r, double x, double margin)
    : std::domain_error("kernel singular: |sin(r*x/2)| = " + std::to_string(margin) +
                        " < eps at r = " + std::to_string(r) + ", x = " + std::to_string(x)),
      margin_(margin) {}

double singularity_margin(int r, double x) noexcept {
    return std::abs(std::sin(static_cast<double>(r) * x * 0.5));
}

bool kernel_usable(int r, double x) noexcept {
    return singularity_margin(r, x) >= kSingularityEps;
}

double dirichlet_cos(std::int64_t k, int r, double x) {
    if (k < 0) throw std::invalid_argument("dirichlet_cos: k >= 0 required");
    if (r == 0) throw std::invalid_argument("dirichlet_cos: r must be nonzero");
    return cos_half_angle(k, r, x) / half_denominator(r, x);
}

double dirichlet_sin(std::int64_t k, int r, double x) {
    if (k < 0) throw std::invalid_argument("dirichlet_sin: k >= 0 required");
    if (r == 0) throw std::invalid_argument("dirichlet_sin: r must be nonzero");
    return sin_half_angle(k, r, x) / half_denominator(r, x);
}

std::complex<double> sbp_sin(const Sequence& seq, std::int64_t n, std::int64_t m, int r,
                             double x) {
    require_range(n, m, r);
    const double denom = half_denominator(r, x);

    std::complex<double> main{};
    for (std::int64_t k = n; k <= m; ++k) main += seq.delta(k, r) * cos_half_angle(k, r, x);

    // Dc_{k,-r} = cos((k - r/2) x) / (2 sin(-r x/2)) = -cos((k - r/2) x) / denom
    std::complex<double> upper{};
    for (std::int64_t k = m + 1; k <= m + r; ++k) upper += seq.term(k) * cos_half_angle(k, -r, x);
    std::complex<double> lower{};
    for (std::int64_t k = n; k <= n + r - 1; ++k) lower += seq.term(k) * cos_half_angle(k, -r, x);

    return (-main - upper + lower) / denom;
}

std::complex<double> sbp_cos(const Sequence& seq, std::int64_t n, std::int64_t m, int r,
                             double x) {
    require_range(n, m, r);
    const double denom = half_denominator(r, x);

    std::complex<double> main{};
    for (std::int64_t k = n; k <= m; ++k) main += seq.delta(k, r) * sin_half_angle(k, r, x);

    std::complex<double> upper{};
    for (std::int64_t k = m + 1; k <= m + r; ++k) upper += seq.term(k) * sin_half_angle(k, -r, x);
    std::complex<double> lower{};
    for (std::int64_t k = n; k <= n + r - 1; ++k) lower += seq.term(k) * sin_half_angle(k, -r, x);

    return (main + upper - lower) / denom;
}

std::complex<double> sbp_exp(const Sequence& seq, std::int64_t n, std::int64_t m, int r,
                             double x) {
    require_range(n, m, r);
    const double denom = half_denominator(r, x);

    std::complex<double> bracket{};
    for (std::int64_t k = n; k <= m; ++k) {
        bracket += seq.delta(k, r) *
                   std::complex<double>(cos_half_angle(k, r, x), sin_half_angle(k, r, x));
    }
    for (std::int64_t k = m + 1; k <= m + r; ++k) {
        bracket += seq.term(k) *
                   std::complex<double>(cos_half_angle(k, -r, x), sin_half_angle(k, -r, x));
    }
    for (std::int64_t k = n; k <= n + r - 1; ++k) {
        bracket -= seq.term(k) *
                   std::complex<double>(cos_half_angle(k, -r, x), sin_half_angle(k, -r, x));
    }

    return std::complex<double>(0.0, -1.0) * bracket / denom;
}

}  // namespace gmseries
