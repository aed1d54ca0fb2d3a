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

#include "gmseries/beta.hpp"

#include <cmath>
#include <stdexcept>

namespace gmseries {

const char* beta_kind_name(BetaKind k) noexcept {
    switch (k) {
        case BetaKind::Beta1: return "beta1";
        case BetaKind::Beta2: return "beta2";
        case BetaKind::Beta3: return "beta3";
    }
    return "unknown";
}

std::int64_t BSchedule::operator()(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("schedule argument must satisfy n >= 1");
    if (!(scale > 0.0) || !(power > 0.0) || power > 1.0)
        throw std::invalid_argument("schedule requires scale > 0 and 0 < power <= 1");
    if (is_identity()) return n;
    const double v = std::ceil(scale * std::pow(static_cast<double>(n), power));
    return v < 1.0 ? 1 : static_cast<std::int64_t>(v);
}

std::string BSchedule::name() const {
    if (is_identity()) return "identity";
    return "pow(" + std::to_string(scale) + "," + std::to_string(power) + ")";
}

double beta1(const Sequence& seq, std::int64_t n) { return std::abs(seq.term(n)); }

double beta2(const Sequence& seq, std::int64_t n, double c_scale) {
    if (n < 1) throw std::invalid_argument("beta2: n >= 1 required");
    if (!(c_scale > 1.0)) throw std::invalid_argument("beta2: c_scale > 1 required");
    std::int64_t lo = static_cast<std::int64_t>(std::floor(static_cast<double>(n) / c_scale));
    const std::int64_t hi = static_cast<std::int64_t>(std::floor(c_scale * static_cast<double>(n)));
    if (lo < 1) lo = 1;
    double sum = 0.0;
    for (std::int64_t k = lo; k <= hi; ++k)
        sum += std::abs(seq.term(k)) / static_cast<double>(k);
    return sum;
}

Beta3Evaluator::Beta3Evaluator(const Sequence& seq, double q, std::int64_t m_cap)
    : q_(q), m_cap_(m_cap) {
    if (!(q > 0.0)) throw std::invalid_argument("beta3: q > 0 required");
    if (m_cap < 1) throw std::invalid_argument("beta3: m_cap >= 1 required");
    prefix_.resize(static_cast<std::size_t>(2 * m_cap) + 1, 0.0);
    double acc = 0.0;
    for (std::int64_t k = 1; k <= 2 * m_cap; ++k) {
        acc += std::pow(std::abs(seq.term(k)), q);
        prefix_[static_cast<std::size_t>(k)] = acc;
    }
}

Beta3Result Beta3Evaluator::at(std::int64_t n, const BSchedule& b) const {
    if (n < 1) throw std::invalid_argument("beta3: n >= 1 required");
    const std::int64_t lo = b(n);
    if (lo > m_cap_)
        throw std::invalid_argument("beta3: b(n) exceeds m_cap (raise m_cap or shrink b)");
    const double inv_q = 1.0 / q_;
    double best = -1.0;
    std::int64_t best_m = lo;
    for (std::int64_t m = lo; m <= m_cap_; ++m) {
        const double block = prefix_[static_cast<std::size_t>(2 * m)] -
                             prefix_[static_cast<std::size_t>(m - 1)];
        const double v = std::pow(static_cast<double>(m), 1.0 - inv_q) * std::pow(block, inv_q);
        if (v > best) {
            best = v;
            best_m = m;
        }
    }
    return {best / static_cast<double>(n), best_m, best_m == m_cap_};
}

Beta3Result beta3(const Sequence& seq, std::int64_t n, double q, const BSchedule& b,
                  std::int64_t m_cap) {
    return Beta3Evaluator(seq, q, m_cap).at(n, b);
}

double beta_value(const Sequence& seq, std::int64_t n, const BetaSpec& spec) {
    switch (spec.kind) {
        case BetaKind::Beta1: return beta1(seq, n);
        case BetaKind::Beta2: return beta2(seq, n, spec.c_scale);
        case BetaKind::Beta3: return beta3(seq, n, spec.q, spec.b, spec.m_cap).value;
    }
    throw std::invalid_argument("unknown beta kind");
}

}  // namespace gmseries
