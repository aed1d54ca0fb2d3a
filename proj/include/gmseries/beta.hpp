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

#ifndef GMSERIES_BETA_HPP
#define GMSERIES_BETA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gmseries/sequence.hpp"

namespace gmseries {

/// Which majorant dominates the block variation in a membership check.
enum class BetaKind { Beta1, Beta2, Beta3 };

const char* beta_kind_name(BetaKind k) noexcept;

/// Nondecreasing, unbounded lower-limit schedule n -> b(n) for the Beta3
/// supremum: b(n) = max(1, ceil(scale * n^power)), 0 < power <= 1, scale > 0.
/// The default (scale = power = 1) is the identity schedule b(n) = n.
struct BSchedule {
    double scale = 1.0;
    double power = 1.0;

    std::int64_t operator()(std::int64_t n) const;
    std::string name() const;
    bool is_identity() const noexcept { return scale == 1.0 && power == 1.0; }
};

/// Majorant selector plus its family-specific parameters.
struct BetaSpec {
    BetaKind kind = BetaKind::Beta3;
    double c_scale = 2.0;            ///< Beta2 window [n/c, c*n]; requires c_scale > 1
    double q = 1.0;                  ///< Beta3 inner exponent; requires q > 0
    BSchedule b{};                   ///< Beta3 lower-limit schedule
    std::int64_t m_cap = 1 << 16;    ///< Beta3 supremum truncation bound
};

/// |a_n|.
double beta1(const Sequence& seq, std::int64_t n);

/// Sum of |a_k|/k over k in [floor(n/c), floor(c*n)], window clamped to k >= 1.
/// Requires c_scale > 1.
double beta2(const Sequence& seq, std::int64_t n, double c_scale);

struct Beta3Result {
    double value = 0.0;
    std::int64_t argmax = 0;  ///< the m attaining the truncated supremum
    bool capped = false;      ///< argmax == m_cap: the cap may hide a larger value
};

/// (1/n) * max over m in [b(n), m_cap] of m^(1-1/q) * (sum_{k=m}^{2m} |a_k|^q)^(1/q).
/// Requires q > 0 and b(n) <= m_cap.
Beta3Result beta3(const Sequence& seq, std::int64_t n, double q, const BSchedule& b,
                  std::int64_t m_cap);

/// Prefix-sum cache over |a_k|^q for repeated Beta3 evaluation against the
/// same sequence. Read-only after construction; safe to share across threads.
class Beta3Evaluator {
public:
    Beta3Evaluator(const Sequence& seq, double q, std::int64_t m_cap);

    Beta3Result at(std::int64_t n, const BSchedule& b) const;

    double q() const noexcept { return q_; }
    std::int64_t m_cap() const noexcept { return m_cap_; }

private:
    double q_;
    std::int64_t m_cap_;
    std::vector<double> prefix_;  // prefix_[i] = sum_{k=1}^{i} |a_k|^q
};

/// Dispatch on BetaSpec::kind. Beta3 goes through a one-shot evaluator;
/// prefer Beta3Evaluator when sweeping many n.
double beta_value(const Sequence& seq, std::int64_t n, const BetaSpec& spec);

}  // namespace gmseries

#endif  // GMSERIES_BETA_HPP
