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

#ifndef GMSERIES_MEMBERSHIP_HPP
#define GMSERIES_MEMBERSHIP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gmseries/beta.hpp"
#include "gmseries/sequence.hpp"

namespace gmseries {

/// Finite-range stand-in for the definitional "holds for all m": a bounded
/// variation-to-majorant ratio is consistent with membership, a growing one
/// refutes it at desk scale, anything else stays inconclusive.
enum class Verdict { BoundedConsistent, GrowingInconsistent, Inconclusive };

const char* verdict_name(Verdict v) noexcept;

/// Verdict thresholds. The slope test is one-sided: a decaying ratio still
/// certifies boundedness (the certificate constant is max_ratio).
inline constexpr double kSlopeTol = 0.05;
inline constexpr double kTopOctaveGrowthTol = 1.10;
inline constexpr int kMinVerdictSamples = 8;

/// (sum_{n=m}^{2m-1} |a_n - a_{n+r}|^p)^(1/p). Requires m >= 1, p > 0, r >= 1.
double block_variation(const Sequence& seq, std::int64_t m, double p, int r);

struct ClassParams {
    double p = 1.0;
    BetaSpec beta{};
    int r = 1;
};

struct MembershipSample {
    std::int64_t m = 0;
    double variation = 0.0;
    double beta = 0.0;
    double ratio = 0.0;       ///< variation/beta; 0 when both vanish
    bool ratio_finite = true; ///< false when beta == 0 < variation
    std::int64_t beta_argmax = 0;  ///< Beta3 only
    bool beta_capped = false;      ///< Beta3 only: supremum attained at m_cap
};

struct MembershipProfile {
    ClassParams params{};
    std::vector<MembershipSample> samples;
    double fitted_slope = 0.0;       ///< least-squares slope of log ratio vs log m
    double max_ratio = 0.0;
    double top_octave_growth = 1.0;  ///< max ratio on [m_max/2, m_max] / max ratio before
    Verdict verdict = Verdict::Inconclusive;

    // Tail-sum profiles (RBVS) only:
    std::int64_t tail_cap = 0;          ///< 0 for block profiles
    double tail_residual_bound = 0.0;   ///< reported truncation residual estimate
};

/// Geometric grid {lo, lo*factor, ...} clipped at hi (hi always included when
/// it is not already the last point). Requires lo >= 1, factor > 1.
std::vector<std::int64_t> geometric_grid(std::int64_t lo, std::int64_t hi, double factor = 2.0);

/// Ratio profile of block_variation(m, p, r) against the chosen majorant over
/// an increasing m grid, with the fitted growth slope and verdict.
MembershipProfile membership_profile(const Sequence& seq, double p, const BetaSpec& beta, int r,
                                     std::span<const std::int64_t> m_grid);

/// Specialized class checks, each a membership_profile instance:
///   GMS    = (p=1, beta1, r=1)
///   MVBVS  = (p=1, beta2 window [n/lambda, lambda*n], r=1), lambda >= 2
///   SBVS2  = (p=1, beta3(q=1), r=1)
MembershipProfile is_gms(const Sequence& seq, std::span<const std::int64_t> m_grid);
MembershipProfile is_mvbvs(const Sequence& seq, std::span<const std::int64_t> m_grid,
                           double lambda = 2.0);
MembershipProfile is_sbvs2(const Sequence& seq, std::span<const std::int64_t> m_grid,
                           BSchedule b = {}, std::int64_t m_cap = 1 << 16);

/// Rest-bounded-variation check: tail sums sum_{n=m}^{inf} |a_n - a_{n+1}|
/// truncated at tail_cap, ratio against |a_m|. The truncation residual is
/// estimated as a geometric multiple of the last octave's contribution and
/// reported, never hidden.
MembershipProfile is_rbvs_window(const Sequence& seq, std::span<const std::int64_t> m_grid,
                                 std::int64_t tail_cap = std::int64_t{1} << 20);

struct EmbeddingSample {
    std::int64_t m = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_violation = 0.0;  ///< max(0, (lhs-rhs)/max(rhs, tiny))
};

struct EmbeddingReport {
    std::vector<EmbeddingSample> samples;
    double max_rel_violation = 0.0;
    double tol = 1e-12;
    bool ok = true;
};

/// Power-norm monotonicity driving the p-embedding: for 0 < p1 <= p2,
/// block_variation(m, p2, r) <= block_variation(m, p1, r) on every m.
EmbeddingReport embedding_check_p(const Sequence& seq, double p1, double p2, int r,
                                  std::span<const std::int64_t> m_grid);

/// Divisibility telescoping driving the r-embedding: for r1 | r2 and p >= 1,
/// (sum_{n=m}^{2m-1} |D_{r2} a_n|^p)^(1/p)
///   <= sum_{j=0}^{r2/r1-1} (sum_{n=m}^{2m-1} |D_{r1} a_{n+j*r1}|^p)^(1/p).
EmbeddingReport embedding_check_r(const Sequence& seq, int r1, int r2, double p,
                                  std::span<const std::int64_t> m_grid);

}  // namespace gmseries

#endif  // GMSERIES_MEMBERSHIP_HPP
