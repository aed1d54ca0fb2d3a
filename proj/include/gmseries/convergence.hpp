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

#ifndef GMSERIES_CONVERGENCE_HPP
#define GMSERIES_CONVERGENCE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gmseries/sequence.hpp"
#include "gmseries/series_sum.hpp"

namespace gmseries {

/// x-grid used by tail probes. Points are i*L/count + L/2^21 over the domain
/// (0, pi/c) for sine series and [0, 2pi/c) otherwise; the fixed half-step
/// offset of the finest refinement level keeps grids with count | count'
/// nested and avoids exact singular points 2l*pi/(rc). The reported supremum
/// is a lower bound on the true supremum; optional golden-section refinement
/// around the grid argmax tightens it.
struct XGridSpec {
    int count = 4096;
    bool refine = true;
    int refine_iters = 48;
};

struct TailProbeReport {
    std::vector<std::int64_t> n_values;
    std::vector<double> sup_tail;   ///< max over grid of |sum_{k=n}^{n+K} term*basis|
    std::vector<double> argmax_x;
    std::int64_t window = 0;        ///< K
    int grid_count = 0;
    std::vector<double> excluded;   ///< grid points skipped on the SBP path
    double trend_slope = 0.0;       ///< log-log slope of sup_tail vs n
    SumMethod method = SumMethod::Direct;
    int sbp_r = 1;
    std::string kernel;
    int threads = 1;
};

/// Windowed tail suprema: for each n, sup over the x grid of the magnitude of
/// the K+1-term tail slice starting at n. For a sequence satisfying the
/// uniform-convergence hypotheses the suprema must trend down (negative
/// trend_slope).
TailProbeReport tail_probe(const SeriesSpec& spec, std::span<const std::int64_t> n_grid,
                           std::int64_t K, const XGridSpec& grid = {},
                           SumMethod method = SumMethod::Direct, int sbp_r = 1);

enum class DecayKind { NLnN, NPow };
enum class DecayVerdict { Decaying, NotDecaying, Inconclusive };

const char* decay_kind_name(DecayKind k) noexcept;
const char* decay_verdict_name(DecayVerdict v) noexcept;

struct DecayReport {
    DecayKind kind = DecayKind::NLnN;
    double p = 2.0;  ///< NPow exponent (statistic n^(2-1/p) |a_n|)
    std::vector<std::int64_t> n_values;
    std::vector<double> statistic;
    std::vector<double> tail_max;  ///< running max over the grid tail
    DecayVerdict verdict = DecayVerdict::Inconclusive;

    /// Cross-statistic domination check (requires p > 1): the n-ln-n
    /// statistic equals the power statistic times ln(n)/n^(1-1/p), an exact
    /// identity verified per grid point, and the conversion factor must be
    /// decreasing beyond n = e^(p/(p-1)). Together these make the power
    /// statistic's decay force the n-ln-n statistic's decay.
    bool domination_checked = false;
    bool domination_holds = false;
    double domination_factor_last = 0.0;
};

/// Decay-condition diagnostics for the statistic n*ln(n)*|a_n| (NLnN) or
/// n^(2-1/p)*|a_n| (NPow). The grid must be increasing. p <= 1 is an error
/// when the domination check is requested.
DecayReport decay_condition(const Sequence& seq, DecayKind kind, double p,
                            std::span<const std::int64_t> n_grid,
                            bool check_domination = true);

enum class PointwiseVerdict { Convergent, DivergentTrend, Inconclusive };

const char* pointwise_verdict_name(PointwiseVerdict v) noexcept;

struct PointwiseLReport {
    int l = 0;
    std::vector<std::int64_t> n_values;           ///< geometric N grid
    std::vector<std::complex<double>> partial_sums;
    double oscillation = 0.0;  ///< max pairwise distance over the top two octaves
    PointwiseVerdict verdict = PointwiseVerdict::Inconclusive;
};

struct PointwiseReport {
    SeriesKind kind = SeriesKind::Sine;
    int r = 3;
    double osc_tol = 1e-6;  ///< heuristic threshold, printed with the report
    std::int64_t n_max = 0;
    std::vector<PointwiseLReport> per_l;
};

/// Admissible l range for the pointwise condition at the rational points
/// 2l*pi/r: sine series need r >= 3 and l in 1..r/2-1 (even r) or 1..(r-1)/2
/// (odd r); cosine/exponential series take l in 0..floor(r/2). Empty for
/// sine with r < 3 (the condition is vacuous there).
std::vector<int> pointwise_l_range(SeriesKind kind, int r);

/// Partial sums S_N = sum_{k=1}^{N} a_k * basis(2*pi*l*k/r) on a geometric N
/// grid. Convergent when the top-two-octave oscillation falls below osc_tol
/// (a heuristic, labeled as such); a same-signed monotone drift instead is a
/// divergent trend.
PointwiseReport pointwise_condition(const Sequence& seq, SeriesKind kind, int r,
                                    std::span<const int> l_values,
                                    std::int64_t n_max = std::int64_t{1} << 24,
                                    double osc_tol = 1e-6);

struct LogIntegralResult {
    double integral = 0.0;  ///< closed form ln(ln(n+N)) - ln(ln(n+N^(1/p)))
    double bound = 0.0;     ///< ln p
    bool ok = false;        ///< integral <= bound + 1e-12
};

/// Closed form of the integral of 1/(k ln k) over [n + N^(1/p), n + N] and
/// its upper bound ln p. Requires n >= 1, N >= 1, p >= 1.
LogIntegralResult log_integral_bound(std::int64_t n, std::int64_t N, double p);

struct DivergenceReport {
    double p = 2.0;
    double x0 = 0.0;  ///< 2*pi/3
    std::vector<std::int64_t> n_values;
    std::vector<double> partial_sum;  ///< S(N) = sum_{k=1}^{6N+5} a_k sin(k x0)
    std::vector<double> lower_bound;  ///< 4 sin(2pi/3) sum_{k=1}^{N} 1/((6k+5) ln(6k+5))
    std::vector<bool> bound_ok;       ///< S(N) >= lower bound
    bool increasing = false;          ///< S strictly increasing along the grid
    bool all_ok = false;
};

/// Divergence demonstrator for the counterexample sine series at x0 = 2*pi/3:
/// direct partial sums against the provable lower bound, which grows without
/// bound (like ln ln N). Requires p > 1.
DivergenceReport divergence_demo(double p, std::span<const std::int64_t> N_grid);

}  // namespace gmseries

#endif  // GMSERIES_CONVERGENCE_HPP
