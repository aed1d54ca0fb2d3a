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

#include "gmseries/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "gmseries/parallel.hpp"

namespace gmseries {

namespace {

void require_increasing(std::span<const std::int64_t> grid, const char* what) {
    if (grid.empty()) throw std::invalid_argument(std::string(what) + ": grid must be nonempty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 1) throw std::invalid_argument(std::string(what) + ": grid entries must be >= 1");
        if (i > 0 && grid[i] <= grid[i - 1])
            throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
    }
}

// Least-squares slope of log(ratio) against log(m) over samples with a
// positive finite ratio; 0 when fewer than two such samples exist.
double fit_log_slope(const std::vector<MembershipSample>& samples) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& s : samples) {
        if (!s.ratio_finite || s.ratio <= 0.0) continue;
        const double x = std::log(static_cast<double>(s.m));
        const double y = std::log(s.ratio);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n < 2) return 0.0;
    const double denom = n * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

void finalize_profile(MembershipProfile& prof) {
    bool any_infinite = false;
    bool all_zero = true;
    double max_ratio = 0.0;
    for (const auto& s : prof.samples) {
        if (!s.ratio_finite) any_infinite = true;
        if (s.ratio != 0.0) all_zero = false;
        max_ratio = std::max(max_ratio, s.ratio);
    }
    prof.max_ratio = max_ratio;
    prof.fitted_slope = fit_log_slope(prof.samples);

    const std::int64_t m_max = prof.samples.back().m;
    double top = 0.0, rest = 0.0;
    for (const auto& s : prof.samples) {
        if (!s.ratio_finite) continue;
        if (2 * s.m >= m_max)
            top = std::max(top, s.ratio);
        else
            rest = std::max(rest, s.ratio);
    }
    if (rest > 0.0)
        prof.top_octave_growth = top / rest;
    else
        prof.top_octave_growth = (top > 0.0) ? std::numeric_limits<double>::infinity() : 1.0;

    if (any_infinite) {
        prof.verdict = Verdict::GrowingInconsistent;
        return;
    }
    if (all_zero) {
        prof.verdict = Verdict::BoundedConsistent;
        return;
    }
    if (prof.samples.size() < static_cast<std::size_t>(kMinVerdictSamples)) {
        prof.verdict = Verdict::Inconclusive;
        return;
    }
    if (prof.fitted_slope <= kSlopeTol && prof.top_octave_growth <= kTopOctaveGrowthTol) {
        prof.verdict = Verdict::BoundedConsistent;
    } else if (prof.fitted_slope > kSlopeTol && prof.top_octave_growth > kTopOctaveGrowthTol) {
        prof.verdict = Verdict::GrowingInconsistent;
    } else {
        prof.verdict = Verdict::Inconclusive;
    }
}

MembershipSample make_sample(std::int64_t m, double variation, double beta) {
    MembershipSample s;
    s.m = m;
    s.variation = variation;
    s.beta = beta;
    if (beta > 0.0) {
        s.ratio = variation / beta;
    } else if (variation == 0.0) {
        s.ratio = 0.0;  // 0/0: definitional vacuity, not a violation
    } else {
        s.ratio = std::numeric_limits<double>::infinity();
        s.ratio_finite = false;
    }
    return s;
}

// (sum_{n=m}^{2m-1} |a_{n+shift} - a_{n+shift+r}|^p)^(1/p)
double shifted_block_variation(const Sequence& seq, std::int64_t m, double p, int r,
                               std::int64_t shift) {
    double acc = 0.0;
    for (std::int64_t n = m; n <= 2 * m - 1; ++n)
        acc += std::pow(std::abs(seq.delta(n + shift, r)), p);
    return std::pow(acc, 1.0 / p);
}

}  // namespace

const char* verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::BoundedConsistent: return "BoundedConsistent";
        case Verdict::GrowingInconsistent: return "GrowingInconsistent";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "unknown";
}

double block_variation(const Sequence& seq, std::int64_t m, double p, int r) {
    if (m < 1) throw std::invalid_argument("block_variation: m >= 1 required");
    if (!(p > 0.0)) throw std::invalid_argument("block_variation: p > 0 required");
    if (r < 1) throw std::invalid_argument("block_variation: r >= 1 required");
    return shifted_block_variation(seq, m, p, r, 0);
}

std::vector<std::int64_t> geometric_grid(std::int64_t lo, std::int64_t hi, double factor) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("geometric_grid: need 1 <= lo <= hi");
    if (!(factor > 1.0)) throw std::invalid_argument("geometric_grid: factor > 1 required");
    std::vector<std::int64_t> grid;
    double v = static_cast<double>(lo);
    std::int64_t last = 0;
    while (v <= static_cast<double>(hi)) {
        const auto m = static_cast<std::int64_t>(std::llround(v));
        if (m > last) {
            grid.push_back(m);
            last = m;
        }
        v *= factor;
    }
    if (grid.empty() || grid.back() != hi) grid.push_back(hi);
    return grid;
}

MembershipProfile membership_profile(const Sequence& seq, double p, const BetaSpec& beta, int r,
                                     std::span<const std::int64_t> m_grid) {
    require_increasing(m_grid, "membership_profile");
    if (!(p > 0.0)) throw std::invalid_argument("membership_profile: p > 0 required");
    if (r < 1) throw std::invalid_argument("membership_profile: r >= 1 required");
    if (beta.kind == BetaKind::Beta2 && !(beta.c_scale > 1.0))
        throw std::invalid_argument("membership_profile: beta2 requires c_scale > 1");

    std::unique_ptr<Beta3Evaluator> b3;
    if (beta.kind == BetaKind::Beta3) b3 = std::make_unique<Beta3Evaluator>(seq, beta.q, beta.m_cap);

    MembershipProfile prof;
    prof.params = {p, beta, r};
    prof.samples.resize(m_grid.size());

    parallel_for_chunks(m_grid.size(), 1, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::int64_t m = m_grid[i];
            const double variation = block_variation(seq, m, p, r);
            double bv = 0.0;
            Beta3Result b3r{};
            if (b3) {
                b3r = b3->at(m, beta.b);
                bv = b3r.value;
            } else {
                bv = beta_value(seq, m, beta);
            }
            prof.samples[i] = make_sample(m, variation, bv);
            prof.samples[i].beta_argmax = b3r.argmax;
            prof.samples[i].beta_capped = b3r.capped;
        }
    });

    finalize_profile(prof);
    return prof;
}

MembershipProfile is_gms(const Sequence& seq, std::span<const std::int64_t> m_grid) {
    BetaSpec b;
    b.kind = BetaKind::Beta1;
    return membership_profile(seq, 1.0, b, 1, m_grid);
}

MembershipProfile is_mvbvs(const Sequence& seq, std::span<const std::int64_t> m_grid,
                           double lambda) {
    if (!(lambda >= 2.0)) throw std::invalid_argument("is_mvbvs: lambda >= 2 required");
    BetaSpec b;
    b.kind = BetaKind::Beta2;
    b.c_scale = lambda;
    return membership_profile(seq, 1.0, b, 1, m_grid);
}

MembershipProfile is_sbvs2(const Sequence& seq, std::span<const std::int64_t> m_grid, BSchedule b,
                           std::int64_t m_cap) {
    BetaSpec spec;
    spec.kind = BetaKind::Beta3;
    spec.q = 1.0;
    spec.b = b;
    spec.m_cap = m_cap;
    return membership_profile(seq, 1.0, spec, 1, m_grid);
}

MembershipProfile is_rbvs_window(const Sequence& seq, std::span<const std::int64_t> m_grid,
                                 std::int64_t tail_cap) {
    require_increasing(m_grid, "is_rbvs_window");
    if (tail_cap <= m_grid.back())
        throw std::invalid_argument("is_rbvs_window: tail_cap must exceed the largest grid m");

    // One descending pass accumulates every tail sum sum_{n=m}^{tail_cap} |a_n - a_{n+1}|.
    std::vector<double> tails(m_grid.size(), 0.0);
    double acc = 0.0;
    double last_octave = 0.0;
    std::size_t gi = m_grid.size();
    for (std::int64_t n = tail_cap; n >= m_grid.front(); --n) {
        const double d = std::abs(seq.delta(n, 1));
        acc += d;
        if (2 * n > tail_cap) last_octave += d;
        while (gi > 0 && m_grid[gi - 1] == n) {
            tails[gi - 1] = acc;
            --gi;
        }
    }

    MembershipProfile prof;
    prof.params = {1.0, BetaSpec{BetaKind::Beta1, 2.0, 1.0, {}, 1 << 16}, 1};
    prof.tail_cap = tail_cap;
    prof.tail_residual_bound = 2.0 * last_octave;
    prof.samples.reserve(m_grid.size());
    for (std::size_t i = 0; i < m_grid.size(); ++i)
        prof.samples.push_back(make_sample(m_grid[i], tails[i], beta1(seq, m_grid[i])));
    finalize_profile(prof);
    return prof;
}

EmbeddingReport embedding_check_p(const Sequence& seq, double p1, double p2, int r,
                                  std::span<const std::int64_t> m_grid) {
    require_increasing(m_grid, "embedding_check_p");
    if (!(p1 > 0.0) || p1 > p2)
        throw std::invalid_argument("embedding_check_p: need 0 < p1 <= p2");
    if (r < 1) throw std::invalid_argument("embedding_check_p: r >= 1 required");

    EmbeddingReport rep;
    for (const std::int64_t m : m_grid) {
        const double lhs = block_variation(seq, m, p2, r);
        const double rhs = block_variation(seq, m, p1, r);
        EmbeddingSample s{m, lhs, rhs, 0.0};
        if (lhs > rhs) {
            const double denom = std::max(rhs, std::numeric_limits<double>::min());
            s.rel_violation = (lhs - rhs) / denom;
        }
        rep.max_rel_violation = std::max(rep.max_rel_violation, s.rel_violation);
        rep.samples.push_back(s);
    }
    rep.ok = rep.max_rel_violation <= rep.tol;
    return rep;
}

EmbeddingReport embedding_check_r(const Sequence& seq, int r1, int r2, double p,
                                  std::span<const std::int64_t> m_grid) {
    require_increasing(m_grid, "embedding_check_r");
    if (r1 < 1 || r2 < r1 || r2 % r1 != 0)
        throw std::invalid_argument("embedding_check_r: need 1 <= r1 <= r2 with r1 | r2");
    if (!(p >= 1.0))
        throw std::invalid_argument("embedding_check_r: p >= 1 required (norm subadditivity)");

    const int k = r2 / r1;
    EmbeddingReport rep;
    for (const std::int64_t m : m_grid) {
        const double lhs = block_variation(seq, m, p, r2);
        double rhs = 0.0;
        for (int j = 0; j < k; ++j)
            rhs += shifted_block_variation(seq, m, p, r1, static_cast<std::int64_t>(j) * r1);
        EmbeddingSample s{m, lhs, rhs, 0.0};
        if (lhs > rhs) {
            const double denom = std::max(rhs, std::numeric_limits<double>::min());
            s.rel_violation = (lhs - rhs) / denom;
        }
        rep.max_rel_violation = std::max(rep.max_rel_violation, s.rel_violation);
        rep.samples.push_back(s);
    }
    rep.ok = rep.max_rel_violation <= rep.tol;
    return rep;
}

}  // namespace gmseries
