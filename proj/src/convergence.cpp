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

#include "gmseries/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gmseries/dirichlet.hpp"
#include "gmseries/parallel.hpp"

namespace gmseries {

namespace {

constexpr double kPi = std::numbers::pi;

// Half the step of the finest refinement level (2^20 points). Grids with
// counts related by divisibility stay nested under this fixed offset, and no
// grid point lands exactly on a singular rational multiple of the period.
constexpr double kGridOffsetScale = 1.0 / (1 << 21);

void require_increasing(std::span<const std::int64_t> grid, const char* what) {
    if (grid.empty()) throw std::invalid_argument(std::string(what) + ": grid must be nonempty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 1) throw std::invalid_argument(std::string(what) + ": entries must be >= 1");
        if (i > 0 && grid[i] <= grid[i - 1])
            throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
    }
}

double domain_length(const SeriesSpec& spec) {
    return spec.kind == SeriesKind::Sine ? kPi / spec.c : 2.0 * kPi / spec.c;
}

std::vector<double> build_x_grid(const SeriesSpec& spec, int count) {
    if (count < 2) throw std::invalid_argument("tail_probe: grid count >= 2 required");
    const double length = domain_length(spec);
    const double step = length / count;
    const double offset = length * kGridOffsetScale;
    std::vector<double> xs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) xs[static_cast<std::size_t>(i)] = step * i + offset;
    return xs;
}

double fit_log_slope(std::span<const std::int64_t> ns, std::span<const double> values) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (!(values[i] > 0.0)) continue;
        const double x = std::log(static_cast<double>(ns[i]));
        const double y = std::log(values[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++cnt;
    }
    if (cnt < 2) return 0.0;
    const double denom = cnt * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (cnt * sxy - sx * sy) / denom;
}

std::complex<double> tail_slice(const SeriesSpec& spec, std::int64_t n, std::int64_t K,
                                double x, SumMethod method, int r) {
    if (method == SumMethod::SummationByParts) {
        const double w = spec.c * x;
        switch (spec.kind) {
            case SeriesKind::Sine: return sbp_sin(spec.seq, n, n + K, r, w);
            case SeriesKind::Cosine: return sbp_cos(spec.seq, n, n + K, r, w);
            case SeriesKind::Exponential: return sbp_exp(spec.seq, n, n + K, r, w);
        }
    }
    std::complex<double> out{};
    std::vector<std::complex<double>> buf(1);
    partial_sum_batch(spec, n, n + K, std::span<const double>(&x, 1), buf);
    out = buf[0];
    return out;
}

// Golden-section maximization of |tail slice| on [a, b]. Points inside the
// singularity guard (possible between grid nodes on the transform path)
// count as -1 so the search steps around them.
double refine_peak(const SeriesSpec& spec, std::int64_t n, std::int64_t K, SumMethod method,
                   int r, double a, double b, int iters, double* arg) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto f = [&](double x) {
        if (method == SumMethod::SummationByParts && !kernel_usable(r, spec.c * x)) return -1.0;
        return std::abs(tail_slice(spec, n, K, x, method, r));
    };
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < iters && (b - a) > 1e-14; ++it) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    if (f1 >= f2) {
        *arg = x1;
        return f1;
    }
    *arg = x2;
    return f2;
}

}  // namespace

const char* decay_kind_name(DecayKind k) noexcept {
    return k == DecayKind::NLnN ? "n_ln_n" : "n_pow";
}

const char* decay_verdict_name(DecayVerdict v) noexcept {
    switch (v) {
        case DecayVerdict::Decaying: return "Decaying";
        case DecayVerdict::NotDecaying: return "NotDecaying";
        case DecayVerdict::Inconclusive: return "Inconclusive";
    }
    return "unknown";
}

const char* pointwise_verdict_name(PointwiseVerdict v) noexcept {
    switch (v) {
        case PointwiseVerdict::Convergent: return "Convergent";
        case PointwiseVerdict::DivergentTrend: return "DivergentTrend";
        case PointwiseVerdict::Inconclusive: return "Inconclusive";
    }
    return "unknown";
}

TailProbeReport tail_probe(const SeriesSpec& spec, std::span<const std::int64_t> n_grid,
                           std::int64_t K, const XGridSpec& grid, SumMethod method, int sbp_r) {
    require_increasing(n_grid, "tail_probe");
    if (K < 1) throw std::invalid_argument("tail_probe: window K >= 1 required");
    if (!(spec.c > 0.0)) throw std::invalid_argument("tail_probe: c > 0 required");
    if (method == SumMethod::SummationByParts && sbp_r < 1)
        throw std::invalid_argument("tail_probe: r >= 1 required on the SBP path");

    TailProbeReport rep;
    rep.window = K;
    rep.grid_count = grid.count;
    rep.method = method;
    rep.sbp_r = sbp_r;
    rep.kernel = active_series_kernel().name;
    rep.threads = configured_threads();

    std::vector<double> xs = build_x_grid(spec, grid.count);
    if (method == SumMethod::SummationByParts) {
        std::vector<double> usable;
        usable.reserve(xs.size());
        for (double x : xs) {
            if (kernel_usable(sbp_r, spec.c * x))
                usable.push_back(x);
            else
                rep.excluded.push_back(x);
        }
        xs = std::move(usable);
    }
    if (xs.empty()) throw std::invalid_argument("tail_probe: empty x grid after exclusions");

    const double step = domain_length(spec) / grid.count;
    for (const std::int64_t n : n_grid) {
        std::vector<std::complex<double>> sums(xs.size());
        if (method == SumMethod::SummationByParts) {
            parallel_for_chunks(xs.size(), 1, [&](std::size_t b, std::size_t e) {
                for (std::size_t i = b; i < e; ++i)
                    sums[i] = tail_slice(spec, n, K, xs[i], method, sbp_r);
            });
        } else {
            partial_sum_batch(spec, n, n + K, xs, sums);
        }

        std::size_t best = 0;
        double sup = -1.0;
        for (std::size_t i = 0; i < sums.size(); ++i) {
            const double v = std::abs(sums[i]);
            if (v > sup) {
                sup = v;
                best = i;
            }
        }
        double arg = xs[best];
        if (grid.refine) {
            const double lo = std::max(xs.front(), xs[best] - step);
            const double hi = std::min(xs.back(), xs[best] + step);
            double refined_arg = arg;
            const double refined =
                refine_peak(spec, n, K, method, sbp_r, lo, hi, grid.refine_iters, &refined_arg);
            if (refined > sup) {
                sup = refined;
                arg = refined_arg;
            }
        }
        rep.n_values.push_back(n);
        rep.sup_tail.push_back(sup);
        rep.argmax_x.push_back(arg);
    }

    rep.trend_slope = fit_log_slope(rep.n_values, rep.sup_tail);
    return rep;
}

DecayReport decay_condition(const Sequence& seq, DecayKind kind, double p,
                            std::span<const std::int64_t> n_grid, bool check_domination) {
    require_increasing(n_grid, "decay_condition");
    if (kind == DecayKind::NPow && !(p > 0.0))
        throw std::invalid_argument("decay_condition: NPow requires p > 0");
    if (check_domination && !(p > 1.0))
        throw std::invalid_argument("decay_condition: the domination check requires p > 1");

    DecayReport rep;
    rep.kind = kind;
    rep.p = p;
    rep.n_values.assign(n_grid.begin(), n_grid.end());

    auto statistic = [&](std::int64_t n, DecayKind k) {
        const double an = std::abs(seq.term(n));
        const double dn = static_cast<double>(n);
        if (k == DecayKind::NLnN) return dn * std::log(dn) * an;
        return std::pow(dn, 2.0 - 1.0 / p) * an;
    };

    rep.statistic.reserve(n_grid.size());
    for (const std::int64_t n : n_grid) rep.statistic.push_back(statistic(n, kind));

    rep.tail_max.assign(rep.statistic.size(), 0.0);
    double running = 0.0;
    for (std::size_t i = rep.statistic.size(); i-- > 0;) {
        running = std::max(running, rep.statistic[i]);
        rep.tail_max[i] = running;
    }

    // Monotone-decay verdict over octave maxima of the statistic.
    {
        const double first = rep.tail_max.front();
        const double last = rep.tail_max.back();
        const double slope = fit_log_slope(rep.n_values, rep.statistic);
        if (first == 0.0) {
            rep.verdict = DecayVerdict::Decaying;  // identically zero
        } else if (last <= 0.5 * first && slope < 0.0) {
            rep.verdict = DecayVerdict::Decaying;
        } else if (last >= 0.95 * first) {
            rep.verdict = DecayVerdict::NotDecaying;
        } else {
            rep.verdict = DecayVerdict::Inconclusive;
        }
    }

    if (check_domination) {
        rep.domination_checked = true;
        bool ok = true;
        const double n_threshold = std::exp(p / (p - 1.0));  // factor decreasing beyond here
        double prev_factor = -1.0;
        for (std::size_t i = 0; i < rep.n_values.size(); ++i) {
            const std::int64_t n = rep.n_values[i];
            const double dn = static_cast<double>(n);
            const double factor = std::log(dn) / std::pow(dn, 1.0 - 1.0 / p);
            const double lhs = statistic(n, DecayKind::NLnN);
            const double rhs = statistic(n, DecayKind::NPow) * factor;
            if (std::abs(lhs - rhs) > 1e-12 * (1.0 + std::abs(lhs))) ok = false;
            if (dn > n_threshold) {
                if (prev_factor >= 0.0 && factor > prev_factor * (1.0 + 1e-12)) ok = false;
                prev_factor = factor;
            }
            if (i + 1 == rep.n_values.size()) rep.domination_factor_last = factor;
        }
        rep.domination_holds = ok;
    }
    return rep;
}

std::vector<int> pointwise_l_range(SeriesKind kind, int r) {
    if (r < 1) throw std::invalid_argument("pointwise_l_range: r >= 1 required");
    std::vector<int> ls;
    if (kind == SeriesKind::Sine) {
        if (r < 3) return ls;  // condition vacuous
        const int hi = (r % 2 == 0) ? r / 2 - 1 : r / 2;
        for (int l = 1; l <= hi; ++l) ls.push_back(l);
    } else {
        for (int l = 0; l <= r / 2; ++l) ls.push_back(l);
    }
    return ls;
}

PointwiseReport pointwise_condition(const Sequence& seq, SeriesKind kind, int r,
                                    std::span<const int> l_values, std::int64_t n_max,
                                    double osc_tol) {
    if (r < 1) throw std::invalid_argument("pointwise_condition: r >= 1 required");
    if (kind == SeriesKind::Sine && r < 3)
        throw std::invalid_argument("pointwise_condition: sine series require r >= 3");
    if (n_max < 64) throw std::invalid_argument("pointwise_condition: n_max >= 64 required");

    const std::vector<int> admissible = pointwise_l_range(kind, r);
    std::vector<int> ls(l_values.begin(), l_values.end());
    if (ls.empty()) ls = admissible;
    for (const int l : ls) {
        if (std::find(admissible.begin(), admissible.end(), l) == admissible.end())
            throw std::invalid_argument("pointwise_condition: l = " + std::to_string(l) +
                                        " outside the admissible range for this kind and r");
    }

    PointwiseReport rep;
    rep.kind = kind;
    rep.r = r;
    rep.osc_tol = osc_tol;
    rep.n_max = n_max;

    // Geometric sample points 2^6, 2^7, ..., topped by n_max itself.
    std::vector<std::int64_t> n_samples;
    for (std::int64_t n = 64; n < n_max; n *= 2) n_samples.push_back(n);
    n_samples.push_back(n_max);

    for (const int l : ls) {
        // basis(k) = sin/cos/exp of 2*pi*l*k/r is r-periodic in k; the exact
        // residue table keeps huge-k angles exact.
        std::vector<std::complex<double>> basis(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) {
            const double ang = 2.0 * kPi * l * j / r;
            switch (kind) {
                case SeriesKind::Sine: basis[j] = {std::sin(ang), 0.0}; break;
                case SeriesKind::Cosine: basis[j] = {std::cos(ang), 0.0}; break;
                case SeriesKind::Exponential: basis[j] = {std::cos(ang), std::sin(ang)}; break;
            }
        }

        PointwiseLReport lr;
        lr.l = l;
        std::complex<double> acc{};
        std::size_t next = 0;
        for (std::int64_t k = 1; k <= n_max && next < n_samples.size(); ++k) {
            acc += seq.term(k) * basis[static_cast<std::size_t>(k % r)];
            if (k == n_samples[next]) {
                lr.n_values.push_back(k);
                lr.partial_sums.push_back(acc);
                ++next;
            }
        }

        // Oscillation over the top two octaves of N.
        const std::int64_t cutoff = n_max / 4;
        std::vector<std::complex<double>> top;
        for (std::size_t i = 0; i < lr.n_values.size(); ++i)
            if (lr.n_values[i] >= cutoff) top.push_back(lr.partial_sums[i]);
        double osc = 0.0;
        for (std::size_t i = 0; i < top.size(); ++i)
            for (std::size_t j = i + 1; j < top.size(); ++j)
                osc = std::max(osc, std::abs(top[i] - top[j]));
        lr.oscillation = osc;

        if (osc < osc_tol) {
            lr.verdict = PointwiseVerdict::Convergent;
        } else {
            // Same-signed monotone drift across the top samples reads as a
            // divergent trend; anything else stays inconclusive.
            bool monotone = top.size() >= 3;
            for (std::size_t i = 2; i < top.size() && monotone; ++i) {
                const std::complex<double> d1 = top[i - 1] - top[i - 2];
                const std::complex<double> d2 = top[i] - top[i - 1];
                if (d1.real() * d2.real() + d1.imag() * d2.imag() <= 0.0) monotone = false;
            }
            lr.verdict = monotone ? PointwiseVerdict::DivergentTrend
                                  : PointwiseVerdict::Inconclusive;
        }
        rep.per_l.push_back(std::move(lr));
    }
    return rep;
}

LogIntegralResult log_integral_bound(std::int64_t n, std::int64_t N, double p) {
    if (n < 1 || N < 1) throw std::invalid_argument("log_integral_bound: n, N >= 1 required");
    if (!(p >= 1.0)) throw std::invalid_argument("log_integral_bound: p >= 1 required");
    const double dn = static_cast<double>(n);
    const double dN = static_cast<double>(N);
    const double lower = dn + std::pow(dN, 1.0 / p);
    const double upper = dn + dN;
    LogIntegralResult res;
    res.integral = std::log(std::log(upper)) - std::log(std::log(lower));
    res.bound = std::log(p);
    res.ok = res.integral <= res.bound + 1e-12;
    return res;
}

DivergenceReport divergence_demo(double p, std::span<const std::int64_t> N_grid) {
    if (!(p > 1.0)) throw std::invalid_argument("divergence_demo: p > 1 required");
    if (N_grid.empty()) throw std::invalid_argument("divergence_demo: N grid must be nonempty");
    for (std::size_t i = 0; i < N_grid.size(); ++i) {
        if (N_grid[i] < 0) throw std::invalid_argument("divergence_demo: N >= 0 required");
        if (i > 0 && N_grid[i] <= N_grid[i - 1])
            throw std::invalid_argument("divergence_demo: N grid must be strictly increasing");
    }

    DivergenceReport rep;
    rep.p = p;
    rep.x0 = 2.0 * kPi / 3.0;

    SeriesSpec spec;
    spec.kind = SeriesKind::Sine;
    spec.seq = Sequence::counterexample(p);
    spec.c = 1.0;

    rep.all_ok = true;
    double bound_acc = 0.0;
    std::int64_t bound_k = 0;
    for (const std::int64_t N : N_grid) {
        const double S = partial_sum(spec, 6 * N + 5, rep.x0).real();
        while (bound_k < N) {
            ++bound_k;
            const double dk = static_cast<double>(6 * bound_k + 5);
            bound_acc += 1.0 / (dk * std::log(dk));
        }
        const double L = 4.0 * std::sin(rep.x0) * bound_acc;
        const bool ok = S >= L;
        rep.n_values.push_back(N);
        rep.partial_sum.push_back(S);
        rep.lower_bound.push_back(L);
        rep.bound_ok.push_back(ok);
        if (!ok) rep.all_ok = false;
    }
    rep.increasing = true;
    for (std::size_t i = 1; i < rep.partial_sum.size(); ++i)
        if (rep.partial_sum[i] <= rep.partial_sum[i - 1]) rep.increasing = false;
    if (!rep.increasing) rep.all_ok = false;
    return rep;
}

}  // namespace gmseries
