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

#include "gmseries/reports_io.hpp"

#include <cmath>
#include <cstdio>

namespace gmseries {

std::string format_double(double v) {
    char buf[40];
    if (std::abs(v) < 1e15 && v == std::nearbyint(v)) {
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
        return buf;
    }
    // shortest representation that round-trips
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) break;
    }
    return buf;
}

nlohmann::json to_json(const BetaSpec& spec) {
    nlohmann::json j{{"kind", beta_kind_name(spec.kind)}};
    switch (spec.kind) {
        case BetaKind::Beta1: break;
        case BetaKind::Beta2: j["c_scale"] = spec.c_scale; break;
        case BetaKind::Beta3:
            j["q"] = spec.q;
            j["b_schedule"] = spec.b.name();
            j["m_cap"] = spec.m_cap;
            break;
    }
    return j;
}

nlohmann::json to_json(const MembershipProfile& profile) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : profile.samples) {
        nlohmann::json js{{"m", s.m},
                          {"variation", s.variation},
                          {"beta", s.beta},
                          {"ratio", s.ratio_finite ? nlohmann::json(s.ratio) : nlohmann::json("inf")},
                          {"ratio_finite", s.ratio_finite}};
        if (profile.params.beta.kind == BetaKind::Beta3 && profile.tail_cap == 0) {
            js["beta_argmax"] = s.beta_argmax;
            js["beta_capped"] = s.beta_capped;
        }
        samples.push_back(std::move(js));
    }
    nlohmann::json j{{"class", {{"p", profile.params.p},
                                {"beta", to_json(profile.params.beta)},
                                {"r", profile.params.r}}},
                     {"samples", std::move(samples)},
                     {"fitted_slope", profile.fitted_slope},
                     {"max_ratio", profile.max_ratio},
                     {"top_octave_growth", profile.top_octave_growth},
                     {"slope_tol", kSlopeTol},
                     {"top_octave_growth_tol", kTopOctaveGrowthTol},
                     {"verdict", verdict_name(profile.verdict)}};
    if (profile.tail_cap > 0) {
        j["tail_cap"] = profile.tail_cap;
        j["tail_residual_bound"] = profile.tail_residual_bound;
    }
    return j;
}

nlohmann::json to_json(const EmbeddingReport& report) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : report.samples)
        samples.push_back({{"m", s.m},
                           {"lhs", s.lhs},
                           {"rhs", s.rhs},
                           {"rel_violation", s.rel_violation}});
    return {{"samples", std::move(samples)},
            {"max_rel_violation", report.max_rel_violation},
            {"tol", report.tol},
            {"ok", report.ok}};
}

nlohmann::json to_json(const TailProbeReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < report.n_values.size(); ++i)
        rows.push_back({{"n", report.n_values[i]},
                        {"sup_tail", report.sup_tail[i]},
                        {"argmax_x", report.argmax_x[i]}});
    return {{"window", report.window},
            {"grid", {{"count", report.grid_count}, {"excluded", report.excluded}}},
            {"method", report.method == SumMethod::Direct ? "direct" : "sbp"},
            {"sbp_r", report.sbp_r},
            {"kernel", report.kernel},
            {"threads", report.threads},
            {"trend_slope", report.trend_slope},
            {"samples", std::move(rows)}};
}

nlohmann::json to_json(const DecayReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < report.n_values.size(); ++i)
        rows.push_back({{"n", report.n_values[i]},
                        {"statistic", report.statistic[i]},
                        {"tail_max", report.tail_max[i]}});
    nlohmann::json j{{"kind", decay_kind_name(report.kind)},
                     {"p", report.p},
                     {"samples", std::move(rows)},
                     {"verdict", decay_verdict_name(report.verdict)}};
    if (report.domination_checked) {
        j["domination_holds"] = report.domination_holds;
        j["domination_factor_last"] = report.domination_factor_last;
    }
    return j;
}

nlohmann::json to_json(const PointwiseReport& report) {
    nlohmann::json per_l = nlohmann::json::array();
    for (const auto& lr : report.per_l) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < lr.n_values.size(); ++i)
            rows.push_back({{"N", lr.n_values[i]},
                            {"sum_re", lr.partial_sums[i].real()},
                            {"sum_im", lr.partial_sums[i].imag()}});
        per_l.push_back({{"l", lr.l},
                         {"samples", std::move(rows)},
                         {"oscillation", lr.oscillation},
                         {"verdict", pointwise_verdict_name(lr.verdict)}});
    }
    return {{"kind", series_kind_name(report.kind)},
            {"r", report.r},
            {"osc_tol", report.osc_tol},
            {"osc_tol_note", "heuristic threshold on top-two-octave oscillation"},
            {"N_max", report.n_max},
            {"per_l", std::move(per_l)}};
}

nlohmann::json to_json(const LogIntegralResult& result) {
    return {{"integral", result.integral}, {"bound", result.bound}, {"ok", result.ok}};
}

nlohmann::json to_json(const DivergenceReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < report.n_values.size(); ++i)
        rows.push_back({{"N", report.n_values[i]},
                        {"partial_sum", report.partial_sum[i]},
                        {"lower_bound", report.lower_bound[i]},
                        {"ok", static_cast<bool>(report.bound_ok[i])}});
    return {{"p", report.p},
            {"x0", report.x0},
            {"samples", std::move(rows)},
            {"increasing", report.increasing},
            {"ok", report.all_ok}};
}

namespace {

void meta(std::ostream& os, const std::string& line) { os << "# " << line << "\n"; }

}  // namespace

void write_csv(std::ostream& os, const MembershipProfile& profile) {
    meta(os, std::string("class p=") + format_double(profile.params.p) +
                 " beta=" + beta_kind_name(profile.params.beta.kind) +
                 " r=" + std::to_string(profile.params.r));
    if (profile.params.beta.kind == BetaKind::Beta2)
        meta(os, "c_scale=" + format_double(profile.params.beta.c_scale));
    if (profile.params.beta.kind == BetaKind::Beta3)
        meta(os, "q=" + format_double(profile.params.beta.q) +
                 " b_schedule=" + profile.params.beta.b.name() +
                 " m_cap=" + std::to_string(profile.params.beta.m_cap));
    if (profile.tail_cap > 0)
        meta(os, "tail_cap=" + std::to_string(profile.tail_cap) +
                 " tail_residual_bound=" + format_double(profile.tail_residual_bound));
    meta(os, std::string("verdict=") + verdict_name(profile.verdict) +
                 " fitted_slope=" + format_double(profile.fitted_slope) +
                 " max_ratio=" + format_double(profile.max_ratio) +
                 " top_octave_growth=" + format_double(profile.top_octave_growth));
    os << "m,variation,beta,ratio\n";
    for (const auto& s : profile.samples)
        os << s.m << ',' << format_double(s.variation) << ',' << format_double(s.beta) << ','
           << (s.ratio_finite ? format_double(s.ratio) : std::string("inf")) << "\n";
}

void write_csv(std::ostream& os, const EmbeddingReport& report) {
    meta(os, std::string("ok=") + (report.ok ? "true" : "false") +
                 " max_rel_violation=" + format_double(report.max_rel_violation) +
                 " tol=" + format_double(report.tol));
    os << "m,lhs,rhs,rel_violation\n";
    for (const auto& s : report.samples)
        os << s.m << ',' << format_double(s.lhs) << ',' << format_double(s.rhs) << ','
           << format_double(s.rel_violation) << "\n";
}

void write_csv(std::ostream& os, const TailProbeReport& report) {
    meta(os, "window=" + std::to_string(report.window) +
                 " grid_count=" + std::to_string(report.grid_count) +
                 " excluded=" + std::to_string(report.excluded.size()) +
                 " method=" + (report.method == SumMethod::Direct ? "direct" : "sbp") +
                 " kernel=" + report.kernel + " threads=" + std::to_string(report.threads));
    meta(os, "trend_slope=" + format_double(report.trend_slope));
    os << "n,sup_tail,argmax_x\n";
    for (std::size_t i = 0; i < report.n_values.size(); ++i)
        os << report.n_values[i] << ',' << format_double(report.sup_tail[i]) << ','
           << format_double(report.argmax_x[i]) << "\n";
}

void write_csv(std::ostream& os, const DecayReport& report) {
    meta(os, std::string("kind=") + decay_kind_name(report.kind) + " p=" + format_double(report.p) +
                 " verdict=" + decay_verdict_name(report.verdict));
    if (report.domination_checked)
        meta(os, std::string("domination_holds=") + (report.domination_holds ? "true" : "false") +
                     " domination_factor_last=" + format_double(report.domination_factor_last));
    os << "n,statistic,tail_max\n";
    for (std::size_t i = 0; i < report.n_values.size(); ++i)
        os << report.n_values[i] << ',' << format_double(report.statistic[i]) << ','
           << format_double(report.tail_max[i]) << "\n";
}

void write_csv(std::ostream& os, const PointwiseReport& report) {
    meta(os, std::string("kind=") + series_kind_name(report.kind) + " r=" + std::to_string(report.r) +
                 " N_max=" + std::to_string(report.n_max) +
                 " osc_tol=" + format_double(report.osc_tol) + " (heuristic)");
    for (const auto& lr : report.per_l)
        meta(os, "l=" + std::to_string(lr.l) +
                     " oscillation=" + format_double(lr.oscillation) +
                     " verdict=" + pointwise_verdict_name(lr.verdict));
    os << "l,N,sum_re,sum_im\n";
    for (const auto& lr : report.per_l)
        for (std::size_t i = 0; i < lr.n_values.size(); ++i)
            os << lr.l << ',' << lr.n_values[i] << ',' << format_double(lr.partial_sums[i].real())
               << ',' << format_double(lr.partial_sums[i].imag()) << "\n";
}

void write_csv(std::ostream& os, const LogIntegralResult& result) {
    os << "integral,bound,ok\n";
    os << format_double(result.integral) << ',' << format_double(result.bound) << ','
       << (result.ok ? "true" : "false") << "\n";
}

void write_csv(std::ostream& os, const DivergenceReport& report) {
    meta(os, "p=" + format_double(report.p) + " x0=" + format_double(report.x0) +
                 " increasing=" + (report.increasing ? "true" : "false") +
                 " ok=" + (report.all_ok ? "true" : "false"));
    os << "N,partial_sum,lower_bound,ok\n";
    for (std::size_t i = 0; i < report.n_values.size(); ++i)
        os << report.n_values[i] << ',' << format_double(report.partial_sum[i]) << ','
           << format_double(report.lower_bound[i]) << ','
           << (report.bound_ok[i] ? "true" : "false") << "\n";
}

}  // namespace gmseries
