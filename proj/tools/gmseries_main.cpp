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

// Command-line front end. Exit codes: 0 success, 1 usage or parameter
// errors (the violated constraint is named), 2 mathematical verdict
// failures (identity violations, failed bounds, unexpected verdicts).

#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gmseries/convergence.hpp"
#include "gmseries/dirichlet.hpp"
#include "gmseries/membership.hpp"
#include "gmseries/parallel.hpp"
#include "gmseries/reports_io.hpp"

namespace {

using gmseries::BetaKind;
using gmseries::BetaSpec;
using gmseries::Sequence;
using gmseries::SeriesKind;
using gmseries::SeriesSpec;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerdict = 2;

// ---------------------------------------------------------------------------
// output plumbing

struct OutputOptions {
    std::string format = "json";
    std::string path = "-";
};

void add_output_options(CLI::App* sub, OutputOptions& out) {
    sub->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("-o,--output", out.path, "Output path ('-' for stdout)")
        ->capture_default_str();
}

nlohmann::json envelope(const std::string& command, nlohmann::json config,
                        nlohmann::json report) {
    return {{"tool", "gmseries"},
            {"version", gmseries::kVersion},
            {"command", command},
            {"config", std::move(config)},
            {"kernel", gmseries::active_series_kernel().name},
            {"threads", gmseries::configured_threads()},
            {"report", std::move(report)}};
}

void emit(const OutputOptions& out, const nlohmann::json& env,
          const std::function<void(std::ostream&)>& csv_writer) {
    std::ostringstream body;
    if (out.format == "json") {
        body << env.dump(2) << "\n";
    } else {
        body << "# gmseries " << gmseries::kVersion << " "
             << env.value("command", std::string{}) << "\n";
        body << "# config " << env.at("config").dump() << "\n";
        csv_writer(body);
    }
    if (out.path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream f(out.path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output path " + out.path);
        f << body.str();
    }
}

// ---------------------------------------------------------------------------
// sequence construction from flags

struct SeqOptions {
    std::string seq_json;
    std::string seq_file;
    std::string family;
    double p0 = 2.0;
    double coeff = 1.0;
    double alpha = 1.0;
    double log_exp = 0.0;
    double offset = 0.0;
    bool alternating = false;
    std::vector<double> table;
};

void add_sequence_options(CLI::App* sub, SeqOptions& s) {
    sub->add_option("--seq-json", s.seq_json, "Inline JSON sequence descriptor");
    sub->add_option("--seq-file", s.seq_file, "Path to a JSON sequence descriptor");
    sub->add_option("--family", s.family,
                    "Sequence family (counterexample, alternating_harmonic, power_log, "
                    "closed_form, user_table, zero)");
    sub->add_option("--p0", s.p0, "counterexample variation exponent (> 1)")
        ->capture_default_str();
    sub->add_option("--coeff", s.coeff, "closed_form/power_log coefficient")
        ->capture_default_str();
    sub->add_option("--alpha", s.alpha, "power decay exponent n^-alpha")->capture_default_str();
    sub->add_option("--log-exp", s.log_exp, "log decay exponent ln(n+1)^-log_exp")
        ->capture_default_str();
    sub->add_option("--offset", s.offset, "closed_form additive offset")->capture_default_str();
    sub->add_flag("--alternating", s.alternating, "closed_form (-1)^n factor");
    sub->add_option("--table", s.table, "user_table values (comma separated reals)")
        ->delimiter(',');
}

Sequence make_sequence(const SeqOptions& s) {
    if (!s.seq_json.empty()) return Sequence::from_json(nlohmann::json::parse(s.seq_json));
    if (!s.seq_file.empty()) {
        std::ifstream f(s.seq_file);
        if (!f) throw std::invalid_argument("cannot read sequence descriptor " + s.seq_file);
        nlohmann::json j;
        f >> j;
        return Sequence::from_json(j);
    }
    const std::string fam = s.family.empty() ? "counterexample" : s.family;
    if (fam == "counterexample") return Sequence::counterexample(s.p0);
    if (fam == "alternating_harmonic") return Sequence::alternating_harmonic();
    if (fam == "power_log") return Sequence::power_log({s.coeff, s.alpha, s.log_exp});
    if (fam == "closed_form")
        return Sequence::closed_form({s.coeff, s.alternating, s.alpha, s.log_exp, s.offset});
    if (fam == "zero") return Sequence::zero();
    if (fam == "user_table") {
        std::vector<std::complex<double>> values;
        values.reserve(s.table.size());
        for (double v : s.table) values.emplace_back(v, 0.0);
        return Sequence::user_table(std::move(values));
    }
    throw std::invalid_argument("unknown sequence family \"" + fam + "\"");
}

SeriesKind parse_kind(const std::string& kind) {
    if (kind == "sine") return SeriesKind::Sine;
    if (kind == "cosine") return SeriesKind::Cosine;
    if (kind == "exp" || kind == "exponential") return SeriesKind::Exponential;
    throw std::invalid_argument("unknown series kind \"" + kind + "\"");
}

// ---------------------------------------------------------------------------
// deterministic uniforms for the randomized sweeps (the engine is pinned by
// the standard; the mapping to doubles is ours, so streams are portable)

class SweepRng {
public:
    explicit SweepRng(std::uint64_t seed) : eng_(seed) {}
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(eng_() >> 11) * 0x1.0p-53);
    }
    std::int64_t index(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

// ---------------------------------------------------------------------------
// classify

struct ClassifyConfig {
    SeqOptions seq;
    std::string check = "gm";
    std::string class_string;
    double p = 1.0;
    std::string beta = "beta3";
    double q = 1.0;
    int r = 1;
    double c_scale = 2.0;
    double lambda = 2.0;
    double b_scale = 1.0;
    double b_power = 1.0;
    std::int64_t m_cap = 1 << 16;
    std::int64_t m_min = 4;
    std::int64_t m_max = 1 << 14;
    double m_factor = 2.0;
    std::vector<std::int64_t> m_grid;
    std::int64_t tail_cap = std::int64_t{1} << 20;
    std::string expect;
    OutputOptions out;
};

// compact class strings: "gm(p=2,beta3,q=1,r=3)", "gms", "rbvs", "mvbvs", "sbvs2"
void apply_class_string(ClassifyConfig& cfg) {
    const std::string& s = cfg.class_string;
    if (s.empty()) return;
    if (s == "gms" || s == "rbvs" || s == "mvbvs" || s == "sbvs2") {
        cfg.check = s;
        return;
    }
    if (s.rfind("gm(", 0) != 0 || s.back() != ')')
        throw std::invalid_argument("cannot parse --class \"" + s + "\"");
    cfg.check = "gm";
    std::stringstream inner(s.substr(3, s.size() - 4));
    std::string tok;
    while (std::getline(inner, tok, ',')) {
        if (tok.empty()) continue;
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
            if (tok == "beta1" || tok == "beta2" || tok == "beta3") {
                cfg.beta = tok;
                continue;
            }
            throw std::invalid_argument("cannot parse --class token \"" + tok + "\"");
        }
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "p") cfg.p = std::stod(val);
        else if (key == "q") cfg.q = std::stod(val);
        else if (key == "r") cfg.r = std::stoi(val);
        else if (key == "c") cfg.c_scale = std::stod(val);
        else if (key == "lambda") cfg.lambda = std::stod(val);
        else if (key == "beta") cfg.beta = val;
        else throw std::invalid_argument("unknown --class key \"" + key + "\"");
    }
}

int run_classify(ClassifyConfig& cfg) {
    apply_class_string(cfg);
    const Sequence seq = make_sequence(cfg.seq);
    const std::vector<std::int64_t> grid =
        cfg.m_grid.empty() ? gmseries::geometric_grid(cfg.m_min, cfg.m_max, cfg.m_factor)
                           : cfg.m_grid;

    gmseries::MembershipProfile prof;
    if (cfg.check == "gm") {
        BetaSpec spec;
        if (cfg.beta == "beta1") spec.kind = BetaKind::Beta1;
        else if (cfg.beta == "beta2") spec.kind = BetaKind::Beta2;
        else if (cfg.beta == "beta3") spec.kind = BetaKind::Beta3;
        else throw std::invalid_argument("unknown beta kind \"" + cfg.beta + "\"");
        spec.c_scale = cfg.c_scale;
        spec.q = cfg.q;
        spec.b = {cfg.b_scale, cfg.b_power};
        spec.m_cap = cfg.m_cap;
        prof = gmseries::membership_profile(seq, cfg.p, spec, cfg.r, grid);
    } else if (cfg.check == "gms") {
        prof = gmseries::is_gms(seq, grid);
    } else if (cfg.check == "mvbvs") {
        prof = gmseries::is_mvbvs(seq, grid, cfg.lambda);
    } else if (cfg.check == "sbvs2") {
        prof = gmseries::is_sbvs2(seq, grid, {cfg.b_scale, cfg.b_power}, cfg.m_cap);
    } else if (cfg.check == "rbvs") {
        prof = gmseries::is_rbvs_window(seq, grid, cfg.tail_cap);
    } else {
        throw std::invalid_argument("unknown --check \"" + cfg.check + "\"");
    }

    nlohmann::json config{{"sequence", seq.descriptor()},
                          {"check", cfg.check},
                          {"m_grid", grid},
                          {"expect", cfg.expect}};
    emit(cfg.out, envelope("classify", config, gmseries::to_json(prof)),
         [&](std::ostream& os) { gmseries::write_csv(os, prof); });

    if (!cfg.expect.empty() &&
        cfg.expect != std::string(gmseries::verdict_name(prof.verdict))) {
        std::cerr << "verdict " << gmseries::verdict_name(prof.verdict) << " != expected "
                  << cfg.expect << "\n";
        return kExitVerdict;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sbp-verify

struct SbpVerifyConfig {
    int trials = 200;
    std::uint64_t seed = 7;
    int r_max = 6;
    std::int64_t max_start = 20;
    std::int64_t max_len = 200;
    double margin_min = 1e-3;
    double tol = 1e-9;
    OutputOptions out;
};

int run_sbp_verify(const SbpVerifyConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("sbp-verify: --trials >= 1 required");
    if (cfg.r_max < 1) throw std::invalid_argument("sbp-verify: --r-max >= 1 required");
    if (!(cfg.margin_min >= gmseries::kSingularityEps))
        throw std::invalid_argument("sbp-verify: --margin-min below the singularity guard");
    if (cfg.max_start < 1 || cfg.max_len < 0)
        throw std::invalid_argument("sbp-verify: --max-start >= 1 and --max-len >= 0 required");

    SweepRng rng(cfg.seed);
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    int violations = 0;
    double worst = 0.0;
    nlohmann::json worst_case = nlohmann::json::object();

    for (int t = 0; t < cfg.trials; ++t) {
        const std::int64_t n = rng.index(1, cfg.max_start);
        const std::int64_t m = n + rng.index(0, cfg.max_len);
        const int r = static_cast<int>(rng.index(1, cfg.r_max));
        const std::size_t len = static_cast<std::size_t>(m + r + 1);
        std::vector<std::complex<double>> values(len);
        const bool complex_values = t % 2 == 0;
        for (auto& v : values)
            v = {rng.uniform(-1.0, 1.0), complex_values ? rng.uniform(-1.0, 1.0) : 0.0};
        const Sequence seq = Sequence::user_table(std::move(values));

        double x = rng.uniform(0.0, kTwoPi);
        while (gmseries::singularity_margin(r, x) < cfg.margin_min) x = rng.uniform(0.0, kTwoPi);

        std::complex<double> direct_sin{}, direct_cos{}, direct_exp{};
        for (std::int64_t k = n; k <= m; ++k) {
            const double ang = static_cast<double>(k) * x;
            const auto a = seq.term(k);
            direct_sin += a * std::sin(ang);
            direct_cos += a * std::cos(ang);
            direct_exp += a * std::complex<double>(std::cos(ang), std::sin(ang));
        }

        const auto record = [&](const char* kind, std::complex<double> sbp,
                                std::complex<double> direct) {
            const double err = std::abs(sbp - direct) / (1.0 + std::abs(direct));
            if (err > worst) {
                worst = err;
                worst_case = {{"trial", t}, {"kind", kind}, {"n", n}, {"m", m},
                              {"r", r},     {"x", x},       {"rel_error", err}};
            }
            if (err > cfg.tol) ++violations;
        };
        record("sine", gmseries::sbp_sin(seq, n, m, r, x), direct_sin);
        record("cosine", gmseries::sbp_cos(seq, n, m, r, x), direct_cos);
        record("exponential", gmseries::sbp_exp(seq, n, m, r, x), direct_exp);
    }

    nlohmann::json config{{"trials", cfg.trials},   {"seed", cfg.seed},
                          {"r_max", cfg.r_max},     {"max_start", cfg.max_start},
                          {"max_len", cfg.max_len}, {"margin_min", cfg.margin_min},
                          {"tol", cfg.tol}};
    nlohmann::json report{{"violations", violations},
                          {"worst_rel_error", worst},
                          {"worst_case", worst_case},
                          {"ok", violations == 0}};
    emit(cfg.out, envelope("sbp-verify", config, report), [&](std::ostream& os) {
        os << "violations,worst_rel_error,ok\n";
        os << violations << ',' << gmseries::format_double(worst) << ','
           << (violations == 0 ? "true" : "false") << "\n";
    });
    return violations == 0 ? kExitOk : kExitVerdict;
}

// ---------------------------------------------------------------------------
// tail-probe

struct TailProbeConfig {
    SeqOptions seq;
    std::string kind = "sine";
    double c = 1.0;
    std::vector<std::int64_t> n_grid;
    std::int64_t n_min = 16;
    std::int64_t n_max = 4096;
    double n_factor = 4.0;
    std::int64_t window = 10000;
    int grid_count = 4096;
    bool no_refine = false;
    std::string method = "direct";
    int r = 1;
    OutputOptions out;
};

int run_tail_probe(const TailProbeConfig& cfg) {
    SeriesSpec spec;
    spec.kind = parse_kind(cfg.kind);
    spec.seq = make_sequence(cfg.seq);
    spec.c = cfg.c;
    const std::vector<std::int64_t> ns =
        cfg.n_grid.empty() ? gmseries::geometric_grid(cfg.n_min, cfg.n_max, cfg.n_factor)
                           : cfg.n_grid;
    gmseries::XGridSpec grid;
    grid.count = cfg.grid_count;
    grid.refine = !cfg.no_refine;
    const auto method = cfg.method == "sbp" ? gmseries::SumMethod::SummationByParts
                                            : gmseries::SumMethod::Direct;
    const auto rep = gmseries::tail_probe(spec, ns, cfg.window, grid, method, cfg.r);

    // The sup-decay trend is reported alongside the coefficient decay
    // statistic; a window probe alone never claims uniform convergence.
    const auto decay =
        gmseries::decay_condition(spec.seq, gmseries::DecayKind::NLnN, 2.0, ns, false);

    nlohmann::json config{{"sequence", spec.seq.descriptor()},
                          {"kind", cfg.kind},
                          {"c", cfg.c},
                          {"n_grid", ns},
                          {"window", cfg.window},
                          {"grid_count", cfg.grid_count},
                          {"refine", !cfg.no_refine},
                          {"method", cfg.method},
                          {"r", cfg.r}};
    nlohmann::json report{{"tail", gmseries::to_json(rep)},
                          {"decay", gmseries::to_json(decay)}};
    emit(cfg.out, envelope("tail-probe", config, std::move(report)), [&](std::ostream& os) {
        os << "# decay_verdict=" << gmseries::decay_verdict_name(decay.verdict)
           << " decay_stat_last=" << gmseries::format_double(decay.statistic.back()) << "\n";
        gmseries::write_csv(os, rep);
    });
    return kExitOk;
}

// ---------------------------------------------------------------------------
// pointwise

struct PointwiseConfig {
    SeqOptions seq;
    std::string kind = "sine";
    int r = 3;
    std::vector<int> ls;
    std::int64_t n_max = std::int64_t{1} << 24;
    double osc_tol = 1e-6;
    std::string expect;
    OutputOptions out;
};

int run_pointwise(const PointwiseConfig& cfg) {
    const Sequence seq = make_sequence(cfg.seq);
    const auto rep = gmseries::pointwise_condition(seq, parse_kind(cfg.kind), cfg.r, cfg.ls,
                                                   cfg.n_max, cfg.osc_tol);
    nlohmann::json config{{"sequence", seq.descriptor()}, {"kind", cfg.kind},
                          {"r", cfg.r},                   {"l", cfg.ls},
                          {"N_max", cfg.n_max},           {"osc_tol", cfg.osc_tol},
                          {"expect", cfg.expect}};
    emit(cfg.out, envelope("pointwise", config, gmseries::to_json(rep)),
         [&](std::ostream& os) { gmseries::write_csv(os, rep); });

    if (!cfg.expect.empty()) {
        for (const auto& lr : rep.per_l) {
            if (cfg.expect != std::string(gmseries::pointwise_verdict_name(lr.verdict))) {
                std::cerr << "l=" << lr.l << " verdict "
                          << gmseries::pointwise_verdict_name(lr.verdict) << " != expected "
                          << cfg.expect << "\n";
                return kExitVerdict;
            }
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// lemma3

struct LogBoundConfig {
    std::int64_t n = 1;
    std::int64_t N = 1;
    double p = 1.0;
    OutputOptions out;
};

int run_log_bound(const LogBoundConfig& cfg) {
    const auto res = gmseries::log_integral_bound(cfg.n, cfg.N, cfg.p);
    nlohmann::json config{{"n", cfg.n}, {"N", cfg.N}, {"p", cfg.p}};
    emit(cfg.out, envelope("lemma3", config, gmseries::to_json(res)),
         [&](std::ostream& os) { gmseries::write_csv(os, res); });
    return res.ok ? kExitOk : kExitVerdict;
}

// ---------------------------------------------------------------------------
// counterexample

struct CounterexampleConfig {
    double p0 = 2.0;
    std::vector<std::int64_t> N_grid{100, 1000, 10000, 100000};
    OutputOptions out;
};

int run_counterexample(const CounterexampleConfig& cfg) {
    const auto rep = gmseries::divergence_demo(cfg.p0, cfg.N_grid);
    nlohmann::json config{{"p0", cfg.p0}, {"N_grid", cfg.N_grid}};
    emit(cfg.out, envelope("counterexample", config, gmseries::to_json(rep)),
         [&](std::ostream& os) { gmseries::write_csv(os, rep); });
    return rep.all_ok ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trigonometric series with generalized monotone coefficients: "
                 "membership certificates, summation-by-parts checks, convergence probes"};
    app.require_subcommand(1);

    ClassifyConfig classify_cfg;
    auto* classify = app.add_subcommand(
        "classify", "Block-variation membership certificate against a majorant");
    add_sequence_options(classify, classify_cfg.seq);
    classify->add_option("--check", classify_cfg.check, "gm | gms | rbvs | mvbvs | sbvs2")
        ->check(CLI::IsMember({"gm", "gms", "rbvs", "mvbvs", "sbvs2"}))
        ->capture_default_str();
    classify->add_option("--class", classify_cfg.class_string,
                         "Compact class spec, e.g. \"gm(p=2,beta3,q=1,r=3)\"");
    classify->add_option("--p", classify_cfg.p, "variation exponent")->capture_default_str();
    classify->add_option("--beta", classify_cfg.beta, "beta1 | beta2 | beta3")
        ->check(CLI::IsMember({"beta1", "beta2", "beta3"}))
        ->capture_default_str();
    classify->add_option("--q", classify_cfg.q, "beta3 inner exponent")->capture_default_str();
    classify->add_option("--r", classify_cfg.r, "difference step")->capture_default_str();
    classify->add_option("--c-scale", classify_cfg.c_scale, "beta2 window scale (> 1)")
        ->capture_default_str();
    classify->add_option("--lambda", classify_cfg.lambda, "mvbvs window scale (>= 2)")
        ->capture_default_str();
    classify->add_option("--b-scale", classify_cfg.b_scale, "beta3 schedule scale")
        ->capture_default_str();
    classify->add_option("--b-power", classify_cfg.b_power, "beta3 schedule power (0, 1]")
        ->capture_default_str();
    classify->add_option("--m-cap", classify_cfg.m_cap, "beta3 supremum truncation")
        ->capture_default_str();
    classify->add_option("--m-min", classify_cfg.m_min, "grid start")->capture_default_str();
    classify->add_option("--m-max", classify_cfg.m_max, "grid end")->capture_default_str();
    classify->add_option("--m-factor", classify_cfg.m_factor, "grid growth factor")
        ->capture_default_str();
    classify->add_option("--m-grid", classify_cfg.m_grid,
                         "explicit m grid (overrides min/max)")
        ->delimiter(',');
    classify->add_option("--tail-cap", classify_cfg.tail_cap, "rbvs tail truncation")
        ->capture_default_str();
    classify->add_option("--expect", classify_cfg.expect,
                         "exit 2 unless the verdict matches (BoundedConsistent | "
                         "GrowingInconsistent | Inconclusive)");
    add_output_options(classify, classify_cfg.out);

    SbpVerifyConfig sbp_cfg;
    auto* sbp = app.add_subcommand(
        "sbp-verify", "Randomized summation-by-parts identity sweep against direct sums");
    sbp->add_option("--trials", sbp_cfg.trials, "number of random cases")->capture_default_str();
    sbp->add_option("--seed", sbp_cfg.seed, "RNG seed")->capture_default_str();
    sbp->add_option("--r-max", sbp_cfg.r_max, "largest difference step")->capture_default_str();
    sbp->add_option("--max-start", sbp_cfg.max_start, "largest range start n")
        ->capture_default_str();
    sbp->add_option("--max-len", sbp_cfg.max_len, "largest range length m - n")
        ->capture_default_str();
    sbp->add_option("--margin-min", sbp_cfg.margin_min, "minimum |sin(rx/2)| for sampled x")
        ->capture_default_str();
    sbp->add_option("--tol", sbp_cfg.tol, "relative identity tolerance")->capture_default_str();
    add_output_options(sbp, sbp_cfg.out);

    TailProbeConfig tail_cfg;
    auto* tail = app.add_subcommand("tail-probe",
                                    "Windowed tail suprema of a series over an x grid");
    add_sequence_options(tail, tail_cfg.seq);
    tail->add_option("--kind", tail_cfg.kind, "sine | cosine | exp")->capture_default_str();
    tail->add_option("--c", tail_cfg.c, "frequency scale (> 0)")->capture_default_str();
    tail->add_option("--n-grid", tail_cfg.n_grid, "explicit tail starts")->delimiter(',');
    tail->add_option("--n-min", tail_cfg.n_min, "tail start grid begin")->capture_default_str();
    tail->add_option("--n-max", tail_cfg.n_max, "tail start grid end")->capture_default_str();
    tail->add_option("--n-factor", tail_cfg.n_factor, "tail start grid factor")
        ->capture_default_str();
    tail->add_option("--window", tail_cfg.window, "tail window length K")->capture_default_str();
    tail->add_option("--grid-count", tail_cfg.grid_count, "x grid size")->capture_default_str();
    tail->add_flag("--no-refine", tail_cfg.no_refine, "skip golden-section refinement");
    tail->add_option("--method", tail_cfg.method, "direct | sbp")
        ->check(CLI::IsMember({"direct", "sbp"}))
        ->capture_default_str();
    tail->add_option("--r", tail_cfg.r, "difference step for the sbp method")
        ->capture_default_str();
    add_output_options(tail, tail_cfg.out);

    PointwiseConfig pw_cfg;
    auto* pw = app.add_subcommand(
        "pointwise", "Partial-sum convergence at the rational points 2*l*pi/r");
    add_sequence_options(pw, pw_cfg.seq);
    pw->add_option("--kind", pw_cfg.kind, "sine | cosine | exp")->capture_default_str();
    pw->add_option("--r", pw_cfg.r, "denominator r")->capture_default_str();
    pw->add_option("--l", pw_cfg.ls, "l values (default: full admissible range)")
        ->delimiter(',');
    pw->add_option("--N-max", pw_cfg.n_max, "largest partial sum length")->capture_default_str();
    pw->add_option("--osc-tol", pw_cfg.osc_tol, "oscillation tolerance (heuristic)")
        ->capture_default_str();
    pw->add_option("--expect", pw_cfg.expect,
                   "exit 2 unless every l verdict matches (Convergent | DivergentTrend | "
                   "Inconclusive)");
    add_output_options(pw, pw_cfg.out);

    LogBoundConfig log_cfg;
    auto* logb = app.add_subcommand(
        "lemma3", "Closed-form check of the 1/(k ln k) tail integral against its ln p bound");
    logb->add_option("--n", log_cfg.n, "tail offset n")->required();
    logb->add_option("--N", log_cfg.N, "window N")->required();
    logb->add_option("--p", log_cfg.p, "exponent p >= 1")->required();
    add_output_options(logb, log_cfg.out);

    CounterexampleConfig ce_cfg;
    auto* ce = app.add_subcommand(
        "counterexample",
        "Divergence of the built-in mod-6 sequence's sine series at x0 = 2*pi/3");
    ce->add_option("--p0", ce_cfg.p0, "variation exponent (> 1)")->capture_default_str();
    ce->add_option("--N-grid", ce_cfg.N_grid, "block counts N")->delimiter(',')
        ->capture_default_str();
    add_output_options(ce, ce_cfg.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*classify) return run_classify(classify_cfg);
        if (*sbp) return run_sbp_verify(sbp_cfg);
        if (*tail) return run_tail_probe(tail_cfg);
        if (*pw) return run_pointwise(pw_cfg);
        if (*logb) return run_log_bound(log_cfg);
        if (*ce) return run_counterexample(ce_cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
