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

#include "gmseries/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace gmseries {

namespace {

void require_index(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("sequence index must satisfy n >= 1");
}

double closed_form_value(const ClosedFormParams& p, std::int64_t n) {
    double v = p.coeff;
    if (p.alternating && (n & 1)) v = -v;
    if (p.alpha != 0.0) v *= std::pow(static_cast<double>(n), -p.alpha);
    if (p.log_exp != 0.0) v *= std::pow(std::log(static_cast<double>(n) + 1.0), -p.log_exp);
    return v + p.offset;
}

double counterexample_value(double p, std::int64_t n) {
    const double dn = static_cast<double>(n);
    if (n % 6 == 0) {
        return 1.0 / ((dn - 3.0) * std::log(dn - 2.0)) +
               1.0 / (std::pow(dn, 1.0 + 1.0 / p) * std::log(dn + 1.0));
    }
    const double base = 1.0 / (dn * std::log(dn + 1.0));
    return (n % 3 == 1) ? 3.0 * base : base;
}

}  // namespace

const char* family_name(Family f) noexcept {
    switch (f) {
        case Family::ClosedForm: return "closed_form";
        case Family::AlternatingHarmonic: return "alternating_harmonic";
        case Family::PowerLog: return "power_log";
        case Family::Counterexample: return "counterexample";
        case Family::UserTable: return "user_table";
    }
    return "unknown";
}

Sequence Sequence::closed_form(const ClosedFormParams& params) {
    if (params.alpha < 0.0 || params.log_exp < 0.0)
        throw std::invalid_argument("closed_form: alpha and log_exp must be >= 0");
    Sequence s;
    s.family_ = Family::ClosedForm;
    s.cf_ = params;
    return s;
}

Sequence Sequence::alternating_harmonic() {
    Sequence s;
    s.family_ = Family::AlternatingHarmonic;
    return s;
}

Sequence Sequence::power_log(const PowerLogParams& params) {
    if (params.alpha < 0.0 || params.log_exp < 0.0)
        throw std::invalid_argument("power_log: alpha and log_exp must be >= 0");
    Sequence s;
    s.family_ = Family::PowerLog;
    s.pl_ = params;
    return s;
}

Sequence Sequence::counterexample(double p) {
    if (!(p > 1.0))
        throw std::invalid_argument("counterexample: requires p > 1 (undefined at p = 1)");
    Sequence s;
    s.family_ = Family::Counterexample;
    s.p_ = p;
    return s;
}

Sequence Sequence::user_table(std::vector<Complex> values) {
    Sequence s;
    s.family_ = Family::UserTable;
    bool real = true;
    for (const Complex& v : values) {
        if (v.imag() != 0.0) {
            real = false;
            break;
        }
    }
    s.real_valued_ = real;
    s.table_ = std::make_shared<const std::vector<Complex>>(std::move(values));
    return s;
}

Sequence Sequence::zero() { return user_table({}); }

Sequence::Complex Sequence::term(std::int64_t n) const {
    require_index(n);
    switch (family_) {
        case Family::ClosedForm:
            return closed_form_value(cf_, n);
        case Family::AlternatingHarmonic:
            return ((n & 1) ? -1.0 : 1.0) / static_cast<double>(n);
        case Family::PowerLog:
            return closed_form_value(
                ClosedFormParams{pl_.coeff, false, pl_.alpha, pl_.log_exp, 0.0}, n);
        case Family::Counterexample:
            return counterexample_value(p_, n);
        case Family::UserTable: {
            if (!table_) return Complex{0.0, 0.0};
            const auto& t = *table_;
            return (static_cast<std::size_t>(n) <= t.size()) ? t[static_cast<std::size_t>(n) - 1]
                                                             : Complex{0.0, 0.0};
        }
    }
    throw std::invalid_argument("unknown sequence family tag");
}

Sequence::Complex Sequence::delta(std::int64_t n, int r) const {
    require_index(n);
    if (r < 1) throw std::invalid_argument("delta: step must satisfy r >= 1");
    return term(n) - term(n + r);
}

Sequence Sequence::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw std::invalid_argument("sequence descriptor must be an object with a \"family\" key");
    const std::string fam = j.at("family").get<std::string>();
    const nlohmann::json params = j.value("params", nlohmann::json::object());

    auto num = [&params](const char* key, double fallback) {
        if (!params.contains(key)) return fallback;
        const auto& v = params.at(key);
        if (!v.is_number()) throw std::invalid_argument(std::string("parameter \"") + key +
                                                        "\" must be a number");
        return v.get<double>();
    };

    if (fam == "closed_form") {
        ClosedFormParams p;
        p.coeff = num("coeff", 1.0);
        p.alpha = num("alpha", 0.0);
        p.log_exp = num("log_exp", 0.0);
        p.offset = num("offset", 0.0);
        p.alternating = params.value("alternating", false);
        return closed_form(p);
    }
    if (fam == "alternating_harmonic") return alternating_harmonic();
    if (fam == "power_log")
        return power_log({num("coeff", 1.0), num("alpha", 1.0), num("log_exp", 0.0)});
    if (fam == "counterexample") {
        if (!params.contains("p"))
            throw std::invalid_argument("counterexample descriptor requires params.p > 1");
        return counterexample(num("p", 2.0));
    }
    if (fam == "user_table") {
        std::vector<Complex> values;
        for (const auto& v : params.value("values", nlohmann::json::array())) {
            if (v.is_number()) {
                values.emplace_back(v.get<double>(), 0.0);
            } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
                values.emplace_back(v[0].get<double>(), v[1].get<double>());
            } else {
                throw std::invalid_argument(
                    "user_table values must be numbers or [re, im] pairs");
            }
        }
        return user_table(std::move(values));
    }
    throw std::invalid_argument("unknown sequence family \"" + fam + "\"");
}

nlohmann::json Sequence::descriptor() const {
    nlohmann::json params = nlohmann::json::object();
    switch (family_) {
        case Family::ClosedForm:
            params = {{"coeff", cf_.coeff},
                      {"alternating", cf_.alternating},
                      {"alpha", cf_.alpha},
                      {"log_exp", cf_.log_exp},
                      {"offset", cf_.offset}};
            break;
        case Family::AlternatingHarmonic:
            break;
        case Family::PowerLog:
            params = {{"coeff", pl_.coeff}, {"alpha", pl_.alpha}, {"log_exp", pl_.log_exp}};
            break;
        case Family::Counterexample:
            params = {{"p", p_}};
            break;
        case Family::UserTable: {
            nlohmann::json values = nlohmann::json::array();
            if (table_) {
                for (const Complex& v : *table_) {
                    if (real_valued_)
                        values.push_back(v.real());
                    else
                        values.push_back({v.real(), v.imag()});
                }
            }
            params = {{"values", std::move(values)}};
            break;
        }
    }
    return {{"family", family_name(family_)}, {"params", std::move(params)}};
}

}  // namespace gmseries
