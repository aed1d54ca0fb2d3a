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

#ifndef GMSERIES_SEQUENCE_HPP
#define GMSERIES_SEQUENCE_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

namespace gmseries {

/// Coefficient sequence families. Every family is total on n >= 1 and
/// deterministic: term(n) always returns the same bits for the same n.
enum class Family {
    ClosedForm,           ///< coeff * (-1)^(n*alt) * n^-alpha * ln(n+1)^-log_exp + offset
    AlternatingHarmonic,  ///< (-1)^n / n
    PowerLog,             ///< coeff * n^-alpha * ln(n+1)^-log_exp
    Counterexample,       ///< the mod-6 piecewise sequence, see Sequence::counterexample
    UserTable             ///< finite table, zero-extended tail
};

const char* family_name(Family f) noexcept;

struct ClosedFormParams {
    double coeff = 1.0;
    bool alternating = false;  ///< multiply by (-1)^n when set
    double alpha = 0.0;        ///< power decay n^-alpha
    double log_exp = 0.0;      ///< logarithmic decay ln(n+1)^-log_exp
    double offset = 0.0;
};

struct PowerLogParams {
    double coeff = 1.0;
    double alpha = 1.0;
    double log_exp = 0.0;
};

/// Parameters of the built-in mod-6 counterexample sequence.
/// The construction is defined only for p > 1.
struct CounterexampleParams {
    double p = 2.0;
};

/// A lazily evaluable complex-valued coefficient sequence indexed from 1.
///
/// Cheap to copy (table storage is shared, immutable). All accessors are
/// pure functions of their arguments and safe for unrestricted concurrent
/// use.
class Sequence {
public:
    using Complex = std::complex<double>;

    /// Default-constructs the zero sequence (an empty table).
    Sequence() = default;

    static Sequence closed_form(const ClosedFormParams& params);
    static Sequence alternating_harmonic();
    static Sequence power_log(const PowerLogParams& params);

    /// The mod-6 piecewise sequence, p > 1:
    ///   n = 1 (mod 3):            3 / (n ln(n+1))
    ///   n = 2 (mod 3):            1 / (n ln(n+1))
    ///   n = 3 (mod 6):            1 / (n ln(n+1))
    ///   n = 0 (mod 6):            1 / ((n-3) ln(n-2)) + 1 / (n^(1+1/p) ln(n+1))
    static Sequence counterexample(double p);

    /// Finite table a_1..a_len with zero tail beyond the table.
    static Sequence user_table(std::vector<Complex> values);

    /// Empty user table: a_n = 0 for all n.
    static Sequence zero();

    /// Construct from a JSON descriptor {"family": "...", "params": {...}}.
    /// Throws std::invalid_argument on unknown families or bad parameters.
    static Sequence from_json(const nlohmann::json& j);

    /// The JSON descriptor this sequence round-trips through.
    nlohmann::json descriptor() const;

    Family family() const noexcept { return family_; }

    /// n-th coefficient, n >= 1. Throws std::invalid_argument for n < 1.
    Complex term(std::int64_t n) const;

    /// Forward difference with step r: term(n) - term(n+r), n >= 1, r >= 1.
    Complex delta(std::int64_t n, int r) const;

    /// False only for user tables containing nonzero imaginary parts.
    bool real_valued() const noexcept { return real_valued_; }

    /// Counterexample variation exponent; meaningful for that family only.
    double counterexample_p() const noexcept { return p_; }

private:
    Family family_ = Family::UserTable;
    ClosedFormParams cf_{};
    PowerLogParams pl_{};
    double p_ = 2.0;
    std::shared_ptr<const std::vector<Complex>> table_;
    bool real_valued_ = true;
};

}  // namespace gmseries

#endif  // GMSERIES_SEQUENCE_HPP
