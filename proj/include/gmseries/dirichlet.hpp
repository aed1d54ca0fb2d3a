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

#ifndef GMSERIES_DIRICHLET_HPP
#define GMSERIES_DIRICHLET_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>

#include "gmseries/sequence.hpp"

namespace gmseries {

/// Kernels blow up like 1/|sin(rx/2)|; arguments closer to a singularity than
/// this margin are rejected rather than extrapolated.
inline constexpr double kSingularityEps = 1e-12;

class singularity_error : public std::domain_error {
public:
    singularity_error(int r, double x, double margin);
    double margin() const noexcept { return margin_; }

private:
    double margin_;
};

/// |sin(r*x/2)|, the distance-to-singularity gauge. Zero exactly at x = 2*l*pi/r.
double singularity_margin(int r, double x) noexcept;

bool kernel_usable(int r, double x) noexcept;

/// Cosine-numerator Dirichlet-type kernel cos((k + r/2) x) / (2 sin(r x / 2)).
/// r is signed and nonzero: negative r evaluates the same closed form with r
/// replaced by -r. Throws singularity_error when |sin(rx/2)| < kSingularityEps.
double dirichlet_cos(std::int64_t k, int r, double x);

/// Sine-numerator variant sin((k + r/2) x) / (2 sin(r x / 2)).
double dirichlet_sin(std::int64_t k, int r, double x);

/// Summation-by-parts transforms: exact identities rewriting a trigonometric
/// partial sum over k in [n, m] as an r-step-difference kernel sum plus 2r
/// boundary terms. Each function returns the transformed right-hand side,
/// which equals the direct sum whenever x is not a singular point:
///
///   sum a_k sin(kx) = - sum_{k=n}^{m} (a_k - a_{k+r}) Dc_{k,r}(x)
///                     + sum_{k=m+1}^{m+r} a_k Dc_{k,-r}(x)
///                     - sum_{k=n}^{n+r-1} a_k Dc_{k,-r}(x)
///
///   sum a_k cos(kx) = + sum_{k=n}^{m} (a_k - a_{k+r}) Ds_{k,r}(x)
///                     - sum_{k=m+1}^{m+r} a_k Ds_{k,-r}(x)
///                     + sum_{k=n}^{n+r-1} a_k Ds_{k,-r}(x)
///
///   sum a_k e^{ikx} = (-i / (2 sin(rx/2))) * [ sum_{k=n}^{m} (a_k - a_{k+r}) e^{i(k+r/2)x}
///                     + sum_{k=m+1}^{m+r} a_k e^{i(k-r/2)x}
///                     - sum_{k=n}^{n+r-1} a_k e^{i(k-r/2)x} ]
///
/// with Dc = dirichlet_cos, Ds = dirichlet_sin. They follow from
/// sin(kx) = -Dc_{k,r}(x) - Dc_{k,-r}(x), cos(kx) = Ds_{k,r}(x) + Ds_{k,-r}(x)
/// and the index shift Dc_{k,r} = -Dc_{k+r,-r} (likewise for Ds).
///
/// Preconditions: m >= n >= 1, r >= 1, kernel usable at (r, x).
std::complex<double> sbp_sin(const Sequence& seq, std::int64_t n, std::int64_t m, int r, double x);
std::complex<double> sbp_cos(const Sequence& seq, std::int64_t n, std::int64_t m, int r, double x);
std::complex<double> sbp_exp(const Sequence& seq, std::int64_t n, std::int64_t m, int r, double x);

}  // namespace gmseries

#endif  // GMSERIES_DIRICHLET_HPP
