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

#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "gmseries/dirichlet.hpp"
#include "test_util.hpp"

using gmseries::Sequence;

namespace {

constexpr double kPi = std::numbers::pi;

// direct-summation oracle
std::complex<double> direct_sum(const Sequence& seq, std::int64_t n, std::int64_t m, double x,
                                int basis) {
    std::complex<double> acc{};
    for (std::int64_t k = n; k <= m; ++k) {
        const double ang = static_cast<double>(k) * x;
        switch (basis) {
            case 0: acc += seq.term(k) * std::sin(ang); break;
            case 1: acc += seq.term(k) * std::cos(ang); break;
            default: acc += seq.term(k) * std::complex<double>(std::cos(ang), std::sin(ang));
        }
    }
    return acc;
}

}  // namespace

TEST_CASE("kernel point values") {
    CHECK(gmseries::dirichlet_cos(0, 1, kPi) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(gmseries::dirichlet_cos(0, 2, kPi / 2) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(gmseries::dirichlet_cos(3, 2, 1.0) ==
          doctest::Approx(std::cos(4.0) / (2.0 * std::sin(1.0))).epsilon(1e-14));

    CHECK(gmseries::dirichlet_sin(0, 2, kPi / 2) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(gmseries::dirichlet_sin(1, 1, kPi) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(gmseries::dirichlet_sin(5, 3, 0.7) ==
          doctest::Approx(std::sin((5.0 + 1.5) * 0.7) / (2.0 * std::sin(3.0 * 0.7 / 2.0)))
              .epsilon(1e-14));
}

TEST_CASE("kernel sign relations") {
    gmtest::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t k = rng.index(0, 40);
        const int r = static_cast<int>(rng.index(1, 6));
        double x = rng.uniform(-3.0, 3.0);
        if (!gmseries::kernel_usable(r, x)) x += 0.1;

        // odd/even in x
        CHECK(gmseries::dirichlet_cos(k, r, -x) ==
              doctest::Approx(-gmseries::dirichlet_cos(k, r, x)).epsilon(1e-12));
        CHECK(gmseries::dirichlet_sin(k, r, -x) ==
              doctest::Approx(gmseries::dirichlet_sin(k, r, x)).epsilon(1e-12));

        // index shift swaps the sign of r: Dc_{k,r} = -Dc_{k+r,-r}
        CHECK(gmseries::dirichlet_cos(k, r, x) ==
              doctest::Approx(-gmseries::dirichlet_cos(k + r, -r, x)).epsilon(1e-12));
        CHECK(gmseries::dirichlet_sin(k, r, x) ==
              doctest::Approx(-gmseries::dirichlet_sin(k + r, -r, x)).epsilon(1e-12));
    }
}

TEST_CASE("singularity guard") {
    CHECK(gmseries::singularity_margin(2, kPi) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(!gmseries::kernel_usable(2, kPi));
    CHECK(gmseries::kernel_usable(2, 1.0));
    CHECK_THROWS_AS(gmseries::dirichlet_cos(3, 2, kPi), gmseries::singularity_error);
    CHECK_THROWS_AS(gmseries::sbp_sin(Sequence::alternating_harmonic(), 1, 5, 2, kPi),
                    gmseries::singularity_error);
    try {
        gmseries::dirichlet_cos(3, 2, kPi);
    } catch (const gmseries::singularity_error& e) {
        CHECK(e.margin() < gmseries::kSingularityEps);
    }
}

TEST_CASE("transform preconditions") {
    const Sequence seq = Sequence::alternating_harmonic();
    CHECK_THROWS_AS(gmseries::sbp_sin(seq, 5, 4, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gmseries::sbp_cos(seq, 0, 4, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gmseries::sbp_exp(seq, 1, 4, 0, 1.0), std::invalid_argument);
}

TEST_CASE("transform spot values") {
    CHECK(std::abs(gmseries::sbp_sin(Sequence::zero(), 2, 20, 3, 0.9)) == 0.0);
    CHECK(std::abs(gmseries::sbp_cos(Sequence::zero(), 1, 7, 2, 0.5)) == 0.0);
    CHECK(std::abs(gmseries::sbp_exp(Sequence::zero(), 3, 9, 1, 1.1)) == 0.0);

    const Sequence spike1 = Sequence::user_table({{1, 0}});
    CHECK(gmseries::sbp_sin(spike1, 1, 1, 1, 1.0).real() ==
          doctest::Approx(std::sin(1.0)).epsilon(1e-12));
    CHECK(gmseries::sbp_cos(spike1, 1, 1, 2, 0.5).real() ==
          doctest::Approx(std::cos(0.5)).epsilon(1e-12));

    const Sequence spike2 = Sequence::user_table({{0, 0}, {1, 0}});
    const auto e = gmseries::sbp_exp(spike2, 1, 3, 1, 0.3);
    CHECK(e.real() == doctest::Approx(std::cos(0.6)).epsilon(1e-12));
    CHECK(e.imag() == doctest::Approx(std::sin(0.6)).epsilon(1e-12));

    // harmonic coefficients across a long block
    const Sequence harmonic = Sequence::power_log({.coeff = 1.0, .alpha = 1.0});
    const auto s = gmseries::sbp_sin(harmonic, 2, 50, 3, 0.9);
    const auto oracle = direct_sum(harmonic, 2, 50, 0.9, 0);
    CHECK(std::abs(s - oracle) <= 1e-12 * (1.0 + std::abs(oracle)));

    const Sequence sq = Sequence::power_log({.coeff = 1.0, .alpha = 2.0});
    const auto c = gmseries::sbp_cos(sq, 3, 80, 2, 2.0);
    const auto oracle_c = direct_sum(sq, 3, 80, 2.0, 1);
    CHECK(std::abs(c - oracle_c) <= 1e-12 * (1.0 + std::abs(oracle_c)));
}

TEST_CASE("transforms equal the direct sums on random cases") {
    gmtest::Rng rng(113);
    int done = 0;
    while (done < 60) {
        const Sequence seq = gmtest::random_table(rng, 230, done % 3 == 0);
        const std::int64_t n = rng.index(1, 20);
        const std::int64_t m = n + rng.index(0, 200);
        const int r = static_cast<int>(rng.index(1, 6));
        const double x = rng.uniform(0.0, 2.0 * kPi);
        if (gmseries::singularity_margin(r, x) < 1e-3) continue;
        ++done;

        const auto tol = [](const std::complex<double>& ref) {
            return 1e-9 * (1.0 + std::abs(ref));
        };
        const auto ds = direct_sum(seq, n, m, x, 0);
        CHECK(std::abs(gmseries::sbp_sin(seq, n, m, r, x) - ds) <= tol(ds));
        const auto dc = direct_sum(seq, n, m, x, 1);
        CHECK(std::abs(gmseries::sbp_cos(seq, n, m, r, x) - dc) <= tol(dc));
        const auto de = direct_sum(seq, n, m, x, 2);
        CHECK(std::abs(gmseries::sbp_exp(seq, n, m, r, x) - de) <= tol(de));
    }
}

TEST_CASE("exponential transform composes from sine and cosine for real input") {
    gmtest::Rng rng(211);
    for (int trial = 0; trial < 25; ++trial) {
        const Sequence seq = gmtest::random_table(rng, 120, false);
        const std::int64_t n = rng.index(1, 10);
        const std::int64_t m = n + rng.index(0, 100);
        const int r = static_cast<int>(rng.index(1, 5));
        const double x = rng.uniform(0.05, 3.0);
        if (gmseries::singularity_margin(r, x) < 1e-3) continue;

        const auto e = gmseries::sbp_exp(seq, n, m, r, x);
        const auto combo = gmseries::sbp_cos(seq, n, m, r, x) +
                           std::complex<double>(0.0, 1.0) * gmseries::sbp_sin(seq, n, m, r, x);
        CHECK(std::abs(e - combo) <= 1e-9 * (1.0 + std::abs(e)));
    }
}
