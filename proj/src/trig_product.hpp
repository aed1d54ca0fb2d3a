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

#ifndef GMSERIES_TRIG_PRODUCT_HPP
#define GMSERIES_TRIG_PRODUCT_HPP

#include <cmath>

namespace gmseries::detail {

// sin/cos of the exact product a*b. The naive fl(a*b) carries an absolute
// phase error of |a*b|*eps, which for indices in the 10^5 range already
// costs ~1e-11 rad; recovering the rounding residual with an FMA and
// correcting to first order brings the argument error back to ~1 ulp of the
// result. Large arguments are still range-reduced by libm.
inline double sin_prod(double a, double b) {
    const double hi = a * b;
    const double lo = std::fma(a, b, -hi);
    return std::sin(hi) + lo * std::cos(hi);
}

inline double cos_prod(double a, double b) {
    const double hi = a * b;
    const double lo = std::fma(a, b, -hi);
    return std::cos(hi) - lo * std::sin(hi);
}

}  // namespace gmseries::detail

#endif  // GMSERIES_TRIG_PRODUCT_HPP
