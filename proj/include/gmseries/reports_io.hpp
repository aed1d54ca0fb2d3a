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

#ifndef GMSERIES_REPORTS_IO_HPP
#define GMSERIES_REPORTS_IO_HPP

#include <ostream>
#include <string>

#include "json.hpp"

#include "gmseries/convergence.hpp"
#include "gmseries/membership.hpp"

namespace gmseries {

inline constexpr const char* kVersion = "0.1.0";

/// Shortest-round-trip decimal rendering of a double ("%.17g" trimmed),
/// byte-deterministic for a given value.
std::string format_double(double v);

nlohmann::json to_json(const BetaSpec& spec);
nlohmann::json to_json(const MembershipProfile& profile);
nlohmann::json to_json(const EmbeddingReport& report);
nlohmann::json to_json(const TailProbeReport& report);
nlohmann::json to_json(const DecayReport& report);
nlohmann::json to_json(const PointwiseReport& report);
nlohmann::json to_json(const LogIntegralResult& result);
nlohmann::json to_json(const DivergenceReport& report);

/// CSV emission: '#'-prefixed metadata lines, one header row, one data row
/// per sample. Numeric cells use format_double.
void write_csv(std::ostream& os, const MembershipProfile& profile);
void write_csv(std::ostream& os, const EmbeddingReport& report);
void write_csv(std::ostream& os, const TailProbeReport& report);
void write_csv(std::ostream& os, const DecayReport& report);
void write_csv(std::ostream& os, const PointwiseReport& report);
void write_csv(std::ostream& os, const LogIntegralResult& result);
void write_csv(std::ostream& os, const DivergenceReport& report);

}  // namespace gmseries

#endif  // GMSERIES_REPORTS_IO_HPP
