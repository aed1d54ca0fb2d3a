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

#include <sstream>

#include "doctest.h"
#include "gmseries/reports_io.hpp"
#include "test_util.hpp"

using gmseries::Sequence;

TEST_CASE("double formatting round-trips and is stable") {
    for (const double v : {0.0, 1.0, -2.5, 1.0 / 3.0, 1e-300, 3.537e17, 0.1}) {
        const std::string s = gmseries::format_double(v);
        CHECK(std::stod(s) == v);
        CHECK(gmseries::format_double(v) == s);
    }
    CHECK(gmseries::format_double(0.5) == "0.5");
    CHECK(gmseries::format_double(100.0) == "100");
}

TEST_CASE("membership profile serialization") {
    const auto grid = gmseries::geometric_grid(2, 1 << 9);
    const auto prof = gmseries::is_gms(Sequence::power_log({.coeff = 1.0, .alpha = 1.0}), grid);

    const auto j = gmseries::to_json(prof);
    CHECK(j.at("verdict") == "BoundedConsistent");
    CHECK(j.at("samples").size() == grid.size());
    CHECK(j.at("samples")[0].contains("m"));
    CHECK(j.at("samples")[0].contains("variation"));
    CHECK(j.at("samples")[0].contains("beta"));
    CHECK(j.at("samples")[0].contains("ratio"));
    CHECK(j.at("class").at("p") == 1.0);

    std::ostringstream csv;
    gmseries::write_csv(csv, prof);
    const std::string text = csv.str();
    CHECK(text.find("m,variation,beta,ratio\n") != std::string::npos);
    // one data row per sample plus metadata and header
    std::size_t rows = 0;
    for (char ch : text)
        if (ch == '\n') ++rows;
    CHECK(rows >= grid.size() + 2);

    // byte-identical on repeated serialization
    std::ostringstream csv2;
    gmseries::write_csv(csv2, prof);
    CHECK(csv.str() == csv2.str());
    CHECK(gmseries::to_json(prof).dump(2) == j.dump(2));
}

TEST_CASE("tail probe and divergence serialization") {
    gmseries::SeriesSpec spec;
    spec.kind = gmseries::SeriesKind::Sine;
    spec.seq = Sequence::power_log({.coeff = 1.0, .alpha = 1.0, .log_exp = 2.0});
    const std::vector<std::int64_t> ns{8, 16};
    gmseries::XGridSpec grid;
    grid.count = 32;
    grid.refine = false;
    const auto rep = gmseries::tail_probe(spec, ns, 64, grid);
    const auto j = gmseries::to_json(rep);
    CHECK(j.at("samples").size() == 2);
    CHECK(j.at("grid").at("count") == 32);
    CHECK(j.contains("kernel"));

    std::ostringstream csv;
    gmseries::write_csv(csv, rep);
    CHECK(csv.str().find("n,sup_tail,argmax_x\n") != std::string::npos);

    const std::vector<std::int64_t> Ns{0, 10};
    const auto div = gmseries::divergence_demo(2.0, Ns);
    const auto jd = gmseries::to_json(div);
    CHECK(jd.at("samples").size() == 2);
    CHECK(jd.at("ok").is_boolean());
    std::ostringstream dcsv;
    gmseries::write_csv(dcsv, div);
    CHECK(dcsv.str().find("N,partial_sum,lower_bound,ok\n") != std::string::npos);
}
