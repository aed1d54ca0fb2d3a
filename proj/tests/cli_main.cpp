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

// End-to-end checks of the installed command-line surface: exit-code
// contract (0 ok / 1 usage / 2 verdict), output determinism, and the
// documented report shapes. Takes the binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

std::string g_cli;
int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::printf("ok   %s\n", what.c_str());
    } else {
        std::printf("FAIL %s\n", what.c_str());
        ++g_failures;
    }
}

int run(const std::string& args, const std::string& stdout_path = "/dev/null") {
    const std::string cmd = g_cli + " " + args + " > " + stdout_path + " 2> /dev/null";
    const int rc = std::system(cmd.c_str());
    return rc < 0 ? rc : WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-gmseries-binary>\n";
        return 2;
    }
    g_cli = argv[1];
    const std::string tmp = "cli_test_out";

    // exit-code contract
    expect(run("lemma3 --n 1 --N 1000000 --p 2", tmp + "1.json") == 0, "lemma3 bound holds: exit 0");
    expect(run("lemma3 --n 1 --N 10 --p 0.5") == 1, "lemma3 precondition p >= 1 violated: exit 1");
    expect(run("lemma3 --N 10 --p 2") == 1, "lemma3 missing required flag: exit 1");
    expect(run("no-such-command") == 1, "unknown subcommand: exit 1");
    expect(run("") == 1, "missing subcommand: exit 1");

    {
        nlohmann::json j = nlohmann::json::parse(slurp(tmp + "1.json"));
        expect(j.at("report").at("ok").get<bool>(), "lemma3 report.ok true");
        expect(j.at("command") == "lemma3", "envelope names the command");
        expect(j.contains("kernel") && j.contains("threads"), "envelope records kernel/threads");
    }

    // classify: the membership certificate for the built-in sequence
    expect(run("classify --family counterexample --p0 2 --class \"gm(p=2,beta3,q=1,r=3)\" "
               "--m-max 4096 --expect BoundedConsistent",
               tmp + "2.json") == 0,
           "classify counterexample membership: exit 0");
    {
        nlohmann::json j = nlohmann::json::parse(slurp(tmp + "2.json"));
        expect(j.at("report").at("verdict") == "BoundedConsistent", "classify verdict serialized");
        expect(j.at("report").at("samples").is_array(), "classify samples present");
    }
    expect(run("classify --family counterexample --p0 2 --class \"gm(p=1,beta3,q=1,r=3)\" "
               "--m-max 4096 --expect BoundedConsistent") == 2,
           "classify verdict mismatch under --expect: exit 2");
    expect(run("classify --family counterexample --p0 2 --beta beta2 --c-scale 0.5") == 1,
           "classify beta2 window scale <= 1 rejected: exit 1");

    // sbp-verify
    expect(run("sbp-verify --trials 200 --seed 7") == 0, "sbp-verify clean sweep: exit 0");
    expect(run("sbp-verify --trials 60 --seed 7 --tol 1e-18") == 2,
           "sbp-verify impossible tolerance: exit 2");

    // determinism: identical config + seed => byte-identical output files
    for (const std::string fmt : {"json", "csv"}) {
        const std::string a = tmp + "_det_a." + fmt;
        const std::string b = tmp + "_det_b." + fmt;
        const std::string cmd = "classify --family counterexample --p0 2 "
                                "--class \"gm(p=2,beta3,q=1,r=3)\" --m-max 2048 --format " + fmt;
        run(cmd + " -o " + a);
        run(cmd + " -o " + b);
        expect(!slurp(a).empty() && slurp(a) == slurp(b),
               "classify " + fmt + " output is byte-identical across runs");
    }
    {
        const std::string a = tmp + "_sbp_a.csv";
        const std::string b = tmp + "_sbp_b.csv";
        run("sbp-verify --trials 40 --seed 11 --format csv -o " + a);
        run("sbp-verify --trials 40 --seed 11 --format csv -o " + b);
        expect(!slurp(a).empty() && slurp(a) == slurp(b),
               "sbp-verify csv output is byte-identical across runs");
        expect(slurp(a).find("violations,worst_rel_error,ok\n") != std::string::npos,
               "sbp-verify csv carries a header row");
    }

    // counterexample demonstrator
    expect(run("counterexample --N-grid 100,1000 --format csv", tmp + "3.csv") == 0,
           "counterexample divergence demo: exit 0");
    expect(slurp(tmp + "3.csv").find("N,partial_sum,lower_bound,ok\n") != std::string::npos,
           "counterexample csv carries a header row");
    expect(run("counterexample --p0 1.0") == 1, "counterexample p0 <= 1 rejected: exit 1");

    // pointwise
    expect(run("pointwise --family zero --r 3 --N-max 65536 --expect Convergent") == 0,
           "pointwise zero sequence convergent: exit 0");
    expect(run("pointwise --family zero --r 3 --l 7 --N-max 65536") == 1,
           "pointwise l outside the admissible range: exit 1");

    // tail-probe
    expect(run("tail-probe --family power_log --alpha 1 --log-exp 2 --n-grid 16,64 "
               "--window 500 --grid-count 128 --format csv",
               tmp + "4.csv") == 0,
           "tail-probe: exit 0");
    expect(slurp(tmp + "4.csv").find("n,sup_tail,argmax_x\n") != std::string::npos,
           "tail-probe csv carries a header row");
    expect(slurp(tmp + "4.csv").find("# decay_verdict=") != std::string::npos,
           "tail-probe csv pairs the sup decay with the coefficient decay verdict");

    // results do not depend on the worker count
    {
        const std::string a = tmp + "_t1.json";
        const std::string b = tmp + "_t2.json";
        const std::string args = " tail-probe --family power_log --alpha 1 --log-exp 2 "
                                 "--n-grid 16,64 --window 400 --grid-count 101 -o ";
        std::system(("GM_SERIES_THREADS=1 " + g_cli + args + a + " > /dev/null 2>&1").c_str());
        std::system(("GM_SERIES_THREADS=2 " + g_cli + args + b + " > /dev/null 2>&1").c_str());
        nlohmann::json ja = nlohmann::json::parse(slurp(a));
        nlohmann::json jb = nlohmann::json::parse(slurp(b));
        ja.at("report").at("tail").erase("threads");  // worker count is metadata
        jb.at("report").at("tail").erase("threads");
        expect(ja.at("report") == jb.at("report"),
               "tail-probe numbers identical under GM_SERIES_THREADS=1 and =2");
    }

    // kernel pinning via the environment
    {
        const std::string a = tmp + "_k.json";
        std::system(("GM_SERIES_KERNEL=scalar " + g_cli +
                     " lemma3 --n 1 --N 100 --p 2 -o " + a + " > /dev/null 2>&1").c_str());
        nlohmann::json j = nlohmann::json::parse(slurp(a));
        expect(j.at("kernel") == "scalar", "GM_SERIES_KERNEL=scalar pins the scalar kernel");
    }

    // sequence descriptors flow through the CLI
    expect(run("classify --seq-json "
               "'{\"family\":\"power_log\",\"params\":{\"alpha\":1.0}}' "
               "--check gms --m-min 2 --m-max 1024 --expect BoundedConsistent") == 0,
           "classify accepts inline JSON descriptors");
    expect(run("classify --seq-json 'not json' --check gms") == 1,
           "classify rejects malformed descriptors: exit 1");

    if (g_failures > 0) {
        std::printf("%d CLI check(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
