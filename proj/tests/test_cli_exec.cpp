/*
   Copyright 2026 The petit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// End-to-end CLI checks: byte-deterministic JSON and the exit-code contract.
// The binary path comes from the PETIT_CLI environment variable (set by the
// ctest harness).

#include <catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("PETIT_CLI");
    if (!bin) {
        FAIL("PETIT_CLI is not set; run through ctest");
    }
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("divmod emits the frozen JSON bytes", "[cli]") {
    const auto r = run_cli(
        R"(divmod --ring F4 --sigma frobenius:1 --g "t^3" --f "t^2-w")");
    CHECK(r.exit_code == 0);
    nlohmann::json expected;
    expected["schema"] = 1;
    expected["side"] = "right";
    expected["q"] = nlohmann::json::parse("[[0,0],[1,0]]");   // q = t
    expected["r"] = nlohmann::json::parse("[[0,0],[1,1]]");   // r = w^2 t
    expected["identity_checked"] = true;
    CHECK(r.out == expected.dump(2) + "\n");
}

TEST_CASE("output is deterministic", "[cli]") {
    const std::string args =
        R"(analyze --ring F4 --sigma frobenius:1 --f "t^2-w")";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == 1);
    CHECK(j["semifield"] == true);
    CHECK(j["associative"] == false);
    CHECK(j["zero_divisor_count"] == 0);
    CHECK(j["s0"]["size"] == 2);
}

TEST_CASE("ggr subcommand reports the fixture", "[cli]") {
    const auto r = run_cli(R"(ggr --ring GR42 --f "t^2-x")");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["element_count"] == 256);
    CHECK(j["is_ggr"] == true);
    CHECK(j["zero_divisor_set_size"] == 16);
    CHECK(j["pA_size"] == 16);
    CHECK(j["is_lifting"] == true);
}

TEST_CASE("code subcommand and encode", "[cli]") {
    const auto r = run_cli(R"(code --ring F4 --f "t^4-1" --g "t^2+1")");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["min_distance"] == 2);
    CHECK(j["constacyclic"]["holds"] == true);
    CHECK(j["left_ideal"] == true);
    CHECK(j["generator_matrix"].dump() ==
          "[[[1,0],[0,0],[1,0],[0,0]],[[0,0],[1,0],[0,0],[1,0]]]");

    const auto e = run_cli(
        R"(code --ring F4 --f "t^4-1" --g "t^2+1" encode --msg "poly [[0,1],[1,0]]")");
    CHECK(e.exit_code == 0);
    const auto ej = nlohmann::json::parse(e.out);
    CHECK(ej["codeword"].dump() == "[[0,1],[1,0],[0,1],[1,0]]");
}

TEST_CASE("matrix subcommand renders text grids", "[cli]") {
    const auto r = run_cli(
        R"(--format text matrix --ring F4 --f "t^2-w" --which companion)");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[ 0  1 ]\n[ x  0 ]\n");
}

TEST_CASE("exit codes", "[cli]") {
    // parse error -> 2
    CHECK(run_cli(R"(divmod --ring F4 --g "t^^" --f "t^2-w")").exit_code == 2);
    CHECK(run_cli("ring --ring NOSUCH").exit_code == 2);
    // domain error -> 3
    CHECK(run_cli(R"(divmod --ring GR42 --g "t^3" --f "2t^2")").exit_code == 3);
    // bad flags -> 2
    CHECK(run_cli("nosuchcommand").exit_code == 2);
}
