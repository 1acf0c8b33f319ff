#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "monostab/constructions.hpp"
#include "monostab/report.hpp"
#include "monostab/text_format.hpp"
#include "monostab/verify.hpp"

using namespace monostab;

namespace {

struct Run {
    int code;
    std::string out;
};

// Runs the CLI with `args`, feeding `input` on stdin; stderr is dropped.
Run run(const std::string& args, const std::string& input = "")
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto in_path = dir / ("monostab_cli_in_" + std::to_string(::getpid()));
    {
        std::ofstream f(in_path);
        f << input;
    }
    const std::string cmd = std::string(MONOSTAB_CLI) + " " + args + " < " + in_path.string() + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = ::pclose(pipe);
    std::filesystem::remove(in_path);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const char* const kH1 = "vars: x, y\nx^3\nx^2*y\ny^3\n";

}  // namespace

TEST_CASE("line formatting")
{
    CHECK(report::format_line({5, -1}) == "5k-1");
    CHECK(report::format_line({1, 3}) == "k+3");
    CHECK(report::format_line({2, 0}) == "2k");
    CHECK(report::align_columns({{"k", "v"}, {"10", "3"}}) == "k   v\n10  3\n");
}

TEST_CASE("ass and vnum on standard input")
{
    const auto a = run("ass -", kH1);
    CHECK(a.code == 0);
    CHECK(a.out.find("(x, y)") != std::string::npos);

    const auto v = run("vnum -", "vars: x, y\nx\n");
    CHECK(v.code == 0);
    CHECK(v.out.find("v=0, witness 1") != std::string::npos);

    const auto j = run("vnum - --format json", kH1);
    CHECK(j.code == 0);
    const auto parsed = report::Json::parse(j.out);
    CHECK(parsed.dump().find("\"monomial\"") != std::string::npos);
}

TEST_CASE("stab reports the detected indices")
{
    const auto s = run("stab --family H --b 2");
    CHECK(s.code == 0);
    CHECK(s.out.find("astab=1 vstab=2 line=5k-1") != std::string::npos);

    const auto short_horizon = run("stab --family composite --a 3 --b 1 --kmax 3");
    CHECK(short_horizon.code == 3);
}

TEST_CASE("construct output round-trips through the parser")
{
    const auto c = run("construct composite --a 2 --b 2");
    CHECK(c.code == 0);
    CHECK(parse_ideal(c.out) == make_composite(2, 2));
    const auto p = run("powers - --kmax 2 --format csv", c.out);
    CHECK(p.code == 0);
}

TEST_CASE("exit codes")
{
    CHECK(run("ass -", "vars: x\nz\n").code == 2);
    CHECK(run("ass").code == 2);
    CHECK(run("nonsense").code == 2);
    CHECK(run("construct H --b 0").code == 2);
    CHECK(run("powers - --kmax 4 --cap 5", kH1).code == 4);
    CHECK(run("verify --a 2 --b 1").code == 0);
}

TEST_CASE("verification JSON is deterministic")
{
    VerifyConfig cfg;
    cfg.h_values = {1, 2};
    cfg.composite_pairs = {{2, 1}};
    const auto first = run_verification(cfg);
    const auto second = run_verification(cfg);
    CHECK(first.passed());
    CHECK(first.to_json().dump(2) == second.to_json().dump(2));
}
