#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"

namespace {

std::vector<std::vector<double>> rows(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line); // header
    std::vector<std::vector<double>> out;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        out.push_back(row);
    }
    return out;
}

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / (std::string("sqb_") + name)).string();
}

} // namespace

TEST_CASE("kernel value") {
    const auto r = run_cli("kernel --tau 0 --x 4 --method direct");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("tau,x,value\n", 0) == 0);
    const auto v = rows(r.out);
    REQUIRE(v.size() == 1);
    CHECK(v[0][2] == doctest::Approx(0.08884787).epsilon(1e-7));
}

TEST_CASE("forward of exp(-3 sqrt x) obeys the norm bound") {
    const auto r = run_cli("forward --f builtin:exp3sqrt --tau 0:5:21");
    CHECK(r.code == 0);
    const auto v = rows(r.out);
    REQUIRE(v.size() == 21);
    for (const auto& row : v) CHECK(std::abs(row[1]) <= 2.0 * std::sqrt(M_PI));
}

TEST_CASE("output is independent of the thread count") {
    const std::string args = "kernel --tau 0:4:5 --x 0.1:20:4 --method direct";
    CHECK(run_cli(args + " --threads 1").out == run_cli(args + " --threads 4").out);
}

TEST_CASE("verify exit codes") {
    const auto corrected = run_cli("verify --suite lemma2 --form corrected");
    CHECK(corrected.code == 0);
    CHECK(corrected.out.find("PASS") != std::string::npos);
    const auto printed = run_cli("verify --suite lemma2");
    CHECK(printed.code == 1);
    CHECK(printed.out.find("FAIL") != std::string::npos);
    CHECK(run_cli("verify --suite lemma7").code == 2);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("kernel --tau 1").code == 2);
    CHECK(run_cli("kernel --tau 1 --x 1 --method nope").code == 2);
    CHECK(run_cli("forward --f builtin:nope --tau 1").code == 2);
    CHECK(run_cli("forward --f /nonexistent.json --tau 1").code == 2);

    const std::string bad = temp_path("bad.json");
    std::ofstream(bad) << R"({"domain": "half_line", "grid": [0, 2, 1], "values": [1, 2, 3],
                            "decay": {"kind": "exp", "a": 1}})";
    CHECK(run_cli("forward --f " + bad + " --tau 1").code == 2);
    std::filesystem::remove(bad);
}

TEST_CASE("round trip through files") {
    const std::string ff = temp_path("ff.json");
    const auto fwd = run_cli("forward --f builtin:k0sqrt --tau 0:60:1201 --format json --out " + ff);
    REQUIRE(fwd.code == 0);
    const auto inv = run_cli("invert-forward --f " + ff + " --x 0.5:5:4 --reference builtin:k0sqrt");
    CHECK(inv.code == 0);
    const auto v = rows(inv.out);
    REQUIRE(v.size() == 4);
    CHECK(run_cli("invert-forward --f " + ff + " --x 1 --regularize 0").code == 2);
    std::filesystem::remove(ff);
}

TEST_CASE("inverse and pde commands") {
    const auto g = run_cli("inverse --g builtin:gauss --x 0.5:2:3 --format json");
    CHECK(g.code == 0);
    CHECK(g.out.find("\"domain\": \"half_line\"") != std::string::npos);
    const auto u = run_cli("pde --g builtin:gauss --r 2 --theta 0:0.5:2 --form corrected --residual");
    CHECK(u.code == 0);
    const auto v = rows(u.out);
    REQUIRE(v.size() == 2);
    CHECK(v[0][3] <= 1e-4);
    CHECK(run_cli("pde --g builtin:gauss --r 2 --theta 4").code == 2);
}
