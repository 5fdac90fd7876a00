#include <doctest.h>

#include <cmath>
#include <string>

#include "sqb/errors.hpp"
#include "sqb/io.hpp"

using namespace sqb;

TEST_CASE("grid strings") {
    const auto g = parse_grid("0:5:21");
    REQUIRE(g.size() == 21);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 5.0);
    CHECK(g[4] == doctest::Approx(1.0));
    CHECK(parse_grid("2.5") == std::vector<double>{2.5});
    CHECK(parse_grid("1:3:1") == std::vector<double>{1.0});
    CHECK_THROWS_AS(parse_grid("1:3"), SchemaError);
    CHECK_THROWS_AS(parse_grid("1:3:0"), SchemaError);
    CHECK_THROWS_AS(parse_grid("a:3:4"), SchemaError);
}

TEST_CASE("builtin functions") {
    const auto g = load_sampled_function("builtin:gauss");
    CHECK(g(1.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(g.domain() == Domain::real_line);
    CHECK(load_sampled_function("builtin:exp3sqrt").decay().sqrt_weight_finite());
    CHECK_THROWS_AS(load_sampled_function("builtin:nope"), SchemaError);
}

TEST_CASE("json round trip") {
    const std::string text = to_json(Domain::half_line, {0.0, 1.0, 2.0}, {1.0, 0.5, 0.25}, {Decay::Kind::exp_sqrt, 3.0});
    const auto f = parse_sampled_function(text);
    CHECK(f(1.0) == 0.5);
    CHECK(f.decay().kind == Decay::Kind::exp_sqrt);
    CHECK(f.decay().a == 3.0);
    CHECK(f.decay().sqrt_weight_finite());
}

TEST_CASE("schema errors carry context") {
    auto message = [](const std::string& text) {
        try {
            parse_sampled_function(text, "f.json");
        } catch (const SchemaError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    const std::string bad_grid =
        R"({"domain": "half_line", "grid": [0, 2, 1], "values": [1, 2, 3], "decay": {"kind": "exp", "a": 1}})";
    CHECK(message(bad_grid).find("strictly increasing at index 2") != std::string::npos);
    CHECK(message("{\n \"domain\": \"half_line\",\n \"grid\": [0, 1,]\n}").find("f.json:3:") == 0);
    CHECK(message(R"({"domain": "left", "grid": [0, 1], "values": [1, 2], "decay": {"kind": "exp", "a": 1}})")
              .find("'domain'") != std::string::npos);
    CHECK(message(R"({"domain": "half_line", "grid": [0, 1], "values": [1, "x"], "decay": {"kind": "exp", "a": 1}})")
              .find("values[1]") != std::string::npos);
    CHECK(message(R"({"domain": "half_line", "grid": [0, 1], "values": [1, 2], "decay": {"kind": "fast", "a": 1}})")
              .find("decay.kind") != std::string::npos);
    CHECK(message(R"({"domain": "half_line", "grid": [0, 1], "values": [1, 2]})").find("'decay'") !=
          std::string::npos);
}

TEST_CASE("number format") {
    CHECK(format_number(0.1) == "1.0000000000000001e-01");
    CHECK(format_number(-2.0) == "-2.0000000000000000e+00");
}
