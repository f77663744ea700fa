#include "sturmia/cli.hpp"
#include "sturmia/rng.hpp"
#include "sturmia/words.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace sturmia;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "sturmia");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("word prefix") {
    Run r = run({"word", "prefix", "--slope", "[0;1*]", "--len", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == "10110101\n");

    r = run({"word", "prefix", "--slope", "[0;2*]", "--len", "6", "--shift", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["word"] == characteristic_prefix(Slope::parse("[0;2*]"), 10).substr(4));
}

TEST_CASE("torsion json") {
    Run r = run({"torsion", "--slope", "[0;1*]", "-N", "2"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["k"] == 3);
    CHECK(j["n"] == 1);
    CHECK(j["quotient"] == "2");
    CHECK(j["support"] == nlohmann::json::array({2}));
    CHECK(j["state_trace"].size() == 4);

    r = run({"torsion", "--slope", "[0;1*]", "-N", "5", "--k-max", "10"});
    CHECK(nlohmann::json::parse(r.out)["k"].is_null());
}

TEST_CASE("ostrowski round trip through the command line") {
    Rng rng(91);
    for (int trial = 0; trial < 20; ++trial) {
        std::string n = std::to_string(rng.below(100000));
        Run e = run({"ostrowski", "encode", "--slope", "[0;2,(1,3)*]", "--n", n, "--depth", "20"});
        REQUIRE(e.code == 0);
        auto je = nlohmann::json::parse(e.out);
        std::string digits = "b:";
        for (auto& d : je["digits"]) digits += std::to_string(d.get<int>()) + ",";
        digits.pop_back();
        Run d = run({"ostrowski", "decode", "--slope", "[0;2,(1,3)*]", "--digits", digits, "--depth", "20"});
        REQUIRE(d.code == 0);
        CHECK(nlohmann::json::parse(d.out)["value"] == n);
    }
}

TEST_CASE("repetition csv agrees with the oracle") {
    Run r = run({"repetition", "--slope", "[0;1*]", "--intercept", "3", "--m-max", "12", "--oracle"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "m,r_closed,r_direct,case_tag");
    const char* expect[] = {"2", "2", "2", "5", "5", "5", "8", "8", "10", "10", "10", "13"};
    for (int m = 1; m <= 12; ++m) {
        REQUIRE(std::getline(lines, line));
        std::string prefix = std::to_string(m) + "," + expect[m - 1] + "," + expect[m - 1] + ",";
        CHECK(line.rfind(prefix, 0) == 0);
    }
}

TEST_CASE("rauzy dot and json") {
    Run r = run({"rauzy", "--slope", "[0;1*]", "-m", "4", "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
    r = run({"rauzy", "--slope", "[0;1*]", "-m", "4"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["referent_cycle_length"] == 5);
    CHECK(j["turns"] == j["expected_turns"]);
}

TEST_CASE("intercept commands") {
    Run r = run({"intercept", "classify", "--slope", "[0;2*]", "--intercept", "sigma0", "--depth", "12"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["verdict"] == "zero-class-pattern-2");

    r = run({"intercept", "from-word", "--slope", "[0;1*]", "--word", "0110101101"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["intercept"]["digits"] == nlohmann::json::array({0, 1, 0, 0, 0}));

    r = run({"factorize", "--slope", "[0;2,1*]", "--intercept", "b:0,1,0,0,1,0,1,0,1,0,1,0,0,1", "--depth", "14", "--len",
             "30", "--verify-duality"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "unique-product");
    CHECK(j["duality"]["prefix_holds"] == true);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"word", "prefix", "--len", "x"}).code == 2);
    CHECK(run({"word", "prefix", "--slope", "[0;0]", "--len", "3"}).code == 2);
    CHECK(run({"ostrowski", "decode", "--slope", "[0;1*]", "--digits", "b:1,1"}).code == 2);
    CHECK(run({"rauzy", "--slope", "[0;1*]", "-m", "3", "--format", "csv"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    Run v = run({"verify", "--only", "2"});
    CHECK(v.code == 0);
    CHECK(v.out.rfind("PASS [ 2]", 0) == 0);
}

TEST_CASE("run configuration round trip") {
    Rng rng(92);
    const char* commands[] = {"word prefix", "ostrowski encode", "repetition", "torsion"};
    const char* intercepts[] = {"0", "17", "b:0,1,2", "sigma0", "sigma1", "zero"};
    for (int trial = 0; trial < 100; ++trial) {
        RunConfig c;
        c.command = commands[rng.below(4)];
        c.slope = random_slope(rng, 1, 9, 1 + rng.below(4)).str();
        c.depth = rng.between(1, 200);
        c.intercept = intercepts[rng.below(6)];
        c.verify = rng.below(2);
        if (rng.below(2)) c.format = static_cast<OutputFormat>(rng.below(4));
        nlohmann::json j = nlohmann::json::parse(c.to_json().dump());
        CHECK(RunConfig::from_json(j) == c);
    }
    CHECK_THROWS_AS(parse_format("xml"), DomainError);
}

TEST_CASE("intercept specs and default depth") {
    ContinuantTable g(Slope::golden(), 12);
    CHECK(parse_intercept("sigma1", g, 10) == AlphaNumber::sigma1(g, 10));
    CHECK(parse_intercept("12", g, 10) == AlphaNumber::from_integer(BigInt(12), g, 10));
    CHECK(parse_intercept("b:0,1", g, 4).digits().b == std::vector<std::uint64_t>{0, 1, 0, 0});
    CHECK_THROWS_AS(parse_intercept("b:0,1,0,1,0", g, 4), DomainError);
    CHECK_THROWS_AS(parse_intercept("-3", g, 4), DomainError);

    setenv("STURMIA_DEPTH", "31", 1);
    CHECK(default_depth() == 31);
    setenv("STURMIA_DEPTH", "oops", 1);
    CHECK(default_depth() == 24);
    unsetenv("STURMIA_DEPTH");
    CHECK(default_depth() == 24);
}

TEST_CASE("characteristic repetition csv") {
    Run r = run({"repetition", "--slope", "[0;1*]", "--intercept", "0", "--m-max", "7"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    const char* expect[] = {"2", "3", "3", "5", "5", "5", "8"};
    for (int m = 1; m <= 7; ++m) {
        REQUIRE(std::getline(lines, line));
        CHECK(line.rfind(std::to_string(m) + "," + expect[m - 1] + ",,", 0) == 0);
    }
}
