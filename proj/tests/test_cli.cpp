#include "mvl/cli.hpp"

#include "test_support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = mvl::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parsed(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("cli: zs and ze") {
    const auto r = run({"zs", "--n", "2"});
    REQUIRE(r.code == 0);
    CHECK(parsed(r)["members"] == nlohmann::json::array({"0+", "+0", "++", "+-"}));
    const auto z = run({"ze", "--n", "2", "--x", "+0"});
    REQUIRE(z.code == 0);
    CHECK(parsed(z)["size"] == 3);
}

TEST_CASE("cli: count") {
    const auto single = run({"count", "single", "--x", "00+", "--verify"});
    REQUIRE(single.code == 0);
    CHECK(parsed(single)["count"] == 9);
    CHECK(parsed(single)["agrees"] == true);

    const auto inter = run({"count", "intersect", "--x", "00+", "--x", "+++"});
    CHECK(parsed(inter)["count"] == 4);
    const auto set = run({"count", "set", "--x", "+00", "--x", "0+0", "--x", "00+", "--verify"});
    CHECK(parsed(set)["count"] == 13);
    const auto pair = run({"count", "pair", "--x", "+0", "--x", "0+", "--verify"});
    REQUIRE(pair.code == 0);
    CHECK(parsed(pair)["intersection"] == 2);
    CHECK(parsed(pair)["union"] == 4);
    const auto prof = run({"count", "pair", "--profile", "0,0,1,1,0"});
    CHECK(parsed(prof)["intersection"] == 2);
    const auto oracle = run({"count", "oracle", "--x", "0+u"});
    CHECK(parsed(oracle)["count"] == 3);
    CHECK(run({"count", "oracle", "--n", "3"}).out.find("\"count\": 0") != std::string::npos);
}

TEST_CASE("cli: covers") {
    const auto r = run({"covers", "--n", "2"});
    REQUIRE(r.code == 0);
    CHECK(parsed(r)["count"] == 6);
}

TEST_CASE("cli: gate commands") {
    const auto color = support::fixture("color_gate.json");
    CHECK(run({"gate", "certify", color}).code == 0);
    CHECK(run({"gate", "certify", support::fixture("and_gate.json")}).code == 2);
    CHECK(run({"gate", "certify", color, "--functionals", support::fixture("color_functionals.json")}).code == 0);

    const auto expand = run({"gate", "expand", color});
    REQUIRE(expand.code == 0);

    const auto analyze = run({"gate", "analyze", color});
    REQUIRE(analyze.code == 0);
    const auto doc = parsed(analyze);
    CHECK(doc["gate"]["N"] == 3);
    CHECK(doc["cs_lower_bound"]["value"] == 27);
    CHECK(doc["counting_cross_check"]["failed"] == 0);

    const auto constant = run({"gate", "analyze", support::fixture("constant_gate.json"), "--data",
                               support::fixture("constant_collisions.csv")});
    REQUIRE(constant.code == 0);
    CHECK(parsed(constant)["cs_lower_bound"]["value"] == 1);

    // timing aside, analysis output is reproducible
    auto a = parsed(run({"gate", "analyze", color}));
    auto b = parsed(run({"gate", "analyze", color}));
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("cli: data bound") {
    const auto r = run({"data", "bound", support::fixture("projection_gate.json"), "--data",
                        support::fixture("projection_collisions.csv")});
    REQUIRE(r.code == 0);
    CHECK(parsed(r)["collisions"] == 1);
}

TEST_CASE("cli: selftest") {
    const auto r = run({"selftest", "--random", "50"});
    CHECK(r.code == 0);
    CHECK(parsed(r)["ok"] == true);
}

TEST_CASE("cli: usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"zs"}).code == 1);
    CHECK(run({"count", "single", "--x", "-0"}).code == 1);
    CHECK(run({"count", "single", "--x", "0x"}).code == 1);
    CHECK(run({"gate", "analyze", support::fixture("missing.json")}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: --seed is accepted before or after the subcommand") {
    const auto before = run({"--seed", "7", "selftest", "--random", "20"});
    const auto after = run({"selftest", "--random", "20", "--seed", "7"});
    REQUIRE(before.code == 0);
    REQUIRE(after.code == 0);
    CHECK(parsed(before)["seed"] == 7);
    CHECK(before.out == after.out);
}
