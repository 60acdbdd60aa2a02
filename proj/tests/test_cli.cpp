#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "slopes/cli.hpp"

using namespace slopes::cli;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_text(const std::string& name, const std::string& input, std::uint64_t seed = 0, bool oracle = false,
                std::optional<std::string> format = std::nullopt) {
    std::istringstream in(input);
    std::ostringstream out, err;
    Command cmd{name, "-", seed, oracle, std::move(format)};
    const int code = run(cmd, in, out, err);
    return {code, out.str(), err.str()};
}

Result run_fixture(const json& entry, std::uint64_t seed = 0, bool oracle = false) {
    Command cmd{entry["command"], std::string(FIXTURE_DIR) + "/" + entry["file"].get<std::string>(), seed, oracle,
                std::nullopt};
    if (entry.contains("args")) {
        const auto& args = entry["args"];
        for (std::size_t i = 0; i + 1 < args.size(); i += 2)
            if (args[i] == "--format") cmd.format = args[i + 1].get<std::string>();
    }
    std::istringstream in;
    std::ostringstream out, err;
    const int code = run(cmd, in, out, err);
    return {code, out.str(), err.str()};
}

json manifest() {
    std::ifstream f(std::string(FIXTURE_DIR) + "/manifest.json");
    REQUIRE(f.good());
    return json::parse(f);
}

}  // namespace

TEST_CASE("worked command examples") {
    const Result n = run_text("newton", R"({"p":3,"coefficients":["-3","0","1"]})");
    CHECK(n.code == kSuccess);
    CHECK(n.out == "[[\"1/2\",2]]\n");

    const Result w = run_text(
        "wa", R"({"module":{"p":3,"phi":[["1","0"],["0","3"]]},"hodge":{"flag":[{"index":1,"basis":[["0","1"]]}]}})");
    CHECK(w.code == kSuccess);
    CHECK(w.out == "{\"status\":\"certified-true\"}\n");

    const Result b = run_text("battery", R"({"r":1,"degrees":{"r":{"hk":{"p":3,"phi":[["3"]]},"lattice":{"weights":[0]}}}})");
    CHECK(b.code == kFalse);
    const json rep = json::parse(b.out);
    for (const char* key : {"verdict_a", "verdict_b_r", "verdict_cprime", "verdict_d"})
        CHECK(rep[key]["status"] == "certified-false");
    CHECK(rep["height"] == 0);
}

TEST_CASE("fixture corpus matches recorded exits and outputs") {
    const json m = manifest();
    CHECK(m.size() >= 30);
    for (const auto& e : m) {
        INFO(e["file"].get<std::string>());
        const Result r = run_fixture(e);
        CHECK(r.code == e["exit"].get<int>());
        if (e.contains("stdout")) CHECK(json::parse(r.out) == e["stdout"]);
        if (r.code == kInputError) {
            CHECK(r.out.empty());
            const json err = json::parse(r.err);
            CHECK(err.contains("error"));
            CHECK(err.contains("message"));
        } else {
            CHECK(r.err.empty());
        }
    }
}

TEST_CASE("fixture output is byte-identical across runs and oracle mode") {
    for (const auto& e : manifest()) {
        INFO(e["file"].get<std::string>());
        const Result a = run_fixture(e), b = run_fixture(e);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
        const Result o = run_fixture(e, 0, true);
        if (a.code != kUncertified && o.code != kUncertified) {
            CHECK(a.code == o.code);
            CHECK(a.out == o.out);
        }
    }
}

TEST_CASE("seeded uncertified searches are reproducible") {
    const std::string in = R"({"module":{"p":3,"phi":[["1","1"],["0","1"]]},"hodge":{"weights":[0,1]}})";
    for (std::uint64_t seed : {0u, 7u, 12345u}) {
        const Result a = run_text("wa", in, seed), b = run_text("wa", in, seed);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("error paths emit JSON on stderr") {
    SUBCASE("malformed JSON names its position") {
        const Result r = run_text("newton", "{\"p\": 3,\n  \"coefficients\": [1, }");
        CHECK(r.code == kInputError);
        const json err = json::parse(r.err);
        CHECK(err["error"] == "invalid-input");
        CHECK(err["message"].get<std::string>().find("line 2, column") != std::string::npos);
    }
    SUBCASE("schema errors name the field") {
        const Result r = run_text("wa", R"({"module":{"p":3,"phi":[["1","x"],["0","3"]]},"hodge":{"weights":[0,1]}})");
        CHECK(r.code == kInputError);
        CHECK(json::parse(r.err)["message"].get<std::string>().starts_with("at /module/phi/0/1"));
    }
    SUBCASE("missing field") {
        const Result r = run_text("battery", R"({"r":1})");
        CHECK(r.code == kInputError);
        CHECK(json::parse(r.err)["message"].get<std::string>().find("degrees") != std::string::npos);
    }
    SUBCASE("unknown command and format") {
        CHECK(json::parse(run_text("nope", "{}").err)["error"] == "invalid-input");
        CHECK(run_text("wa", "{}", 0, false, "svg").code == kInputError);
        CHECK(run_text("wa", "{}", 0, false, "xml").code == kInputError);
    }
    SUBCASE("missing input file") {
        std::istringstream in;
        std::ostringstream out, err;
        CHECK(run({"newton", "/nonexistent/input.json"}, in, out, err) == kInputError);
        CHECK(json::parse(err.str())["error"] == "invalid-input");
    }
    SUBCASE("hypothesis violations are listed") {
        const Result r = run_text("dichotomy", R"({"r":0,"hk":{"p":3,"phi":[["3"]]},"lattice":{"weights":[1]}})");
        CHECK(r.code == kInputError);
        CHECK(json::parse(r.err)["violations"].size() == 2);
    }
}

TEST_CASE("plot renders an SVG polyline on an integer grid") {
    const Result r = run_text("plot", R"({"p":3,"coefficients":["-3","0","1"]})");
    CHECK(r.code == kSuccess);
    CHECK(r.out.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
    CHECK(r.out.find("<polyline class=\"newton\"") != std::string::npos);
    CHECK(r.out.find("</svg>") != std::string::npos);
    const Result j = run_text("plot", R"({"p":3,"coefficients":["-3","0","1"]})", 0, false, "json");
    CHECK(json::parse(j.out)["newton"] == json::parse(R"([[0,"1"],[2,"0"]])"));
}
