#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hbk/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<const char*> args) {
    args.insert(args.begin(), "hbk");
    std::ostringstream out, err;
    const int code = hbk::run_cli(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("census output matches the documented text form") {
    const CliResult r = run({"census", "k:0;rational:x:1/5"});
    CHECK(r.code == 0);
    CHECK(r.out == "Two; slopes: -1/2, 1/2\n");
}

TEST_CASE("exit codes distinguish parse and validation failures") {
    CHECK(run({"census", "k:0;rational:x:1/5"}).code == 0);
    CHECK(run({"census", "nonsense"}).code == 1);
    CHECK(run({"census", "k:0;rational:x:0/1"}).code == 2);
    CHECK(run({"census", "k:0;rational:x:1/2"}).code == 2);
    CHECK(run({"eval", "0"}).code == 2);
    CHECK(run({"catalog", "show", "8_99"}).code == 1);
    CHECK(run({"bogus-command"}).code == 1);
}

TEST_CASE("equiv --strict exits 3 on an unknown verdict") {
    const std::vector<const char*> pair = {"equiv", "k:0;rational:x:1/3", "k:5;rational:x:1/3"};
    CHECK(run(pair).code == 0);
    auto strict = pair;
    strict.push_back("--strict");
    const CliResult r = run(strict);
    CHECK(r.code == 3);
    CHECK(r.out.find("Unknown") == 0);
}

TEST_CASE("equiv reports reasons and citations") {
    const CliResult r = run({"equiv", "k:0;rational:x:2/5", "k:1;rational:x:2/5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Inequivalent") == 0);
    CHECK(r.out.find("slope") != std::string::npos);
    CHECK(r.out.find("citations:") != std::string::npos);
}

TEST_CASE("json output is schema-versioned and reports the same facts") {
    const CliResult text = run({"census", "k:1;rational:x:1/5"});
    const CliResult json = run({"--format", "json", "census", "k:1;rational:x:1/5"});
    CHECK(json.code == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "census");
    CHECK(j["census"]["count"] == "Two");
    CHECK(j["census"]["slopes"] == nlohmann::json({"1/2", "9/2"}));
    CHECK(text.out.find("1/2, 9/2") != std::string::npos);

    const CliResult sym = run({"--format", "json", "symmetry", "k:0;rational:x:2/5"});
    CHECK(nlohmann::json::parse(sym.out)["group"] == "Z2");
}

TEST_CASE("catalog subcommands") {
    CHECK(run({"catalog", "list"}).out.find("6_12") != std::string::npos);
    const CliResult show = run({"catalog", "show", "6_12"});
    CHECK(show.out.find("entry 6_12") == 0);
    CHECK(show.out.find("spec: k:0;rational:x:2/5") != std::string::npos);
    const CliResult verify = run({"catalog", "verify", "--all"});
    CHECK(verify.code == 0);
    CHECK(verify.out.find(" failed") != std::string::npos);
    CHECK(verify.out.find("0 failed") != std::string::npos);
    CHECK(run({"catalog", "verify", "6_12"}).code == 0);
    CHECK(run({"catalog", "verify"}).code == 1);
}

TEST_CASE("batch runs from a file and records row errors") {
    const std::string path = "cli_batch_input.csv";
    {
        std::ofstream csv(path);
        csv << "spec_a,spec_b,mode\n"
            << "k:0;rational:x:2/5,k:1;rational:x:2/5,equiv\n"
            << "broken,k:0;rational:x:2/5,equiv\n";
    }
    const CliResult r = run({"--format", "json", "batch", "--pairs", path.c_str()});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["status"] == "inequivalent");
    CHECK(j["rows"][1].contains("error"));
    std::remove(path.c_str());
}
