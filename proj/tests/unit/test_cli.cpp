#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "doctest.h"
#include "heckelab/errors.hpp"

using namespace heckelab;
namespace cli = heckelab::cli;

namespace {

const std::string fixtures = HECKELAB_FIXTURES;

int exit_code(const std::string& args) {
    const std::string cmd = std::string(HECKELAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

cli::Report run(cli::Command c, const std::string& builtin, const std::string& field = "auto", int rank_bound = 8) {
    cli::RunConfig cfg;
    cfg.command = c;
    cfg.builtin = builtin;
    cfg.field = field;
    cfg.rank_bound = rank_bound;
    return cli::run(cfg);
}

const cli::CheckRecord* find(const cli::Report& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(exit_code("validate --builtin std:2") == 0);
    CHECK(exit_code("newton --input " + fixtures + "/std2.json") == 0);
    CHECK(exit_code("newton --input " + fixtures + "/perm2_q1.json") == 0);
    CHECK(exit_code("validate --input " + fixtures + "/perturbed_std2.json") == 1);
    CHECK(exit_code("newton --input " + fixtures + "/perturbed_std2.json") == 1);
    CHECK(exit_code("rank --builtin std:3 --field symbolic --rank-bound 2") == 1);
    CHECK(exit_code("validate --input " + fixtures + "/malformed.json") == 2);
    CHECK(exit_code("validate --input " + fixtures + "/bad_index.json") == 2);
    CHECK(exit_code("validate --input " + fixtures + "/duplicate_entry.json") == 2);
    CHECK(exit_code("validate --input " + fixtures + "/missing.json") == 2);
    CHECK(exit_code("validate --builtin std:2 --field bogus") == 2);
    CHECK(exit_code("validate --builtin std:9x") == 2);
    CHECK(exit_code("validate") == 2);
    CHECK(exit_code("frobnicate") == 2);
    CHECK(exit_code("validate --builtin std:2 --input " + fixtures + "/std2.json") == 2);
}

TEST_CASE("JSON output to a file") {
    const std::string path = "cli_test_report.json";
    REQUIRE(exit_code("charpoly --builtin std:2 --json --output " + path) == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto doc = nlohmann::json::parse(ss.str());
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc.contains("timings"));
    std::remove(path.c_str());
}

TEST_CASE("statuses reflect the field strategy") {
    const auto sym = run(cli::Command::newton, "std:2", "symbolic");
    REQUIRE(find(sym, "newton.i2"));
    CHECK(find(sym, "newton.i2")->status == cli::Status::proved);

    const auto sampled = run(cli::Command::newton, "std:2", "sampled:3");
    REQUIRE(find(sampled, "newton.i2"));
    CHECK(find(sampled, "newton.i2")->status == cli::Status::verified);
    CHECK(find(sampled, "newton.i2")->points == 3);
    CHECK(sampled.points.size() == 3);

    const auto mod = run(cli::Command::validate, "std:3", "modular:1000003:2");
    CHECK(find(mod, "axiom.hecke")->status == cli::Status::verified);
    CHECK(mod.exit_code() == 0);

    const auto bounded = run(cli::Command::rank, "std:3", "symbolic", 2);
    REQUIRE(find(bounded, "rank.detect"));
    CHECK(find(bounded, "rank.detect")->status == cli::Status::failed);
    CHECK(bounded.exit_code() == 1);

    CHECK_THROWS_AS(run(cli::Command::validate, "std:2", "sampled:0"), ArgumentError);
    CHECK_THROWS_AS(run(cli::Command::validate, "nope:2"), ArgumentError);
}

TEST_CASE("reports are deterministic apart from timings") {
    for (const char* field : {"sampled:3", "modular:2305843009213693951:2"}) {
        cli::RunConfig cfg;
        cfg.command = cli::Command::cayley_hamilton;
        cfg.builtin = "std:3";
        cfg.field = field;
        cfg.seed = 42;
        const auto a = cli::to_json(cli::run(cfg), false).dump();
        const auto b = cli::to_json(cli::run(cfg), false).dump();
        CHECK(a == b);
        CHECK(a.find("timings") == std::string::npos);
        cfg.seed = 43;
        const auto c = cli::to_json(cli::run(cfg), false);
        CHECK(c["summary"]["failed"] == 0);
    }
}

TEST_CASE("command names round-trip") {
    for (auto c : {cli::Command::validate, cli::Command::rank, cli::Command::structure, cli::Command::newton,
                   cli::Command::cayley_hamilton, cli::Command::charpoly})
        CHECK(cli::parse_command(cli::command_name(c)) == c);
    CHECK_THROWS_AS(cli::parse_command("nope"), ArgumentError);
}
