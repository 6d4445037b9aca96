#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dibc/cli.hpp"

using namespace dibc;

namespace {

struct CliRun {
    int exit_code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_main(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path(std::string("cli_test_") + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* kC3 = "p dib 3 3\na 1 2\na 2 3\na 3 1\n";

}  // namespace

TEST_CASE("solver subcommands") {
    TempFile c3("c3.dgf", kC3);
    SECTION("dib") {
        const CliRun r = run({"dib", c3.path});
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("dib = 2") != std::string::npos);
        REQUIRE(r.out.find("nodes expanded") != std::string::npos);
        REQUIRE(r.err.find("elapsed") != std::string::npos);  // timing never lands on stdout
        REQUIRE(r.out.find("elapsed") == std::string::npos);
    }
    SECTION("dc with a witness file") {
        const CliRun r = run({"dc", c3.path, "--witness", "cli_test_w.col"});
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("dc = 2") != std::string::npos);
        std::ifstream w("cli_test_w.col");
        REQUIRE(w.good());
        std::remove("cli_test_w.col");
    }
    SECTION("json mirror") {
        const CliRun r = run({"dib", c3.path, "--json"});
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["value"] == 2);
        REQUIRE(j["witness"].size() == 3);
    }
}

TEST_CASE("verify subcommand") {
    TempFile c3("v_c3.dgf", kC3);
    TempFile bad("bad.col", "1 1\n2 2\n3 3\n");
    TempFile good("good.col", "1 1\n2 2\n3 2\n");
    SECTION("singleton coloring is flagged with the failing class") {
        const CliRun r = run({"verify", c3.path, "--coloring", bad.path});
        REQUIRE(r.exit_code == 1);
        REQUIRE(r.out.find("acyclic: yes") != std::string::npos);
        REQUIRE(r.out.find("b-coloring: NO (class 1 lacks b⁺-vertex)") != std::string::npos);
    }
    SECTION("a b-coloring passes") {
        const CliRun r = run({"verify", c3.path, "--coloring", good.path});
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("b-coloring: YES") != std::string::npos);
    }
}

TEST_CASE("reduce subcommand emits a trace and the final coloring") {
    TempFile c3("r_c3.dgf", kC3);
    TempFile start("start.col", "1 1\n2 2\n3 3\n");
    const CliRun r = run({"reduce", c3.path, "--coloring", start.path});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("step 1: drop color 1 via plus, buckets: 1←{1}") != std::string::npos);
    REQUIRE(r.out.find("1 1\n2 2\n3 1\n") != std::string::npos);
}

TEST_CASE("generate and parse round trip through files") {
    const CliRun gen = run({"generate", "circulant-2-regular-bipartite", "--part", "4", "--seed", "5",
                            "--out", "cli_test_circ.dgf"});
    REQUIRE(gen.exit_code == 0);
    const CliRun solve = run({"dib", "cli_test_circ.dgf"});
    REQUIRE(solve.exit_code == 0);
    REQUIRE(solve.out.find("dib = 3") != std::string::npos);
    // determinism: regenerating with the same seed is byte-identical
    const CliRun again = run({"generate", "circulant-2-regular-bipartite", "--part", "4", "--seed", "5"});
    std::ifstream f("cli_test_circ.dgf");
    std::stringstream file_content;
    file_content << f.rdbuf();
    REQUIRE(again.out == file_content.str());
    std::remove("cli_test_circ.dgf");
}

TEST_CASE("enumerate subcommand") {
    const CliRun r = run({"enumerate", "3"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("64 digraphs") != std::string::npos);
    const CliRun f = run({"enumerate", "3", "--filter", "bipartite"});
    REQUIRE(f.exit_code == 0);
    const CliRun over = run({"enumerate", "5"});
    REQUIRE(over.exit_code == 2);  // beyond the default cap
    const CliRun raised = run({"enumerate", "2", "--cap", "5", "--emit"});
    REQUIRE(raised.exit_code == 0);
    REQUIRE(raised.out.find("p dib 2") != std::string::npos);
}

TEST_CASE("check subcommand") {
    SECTION("small enumeration corpus passes") {
        const CliRun r = run({"check", "theorem-2", "--enumerate", "3"});
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("tested 69 instances, 0 violations") != std::string::npos);
    }
    SECTION("byte-identical at any worker count") {
        const CliRun one = run({"check", "lemma-5", "--trials", "40", "--workers", "1"});
        const CliRun two = run({"check", "lemma-5", "--trials", "40", "--workers", "2"});
        REQUIRE(one.exit_code == 0);
        REQUIRE(one.out == two.out);
        const CliRun rerun = run({"check", "lemma-5", "--trials", "40", "--workers", "2"});
        REQUIRE(rerun.out == two.out);
    }
    SECTION("DIB_WORKERS only changes scheduling, never output") {
        setenv("DIB_WORKERS", "3", 1);
        const CliRun three = run({"check", "lemma-6", "--trials", "30"});
        setenv("DIB_WORKERS", "1", 1);
        const CliRun one = run({"check", "lemma-6", "--trials", "30"});
        unsetenv("DIB_WORKERS");
        REQUIRE(three.out == one.out);
    }
    SECTION("unknown ids are usage errors") {
        const CliRun r = run({"check", "theorem-1"});
        REQUIRE(r.exit_code == 2);
    }
    SECTION("json output carries the same fields") {
        const CliRun r = run({"check", "theorem-2", "--enumerate", "2", "--json"});
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["instances"] == 5);
        REQUIRE(j["violations"].empty());
    }
}

TEST_CASE("construct subcommand") {
    const CliRun gen = run({"generate", "circulant-2-regular-bipartite", "--part", "5", "--out",
                            "cli_test_c9.dgf"});
    REQUIRE(gen.exit_code == 0);
    const CliRun r = run({"construct", "theorem-9", "cli_test_c9.dgf", "--emit-witness"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("colors: 3") != std::string::npos);
    REQUIRE(r.out.find("verified b-coloring: yes") != std::string::npos);
    REQUIRE(r.out.find("bad path") != std::string::npos);
    std::remove("cli_test_c9.dgf");

    // hypothesis violations exit 1
    TempFile k22("k22.dgf", "p dib 4 8\na 1 3\na 1 4\na 2 3\na 2 4\na 3 1\na 3 2\na 4 1\na 4 2\n");
    const CliRun bad = run({"construct", "theorem-9", k22.path});
    REQUIRE(bad.exit_code == 1);
    REQUIRE(bad.err.find("hypothesis") != std::string::npos);
}

TEST_CASE("malformed files exit 2 with a line diagnostic") {
    TempFile broken("broken.dgf", "p dib 2 1\na 1 5\n");
    const CliRun r = run({"dib", broken.path});
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    REQUIRE(run({}).exit_code == 2);
    REQUIRE(run({"no-such-command"}).exit_code == 2);
    REQUIRE(run({"dib"}).exit_code == 2);  // missing input
}
