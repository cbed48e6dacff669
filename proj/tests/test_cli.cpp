#include "bno/cli.hpp"
#include "bno/diagram.hpp"
#include "bno/word.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace bno;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("normal subcommand renders the worked p-expansion") {
    RunResult r = run({"normal", "--word", "(da)^3", "--model", "p"});
    CHECK(r.code == 0);
    CHECK(r.out == "(a†)^3a^3+(2p+1)(a†)^2a^2+p^2a†a\n");
}

TEST_CASE("normal subcommand JSON output round-trips") {
    RunResult r = run({"normal", "--word", "(da)^3", "--model", "p", "--json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["word"] == "(da)^3");
    CHECK(j["model"] == "p");
    CHECK(j["terms"].size() == 3);
    CHECK(j["terms"][1]["creators"] == 2);
    CHECK(j["terms"][1]["coefficient"] == "2p+1");
    // idempotent re-rendering
    RunResult again = run({"normal", "--word", "(da)^3", "--model", "p", "--json"});
    CHECK(again.out == r.out);
}

TEST_CASE("stirling and bell subcommands") {
    CHECK(run({"stirling", "--kind", "p", "--n", "1", "--k", "1"}).out == "1\n");
    CHECK(run({"stirling", "--kind", "p", "--n", "4", "--k", "2"}).out == "3p^2+3p+1\n");
    CHECK(run({"stirling", "--kind", "classic", "--n", "4", "--k", "2"}).out == "7\n");
    CHECK(run({"stirling", "--kind", "knm", "--n", "3", "--k", "2", "--m", "1"}).out == "2\n");
    CHECK(run({"stirling", "--kind", "knm", "--n", "3", "--k", "2"}).code == 2); // missing --m

    CHECK(run({"bell", "--n", "3"}).out == "5\n");
    CHECK(run({"bell", "--p0", "--n", "5"}).out == "15\n");

    RunResult triangle = run({"stirling", "--kind", "classic", "--n", "4"});
    CHECK(triangle.out == "1\t1\n2\t1\t1\n3\t1\t3\t1\n4\t1\t7\t6\t1\n");
}

TEST_CASE("contractions subcommand") {
    CHECK(run({"contractions", "--word", "adad"}).out == "5\n");
    RunResult r = run({"contractions", "--word", "aadd", "--list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(null)\taadd") != std::string::npos);
    CHECK(r.out.find("2-3\tapd") != std::string::npos);
    CHECK(r.out.find("1-3,2-4\teeEE") != std::string::npos);
}

TEST_CASE("bijection subcommand converts between the three forms") {
    RunResult r = run({"bijection", "--n", "3", "--contraction", "2-3,4-5", "--json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["vector"] == "1,2");
    CHECK(j["partition"] == "{1,2,3}");
    CHECK(j["rises"] == 2);

    RunResult from_partition = run({"bijection", "--partition", "{1},{2,3}", "--json"});
    nlohmann::json j2 = nlohmann::json::parse(from_partition.out);
    CHECK(j2["contraction"] == "2-3");
    CHECK(j2["vector"] == "e,2");
}

TEST_CASE("diagram subcommand") {
    RunResult svg = run({"diagram", "--word", "aadd", "--contraction", "1-3,2-4",
                         "--format", "svg"});
    CHECK(svg.code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
    CHECK(svg.out.rfind("</svg>") != std::string::npos);
    // two arcs, four vertices
    std::size_t paths = 0, pos = 0;
    while ((pos = svg.out.find("<path", pos)) != std::string::npos) { ++paths; ++pos; }
    CHECK(paths == 2);

    RunResult ascii = run({"diagram", "--word", "(da)^3", "--contraction", "2-5"});
    CHECK(ascii.code == 0);
    CHECK(ascii.out.find(".-----.") != std::string::npos);

    RunResult null_arc = run({"diagram", "--word", "aadd", "--format", "ascii"});
    CHECK(null_arc.code == 0);
    CHECK(null_arc.out.find('.') == std::string::npos);
    CHECK(null_arc.out == emit_ascii(parse_word("aadd"), {}));
}

TEST_CASE("deterministic output for identical requests") {
    RunResult a = run({"diagram", "--word", "aadd", "--contraction", "1-3,2-4", "--format", "svg"});
    RunResult b = run({"diagram", "--word", "aadd", "--contraction", "1-3,2-4", "--format", "svg"});
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"normal"}).code == 1); // missing --word
    CHECK(run({"normal", "--word", "a$d"}).code == 2);
    CHECK(run({"normal", "--word", "(da)^12", "--guard", "1000"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify subcommand: trivial subset and negative control") {
    RunResult small = run({"verify", "--max-n", "1", "--order", "2"});
    CHECK(small.code == 0);
    CHECK(small.out.find("FAIL") == std::string::npos);

    RunResult corrupted = run({"verify", "--max-n", "1", "--order", "2", "--inject-fault"});
    CHECK(corrupted.code == 3);
    CHECK(corrupted.out.find("FAIL negative-control-corrupted-table") != std::string::npos);
}
