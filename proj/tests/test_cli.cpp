#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int status = -1;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    const std::string command = std::string(OESNUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe))
        result.output.append(buffer.data(), n);
    const int raw = pclose(pipe);
    result.status = WEXITSTATUS(raw);
    return result;
}

const std::string table1 = OESNUM_TABLE1_CSV;

}  // namespace

TEST_CASE("parse subcommand") {
    const RunResult divided = run("parse \"D9,6\"");
    CHECK(divided.status == 0);
    CHECK(divided.output.find("divided") != std::string::npos);
    CHECK(divided.output.find("left=9 right=6") != std::string::npos);

    const RunResult comb = run("parse C5");
    CHECK(comb.status == 0);
    CHECK(comb.output.find("teeth=5") != std::string::npos);

    CHECK(run("parse Q3").status == 1);
}

TEST_CASE("eval subcommand") {
    const RunResult divided = run("eval \"D9,6\"");
    CHECK(divided.status == 0);
    CHECK(divided.output == "25 15\n");

    const RunResult longshort = run("eval L3S2");
    CHECK(longshort.status == 0);
    CHECK(longshort.output == "32\n");

    const RunResult nb5 = run("eval C5 --hypothesis comb-nb:5");
    CHECK(nb5.status == 0);
    CHECK(nb5.output == "25\n");

    const RunResult chevron = run("eval V");
    CHECK(chevron.status == 0);
    CHECK(chevron.output == "10\nconfidence: tentative\n");

    CHECK(run("eval Q3").status == 1);
    CHECK(run("eval C5 --hypothesis nope").status == 2);
}

TEST_CASE("eval --trace shows derivations") {
    const RunResult traced = run("eval \"P3;S2\" --trace");
    CHECK(traced.status == 0);
    CHECK(traced.output.find("15 5\n") == 0);
    CHECK(traced.output.find("pole: 10+n") != std::string::npos);
    CHECK(traced.output.find("+2") != std::string::npos);
}

TEST_CASE("stats subcommand") {
    const RunResult stats = run("stats " + table1);
    CHECK(stats.status == 0);
    CHECK(stats.output.find("section A: 134 (14.3% of 940)") != std::string::npos);

    const RunResult json_stats = run("stats " + table1 + " --format json");
    CHECK(json_stats.status == 0);
    // two JSON documents: prevalence then base evidence
    CHECK_NOTHROW(nlohmann::json::parse(
        json_stats.output.substr(0, json_stats.output.find("\n{\n") + 1)));

    CHECK(run("stats missing.csv").status == 1);
}

TEST_CASE("infer-base subcommand") {
    const RunResult base = run("infer-base " + table1);
    CHECK(base.status == 0);
    CHECK(base.output.find("rows exceeding 9 strokes: 5") != std::string::npos);
    CHECK(base.output.find("two inscriptions") != std::string::npos);
}

TEST_CASE("compare subcommand") {
    const RunResult both = run("compare " + table1 + " --hypotheses default,comb-n");
    CHECK(both.status == 0);
    CHECK(both.output.find("1. default") != std::string::npos);

    const RunResult single = run("compare " + table1 + " --hypotheses default");
    CHECK(single.status == 0);

    CHECK(run("compare " + table1 + " --hypotheses nope").status == 2);
}

TEST_CASE("validate subcommand") {
    const RunResult report = run("validate " + table1);
    CHECK(report.status == 0);
    CHECK(report.output.find("Tor156") != std::string::npos);
    CHECK(report.output.find("Tor280") != std::string::npos);
    CHECK(report.output.find("Jel46") != std::string::npos);

    // shipped data has no claimed-value mismatches
    CHECK(run("validate " + table1 + " --strict").status == 0);

    const std::string corrupted = "corrupted_test.csv";
    {
        std::ofstream out(corrupted);
        out << "id,site,kind,locus,family,claimed_value,notation,table_section\n";
        out << "Bad1,Bad,pot,unknown,score,1,S1,A\n";
    }
    CHECK(run("validate " + corrupted).status == 1);
    std::remove(corrupted.c_str());
}

TEST_CASE("strict validate exits 3 on a mismatch") {
    const std::string mismatched = "mismatch_test.csv";
    {
        std::ofstream out(mismatched);
        out << "id,site,kind,locus,family,claimed_value,notation,table_section\n";
        out << "Tor1,Tor,pot,unknown,comb,14,C5,B\n";
    }
    CHECK(run("validate " + mismatched).status == 0);
    CHECK(run("validate " + mismatched + " --strict").status == 3);
    std::remove(mismatched.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("frobnicate").status == 2);
    CHECK(run("stats").status == 2);
    CHECK(run("stats " + table1 + " --format yaml").status == 2);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const RunResult first = run("stats " + table1);
    const RunResult second = run("stats " + table1);
    CHECK(first.output == second.output);
    const RunResult c1 = run("compare " + table1 + " --hypotheses default,comb-n,comb-nb:10");
    const RunResult c2 = run("compare " + table1 + " --hypotheses default,comb-n,comb-nb:10");
    CHECK(c1.output == c2.output);
}
