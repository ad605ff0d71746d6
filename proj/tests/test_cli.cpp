#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dnacyclic/cli.hpp"

using namespace dnacyclic;
using nlohmann::json;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

size_t line_count(const std::string& text) {
    size_t k = 0;
    for (char c : text) k += c == '\n';
    return k;
}

}  // namespace

TEST_CASE("help and argument errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"factor", "--help"}).code == 0);
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"factor"}).code == 1);             // --n required
    CHECK(run({"enumerate", "--n", "x"}).code == 1);
    CHECK(run({"analyze", "--n", "6"}).code == 1);  // --chain required
}

TEST_CASE("factor reports structure and optional json") {
    const RunResult r = run({"factor", "--n", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n = 7 = 7 * 2^0") != std::string::npos);
    CHECK(r.out.find("1+x+x^3") != std::string::npos);
    CHECK(r.out.find("self-reciprocal no") != std::string::npos);
    CHECK(r.out.find("{1,2,4}") != std::string::npos);
    CHECK(r.out.find("negacyclic condition 2^i = -1 (mod 7): no") != std::string::npos);

    const auto path = temp_path("dnacodes_factor12.json");
    CHECK(run({"factor", "--n", "12", "--json", path.string()}).code == 0);
    const json j = json::parse(slurp(path));
    CHECK(j["n"] == 12);
    CHECK(j["m"] == 3);
    CHECK(j["s"] == 2);
    CHECK(j["factors"].size() == 2);
    CHECK(j["factors"][0]["bits"] == "11");
    CHECK(j["factors"][0]["multiplicity"] == 4);
    CHECK(j["negacyclic"] == true);
    CHECK(j["negacyclic_witness"] == 1);
    std::filesystem::remove(path);
}

TEST_CASE("enumerate streams descriptors") {
    const RunResult r = run({"enumerate", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(line_count(r.out) == 15);

    std::istringstream lines(r.out);
    std::string line;
    size_t rc_count = 0;
    while (std::getline(lines, line)) {
        const json j = json::parse(line);
        CHECK(j["n"] == 2);
        CHECK(j.contains("f0"));
        CHECK(j.contains("log2_size"));
        CHECK(j["self_reciprocal"].size() == 4);
        rc_count += j["rc"].get<bool>();
    }
    CHECK(rc_count >= 14);

    CHECK(line_count(run({"enumerate", "--n", "2", "--rc-sufficient"}).out) == 14);
    CHECK(line_count(run({"enumerate", "--n", "3", "--rc-only"}).out) == 20);
    CHECK(line_count(run({"enumerate", "--n", "2", "--min-log2", "6"}).out) == 4);
    CHECK(line_count(run({"enumerate", "--n", "2", "--max-log2", "0"}).out) == 1);
}

TEST_CASE("enumerate distance filter skips oversized codes with a warning") {
    const RunResult r =
        run({"enumerate", "--n", "2", "--min-distance", "1.5", "--cap", "128"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(line_count(r.out) >= 1);

    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        const json j = json::parse(line);
        CHECK(j["log2_size"].get<int>() <= 7);  // 2^8 = 256 words is over the cap
    }
}

TEST_CASE("enumerate json file target") {
    const auto path = temp_path("dnacodes_enum3.jsonl");
    CHECK(run({"enumerate", "--n", "3", "--json", path.string()}).code == 0);
    CHECK(line_count(slurp(path)) == 25);
    std::filesystem::remove(path);
}

TEST_CASE("analyze emits the full report") {
    const RunResult r =
        run({"analyze", "--n", "6", "--chain", "1000001,1000001,1000001,111"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["code"] == "f0=1000001,f1=1000001,f2=1000001,f3=111");
    CHECK(j["n"] == 6);
    CHECK(j["log2_size"] == 4);
    CHECK(j["word_count"] == 16);
    CHECK(j["s"].get<double>() == doctest::Approx(22.03));
    CHECK(j["d"].get<double>() == doctest::Approx(9.155));
    CHECK(j["energy_bound"].get<double>() == doctest::Approx(12.875));
    CHECK(j["rc_fixed_points"] == 4);
    CHECK(j["rc"] == true);
    CHECK(j["quasi_cyclic_2"] == true);
    CHECK(j["max_pair_energy"].get<double>() == doctest::Approx(22.03));
    CHECK(j["energy_bound_holds"] == false);
    CHECK(j["subcode"]["log2_size"] == 4);
    CHECK(j["subcode"]["matches_generator_formula"] == false);
    CHECK(j["subcode"]["gc_only"] == true);
}

TEST_CASE("analyze accepts human-form chain polynomials") {
    const RunResult r = run({"analyze", "--n", "6", "--chain", "1+x^6,1+x^6,1+x^6,1+x+x^2"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["log2_size"] == 4);
}

TEST_CASE("analyze writes fasta and subcode fasta") {
    const auto fasta = temp_path("dnacodes_ex.fasta");
    const auto sub = temp_path("dnacodes_ex.subcode.fasta");
    const RunResult r = run({"analyze", "--n", "6", "--chain",
                             "1000001,1000001,1000001,111", "--fasta", fasta.string()});
    REQUIRE(r.code == 0);
    const std::string body = slurp(fasta);
    CHECK(body.find(">w0\n") != std::string::npos);
    CHECK(line_count(body) == 32);  // 16 records, two lines each
    const std::string sub_body = slurp(sub);
    CHECK(sub_body.find(">s0\n") != std::string::npos);
    CHECK(line_count(sub_body) == 32);
    std::filesystem::remove(fasta);
    std::filesystem::remove(sub);
}

TEST_CASE("analyze failure modes") {
    // Degenerate: only the zero codeword.
    const std::string whole = "1000001";
    const RunResult degenerate =
        run({"analyze", "--n", "6", "--chain", whole + "," + whole + "," + whole + "," + whole});
    CHECK(degenerate.code == 1);
    CHECK(degenerate.err.find("degenerate") != std::string::npos);

    // Cap exceeded.
    const RunResult capped =
        run({"analyze", "--n", "6", "--chain", "1,1,1,1", "--cap", "1000"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("cap") != std::string::npos);

    // Malformed chain.
    CHECK(run({"analyze", "--n", "6", "--chain", "1,1,1"}).code == 1);
    CHECK(run({"analyze", "--n", "6", "--chain", "1,1,1,zz"}).code == 1);
    // Not a divisor.
    CHECK(run({"analyze", "--n", "6", "--chain", "1011,1,1,1"}).code == 1);
}

TEST_CASE("custom weights flow through analyze") {
    const auto path = temp_path("dnacodes_weights.csv");
    {
        std::ofstream f(path);
        f << "dinucleotide,dH,dS\n";
        f << "AA,-7.9,-22.2\nAC,-8.4,-22.4\nAG,-7.8,-21.0\nAT,-7.2,-20.4\n";
        f << "CA,-8.5,-22.7\nCC,-8.0,-19.9\nCG,-10.6,-27.2\nGA,-8.2,-22.2\n";
        f << "GC,-9.8,-24.4\nTA,-7.2,-21.3\n";
    }
    const RunResult r = run({"analyze", "--n", "6", "--chain",
                             "1000001,1000001,1000001,111", "--weights", path.string()});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["s"].get<double>() == doctest::Approx(22.03));
    std::filesystem::remove(path);

    CHECK(run({"analyze", "--n", "6", "--chain", "1000001,1000001,1000001,111",
               "--weights", "/nonexistent.csv"})
              .code == 1);
}

TEST_CASE("cap can come from the environment") {
    setenv("DNACODES_CAP", "1000", 1);
    const RunResult r = run({"analyze", "--n", "6", "--chain", "1,1,1,1"});
    unsetenv("DNACODES_CAP");
    CHECK(r.code == 2);

    // An explicit flag overrides the environment.
    setenv("DNACODES_CAP", "1000", 1);
    const RunResult wide = run({"analyze", "--n", "6", "--chain",
                                "1000001,1000001,1000001,111", "--cap", "65536"});
    unsetenv("DNACODES_CAP");
    CHECK(wide.code == 0);
}

TEST_CASE("selfcheck fails honestly") {
    const RunResult r = run({"selfcheck"});
    CHECK(r.code == 3);
    CHECK(r.out.find("ok   ideal chain") != std::string::npos);
    CHECK(r.out.find("FAIL every brute-forced ideal") != std::string::npos);
    CHECK(r.out.find("FAIL pair map") != std::string::npos);
    CHECK(r.out.find("3/5 checks passed") != std::string::npos);
    // The uncovered ideals and the four exceptional pairs are spelled out.
    CHECK(r.out.find("8 of 23 ideals uncovered") != std::string::npos);
    CHECK(r.out.find("element 5 (GC)") != std::string::npos);
}
