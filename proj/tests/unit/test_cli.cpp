#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
    json doc() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = levrecon::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string table_input() {
    std::ifstream f(LEVRECON_FIXTURE_DIR "/worked_example_outputs.txt");
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("levrecon_test_" + name); }

}  // namespace

TEST_CASE("bounds") {
    auto r = run({"bounds", "pattern", "--n", "6", "--t", "1", "--mode", "at-most"});
    CHECK(r.code == 0);
    CHECK(r.doc()["value"] == 5);
    CHECK(r.doc()["hypothesis_ok"] == true);
    CHECK(r.doc()["params"]["n"] == 6);

    CHECK(run({"bounds", "levenshtein-deletion", "--n", "8", "--t", "2"}).doc()["value"] == 13);
    CHECK(run({"bounds", "adjacent", "--n", "8", "--t", "2", "--a", "4"}).doc()["value"] == 20);
    CHECK(run({"bounds", "binom-ratio", "--n", "20", "--t", "2"}).doc()["value"] == "9/4");
    CHECK(run({"--format", "plain", "bounds", "cumulative-half", "--n", "8", "--t", "2"}).out == "25\n");

    r = run({"bounds", "pattern", "--n", "4", "--t", "2"});
    CHECK(r.code == 1);
    CHECK(r.doc()["value"].is_null());
    CHECK(r.doc()["hypothesis_ok"] == false);
    CHECK(r.doc()["error"]["kind"] == "domain");

    r = run({"bounds", "foo"});
    CHECK(r.code == 2);
    CHECK(r.doc()["error"]["kind"] == "usage");
    CHECK(run({"bounds", "pattern", "--n", "6"}).code == 2);
    CHECK(run({"bounds", "pattern", "--n", "six", "--t", "1"}).code == 2);
}

TEST_CASE("expectations") {
    auto r = run({"expect", "--n", "100", "--t", "3", "--draws", "100"});
    CHECK(r.code == 0);
    CHECK(r.doc()["m"] == 166751.0);
    CHECK(r.doc()["expected_unique"].get<double>() == doctest::Approx(99.97).epsilon(1e-4));
    r = run({"expect", "--m", "4", "--j", "4"});
    CHECK(r.doc()["pccp_expectation"].get<double>() == doctest::Approx(25.0 / 3));
    CHECK(run({"expect", "--m", "4"}).code == 2);
    CHECK(run({"expect", "--draws", "3"}).code == 2);
}

TEST_CASE("distinguish") {
    auto r = run({"distinguish", "--x", "11101", "--xp", "11011", "--t", "2"});
    CHECK(r.code == 0);
    CHECK(r.doc()["n_max_confusable"] == 8);
    CHECK(r.doc()["channels_to_distinguish"] == 9);
    r = run({"distinguish", "--x", "11101", "--xp", "11011", "--t", "2", "--model", "nonmultiset", "--witness"});
    CHECK(r.doc()["n_max_confusable"] == 9);
    CHECK(r.doc()["witness"]["on_x"].size() == 9);
    CHECK(run({"distinguish", "--x", "11101", "--xp", "11011", "--t", "2", "--model", "traditional"}).doc()["n_max_confusable"] == 3);
    CHECK(run({"distinguish", "--x", "1101", "--xp", "11011", "--t", "2"}).code == 1);
    CHECK(run({"distinguish", "--x", "11201", "--xp", "11011", "--t", "2"}).code == 2);
    CHECK(run({"distinguish", "--x", "11101", "--xp", "11011", "--t", "2", "--model", "bogus"}).code == 2);
}

TEST_CASE("extremal") {
    auto r = run({"extremal", "--n", "6", "--t", "2"});
    CHECK(r.code == 0);
    CHECK(r.doc()["n_max_confusable"] == 12);
    bool found = false;
    const json doc = r.doc();
    for (const auto& p : doc["pairs"]) found |= p["x"] == "001000" && p["xp"] == "010000";
    CHECK(found);
    CHECK(run({"extremal", "--n", "6", "--t", "2", "--max-pairs", "1"}).doc()["pairs"].size() == 1);
    r = run({"extremal", "--n", "12", "--t", "3", "--budget", "1000"});
    CHECK(r.code == 1);
    CHECK(r.doc()["error"]["kind"] == "budget");
}

TEST_CASE("code") {
    auto r = run({"code", "--n", "10", "--word", "0000011112"});
    CHECK(r.code == 0);
    CHECK(r.doc()["is_codeword"] == false);
    CHECK(r.doc()["tau"] == 9);
    CHECK(r.doc()["excluded_count"] == 6 * 11264);
    CHECK(run({"code", "--n", "10", "--q", "3"}).code == 1);
    CHECK(run({"code", "--n", "10", "--p", "x"}).code == 2);
    const auto a = run({"code", "--n", "30", "--sample", "--seed", "4"});
    CHECK(a.out == run({"code", "--n", "30", "--sample", "--seed", "4"}).out);
}

TEST_CASE("decode") {
    auto r = run({"decode", "--q", "6", "--n", "10", "--ts", "1", "--td", "1", "--ti", "2"}, table_input());
    CHECK(r.code == 0);
    CHECK(r.doc()["result"] == "1200321021");
    CHECK(r.doc()["decoded"] == true);
    CHECK(r.doc()["reads_consumed"] == 6);
    CHECK(r.doc()["certificate"]["i1"] == 0);

    r = run({"--format", "plain", "decode", "--q", "6", "--n", "10", "--ts", "1", "--td", "1", "--ti", "2", "--input",
             LEVRECON_FIXTURE_DIR "/worked_example_outputs.txt"});
    CHECK(r.out == "1200321021\n");

    r = run({"decode", "--q", "6", "--n", "10", "--ts", "1", "--td", "1", "--ti", "2"}, "  10003010210 \n\n12132110121\n");
    CHECK(r.doc()["decoded"] == false);
    CHECK(r.doc()["result"] == "");
    CHECK(r.doc()["certificate"].is_null());

    CHECK(run({"decode", "--q", "6", "--n", "10", "--td", "1"}, "123\n123\n123\n123\n123\n123\n").code == 1);
    CHECK(run({"decode", "--q", "6", "--n", "10", "--td", "1"}, "12a\n").code == 2);
    CHECK(run({"decode", "--q", "6", "--n", "10", "--input", "/nonexistent/file"}).code == 2);
}

TEST_CASE("simulate") {
    const std::vector<std::string> args{"simulate", "--n", "60", "--ts", "1", "--td", "1", "--ti", "1", "--samples", "30"};
    const auto a = run(args);
    CHECK(a.code == 0);
    CHECK(a.doc()["samples"] == 30);
    CHECK(a.doc()["wrong_decodes"] == 0);
    CHECK(a.out == run(args).out);

    auto csv_args = args;
    csv_args.insert(csv_args.begin(), {"--format", "csv"});
    const auto csv = run(csv_args);
    CHECK(csv.out.rfind("n,ts,td,ti,average,median,failures,samples\n60,1,1,1,", 0) == 0);

    const fs::path path = temp_file("sweep.csv");
    auto out_args = args;
    out_args.insert(out_args.end(), {"--out", path.string()});
    CHECK(run(out_args).code == 0);
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    CHECK(s.str() == csv.out);
    fs::remove(path);

    CHECK(run({"simulate", "--n", "20", "--ts", "1", "--td", "1", "--ti", "1", "--samples", "2"}).err.find("warning") !=
          std::string::npos);
    CHECK(run({"simulate", "--q", "3", "--n", "20", "--samples", "2"}).code == 1);
    CHECK(run({"simulate", "--samples", "0"}).code == 2);
}

TEST_CASE("environment overrides") {
    const std::vector<std::string> args{"simulate", "--n", "60", "--ti", "1", "--samples", "20"};
    const auto base = run(args);
    ::setenv("LEVRECON_SEED", "999", 1);
    const auto seeded = run(args);
    ::setenv("LEVRECON_JOBS", "3", 1);
    const auto threaded = run(args);
    ::unsetenv("LEVRECON_SEED");
    ::unsetenv("LEVRECON_JOBS");
    CHECK(seeded.doc()["seed"] == 999);
    CHECK(base.doc()["seed"] != 999);
    CHECK(seeded.out == threaded.out);
    auto explicit_seed = args;
    explicit_seed.insert(explicit_seed.end(), {"--seed", "999"});
    CHECK(run(explicit_seed).out == seeded.out);
}

TEST_CASE("help and usage") {
    const auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("simulate") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--format", "xml", "bounds", "pattern", "--n", "6", "--t", "1"}).code == 2);
}
