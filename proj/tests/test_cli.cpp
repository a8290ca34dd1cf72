#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commalg/cli.hpp"
#include "commalg/constructions.hpp"
#include "commalg/error.hpp"
#include "commalg/wire.hpp"

using namespace commalg;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "commalg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "commalg_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("construct writes the generator lists") {
    auto r = cli({"construct", "--family", "bkml", "--n", "8", "--m", "1", "--l", "5", "--k", "2"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["generators"].size() == 7);
    CHECK(doc["n"] == 8);

    r = cli({"construct", "--family", "bkm", "--n", "8", "--m", "1", "--k", "2"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    std::vector<std::string> labels;
    for (const auto& g : doc["generators"]) labels.push_back(g["label"]);
    CHECK(labels == std::vector<std::string>{"B", "E_1_4", "E_1_5", "E_1_6", "E_1_7", "E_1_8", "I"});

    const auto path = scratch("bkml.json");
    r = cli({"construct", "--family", "bkml", "--n", "8", "--m", "1", "--l", "5", "--k", "2", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    const auto back = read_generator_file(path.string());
    const auto built = build_bkml({8, 1, 5, 2});
    for (const auto& g : built.members()) CHECK(*back.find(g.label) == g.matrix);

    auto again = cli({"construct", "--family", "bkml", "--n", "8", "--m", "1", "--l", "5", "--k", "2"});
    CHECK(again.out == slurp(path));
}

TEST_CASE("invalid parameters exit 2 with the inequality") {
    const auto r = cli({"construct", "--family", "bkml", "--n", "8", "--m", "1", "--l", "4", "--k", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("l > m+k+1 violated") != std::string::npos);
    CHECK(cli({"construct", "--family", "nope", "--n", "8"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"length"}).code == 2);
    CHECK(cli({"verify", "--in", "/nonexistent.json"}).code == 2);
    CHECK(cli({"verify", "--family", "bkm", "--n", "8", "--m", "1", "--k", "2", "--field", "gf:9"}).code == 2);
}

TEST_CASE("verify reports on the two examples") {
    auto r = cli({"verify", "--family", "bkml", "--n", "8", "--m", "1", "--l", "5", "--k", "2", "--no-timing"});
    CHECK(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["maximal"] == true);
    CHECK(doc["length_measured"] == 3);
    CHECK(doc["radical_N"] == 4);
    CHECK(doc["algebra_dim"] == 9);
    CHECK_FALSE(doc.contains("elapsed_ms"));

    r = cli({"verify", "--family", "bkm", "--n", "8", "--m", "1", "--k", "2", "--field", "gf:7"});
    CHECK(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["maximal"] == true);
    CHECK(doc["length_measured"] == 3);
    CHECK(doc["algebra_dim"] == 8);
    CHECK(doc["field"] == "gf:7");
    CHECK(doc.contains("elapsed_ms"));
}

TEST_CASE("verify flags a hand-edited non-commuting file") {
    auto doc = generator_set_to_json(build_bkml({8, 1, 5, 2}));
    doc["generators"].push_back({{"label", "E_2_1"}, {"entries", json::array({json::array({2, 1, "1"})})}});
    const auto path = scratch("edited.json");
    std::ofstream(path) << dump(doc);
    const auto r = cli({"verify", "--in", path.string(), "--no-timing"});
    CHECK(r.code == 1);
    const auto rep = json::parse(r.out);
    CHECK(rep["commutative"] == false);
    CHECK(rep["maximal"] == false);
    CHECK_FALSE(rep["failures"].empty());
}

TEST_CASE("verify reports are deterministic apart from timing") {
    const std::vector<std::string> args{"verify", "--family", "bkml", "--n", "9", "--m", "2",
                                        "--l", "5", "--k", "1", "--samples", "8", "--seed", "42"};
    auto a = json::parse(cli(args).out);
    auto b = json::parse(cli(args).out);
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a.dump() == b.dump());
    auto c = args;
    c.push_back("--no-timing");
    CHECK(cli(c).out == cli(c).out);
}

TEST_CASE("length subcommand") {
    const auto w = scratch("witness.json");
    REQUIRE(cli({"construct", "--family", "bkml", "--n", "8", "--m", "1", "--l", "5", "--k", "2", "--witness", "--out",
                 w.string()})
                .code == 0);
    auto r = cli({"length", "--in", w.string(), "--check-words"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["length"] == 3);
    CHECK(doc["dims"] == json::parse("[1,5,7,9,9]"));
    CHECK(doc["measured_system"] == "input");
    CHECK(doc["word_oracle"]["status"] == "agrees");

    const auto id = scratch("identity.json");
    std::ofstream(id) << R"({"n": 3, "field": "rational", "admit_empty_word": true,
        "generators": [{"label": "I", "entries": [[1,1,"1"],[2,2,"1"],[3,3,"1"]]}]})";
    r = cli({"length", "--in", id.string()});
    CHECK(json::parse(r.out)["length"] == 0);

    const auto full = scratch("bkm_full.json");
    REQUIRE(cli({"construct", "--family", "bkm", "--n", "8", "--m", "1", "--k", "2", "--out", full.string()}).code == 0);
    doc = json::parse(cli({"length", "--in", full.string()}).out);
    CHECK(doc["length"] == 2);
    CHECK(doc["dims"] == json::parse("[1,7,8,8]"));

    r = cli({"length", "--in", w.string(), "--check-words", "--word-budget", "10"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["word_oracle"]["status"] == "budget exceeded");
}

TEST_CASE("centralizer subcommand") {
    const auto r = cli({"centralizer", "--family", "bkml", "--n", "8", "--m", "1", "--l", "5", "--k", "2"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["dimension"] == 9);
    CHECK(doc["basis"].size() == 9);
}

TEST_CASE("sweep ordering and summary") {
    auto r = cli({"sweep", "--family", "bkml", "--n", "8", "--k", "2", "--samples", "3", "--jobs", "3", "--no-timing"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    std::vector<std::vector<long>> tuples;
    for (const auto& rep : doc["reports"])
        tuples.push_back({rep["params"]["n"], rep["params"]["m"], rep["params"]["l"], rep["params"]["k"]});
    CHECK(std::is_sorted(tuples.begin(), tuples.end()));
    CHECK(std::find(tuples.begin(), tuples.end(), std::vector<long>{8, 1, 5, 2}) != tuples.end());
    for (const auto& rep : doc["reports"]) CHECK(rep["length_measured"] == 3);
    CHECK(doc["summary"]["fail"] == 0);
    CHECK(doc["summary"]["pass"] == tuples.size());
    CHECK_FALSE(doc["skipped"].empty());
    CHECK(r.err.find("pass") != std::string::npos);

    const auto serial = cli({"sweep", "--family", "bkml", "--n", "8", "--k", "2", "--samples", "3", "--jobs", "1", "--no-timing"});
    CHECK(serial.out == r.out);

    CHECK(cli({"sweep", "--family", "bkml", "--n", "3..5"}).code == 2);
    CHECK(cli({"sweep", "--family", "bkm", "--n", "9", "--k", "9"}).code == 2);
}

TEST_CASE("range parsing") {
    CHECK(Range::parse("3").lo == 3);
    CHECK(Range::parse("3..7").hi == 7);
    CHECK(Range::parse("2:4").lo == 2);
    CHECK(Range::parse("5..4").empty());
    CHECK_THROWS(Range::parse("x"));
}

TEST_CASE("installed binary honours the exit-code contract") {
    const std::string bin = COMMALG_CLI_PATH;
    const auto quiet = " >/dev/null 2>&1";
    auto status = [](const std::string& cmd) {
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status(bin + " construct --family bkml --n 8 --m 1 --l 5 --k 2" + quiet) == 0);
    CHECK(status(bin + " construct --family bkml --n 8 --m 1 --l 4 --k 2" + quiet) == 2);
    CHECK(status(bin + " verify --in " + scratch("edited.json").string() + quiet) == 1);
}
