#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "reltilt/cli.hpp"
#include "reltilt/io.hpp"
#include "reltilt/report.hpp"
#include "reltilt/torsion.hpp"

using namespace reltilt;
using io::json;

namespace {

const std::string kData = RELTILT_DATA_DIR;

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string temp_path(const std::string& name) {
    return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/reltilt_test_" + name;
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
    std::regex re(pattern);
    return std::size_t(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST_CASE("exit codes") {
    auto bad = run({"algebra", "check", data("bad.toml")});
    CHECK(bad.code == kInputError);
    CHECK(bad.err.find("not confluent") != std::string::npos);
    CHECK(bad.err.find("a*b*c") != std::string::npos);

    CHECK(run({"algebra", "check", data("a3.toml")}).code == kPass);
    CHECK(run({"algebra", "check", data("nope.toml")}).code == kInputError);
    CHECK(run({"frobnicate"}).code == kInputError);
    CHECK(run({}).code == kInputError);
    CHECK(run({"--help"}).code == kPass);
    CHECK(run({"verify", "lemma9", "--algebra", data("a2.toml")}).code == kInputError);

    auto refused = run({"atlas", "--algebra", data("kronecker.toml"), "--atlas-budget", "12"});
    CHECK(refused.code == kCapRefusal);
    CHECK(refused.err.find("budget of 12") != std::string::npos);
    CHECK(run({"sttilt", "enumerate", "--algebra", data("kronecker.toml"), "--atlas-budget", "12"}).code == kCapRefusal);
    CHECK(run({"exchange-graph", "--algebra", data("a3.toml"), "--budget", "3"}).code == kCapRefusal);

    // X weak cluster tilting, and X not rigid.
    CHECK(run({"completions", "--algebra", data("a3.toml"), "--subcat", data("a3_tilting.json")}).code == kInputError);
    std::string nonrigid = temp_path("nonrigid.json");
    std::ofstream(nonrigid) << R"([{"stalk": 2}, {"shift": 2}])";
    CHECK(run({"completions", "--algebra", data("a2.toml"), "--subcat", nonrigid}).code == kInputError);
    std::remove(nonrigid.c_str());
}

TEST_CASE("verify main1 on A2 lists every almost-complete X with its two completions") {
    auto r = run({"verify", "main1", "--algebra", data("a2.toml"), "--exhaustive"});
    REQUIRE(r.code == kPass);
    auto j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["pass"] == true);
    CHECK(j["falsifiers"].empty());
    REQUIRE(j["cases"].size() == 5);

    // Oracle: the completions of X are the support tau-tilting pairs containing it.
    Workbench wb(io::load_algebra(data("a2.toml")));
    auto pairs = oracles::brute_force_sttilt(wb.atlas());
    for (const auto& c : j["cases"]) {
        ObjSet x = io::subcategory_from_json(wb, c["x"]);
        TauPair xp = tau_pair_of(wb, x);
        std::set<TauPair> expected;
        for (const auto& p : pairs)
            if (std::includes(p.modules.begin(), p.modules.end(), xp.modules.begin(), xp.modules.end()) &&
                std::includes(p.e.begin(), p.e.end(), xp.e.begin(), xp.e.end()))
                expected.insert(p);
        std::set<TauPair> got{tau_pair_of(wb, io::subcategory_from_json(wb, c["m_x"])),
                              tau_pair_of(wb, io::subcategory_from_json(wb, c["n_x"]))};
        CHECK(got == expected);
        CHECK(expected.size() == 2);
    }
}

TEST_CASE("verify reports re-validate through the library") {
    for (const char* id : {"main1", "m-pair", "capcap", "cap"}) {
        auto r = run({"verify", id, "--algebra", data("a3.toml")});
        REQUIRE(r.code == kPass);
        auto j = json::parse(r.out);
        CHECK(j["exhaustive"] == false);
        CHECK(j["checked"].get<std::size_t>() <= 24);
        Workbench wb(io::load_algebra(data("a3.toml")));
        for (const auto& c : j["cases"]) {
            ObjSet x = io::subcategory_from_json(wb, c["x"]);
            CHECK(io::subcategory_from_json(wb, c["m_x"]) == co_bongartz(wb, x).set);
            CHECK(io::subcategory_from_json(wb, c["n_x"]) == bongartz(wb, x).set);
        }
    }
    for (const auto& id : theorem_ids()) CHECK(run({"verify", id, "--algebra", data("a2.toml"), "--exhaustive"}).code == kPass);
}

TEST_CASE("exchange graph DOT") {
    std::string path = temp_path("a3.dot");
    REQUIRE(run({"exchange-graph", "--algebra", data("a3.toml"), "--dot", path}).code == kPass);
    std::string first = io::read_file(path);
    CHECK(count_matches(first, R"(\n  v\d+ \[label=)") == 14);
    CHECK(count_matches(first, R"( -> )") == 21);
    REQUIRE(run({"exchange-graph", "--algebra", data("a3.toml"), "--dot", path}).code == kPass);
    CHECK(io::read_file(path) == first);
    std::remove(path.c_str());

    auto a1 = run({"exchange-graph", "--algebra", data("a1.toml"), "--dot", "-"});
    CHECK(count_matches(a1.out, R"(\[label=)") == 2);
    CHECK(count_matches(a1.out, R"( -> )") == 1);
    CHECK(a1.out.find("taillabel=\"Bongartz-side\"") != std::string::npos);

    auto a2 = run({"exchange-graph", "--algebra", data("a2.toml"), "--dot", "-"});
    CHECK(count_matches(a2.out, R"( -> )") == 5);
    CHECK(run({"exchange-graph", "--algebra", data("a2.toml"), "--dot", "-"}).out == a2.out);

    CHECK(emit_dot(ExchangeGraph{}, [](const ObjSet&) { return std::string(); }) ==
          "digraph exchange {\n  node [shape=box];\n}\n");

    auto js = run({"exchange-graph", "--algebra", data("a2.toml"), "--json", "-"});
    auto j = json::parse(js.out);
    CHECK(j["schema"] == 1);
    CHECK(j["vertices"].size() == 5);
    CHECK(j["edges"].size() == 5);
}

TEST_CASE("algebra dump round-trips through the CLI") {
    for (const char* format : {"toml", "json"}) {
        std::string path = temp_path(std::string("dump.") + format);
        auto first = run({"algebra", "dump", data("a4_rad3.toml"), "--format", format});
        REQUIRE(first.code == kPass);
        std::ofstream(path) << first.out;
        auto second = run({"algebra", "dump", path, "--format", format});
        CHECK(second.out == first.out);
        std::remove(path.c_str());
    }
    CHECK(run({"algebra", "dump", data("a2.toml"), "--format", "yaml"}).code == kInputError);
}

TEST_CASE("enumeration commands") {
    auto st = run({"sttilt", "enumerate", "--algebra", data("a3.toml")});
    CHECK(st.code == kPass);
    CHECK(st.out.find("14 support tau-tilting pairs") != std::string::npos);
    auto tors = run({"torsion", "--algebra", data("a3.toml")});
    CHECK(tors.code == kPass);
    CHECK(tors.out.find("14 torsion classes") != std::string::npos);
    auto at = run({"atlas", "--algebra", data("a4_rad3.toml")});
    CHECK(at.code == kPass);
    CHECK(at.out.find("9 indecomposables") != std::string::npos);

    auto comp = run({"completions", "--algebra", data("a2.toml"), "--subcat", data("a2_s1.json"), "--exhaustive"});
    CHECK(comp.code == kPass);
    CHECK(comp.out.find("M_X = {10, P2[1]}") != std::string::npos);
    CHECK(comp.out.find("N_X = {11, 10}") != std::string::npos);
    auto same = run({"completions", "--algebra", data("a2.toml"), "--subcat", data("a2_s1_complex.json")});
    CHECK(same.out == run({"completions", "--algebra", data("a2.toml"), "--subcat", data("a2_s1.json")}).out);

    auto mu = run({"mutate", "--algebra", data("a3.toml"), "--subcat", data("a3_tilting.json"), "--at", "111", "--json", "-"});
    REQUIRE(mu.code == kPass);
    auto line = mu.out.substr(0, mu.out.find('\n'));
    CHECK(line == "{111, 011, 001} --111--> {011, 001, P1[1]}");
    CHECK(run({"mutate", "--algebra", data("a3.toml"), "--subcat", data("a3_tilting.json"), "--at", "100"}).code ==
          kInputError);

    std::string mod = temp_path("mod.json");
    std::ofstream(mod) << R"({"dims": [1, 1, 0], "maps": {"x1": [[0]]}})";
    auto mc = run({"module", "check", mod, "--algebra", data("a3.toml")});
    CHECK(mc.code == kPass);
    auto summands = mc.out.substr(mc.out.find("summands:"));
    CHECK(summands.find(" 100") != std::string::npos);
    CHECK(summands.find(" 010") != std::string::npos);
    std::remove(mod.c_str());
}

TEST_CASE("polygon mode") {
    auto r = run({"polygon", "completions", "--n", "2", "--rigid", "0-2,0-3", "--subcat", "1-3"});
    REQUIRE(r.code == kPass);
    CHECK(r.out.find("M_X = 1-3,1-4") != std::string::npos);
    CHECK(r.out.find("N_X = 0-3,1-3") != std::string::npos);
    CHECK(r.out.find("completions: 2") != std::string::npos);

    auto outside = run({"polygon", "completions", "--n", "3", "--rigid", "0-2,3-5", "--subcat", "1-4"});
    CHECK(outside.code == kInputError);
    CHECK(outside.err.find("1-4") != std::string::npos);
    CHECK(run({"polygon", "completions", "--n", "3", "--rigid", "0-3,1-4"}).code == kInputError);
    CHECK(run({"polygon", "spin", "--n", "2", "--rigid", "0-2"}).code == kInputError);

    auto g = run({"polygon", "exchange-graph", "--n", "3", "--rigid", "0-2,2-4,0-4", "--dot", "-"});
    REQUIRE(g.code == kPass);
    CHECK(count_matches(g.out, R"(\[label=)") == 14);
    CHECK(count_matches(g.out, R"(label="\d-\d,\d-\d,\d-\d")") == 14);
}
