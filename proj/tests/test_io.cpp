#include <doctest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "reltilt/io.hpp"
#include "reltilt/two_term.hpp"

using namespace reltilt;
using io::json;

namespace {

const std::string kData = RELTILT_DATA_DIR;

// Unsets RELTILT_PRIME for the scope and restores the session prime.
struct EnvScope {
    PrimeGuard guard{fp::prime()};
    std::string saved;
    bool had = false;
    EnvScope() {
        if (const char* s = std::getenv("RELTILT_PRIME")) {
            had = true;
            saved = s;
        }
        unsetenv("RELTILT_PRIME");
    }
    ~EnvScope() {
        if (had) setenv("RELTILT_PRIME", saved.c_str(), 1);
        else unsetenv("RELTILT_PRIME");
    }
};

}  // namespace

TEST_CASE("TOML subset") {
    auto j = io::parse_toml(R"(# header comment
title = "a \"quoted\" name"   # trailing comment
lit = 'C:\path'
n = -1_000
yes = true
list = [
  1,
  2, # inline comment
]
point = {x = 1, y = [2, 3]}
dotted.key = 5

[table]
inner = "v"

[[items]]
id = 1
[[items]]
id = 2
)");
    CHECK(j["title"] == "a \"quoted\" name");
    CHECK(j["lit"] == "C:\\path");
    CHECK(j["n"] == -1000);
    CHECK(j["yes"] == true);
    CHECK(j["list"] == json::array({1, 2}));
    CHECK(j["point"]["y"][1] == 3);
    CHECK(j["dotted"]["key"] == 5);
    CHECK(j["table"]["inner"] == "v");
    REQUIRE(j["items"].size() == 2);
    CHECK(j["items"][1]["id"] == 2);

    CHECK_THROWS_AS(io::parse_toml("x = 1.5\n"), InputError);
    CHECK_THROWS_AS(io::parse_toml("x = \"open\n"), InputError);
    CHECK_THROWS_AS(io::parse_toml("x = 1\nx = 2\n"), InputError);
    CHECK_THROWS_AS(io::parse_toml("x = 1 y\n"), InputError);
    CHECK_THROWS_AS(io::parse_toml("x = [1, 2\n"), InputError);
    try {
        io::parse_toml("a = 1\nb = 2\nc = @\n");
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("algebra files: TOML and JSON agree and dumps round-trip bit-exactly") {
    EnvScope env;
    auto from_toml = io::load_algebra(kData + "/a2.toml");
    auto from_json = io::load_algebra(kData + "/a2.json");
    CHECK(io::algebra_to_json(*from_toml) == io::algebra_to_json(*from_json));

    for (const char* name : {"a1", "a2", "a3", "a3_tables", "a4_rad3", "cycle3", "kronecker"}) {
        auto alg = io::load_algebra(kData + "/" + name + ".toml");
        std::string toml = io::algebra_to_toml(*alg);
        auto again = io::build_algebra(io::algebra_spec_from_json(io::parse_toml(toml)));
        CHECK(io::algebra_to_toml(*again) == toml);
        std::string js = io::dump_json(io::algebra_to_json(*alg));
        auto from_js = io::build_algebra(io::algebra_spec_from_json(json::parse(js)));
        CHECK(io::dump_json(io::algebra_to_json(*from_js)) == js);
        CHECK(from_js->dim() == alg->dim());
    }
    auto named = io::load_algebra(kData + "/a3_tables.toml");
    CHECK_FALSE(named->quiver().numeric_vertex_ids);
    CHECK(named->dim() == 6);
}

TEST_CASE("algebra file errors") {
    EnvScope env;
    CHECK_THROWS_AS(io::load_algebra(kData + "/bad.toml"), AlgebraError);
    CHECK_THROWS_AS(io::load_algebra(kData + "/missing.toml"), InputError);
    auto spec = [](const std::string& text) { return io::algebra_spec_from_json(io::parse_toml(text)); };
    CHECK_THROWS_AS(spec("vertices = []\n"), InputError);
    CHECK_THROWS_AS(spec("vertices = [1, \"2\"]\n"), InputError);
    CHECK_THROWS_AS(spec("vertices = [1]\narrows = [{id = \"a\", from = 1, to = 3}]\n"), InputError);
    CHECK_THROWS_AS(spec("vertices = [1]\ncolour = 1\n"), InputError);
    CHECK_THROWS_AS(spec("vertices = [1, 2]\narrows = [{id = \"a\", from = 1, to = 2}]\n"
                         "relations = [[{coeff = 1, path = [\"z\"]}]]\n"),
                    InputError);
}

TEST_CASE("prime precedence") {
    EnvScope env;
    auto spec = io::algebra_spec_from_json(io::parse_toml("vertices = [1, 2]\narrows = [{id = \"a\", from = 1, to = 2}]\n"));
    io::build_algebra(spec);
    CHECK(fp::prime() == 32003);

    spec.prime = 101;
    io::build_algebra(spec);
    CHECK(fp::prime() == 101);

    setenv("RELTILT_PRIME", "101", 1);
    CHECK_NOTHROW(io::build_algebra(spec));
    setenv("RELTILT_PRIME", "7", 1);
    CHECK_THROWS_AS(io::build_algebra(spec), InputError);
    spec.prime.reset();
    io::build_algebra(spec);
    CHECK(fp::prime() == 7);
    setenv("RELTILT_PRIME", "8", 1);
    CHECK_THROWS_AS(io::build_algebra(spec), InputError);
    unsetenv("RELTILT_PRIME");
    spec.prime = 9;
    CHECK_THROWS_AS(io::build_algebra(spec), InputError);
}

TEST_CASE("module literals") {
    Workbench wb(fixtures::linear(3));
    for (const auto& m : wb.atlas().modules) {
        auto back = io::module_from_json(wb.alg(), io::module_to_json(m));
        CHECK(back.dims == m.dims);
        CHECK(back.maps == m.maps);
    }
    // Maps may be given in arrow order, and missing maps are zero.
    auto s = io::module_from_json(wb.alg(), json::parse(R"({"dims": [1, 1, 0], "maps": [[[1]], [[]]]})"));
    CHECK(wb.atlas().find(s).has_value());
    auto split = io::module_from_json(wb.alg(), json::parse(R"({"dims": [1, 1, 0]})"));
    CHECK(wb.atlas().locate_summands(split).size() == 2);

    CHECK_THROWS_AS(io::module_from_json(wb.alg(), json::parse(R"({"dims": [1, 1]})")), InputError);
    CHECK_THROWS_AS(io::module_from_json(wb.alg(), json::parse(R"({"dims": [1, 1, 0], "maps": {"x1": [[1, 0]]}})")), InputError);

    // rad^2 = 0 on A3: a nonzero composite violates the relation.
    Workbench trunc(fixtures::linear(3, 2));
    json bad = json::parse(R"({"dims": [1, 1, 1], "maps": {"x1": [[1]], "x2": [[1]]}})");
    CHECK_THROWS_AS(io::module_from_json(trunc.alg(), bad), ModuleError);
}

TEST_CASE("complex literals and subcategories") {
    Workbench wb(fixtures::linear(3));
    for (std::size_t id = 0; id < wb.size(); ++id) {
        auto c = io::complex_from_json(wb.alg(), io::complex_to_json(wb.object(id)));
        CHECK(wb.identify(c) == std::vector<std::size_t>{id});
    }

    // S1 as P2 -> P1 in both entry forms and with a multiplicity map.
    json named = json::parse(R"({"p1": [2], "p0": [1], "d": [[{"x1": 1}]]})");
    json coeffs = json::parse(R"({"p1": {"2": 1}, "p0": [1], "d": [[[0, 0, 0, 1, 0, 0]]]})");
    auto a = io::complex_from_json(wb.alg(), named);
    CHECK(wb.identify(a) == std::vector<std::size_t>{wb.module_id(*wb.atlas().find(simple_module(wb.alg(), 0)))});
    CHECK(wb.alg()->path_name(3) == "x1");
    CHECK(isomorphic_complexes(a, io::complex_from_json(wb.alg(), coeffs)));

    // The path x1 does not map P1 to P2.
    json wrong = json::parse(R"({"p1": [1], "p0": [2], "d": [[{"x1": 1}]]})");
    CHECK_THROWS_AS(io::complex_from_json(wb.alg(), wrong), InputError);
    CHECK_THROWS_AS(io::complex_from_json(wb.alg(), json::parse(R"({"p1": [1], "p0": [2]})")), InputError);

    json list = json::parse(R"([{"stalk": 1}, {"shift": 3}, {"module": "010"}])");
    list.push_back(named);
    ObjSet x = io::subcategory_from_json(wb, list);
    CHECK(x.size() == 4);
    CHECK(io::subcategory_from_json(wb, io::subcategory_to_json(wb, x)) == x);
    CHECK(io::subcategory_from_json(wb, json{{"objects", list}}) == x);
    CHECK(io::subcategory_from_json(wb, json::parse(R"([{"module": {"dims": [0, 1, 0]}}])")) ==
          ObjSet{wb.module_id(*wb.atlas().find(simple_module(wb.alg(), 1)))});

    CHECK_THROWS_AS(io::subcategory_from_json(wb, json::parse(R"([{"stalk": 9}])")), InputError);
    CHECK_THROWS_AS(io::subcategory_from_json(wb, json::parse(R"([{"module": "999"}])")), InputError);
    CHECK_THROWS_AS(io::subcategory_from_json(wb, json::parse(R"([{"colour": 1}])")), InputError);
    CHECK_THROWS_AS(io::subcategory_from_json(wb, json::parse(R"({"stalk": 1})")), InputError);
}
