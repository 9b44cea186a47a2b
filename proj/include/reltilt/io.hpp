#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reltilt/catalog.hpp"

namespace reltilt::io {

using json = nlohmann::json;

// The TOML subset used by algebra files: key/value lines, [table] and [[array]] headers,
// strings, integers, booleans, multiline arrays and inline tables. Throws InputError.
json parse_toml(const std::string& text);
std::string read_file(const std::string& path);
// JSON when the file name ends in .json or the text starts with '{' or '[', TOML otherwise.
json read_document(const std::string& path);
json parse_document(const std::string& text, bool as_json);

struct AlgebraSpec {
    Quiver quiver;
    std::vector<Relation> relations;
    std::optional<std::uint32_t> prime;
};

AlgebraSpec algebra_spec_from_json(const json& doc);
// Applies the prime precedence (RELTILT_PRIME beats the file; a disagreement is an error),
// then builds the algebra.
AlgebraPtr build_algebra(const AlgebraSpec& spec);
AlgebraPtr load_algebra(const std::string& path);

json algebra_to_json(const Algebra& alg);
std::string algebra_to_toml(const Algebra& alg);
std::string dump_json(const json& j);  // two-space indent, trailing newline

// {"dims": [..], "maps": {arrow id: rows}}; maps may also be a list in arrow order.
json module_to_json(const Representation& m);
Representation module_from_json(AlgebraPtr alg, const json& j);

// {"p1": [vertex..] or {vertex: mult}, "p0": .., "d": rows of entries}; an entry is either a
// coefficient list over the path basis or {path name: coeff}.
json complex_to_json(const TwoTermComplex& c);
TwoTermComplex complex_from_json(AlgebraPtr alg, const json& j);

// A list (or {"objects": [..]}) of {"stalk": v}, {"shift": v}, {"module": label} or complex
// literals. Every indecomposable summand joins the set.
ObjSet subcategory_from_json(const Workbench& wb, const json& j);
json subcategory_to_json(const Workbench& wb, const ObjSet& x);

}  // namespace reltilt::io
