#pragma once

#include <functional>
#include <string>
#include <vector>

#include "reltilt/io.hpp"
#include "reltilt/relative_tilting.hpp"

namespace reltilt {

using SetLabeler = std::function<std::string(const ObjSet&)>;

// Vertices sorted by their sorted id lists; edges run from the Bongartz side (N_X) to the
// co-Bongartz side (M_X).
std::string emit_dot(const ExchangeGraph& g, const SetLabeler& label);
io::json graph_to_json(const ExchangeGraph& g, const SetLabeler& label);

struct VerifierReport {
    std::string theorem;
    io::json instance;
    bool exhaustive = false;
    std::size_t instances_total = 0;
    std::size_t checked = 0;
    io::json cases = io::json::array();
    io::json falsifiers = io::json::array();
    bool pass() const { return falsifiers.empty(); }
    io::json to_json() const;
};

const std::vector<std::string>& theorem_ids();
// Without `exhaustive` only the first `sample` instances in canonical order are checked.
// Throws InputError for an unknown id and CapError for an incomplete atlas.
VerifierReport verify_theorem(const Workbench& wb, const std::string& id, bool exhaustive, std::size_t sample = 24);

io::json algebra_summary(const Algebra& alg);

}  // namespace reltilt
