#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reltilt/representation.hpp"

namespace reltilt {

struct ARSequence {
    Representation left;    // tau N
    Representation middle;
    Representation right;   // N
};

// Almost split sequence ending in an indecomposable non-projective N.
ARSequence almost_split_sequence(const Representation& n);

// Indecomposables reached from the projectives along irreducible maps. For a
// representation-finite algebra this is every indecomposable.
struct Atlas {
    AlgebraPtr alg;
    std::vector<Representation> modules;
    std::vector<std::string> labels;
    bool complete = true;

    std::size_t size() const { return modules.size(); }
    std::optional<std::size_t> find(const Representation& indecomposable) const;
    // Atlas index of each indecomposable summand (with multiplicity); throws if one is missing.
    std::vector<std::size_t> locate_summands(const Representation& m) const;
};

Atlas knit_atlas(AlgebraPtr alg, std::size_t budget = 256);

std::string dim_vector_label(const std::vector<std::size_t>& dims);

}  // namespace reltilt
