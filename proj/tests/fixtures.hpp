#pragma once

#include <string>
#include <vector>

#include "reltilt/algebra.hpp"

namespace fixtures {

using reltilt::AlgebraPtr;

// Linear A_n: 1 -> 2 -> ... -> n, arrows x1..x_{n-1}, with every path of length
// `zero_len` set to zero (0 means hereditary).
inline AlgebraPtr linear(int n, int zero_len = 0) {
    reltilt::Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    q.numeric_vertex_ids = true;
    for (int i = 0; i + 1 < n; ++i) q.arrows.push_back({"x" + std::to_string(i + 1), i, i + 1});
    std::vector<reltilt::Relation> rels;
    if (zero_len >= 2)
        for (int s = 0; s + zero_len < n; ++s) {
            reltilt::RelationTerm t{1, {}};
            for (int k = 0; k < zero_len; ++k) t.arrows.push_back(s + k);
            rels.push_back({t});
        }
    return reltilt::Algebra::build(q, rels);
}

// Oriented 3-cycle with all length-2 paths zero (cluster-tilted of type A3).
inline AlgebraPtr cycle3() {
    reltilt::Quiver q;
    q.vertices = {"1", "2", "3"};
    q.numeric_vertex_ids = true;
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
    return reltilt::Algebra::build(q, {{{1, {0, 1}}}, {{1, {1, 2}}}, {{1, {2, 0}}}});
}

// Kronecker quiver: representation-infinite, for budget checks.
inline AlgebraPtr kronecker() {
    reltilt::Quiver q;
    q.vertices = {"1", "2"};
    q.numeric_vertex_ids = true;
    q.arrows = {{"a", 0, 1}, {"b", 0, 1}};
    return reltilt::Algebra::build(q, {});
}

// Commutative square 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd.
inline AlgebraPtr square() {
    reltilt::Quiver q;
    q.vertices = {"1", "2", "3", "4"};
    q.numeric_vertex_ids = true;
    q.arrows = {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
    return reltilt::Algebra::build(q, {{{1, {0, 1}}, {-1, {2, 3}}}});
}

}  // namespace fixtures
