#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reltilt/catalog.hpp"

namespace reltilt {

// An approximation A -> T (left) or T -> A (right) with T a sum of catalog objects.
struct TTApproximation {
    std::vector<std::size_t> targets;  // catalog id of each summand of T
    TwoTermComplex target;
    ChainMap map;
};

// Minimal left add(S)-approximation of A.
TTApproximation left_approx_tt(const Workbench& wb, const TwoTermComplex& a, const ObjSet& s);
// Minimal right add(S)-approximation of A.
TTApproximation right_approx_tt(const Workbench& wb, const TwoTermComplex& a, const ObjSet& s);

struct RigidityReport {
    bool rigid = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // (U, U') with Hom_K(U, U'[1]) != 0
};
// Homotopy test, cross-checked against the module-side cokernel; throws InvariantError on disagreement.
RigidityReport is_two_term_rigid(const Workbench& wb, const ObjSet& x);
bool is_rigid(const Workbench& wb, const ObjSet& x);

// Every rigid subcategory with at most max_size indecomposables, in lexicographic order.
std::vector<ObjSet> rigid_subcategories(const Workbench& wb, std::size_t max_size);

// Vertices v with Hom_K(P_v, X) = 0.
std::vector<int> r_annihilator(const Workbench& wb, const ObjSet& x);

// Triangle P_v -> X1 -> X2 -> P_v[1] (left approximation) or V -> X1 -> P_v[1] -> (right).
struct ApproxTriangle {
    int vertex = 0;
    std::vector<std::size_t> approx;  // summands of the approximating object
    std::vector<std::size_t> third;   // summands of the cone / cocone
};

struct Completion {
    ObjSet set;
    std::vector<ApproxTriangle> triangles;
};

Completion co_bongartz(const Workbench& wb, const ObjSet& x);  // M_X
Completion bongartz(const Workbench& wb, const ObjSet& x);     // N_X

// Weak cluster tilting test on both sides; throws InvariantError if they disagree.
bool is_weak_cluster_tilting(const Workbench& wb, const ObjSet& x);

struct CompletionResult {
    Completion m_x, n_x;
    bool almost_complete = false;  // one summand short of weak cluster tilting
    std::vector<ObjSet> all_completions;  // exhaustive search; filled when the atlas is complete
    bool exactly_two = false;             // all_completions == {M_X, N_X}
};
// Throws InputError when X is not rigid or already weak cluster tilting.
CompletionResult completions(const Workbench& wb, const ObjSet& x, bool exhaustive = true);

// All W outside X with X + W weak cluster tilting.
std::vector<std::size_t> complements(const Workbench& wb, const ObjSet& x);

// Triangle Z -> X' -> Y -> Z[1] certifying one object of a mutation pair.
struct MutationTriangle {
    std::size_t object = 0;              // Y for the M side, Z for the N side
    std::vector<std::size_t> middle;     // X'
    std::vector<std::size_t> other;      // Z (M side) or Y (N side)
    bool two_term = true;                // the cocone / cone stayed in R*R[1]
    bool other_in_target = true;         // Z in N, or Y in M
    bool connecting_through_shift = true;  // y factors as Y -> Y1[1] -> Z[1]
    bool h_component_zero = true;
};

struct MutationCertificate {
    bool ok = true;
    std::vector<MutationTriangle> m_side, n_side;
    bool m_is_co_bongartz = true;
    bool n_is_bongartz = true;
    std::vector<std::string> failures;
};
MutationCertificate verify_mutation_pair(const Workbench& wb, const ObjSet& x, const ObjSet& m, const ObjSet& n);

// Replace the summand `id` of the weak cluster tilting M by its other complement.
ObjSet mutate(const Workbench& wb, const ObjSet& m, std::size_t id);

struct ExchangeEdge {
    std::size_t upper = 0;  // N_X side
    std::size_t lower = 0;  // M_X side
    ObjSet x;
};
struct ExchangeGraph {
    std::vector<ObjSet> vertices;
    std::vector<ExchangeEdge> edges;
    bool complete = true;
};
ExchangeGraph exchange_graph(const Workbench& wb, std::size_t budget = 4096);

}  // namespace reltilt
