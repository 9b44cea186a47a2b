#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "reltilt/algebra.hpp"

namespace reltilt {

class ModuleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a computation would exceed a configured size or search budget.
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A right module, stored as a representation of the bound quiver: one space per
// vertex and, for each arrow a: i -> j, a dim_i x dim_j matrix acting on row vectors.
struct Representation {
    AlgebraPtr alg;
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;

    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    std::vector<std::size_t> offsets() const;  // start of each vertex space in the flattened basis
};

// Per-vertex matrices f_v : M_v -> N_v with M_a f_j = f_i N_a for every arrow a: i -> j.
struct RepHom {
    std::vector<Matrix> comps;
};

Representation zero_module(AlgebraPtr alg);
Representation simple_module(AlgebraPtr alg, int v);
Representation projective_module(AlgebraPtr alg, int v);
Representation injective_module(AlgebraPtr alg, int v);
Representation direct_sum(const std::vector<Representation>& parts);
Representation direct_sum(const Representation& a, const Representation& b);
// Representation of the opposite algebra on the dual spaces.
Representation dual_module(const Representation& m);
RepHom dual_hom(const RepHom& f);

// Shape and relation check. Throws ModuleError.
void validate_module(const Representation& m);
std::vector<std::size_t> dim_vector(const Representation& m);

Matrix path_action(const Representation& m, const Path& p);
// Action of x in e_from A e_to, as a map M_from -> M_to.
Matrix element_action(const Representation& m, const Element& x, int from, int to);

// Homomorphisms.
RepHom zero_hom(const Representation& m, const Representation& n);
RepHom identity_hom(const Representation& m);
RepHom compose(const RepHom& f, const RepHom& g);  // f then g
RepHom hom_add(const RepHom& f, const RepHom& g);
RepHom hom_scale(const RepHom& f, Scalar c);
bool hom_is_zero(const RepHom& f);
bool is_homomorphism(const Representation& m, const Representation& n, const RepHom& f);
std::vector<Scalar> hom_to_vector(const RepHom& f);
RepHom hom_from_vector(const Representation& m, const Representation& n, const std::vector<Scalar>& v);
std::vector<RepHom> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);
// Dimension of the span of a family of maps M -> N.
std::size_t span_dim(const std::vector<RepHom>& fs);

// Subobjects and quotients described by per-vertex spanning rows.
using Subspaces = std::vector<Matrix>;
struct SubmoduleResult {
    Representation module;
    RepHom inclusion;
};
struct QuotientResult {
    Representation module;
    RepHom projection;
};
SubmoduleResult submodule(const Representation& m, const Subspaces& spans);  // throws if not stable
QuotientResult quotient(const Representation& m, const Subspaces& spans);
SubmoduleResult kernel(const Representation& m, const RepHom& f);
SubmoduleResult image(const Representation& n, const RepHom& f);
QuotientResult cokernel(const Representation& n, const RepHom& f);

Subspaces radical_subspaces(const Representation& m);
Subspaces socle_subspaces(const Representation& m);
std::vector<std::size_t> top_dims(const Representation& m);

// Direct sums of indecomposable projectives, listed by vertex.
Representation projective_sum(AlgebraPtr alg, const std::vector<int>& summands);
Representation injective_sum(AlgebraPtr alg, const std::vector<int>& summands);
// Matrix of algebra elements: entry (i, j) lies in e_{t_j} A e_{s_i}.
using ElementMatrix = std::vector<std::vector<Element>>;
RepHom projective_hom(AlgebraPtr alg, const std::vector<int>& src, const std::vector<int>& tgt,
                      const ElementMatrix& entries);
ElementMatrix projective_entries(AlgebraPtr alg, const std::vector<int>& src, const std::vector<int>& tgt,
                                 const RepHom& f);
// Nakayama functor on maps between projective sums.
RepHom nakayama_hom(AlgebraPtr alg, const std::vector<int>& src, const std::vector<int>& tgt,
                    const ElementMatrix& entries);

struct ProjectiveCover {
    std::vector<int> summands;
    Representation module;
    RepHom map;  // onto M
};
ProjectiveCover projective_cover(const Representation& m);

// Minimal projective presentation P1 --d--> P0 --> M --> 0.
struct Presentation {
    std::vector<int> p1, p0;
    Representation P1, P0;
    RepHom d;
    ElementMatrix d_entries;
    RepHom cover;                // P0 -> M
    Representation syzygy;       // ker of the cover
    RepHom syzygy_inclusion;     // into P0
};
Presentation minimal_presentation(const Representation& m);

// An injective module I with a monomorphism M -> I.
struct InjectiveEnvelope {
    std::vector<int> summands;
    Representation module;
    RepHom map;
};
InjectiveEnvelope injective_envelope(const Representation& m);

std::size_t ext1_dim(const Representation& m, const Representation& n);
// Dimension of Hom(M, N) modulo maps factoring through an injective.
std::size_t stable_hom_dim_injective(const Representation& m, const Representation& n);
bool is_projective(const Representation& m);
bool is_injective(const Representation& m);
Representation tau(const Representation& m);
Representation tau_inverse(const Representation& m);

// Radical of End(M) via the trace form; valid because p > dim M.
std::vector<RepHom> endomorphism_radical(const Representation& m, const std::vector<RepHom>& end_basis);

std::vector<Representation> decompose(const Representation& m);
bool is_indecomposable(const Representation& m);
bool isomorphic_indecomposables(const Representation& m, const Representation& n);
bool isomorphic(const Representation& m, const Representation& n);

struct Approximation {
    std::vector<std::size_t> targets;  // index into the approximating family, one per summand
    Representation module;             // direct sum of those targets
    RepHom map;                        // M -> module (left) or module -> M (right)
};
// Minimal left add(S)-approximation M -> S'.
Approximation left_approximation(const Representation& m, const std::vector<Representation>& s);
// Minimal right add(S)-approximation S' -> M.
Approximation right_approximation(const Representation& m, const std::vector<Representation>& s);
// M is a quotient of a module in add(S).
bool in_fac(const Representation& m, const std::vector<Representation>& s);

// Every submodule of M; refuses with CapError when dim M exceeds `dim_cap` or the
// search space is too large.
std::vector<Subspaces> subobject_list(const Representation& m, std::size_t dim_cap = 8);

}  // namespace reltilt
