#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reltilt/representation.hpp"

namespace reltilt {

// A direct sum of indecomposable projectives, one vertex per summand.
using ProjSum = std::vector<int>;

// Maps between projective sums are ElementMatrix values: entry (i, j) is the element of
// e_{tgt_j} A e_{src_i} acting by left multiplication P_{src_i} -> P_{tgt_j}.
ElementMatrix pm_zero(const Algebra& alg, std::size_t rows, std::size_t cols);
ElementMatrix pm_identity(const Algebra& alg, const ProjSum& s);
// f then g; `cols` is the size of the target sum.
ElementMatrix pm_compose(const Algebra& alg, const ElementMatrix& f, const ElementMatrix& g, std::size_t cols);
ElementMatrix pm_add(const ElementMatrix& f, const ElementMatrix& g);
ElementMatrix pm_scale(const ElementMatrix& f, Scalar c);
bool pm_is_zero(const ElementMatrix& f);

// Coordinates of Hom(P_src, P_tgt) in the path basis.
std::size_t pm_dim(const Algebra& alg, const ProjSum& src, const ProjSum& tgt);
std::vector<Scalar> pm_to_vector(const Algebra& alg, const ProjSum& src, const ProjSum& tgt, const ElementMatrix& f);
ElementMatrix pm_from_vector(const Algebra& alg, const ProjSum& src, const ProjSum& tgt, const Scalar* v);

// Complex P1 --d--> P0 in degrees -1, 0.
struct TwoTermComplex {
    AlgebraPtr alg;
    ProjSum p1, p0;
    ElementMatrix d;  // p1.size() x p0.size()

    bool is_zero() const { return p1.empty() && p0.empty(); }
    std::vector<std::size_t> mult1() const;  // multiplicity of each vertex in p1
    std::vector<std::size_t> mult0() const;
};

TwoTermComplex stalk(AlgebraPtr alg, int v);          // 0 -> P_v, an object of R
TwoTermComplex shifted_stalk(AlgebraPtr alg, int v);  // P_v -> 0, an object of R[1]
TwoTermComplex zero_complex(AlgebraPtr alg);
TwoTermComplex complex_sum(const std::vector<TwoTermComplex>& parts);
// Minimal projective presentation of M viewed as a complex.
TwoTermComplex presentation_complex(const Representation& m);
void validate_complex(const TwoTermComplex& c);

struct ChainMap {
    ElementMatrix f1;  // C.p1 -> D.p1
    ElementMatrix f0;  // C.p0 -> D.p0
};

ChainMap chain_zero(const TwoTermComplex& c, const TwoTermComplex& d);
ChainMap chain_identity(const TwoTermComplex& c);
ChainMap chain_compose(const Algebra& alg, const ChainMap& f, const ChainMap& g, const TwoTermComplex& target);
ChainMap chain_add(const ChainMap& f, const ChainMap& g);
bool is_chain_map(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f);

// Hom in the homotopy category, with the quotient map from cycle coordinates.
struct HomKSpace {
    std::vector<ChainMap> basis;  // representatives of a basis of Hom_K(C, D)
    Matrix cycles;                // rows: chain maps, in coordinates (f1 | f0)
    Matrix quotient;              // coordinates -> class in Hom_K (columns = dim)
    std::size_t dim() const { return basis.size(); }
};
HomKSpace hom_k(const TwoTermComplex& c, const TwoTermComplex& d);
std::vector<Scalar> chain_to_vector(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f);
// Class of a chain map in Hom_K(C, D) as a row vector of length hom_k(C, D).dim().
std::vector<Scalar> homotopy_class(const TwoTermComplex& c, const TwoTermComplex& d, const HomKSpace& h,
                                   const ChainMap& f);

// Hom_K(C, D[1]) = Hom(C1, D0) / (d_C Hom(C0, D0) + Hom(C1, D1) d_D); representatives are maps C1 -> D0.
struct ShiftHomSpace {
    std::vector<ElementMatrix> basis;
    std::size_t dim() const { return basis.size(); }
};
ShiftHomSpace hom_k_shift1(const TwoTermComplex& c, const TwoTermComplex& d);
std::size_t hom_k_shift1_dim(const TwoTermComplex& c, const TwoTermComplex& d);
// The same dimension computed on the module side: coker(Hom(C0, H(D)) -> Hom(C1, H(D))).
std::size_t shift1_dim_via_modules(const TwoTermComplex& c, const TwoTermComplex& d);

// Cancels every isomorphism P_v -> P_v component of the differential.
TwoTermComplex minimal_form(const TwoTermComplex& c);
bool is_minimal(const TwoTermComplex& c);

// Mapping cone of f: C -> D, reduced; throws ModuleError when not two-term.
TwoTermComplex cone(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f);
// cone(f)[-1], reduced; throws ModuleError when not two-term.
TwoTermComplex cocone(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f);

// H(C) = coker d, together with the multiplicity of each P_v[1] summand.
struct HPart {
    Representation module;
    std::vector<std::size_t> e_part;
};
HPart h_functor(const TwoTermComplex& c);
std::vector<TwoTermComplex> decompose_two_term(const TwoTermComplex& c);
bool isomorphic_complexes(const TwoTermComplex& a, const TwoTermComplex& b);

std::string complex_to_string(const TwoTermComplex& c);

}  // namespace reltilt
