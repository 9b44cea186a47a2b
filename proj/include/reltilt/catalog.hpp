#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reltilt/atlas.hpp"
#include "reltilt/two_term.hpp"

namespace reltilt {

// Malformed user input that is not about the algebra or module data itself.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computations that theory says must agree did not.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Sorted, duplicate-free list of catalog ids: an additive subcategory given by its indecomposables.
using ObjSet = std::vector<std::size_t>;
ObjSet make_set(std::vector<std::size_t> ids);
ObjSet set_union(const ObjSet& a, const ObjSet& b);
ObjSet set_intersection(const ObjSet& a, const ObjSet& b);
ObjSet set_difference(const ObjSet& a, const ObjSet& b);
bool set_contains(const ObjSet& big, const ObjSet& small);

struct CatalogEntry {
    TwoTermComplex complex;              // minimal
    std::optional<std::size_t> module;   // atlas index of H, for non-shift objects
    int shift_vertex = -1;               // v when the object is P_v[1]
    std::string label;
};

// Algebra, its atlas, and the indecomposable two-term objects: the minimal presentation of
// every atlas module followed by the shifted projectives P_v[1].
class Workbench {
public:
    explicit Workbench(AlgebraPtr alg, std::size_t atlas_budget = 256);

    AlgebraPtr alg() const { return alg_; }
    const Algebra& algebra() const { return *alg_; }
    const Atlas& atlas() const { return atlas_; }
    bool complete() const { return atlas_.complete; }
    std::size_t vertex_count() const { return alg_->vertex_count(); }

    std::size_t size() const { return entries_.size(); }
    const CatalogEntry& entry(std::size_t id) const { return entries_.at(id); }
    const TwoTermComplex& object(std::size_t id) const { return entries_.at(id).complex; }
    const std::string& label(std::size_t id) const { return entries_.at(id).label; }
    bool is_shift(std::size_t id) const { return entries_.at(id).shift_vertex >= 0; }

    std::size_t module_id(std::size_t atlas_index) const { return atlas_index; }
    std::size_t stalk_id(int v) const;  // (0 -> P_v)
    std::size_t shift_id(int v) const { return atlas_.size() + std::size_t(v); }
    ObjSet projectives() const;  // add of the stalks, the silting subcategory R

    // Catalog ids of the indecomposable summands of c, with multiplicity.
    std::vector<std::size_t> identify(const TwoTermComplex& c) const;

    // Cached homotopy data between catalog objects.
    std::size_t shift_dim(std::size_t i, std::size_t j) const;  // dim Hom_K(U_i, U_j[1])
    // The same number from coker(Hom(U_i^0, H(U_j)) -> Hom(U_i^1, H(U_j))).
    std::size_t shift_dim_modules(std::size_t i, std::size_t j) const;
    const HomKSpace& hom(std::size_t i, std::size_t j) const;

    std::vector<std::size_t> module_indices(const ObjSet& x) const;  // atlas indices of the H parts
    std::vector<Representation> modules(const ObjSet& x) const;
    std::vector<int> e_part(const ObjSet& x) const;  // vertices v with P_v[1] in x
    ObjSet from_pair(const std::vector<std::size_t>& atlas_indices, const std::vector<int>& e_vertices) const;

    std::string describe(const ObjSet& x) const;

private:
    AlgebraPtr alg_;
    Atlas atlas_;
    std::vector<CatalogEntry> entries_;
    std::vector<std::size_t> stalk_ids_;
    mutable std::vector<int> shift_cache_;
    mutable std::vector<int> shift_module_cache_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<HomKSpace>> hom_cache_;
};

}  // namespace reltilt
