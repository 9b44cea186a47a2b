#include "reltilt/catalog.hpp"

#include <algorithm>

namespace reltilt {

ObjSet make_set(std::vector<std::size_t> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

ObjSet set_union(const ObjSet& a, const ObjSet& b) {
    ObjSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ObjSet set_intersection(const ObjSet& a, const ObjSet& b) {
    ObjSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ObjSet set_difference(const ObjSet& a, const ObjSet& b) {
    ObjSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const ObjSet& big, const ObjSet& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Workbench::Workbench(AlgebraPtr alg, std::size_t atlas_budget) : alg_(alg), atlas_(knit_atlas(alg, atlas_budget)) {
    for (std::size_t i = 0; i < atlas_.size(); ++i) {
        CatalogEntry e;
        e.complex = presentation_complex(atlas_.modules[i]);
        e.module = i;
        e.label = atlas_.labels[i];
        entries_.push_back(std::move(e));
    }
    for (int v = 0; v < int(alg->vertex_count()); ++v) {
        CatalogEntry e;
        e.complex = shifted_stalk(alg, v);
        e.shift_vertex = v;
        e.label = "P" + alg->quiver().vertices[v] + "[1]";
        entries_.push_back(std::move(e));
    }
    for (int v = 0; v < int(alg->vertex_count()); ++v) {
        auto i = atlas_.find(projective_module(alg, v));
        if (!i) throw ModuleError("internal: projective missing from the atlas");
        stalk_ids_.push_back(*i);
    }
    shift_cache_.assign(entries_.size() * entries_.size(), -1);
    shift_module_cache_ = shift_cache_;
}

std::size_t Workbench::stalk_id(int v) const { return stalk_ids_.at(std::size_t(v)); }

ObjSet Workbench::projectives() const { return make_set(stalk_ids_); }

std::vector<std::size_t> Workbench::identify(const TwoTermComplex& c) const {
    HPart h = h_functor(c);
    std::vector<std::size_t> ids;
    if (!h.module.is_zero()) {
        try {
            for (auto i : atlas_.locate_summands(h.module)) ids.push_back(module_id(i));
        } catch (const ModuleError& e) {
            if (atlas_.complete) throw;
            throw CapError(std::string(e.what()) + "; the atlas stopped at its budget of " +
                           std::to_string(atlas_.size()) + " modules");
        }
    }
    for (int v = 0; v < int(h.e_part.size()); ++v)
        for (std::size_t k = 0; k < h.e_part[v]; ++k) ids.push_back(shift_id(v));
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::size_t Workbench::shift_dim(std::size_t i, std::size_t j) const {
    int& slot = shift_cache_.at(i * entries_.size() + j);
    if (slot < 0) slot = int(hom_k_shift1_dim(object(i), object(j)));
    return std::size_t(slot);
}

std::size_t Workbench::shift_dim_modules(std::size_t i, std::size_t j) const {
    int& slot = shift_module_cache_.at(i * entries_.size() + j);
    if (slot < 0) slot = int(shift1_dim_via_modules(object(i), object(j)));
    return std::size_t(slot);
}

const HomKSpace& Workbench::hom(std::size_t i, std::size_t j) const {
    auto& slot = hom_cache_[{i, j}];
    if (!slot) slot = std::make_unique<HomKSpace>(hom_k(object(i), object(j)));
    return *slot;
}

std::vector<std::size_t> Workbench::module_indices(const ObjSet& x) const {
    std::vector<std::size_t> out;
    for (auto id : x)
        if (entries_.at(id).module) out.push_back(*entries_[id].module);
    return out;
}

std::vector<Representation> Workbench::modules(const ObjSet& x) const {
    std::vector<Representation> out;
    for (auto i : module_indices(x)) out.push_back(atlas_.modules[i]);
    return out;
}

std::vector<int> Workbench::e_part(const ObjSet& x) const {
    std::vector<int> out;
    for (auto id : x)
        if (entries_.at(id).shift_vertex >= 0) out.push_back(entries_[id].shift_vertex);
    return out;
}

ObjSet Workbench::from_pair(const std::vector<std::size_t>& atlas_indices, const std::vector<int>& e_vertices) const {
    std::vector<std::size_t> ids;
    for (auto i : atlas_indices) ids.push_back(module_id(i));
    for (int v : e_vertices) ids.push_back(shift_id(v));
    return make_set(ids);
}

std::string Workbench::describe(const ObjSet& x) const {
    std::string s = "{";
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (k) s += ", ";
        s += label(x[k]);
    }
    return s + "}";
}

}  // namespace reltilt
