#include "reltilt/report.hpp"

#include <algorithm>
#include <numeric>

#include "reltilt/torsion.hpp"

namespace reltilt {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// Vertex permutation putting the vertex sets in lexicographic order.
std::vector<std::size_t> canonical_order(const ExchangeGraph& g) {
    std::vector<std::size_t> order(g.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g.vertices[a] < g.vertices[b]; });
    return order;
}

struct CanonicalEdge {
    std::size_t upper, lower;
    ObjSet x;
    auto operator<=>(const CanonicalEdge&) const = default;
};

std::vector<CanonicalEdge> canonical_edges(const ExchangeGraph& g, const std::vector<std::size_t>& order) {
    std::vector<std::size_t> rank(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
    std::vector<CanonicalEdge> out;
    for (const auto& e : g.edges) out.push_back({rank[e.upper], rank[e.lower], e.x});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string emit_dot(const ExchangeGraph& g, const SetLabeler& label) {
    auto order = canonical_order(g);
    std::string s = "digraph exchange {\n  node [shape=box];\n";
    for (std::size_t k = 0; k < order.size(); ++k)
        s += "  v" + std::to_string(k) + " [label=\"" + dot_escape(label(g.vertices[order[k]])) + "\"];\n";
    for (const auto& e : canonical_edges(g, order))
        s += "  v" + std::to_string(e.upper) + " -> v" + std::to_string(e.lower) +
             " [taillabel=\"Bongartz-side\", headlabel=\"co-Bongartz-side\", tooltip=\"" + dot_escape(label(e.x)) + "\"];\n";
    return s + "}\n";
}

io::json graph_to_json(const ExchangeGraph& g, const SetLabeler& label) {
    auto order = canonical_order(g);
    io::json j;
    j["schema"] = 1;
    j["complete"] = g.complete;
    j["vertices"] = io::json::array();
    for (std::size_t k = 0; k < order.size(); ++k) j["vertices"].push_back({{"id", k}, {"objects", label(g.vertices[order[k]])}});
    j["edges"] = io::json::array();
    for (const auto& e : canonical_edges(g, order))
        j["edges"].push_back({{"bongartz_side", e.upper}, {"co_bongartz_side", e.lower}, {"x", label(e.x)}});
    return j;
}

io::json VerifierReport::to_json() const {
    io::json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["theorem"] = theorem;
    j["instance"] = instance;
    j["exhaustive"] = exhaustive;
    j["instances_total"] = instances_total;
    j["checked"] = checked;
    j["pass"] = pass();
    j["cases"] = cases;
    j["falsifiers"] = falsifiers;
    return j;
}

io::json algebra_summary(const Algebra& alg) {
    io::json j;
    j["vertices"] = alg.quiver().vertices;
    j["arrows"] = alg.quiver().arrows.size();
    j["relations"] = alg.relations().size();
    j["dim"] = alg.dim();
    j["prime"] = fp::prime();
    return j;
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"main1", "m-pair", "thm1", "main", "PZZ",
                                              "main722", "CWZ2", "partial", "capcap", "cap"};
    return ids;
}

namespace {

using io::json;

class Harness {
public:
    Harness(const Workbench& wb, VerifierReport& r, bool exhaustive, std::size_t sample)
        : wb_(wb), r_(r), exhaustive_(exhaustive), sample_(sample) {}

    json set(const ObjSet& x) const { return io::subcategory_to_json(wb_, x); }
    json pair(const TauPair& p) const {
        json mods = json::array();
        for (auto i : p.modules) mods.push_back(wb_.atlas().labels[i]);
        return {{"modules", mods}, {"e", p.e}};
    }

    // Runs `check` on each instance up to the sample limit; check returns the case record and
    // sets `ok`.
    template <class T, class F>
    void run(const std::vector<T>& instances, F check) {
        r_.instances_total = instances.size();
        for (const auto& inst : instances) {
            if (!exhaustive_ && r_.checked >= sample_) break;
            bool ok = true;
            json record = check(inst, ok);
            ++r_.checked;
            if (ok) r_.cases.push_back(record);
            else r_.falsifiers.push_back(record);
        }
    }

    std::vector<ObjSet> proper_rigid() const {
        std::vector<ObjSet> out;
        for (const auto& x : rigid_subcategories(wb_, wb_.vertex_count()))
            if (!is_weak_cluster_tilting(wb_, x)) out.push_back(x);
        return out;
    }
    std::vector<ObjSet> almost_complete() const {
        std::vector<ObjSet> out;
        for (const auto& x : rigid_subcategories(wb_, wb_.vertex_count()))
            if (x.size() + 1 == wb_.vertex_count()) out.push_back(x);
        return out;
    }
    std::vector<ObjSet> all_subsets() const {
        std::vector<ObjSet> out;
        ObjSet cur;
        auto go = [&](auto&& self, std::size_t start) -> void {
            out.push_back(cur);
            if (cur.size() == wb_.vertex_count()) return;
            for (std::size_t i = start; i < wb_.size(); ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        go(go, 0);
        return out;
    }
    std::vector<ObjSet> wct() const {
        auto g = exchange_graph(wb_);
        if (!g.complete) throw CapError("exchange graph exceeded its vertex budget");
        auto v = g.vertices;
        std::sort(v.begin(), v.end());
        return v;
    }

private:
    const Workbench& wb_;
    VerifierReport& r_;
    bool exhaustive_;
    std::size_t sample_;
};

}  // namespace

VerifierReport verify_theorem(const Workbench& wb, const std::string& id, bool exhaustive, std::size_t sample) {
    const auto& ids = theorem_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        std::string known;
        for (const auto& k : ids) known += (known.empty() ? "" : ", ") + k;
        throw InputError("unknown theorem id '" + id + "' (known: " + known + ")");
    }
    require_complete(wb.atlas(), "verify " + id);

    VerifierReport r;
    r.theorem = id;
    r.exhaustive = exhaustive;
    r.instance = algebra_summary(wb.algebra());
    r.instance["catalog_size"] = wb.size();
    Harness h(wb, r, exhaustive, sample);
    const Atlas& atlas = wb.atlas();

    if (id == "main1") {
        h.run(h.almost_complete(), [&](const ObjSet& x, bool& ok) {
            auto c = completions(wb, x, true);
            json rec{{"x", h.set(x)}, {"m_x", h.set(c.m_x.set)}, {"n_x", h.set(c.n_x.set)}};
            ok = c.exactly_two;
            if (!ok) {
                rec["all_completions"] = json::array();
                for (const auto& s : c.all_completions) rec["all_completions"].push_back(h.set(s));
            }
            return rec;
        });
    } else if (id == "m-pair") {
        h.run(h.proper_rigid(), [&](const ObjSet& x, bool& ok) {
            auto m = co_bongartz(wb, x), n = bongartz(wb, x);
            auto cert = verify_mutation_pair(wb, x, m.set, n.set);
            ok = cert.ok;
            json rec{{"x", h.set(x)}, {"m_x", h.set(m.set)}, {"n_x", h.set(n.set)},
                     {"triangles", cert.m_side.size() + cert.n_side.size()}};
            if (!ok) rec["failures"] = cert.failures;
            return rec;
        });
    } else if (id == "thm1") {
        h.run(h.all_subsets(), [&](const ObjSet& x, bool& ok) {
            auto k_side = is_two_term_rigid(wb, x);
            auto p = tau_pair_of(wb, x);
            bool module_side = is_tau_rigid_pair(atlas, p);
            ok = k_side.rigid == module_side;
            return json{{"x", h.set(x)}, {"two_term_rigid", k_side.rigid}, {"tau_rigid_pair", module_side}};
        });
    } else if (id == "main") {
        h.run(rigid_subcategories(wb, wb.vertex_count()), [&](const ObjSet& x, bool& ok) {
            auto f = verify_fac_identities(wb, x);
            ok = f.ok();
            json rec{{"x", h.set(x)}, {"fac_m_is_fac_x", f.m_identity}, {"fac_n_is_perp", f.n_identity},
                     {"strict", f.strict}};
            if (f.tau4_applicable) rec["e_is_annihilator_check"] = f.tau4;
            return rec;
        });
    } else if (id == "PZZ") {
        h.run(support_tau_tilting_pairs(wb), [&](const TauPair& p, bool& ok) {
            auto c = cotorsion_from_sttilt(atlas, p);
            ok = c.ok() && c.tau_cotorsion_torsion() == c.left_weak_cotorsion_torsion();
            return json{{"pair", h.pair(p)},
                        {"flags", {{"a1", c.a1}, {"a2", c.a2}, {"b1", c.b1}, {"b2", c.b2}, {"c1", c.c1},
                                   {"c1_prime", c.c1_prime}, {"c2", c.c2}, {"round_trip", c.round_trip}}}};
        });
    } else if (id == "main722") {
        h.run(std::vector<int>{0}, [&](int, bool& ok) {
            auto b = verify_bijections(wb);
            ok = b.ok();
            json rec{{"pairs", b.pairs},
                     {"torsion_classes", b.torsion_classes},
                     {"fac_images", b.fac_images},
                     {"tau_cotorsion_torsion", b.tau_cotorsion_torsion},
                     {"left_weak_cotorsion_torsion", b.left_weak_cotorsion_torsion},
                     {"surjectivity_checked", b.surjectivity_checked}};
            if (!ok) rec["failures"] = b.failures;
            return rec;
        });
    } else if (id == "CWZ2" || id == "partial") {
        std::vector<std::pair<ObjSet, ObjSet>> work;
        auto ls = h.wct();
        for (const auto& x : h.proper_rigid()) {
            TauPair np = tau_pair_of(wb, bongartz(wb, x).set);
            for (const auto& l : ls)
                if (id == "partial" || partial_order_ge(atlas, np, tau_pair_of(wb, l))) work.push_back({x, l});
        }
        h.run(work, [&](const std::pair<ObjSet, ObjSet>& xl, bool& ok) {
            const auto& [x, l] = xl;
            json rec{{"x", h.set(x)}, {"l", h.set(l)}};
            if (id == "partial") {
                auto s = verify_sandwich(wb, x, l);
                ok = s.ok();
                rec["contains"] = s.contains;
                rec["between"] = s.between;
                return rec;
            }
            TauPair lp = tau_pair_of(wb, l);
            TauPair np = tau_pair_of(wb, bongartz(wb, x).set);
            auto lb = left_bongartz(wb, x, lp);
            ok = lb.support_tau_tilting && lb.contains_x && (lp != np || lb.result == np);
            rec["result"] = h.pair(lb.result);
            rec["support_tau_tilting"] = lb.support_tau_tilting;
            rec["contains_x"] = lb.contains_x;
            return rec;
        });
    } else if (id == "capcap" || id == "cap") {
        h.run(h.proper_rigid(), [&](const ObjSet& x, bool& ok) {
            auto m = co_bongartz(wb, x).set, n = bongartz(wb, x).set;
            json rec{{"x", h.set(x)}, {"m_x", h.set(m)}, {"n_x", h.set(n)}};
            if (id == "capcap") {
                ok = set_intersection(m, n) == x;
                return rec;
            }
            auto shifts = [&](const ObjSet& s) {
                ObjSet out;
                for (auto i : s)
                    if (wb.is_shift(i)) out.push_back(i);
                return out;
            };
            bool annihilator = r_annihilator(wb, m) == r_annihilator(wb, x);
            bool shift_part = shifts(n) == shifts(x);
            ok = annihilator && shift_part;
            rec["annihilator_equal"] = annihilator;
            rec["shift_part_equal"] = shift_part;
            return rec;
        });
    }
    return r;
}

}  // namespace reltilt
