#include "reltilt/polygon.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "reltilt/two_term.hpp"

namespace reltilt {

std::string arc_to_string(const Arc& a) { return std::to_string(a.i) + "-" + std::to_string(a.j); }

Arc parse_arc(const std::string& s) {
    auto dash = s.find('-');
    if (dash == std::string::npos) throw InputError("arc '" + s + "' is not of the form i-j");
    try {
        std::size_t used = 0;
        int a = std::stoi(s.substr(0, dash), &used);
        if (used != dash) throw InputError("bad arc '" + s + "'");
        std::string rest = s.substr(dash + 1);
        int b = std::stoi(rest, &used);
        if (used != rest.size()) throw InputError("bad arc '" + s + "'");
        return a < b ? Arc{a, b} : Arc{b, a};
    } catch (const std::logic_error&) {
        throw InputError("bad arc '" + s + "'");
    }
}

std::vector<Arc> parse_arcs(const std::string& s) {
    std::vector<Arc> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (!tok.empty()) out.push_back(parse_arc(tok));
    }
    return out;
}

std::string arcs_to_string(const std::vector<Arc>& arcs) {
    std::string s;
    for (std::size_t k = 0; k < arcs.size(); ++k) s += (k ? "," : "") + arc_to_string(arcs[k]);
    return s;
}

Polygon::Polygon(int n) : n_(n) {
    if (n < 1) throw InputError("polygon needs n >= 1");
}

bool Polygon::is_arc(int a, int b) const {
    if (a < 0 || b < 0 || a >= size() || b >= size() || a == b) return false;
    int d = std::abs(a - b);
    return d >= 2 && d <= size() - 2;
}

Arc Polygon::arc(int a, int b) const {
    if (!is_arc(a, b))
        throw InputError(std::to_string(a) + "-" + std::to_string(b) + " is not a diagonal of the " +
                         std::to_string(size()) + "-gon");
    return a < b ? Arc{a, b} : Arc{b, a};
}

std::vector<Arc> Polygon::arcs() const {
    std::vector<Arc> out;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 2; b < size(); ++b)
            if (is_arc(a, b)) out.push_back({a, b});
    return out;
}

Arc Polygon::rotate(const Arc& a, int k) const {
    const int m = size();
    int s = ((a.i - k) % m + m) % m, t = ((a.j - k) % m + m) % m;
    return s < t ? Arc{s, t} : Arc{t, s};
}

int Polygon::hom_dim(const Arc& a, const Arc& b) const { return crossing_number(rotate(a), b); }

int crossing_number(const Arc& a, const Arc& b) {
    auto strictly_inside = [](int x, const Arc& c) { return c.i < x && x < c.j; };
    if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return 0;
    return strictly_inside(b.i, a) != strictly_inside(b.j, a) ? 1 : 0;
}

bool non_crossing(const std::vector<Arc>& arcs) {
    for (std::size_t s = 0; s < arcs.size(); ++s)
        for (std::size_t t = s + 1; t < arcs.size(); ++t)
            if (crossing_number(arcs[s], arcs[t])) return false;
    return true;
}

std::vector<std::vector<Arc>> Polygon::triangulations() const {
    auto all = arcs();
    std::vector<std::vector<Arc>> out;
    std::vector<Arc> cur;
    std::function<void(std::size_t)> go = [&](std::size_t start) {
        if (int(cur.size()) == n_) {
            out.push_back(cur);
            return;
        }
        for (std::size_t k = start; k < all.size(); ++k) {
            bool ok = true;
            for (const auto& c : cur) ok = ok && !crossing_number(c, all[k]);
            if (!ok) continue;
            cur.push_back(all[k]);
            go(k + 1);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

namespace {

int other_end(const Arc& a, int p) { return a.i == p ? a.j : a.i; }
bool touches(const Arc& a, int p) { return a.i == p || a.j == p; }

struct Link {
    int from, to;  // quiver arrow r[from] -> r[to], the map r[to] -> r[from] in C
    int pivot;
};

}  // namespace

TilingAlgebra tiling_end_algebra(const Polygon& poly, const std::vector<Arc>& r) {
    if (r.empty()) throw InputError("the rigid set R must be nonempty");
    for (const auto& a : r) poly.arc(a.i, a.j);
    for (std::size_t s = 0; s < r.size(); ++s)
        for (std::size_t t = s + 1; t < r.size(); ++t) {
            if (r[s] == r[t]) throw InputError("arc " + arc_to_string(r[s]) + " repeated in R");
            if (crossing_number(r[s], r[t]))
                throw InputError("R is not rigid: " + arc_to_string(r[s]) + " crosses " + arc_to_string(r[t]));
        }

    const int m = poly.size();
    // Map a -> b around a shared endpoint p when the far end of b comes just after the far end
    // of a, counting counterclockwise from p, with no arc of R in between.
    std::vector<Link> links;
    for (int p = 0; p < m; ++p) {
        std::vector<std::pair<int, int>> fan;  // (offset of the far end, index in r)
        for (int k = 0; k < int(r.size()); ++k)
            if (touches(r[std::size_t(k)], p)) fan.push_back({((other_end(r[std::size_t(k)], p) - p) % m + m) % m, k});
        std::sort(fan.begin(), fan.end());
        for (std::size_t s = 0; s + 1 < fan.size(); ++s) links.push_back({fan[s + 1].second, fan[s].second, p});
    }

    Quiver q;
    for (const auto& a : r) q.vertices.push_back(arc_to_string(a));
    for (std::size_t k = 0; k < links.size(); ++k)
        q.arrows.push_back({"a" + std::to_string(k + 1), links[k].from, links[k].to});
    std::vector<Relation> rels;
    for (std::size_t s = 0; s < links.size(); ++s)
        for (std::size_t t = 0; t < links.size(); ++t)
            if (links[s].to == links[t].from && links[s].pivot != links[t].pivot)
                rels.push_back({RelationTerm{1, {int(s), int(t)}}});

    TilingAlgebra out{r, Algebra::build(q, rels)};
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b) {
            auto paths = out.alg->paths_between(int(b), int(a)).size();
            if (int(paths) != poly.hom_dim(r[a], r[b]))
                throw InvariantError("tiling algebra disagrees with the crossing formula on Hom(" + arc_to_string(r[a]) +
                                     ", " + arc_to_string(r[b]) + ")");
        }
    return out;
}

namespace {

// Catalog id of the two-term object for arc x, or nullopt when x is not in R*R[1].
std::optional<std::size_t> locate_arc(const Polygon& poly, const TilingAlgebra& t, const Workbench& wb, const Arc& x,
                                      std::string& why) {
    const std::size_t nr = t.r.size();
    std::vector<std::size_t> print(nr);
    bool zero = true;
    for (std::size_t v = 0; v < nr; ++v) {
        print[v] = std::size_t(poly.hom_dim(t.r[v], x));
        zero = zero && print[v] == 0;
    }
    std::optional<std::size_t> id;
    if (zero) {
        for (std::size_t v = 0; v < nr; ++v)
            if (poly.rotate(t.r[v]) == x) id = wb.shift_id(int(v));
        if (!id) why = "Hom(R, x) = 0 but x is not in R[1]";
    } else {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < wb.atlas().size(); ++i)
            if (wb.atlas().modules[i].dims == print) hits.push_back(i);
        if (hits.size() > 1) throw InputError("arc " + arc_to_string(x) + " has an ambiguous fingerprint; enlarge R");
        if (hits.empty()) why = "no module has dimension vector Hom(R, x)";
        else id = wb.module_id(hits.front());
    }
    if (!id) return std::nullopt;
    // Probe: Hom_C(x, r[1]) must equal Hom_K(T_x, P_r[1]) for every r in R.
    for (std::size_t v = 0; v < nr; ++v) {
        auto k = hom_k_shift1_dim(wb.object(*id), wb.object(wb.stalk_id(int(v))));
        if (int(k) != crossing_number(x, t.r[v])) {
            why = "Ext probe against " + arc_to_string(t.r[v]) + " fails";
            return std::nullopt;
        }
    }
    return id;
}

}  // namespace

RelativeProblem realize_relative_problem(const Polygon& poly, const std::vector<Arc>& r, const std::vector<Arc>& x) {
    RelativeProblem p{poly, tiling_end_algebra(poly, r), nullptr, x, {}, {}};
    p.wb = std::make_shared<Workbench>(p.tiling.alg);
    if (!p.wb->complete()) throw CapError("atlas of the tiling algebra is incomplete");

    // Complete R to a triangulation T, which is cluster tilting, so every arc has a minimal
    // T-presentation T1 -> T0 -> x. The arc lies in R*R[1] iff T0 and T1 only use arcs of R.
    std::vector<Arc> t = r;
    for (const auto& a : poly.arcs()) {
        bool ok = std::find(t.begin(), t.end(), a) == t.end();
        for (const auto& c : t) ok = ok && !crossing_number(a, c);
        if (ok) t.push_back(a);
    }
    TilingAlgebra full = t.size() == r.size() ? p.tiling : tiling_end_algebra(poly, t);
    Workbench wt(full.alg);
    auto in_r = [&](int v) { return std::size_t(v) < r.size(); };
    std::map<Arc, std::string> outside;
    for (const auto& a : poly.arcs()) {
        std::string why;
        auto id = locate_arc(poly, full, wt, a, why);
        if (!id) throw InvariantError("arc " + arc_to_string(a) + " not found over a triangulation: " + why);
        const auto& e = wt.entry(*id);
        bool ok = e.shift_vertex >= 0 ? in_r(e.shift_vertex) : true;
        for (int v : e.complex.p1) ok = ok && in_r(v);
        for (int v : e.complex.p0) ok = ok && in_r(v);
        if (!ok) outside[a] = "its minimal presentation by a triangulation containing R leaves R";
    }

    std::map<std::size_t, std::vector<Arc>> claims;
    for (const auto& a : poly.arcs()) {
        if (outside.count(a)) continue;
        std::string why;
        auto id = locate_arc(poly, p.tiling, *p.wb, a, why);
        if (!id) throw InvariantError("arc " + arc_to_string(a) + " of R*R[1] has no two-term object: " + why);
        claims[*id].push_back(a);
    }
    for (const auto& [id, arcs] : claims) {
        if (arcs.size() > 1) throw InputError("arcs " + arcs_to_string(arcs) + " share a fingerprint; enlarge R");
        p.arc_of_id[id] = arcs.front();
    }
    if (p.arc_of_id.size() != p.wb->size())
        throw InvariantError("some two-term object over the tiling algebra matches no arc");

    std::vector<std::size_t> ids;
    for (const auto& a : x) {
        poly.arc(a.i, a.j);
        auto it = outside.find(a);
        if (it != outside.end()) throw InputError("arc " + arc_to_string(a) + " is not in R*R[1]: " + it->second);
        ids.push_back(arc_id(p, a));
    }
    p.x_ids = make_set(ids);
    return p;
}

std::size_t arc_id(const RelativeProblem& p, const Arc& a) {
    for (const auto& [id, arc] : p.arc_of_id)
        if (arc == a) return id;
    throw InputError("arc " + arc_to_string(a) + " is not in R*R[1]");
}

std::vector<Arc> arcs_of(const RelativeProblem& p, const ObjSet& ids) {
    std::vector<Arc> out;
    for (auto id : ids) out.push_back(p.arc_of_id.at(id));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace reltilt
