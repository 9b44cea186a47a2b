#include "reltilt/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace reltilt {

namespace {
constexpr std::size_t kMaxDim = 2000;
constexpr std::size_t kAssociativityCheckDim = 50;
}  // namespace

int Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return int(i);
    return -1;
}

int Quiver::arrow_index(const std::string& id) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return int(i);
    return -1;
}

AlgebraPtr Algebra::build(Quiver quiver, std::vector<Relation> relations) {
    return build_impl(std::move(quiver), std::move(relations), true);
}

AlgebraPtr Algebra::build_impl(Quiver quiver, std::vector<Relation> relations, bool with_opposite) {
    const int n = int(quiver.vertices.size());
    if (n == 0) throw AlgebraError("quiver has no vertices");
    {
        std::set<std::string> seen(quiver.vertices.begin(), quiver.vertices.end());
        if (seen.size() != quiver.vertices.size()) throw AlgebraError("duplicate vertex id");
        std::set<std::string> ids;
        for (const auto& a : quiver.arrows) {
            if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
                throw AlgebraError("arrow '" + a.id + "' has an endpoint outside the vertex set");
            if (!ids.insert(a.id).second) throw AlgebraError("duplicate arrow id '" + a.id + "'");
        }
    }
    for (std::size_t r = 0; r < relations.size(); ++r) {
        const auto& rel = relations[r];
        if (rel.empty()) throw AlgebraError("relation " + std::to_string(r) + " is empty");
        int s = -1, t = -1;
        for (const auto& term : rel) {
            if (term.arrows.size() < 2)
                throw AlgebraError("relation " + std::to_string(r) +
                                   " has a term of length < 2; the ideal would not be admissible");
            for (int a : term.arrows)
                if (a < 0 || a >= int(quiver.arrows.size()))
                    throw AlgebraError("relation " + std::to_string(r) + " uses an unknown arrow");
            for (std::size_t k = 0; k + 1 < term.arrows.size(); ++k)
                if (quiver.arrows[term.arrows[k]].target != quiver.arrows[term.arrows[k + 1]].source)
                    throw AlgebraError("relation " + std::to_string(r) + " contains a non-composable path");
            int ts = quiver.arrows[term.arrows.front()].source;
            int tt = quiver.arrows[term.arrows.back()].target;
            if (s < 0) {
                s = ts;
                t = tt;
            } else if (s != ts || t != tt) {
                throw AlgebraError("relation " + std::to_string(r) + " mixes paths with different endpoints");
            }
        }
    }

    std::shared_ptr<Algebra> alg(new Algebra());
    alg->quiver_ = std::move(quiver);
    alg->relations_ = std::move(relations);
    alg->make_rules();
    alg->enumerate_basis();
    alg->check_confluence();
    alg->fill_table();
    if (alg->dim() <= kAssociativityCheckDim) alg->check_associativity();

    if (with_opposite) {
        Quiver oq = alg->quiver_;
        for (auto& a : oq.arrows) std::swap(a.source, a.target);
        std::vector<Relation> orels = alg->relations_;
        for (auto& rel : orels)
            for (auto& term : rel) std::reverse(term.arrows.begin(), term.arrows.end());
        std::shared_ptr<Algebra> op;
        try {
            op = std::const_pointer_cast<Algebra>(build_impl(std::move(oq), std::move(orels), false));
        } catch (const AlgebraError& e) {
            throw AlgebraError(std::string("opposite algebra: ") + e.what());
        }
        if (op->dim() != alg->dim()) throw AlgebraError("opposite algebra has a different dimension");
        op->op_back_ = alg;
        alg->op_ = op;
    }
    return alg;
}

void Algebra::make_rules() {
    for (const auto& rel : relations_) {
        Combination merged;
        for (const auto& term : rel) {
            Scalar& c = merged[term.arrows];
            c = fp::add(c, fp::from_int(term.coeff));
        }
        for (auto it = merged.begin(); it != merged.end();) it = it->second == 0 ? merged.erase(it) : std::next(it);
        if (merged.empty()) continue;
        if (merged.size() > 1) monomial_ = false;
        auto lead_it = std::prev(merged.end());
        Rule rule;
        rule.source = quiver_.arrows[lead_it->first.front()].source;
        rule.lead = lead_it->first;
        Scalar f = fp::neg(fp::inv(lead_it->second));
        for (auto it = merged.begin(); it != lead_it; ++it) rule.tail.emplace_back(fp::mul(f, it->second), it->first);
        rules_.push_back(std::move(rule));
    }
}

std::optional<std::pair<std::size_t, std::size_t>> Algebra::find_redex(const std::vector<int>& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t r = 0; r < rules_.size(); ++r) {
            const auto& lead = rules_[r].lead;
            if (pos + lead.size() > w.size()) continue;
            if (std::equal(lead.begin(), lead.end(), w.begin() + pos)) return std::make_pair(r, pos);
        }
    return std::nullopt;
}

Algebra::Combination Algebra::apply_rule(const std::vector<int>& w, std::size_t r, std::size_t pos, Scalar c) const {
    Combination out;
    const Rule& rule = rules_[r];
    for (const auto& [tc, tw] : rule.tail) {
        std::vector<int> nw(w.begin(), w.begin() + pos);
        nw.insert(nw.end(), tw.begin(), tw.end());
        nw.insert(nw.end(), w.begin() + pos + rule.lead.size(), w.end());
        Scalar& slot = out[nw];
        slot = fp::add(slot, fp::mul(c, tc));
    }
    return out;
}

Element Algebra::reduce_combination(int source, Combination work) const {
    Element res(basis_.size(), 0);
    while (!work.empty()) {
        auto it = std::prev(work.end());
        std::vector<int> w = it->first;
        Scalar c = it->second;
        work.erase(it);
        if (c == 0) continue;
        if (auto redex = find_redex(w)) {
            for (const auto& [nw, nc] : apply_rule(w, redex->first, redex->second, c)) {
                Scalar& slot = work[nw];
                slot = fp::add(slot, nc);
            }
            continue;
        }
        auto idx = index_.find({w.empty() ? source : quiver_.arrows[w.front()].source, w});
        if (idx == index_.end()) throw AlgebraError("internal: irreducible word outside the enumerated basis");
        res[idx->second] = fp::add(res[idx->second], c);
    }
    return res;
}

Element Algebra::reduce(int source, const std::vector<int>& word) const {
    Combination work;
    work[word] = 1;
    return reduce_combination(source, std::move(work));
}

void Algebra::enumerate_basis() {
    const int n = int(vertex_count());
    std::vector<Path> level;
    for (int v = 0; v < n; ++v) level.push_back(Path{v, v, {}});
    std::size_t len = 0;
    while (!level.empty()) {
        for (auto& p : level) {
            if (basis_.size() >= kMaxDim || basis_.size() + 1 >= fp::prime())
                throw AlgebraError("algebra is infinite-dimensional or too large (dimension must stay below " +
                                   std::to_string(std::min<std::size_t>(kMaxDim, fp::prime())) + ")");
            index_[{p.source, p.arrows}] = basis_.size();
            basis_.push_back(p);
        }
        max_len_ = len;
        std::vector<Path> next;
        for (const auto& p : level)
            for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) {
                if (quiver_.arrows[a].source != p.target) continue;
                std::vector<int> w = p.arrows;
                w.push_back(int(a));
                bool reducible = false;
                for (const auto& rule : rules_) {
                    const auto& lead = rule.lead;
                    if (lead.size() <= w.size() && std::equal(lead.begin(), lead.end(), w.end() - lead.size())) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible) next.push_back(Path{p.source, quiver_.arrows[a].target, w});
            }
        std::sort(next.begin(), next.end(), [](const Path& x, const Path& y) {
            if (x.source != y.source) return x.source < y.source;
            return x.arrows < y.arrows;
        });
        level = std::move(next);
        ++len;
    }
    idempotent_.assign(n, 0);
    between_.assign(std::size_t(n) * n, {});
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Path& p = basis_[i];
        if (p.arrows.empty()) idempotent_[p.source] = i;
        between_[std::size_t(p.source) * n + p.target].push_back(i);
    }
}

void Algebra::check_confluence() const {
    auto fail = [this](const std::vector<int>& w) {
        std::string word;
        for (std::size_t k = 0; k < w.size(); ++k) word += (k ? "*" : "") + quiver_.arrows[w[k]].id;
        throw AlgebraError("relations not confluent: " + word +
                           " has two different normal forms; supply a completed reduction system");
    };
    for (std::size_t r1 = 0; r1 < rules_.size(); ++r1)
        for (std::size_t r2 = 0; r2 < rules_.size(); ++r2) {
            const auto& l1 = rules_[r1].lead;
            const auto& l2 = rules_[r2].lead;
            const int src = rules_[r1].source;
            // Overlap: proper suffix of l1 equals proper prefix of l2.
            for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
                if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
                std::vector<int> w = l1;
                w.insert(w.end(), l2.begin() + k, l2.end());
                Element a = reduce_combination(src, apply_rule(w, r1, 0, 1));
                Element b = reduce_combination(src, apply_rule(w, r2, l1.size() - k, 1));
                if (a != b) fail(w);
            }
            // Inclusion: l2 occurs inside l1.
            if (r1 != r2 && l2.size() <= l1.size()) {
                for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
                    if (!std::equal(l2.begin(), l2.end(), l1.begin() + pos)) continue;
                    Element a = reduce_combination(src, apply_rule(l1, r1, 0, 1));
                    Element b = reduce_combination(src, apply_rule(l1, r2, pos, 1));
                    if (a != b) fail(l1);
                }
            }
        }
}

void Algebra::fill_table() {
    const std::size_t d = basis_.size();
    table_.assign(d * d, {});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Path& p = basis_[i];
            const Path& q = basis_[j];
            if (p.target != q.source) continue;
            if (p.arrows.empty()) {
                table_[i * d + j] = {{j, 1}};
                continue;
            }
            if (q.arrows.empty()) {
                table_[i * d + j] = {{i, 1}};
                continue;
            }
            std::vector<int> w = p.arrows;
            w.insert(w.end(), q.arrows.begin(), q.arrows.end());
            Element e = reduce(p.source, w);
            for (std::size_t k = 0; k < d; ++k)
                if (e[k] != 0) table_[i * d + j].emplace_back(k, e[k]);
        }
}

void Algebra::check_associativity() const {
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Element ij = multiply(basis_element(i), basis_element(j));
                Element jk = multiply(basis_element(j), basis_element(k));
                if (multiply(ij, basis_element(k)) != multiply(basis_element(i), jk))
                    throw AlgebraError("multiplication table is not associative");
            }
}

const std::vector<std::size_t>& Algebra::paths_between(int from, int to) const {
    return between_[std::size_t(from) * vertex_count() + to];
}

std::optional<std::size_t> Algebra::index_of(const Path& p) const {
    auto it = index_.find({p.source, p.arrows});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Element Algebra::basis_element(std::size_t i, Scalar c) const {
    Element e(dim(), 0);
    e[i] = c;
    return e;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
    const std::size_t d = dim();
    if (a.size() != d || b.size() != d) throw DimensionError("element size does not match the algebra");
    Element r(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            Scalar c = fp::mul(a[i], b[j]);
            for (const auto& [k, v] : table_[i * d + j]) r[k] = fp::add(r[k], fp::mul(c, v));
        }
    }
    return r;
}

AlgebraPtr Algebra::opposite() const {
    if (op_) return op_;
    if (auto back = op_back_.lock()) return back;
    throw AlgebraError("opposite algebra is unavailable");
}

std::string Algebra::path_name(std::size_t i) const {
    const Path& p = basis_[i];
    if (p.arrows.empty()) return "e" + quiver_.vertices[p.source];
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) s += (k ? "*" : "") + quiver_.arrows[p.arrows[k]].id;
    return s;
}

std::string Algebra::element_to_string(const Element& x) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        std::int64_t c = fp::to_signed(x[i]);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        if (std::llabs(c) != 1) os << std::llabs(c) << "*";
        os << path_name(i);
        first = false;
    }
    return first ? "0" : os.str();
}

Element element_add(const Element& a, const Element& b) {
    Element r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp::add(a[i], b[i]);
    return r;
}

Element element_sub(const Element& a, const Element& b) {
    Element r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp::sub(a[i], b[i]);
    return r;
}

Element element_scale(const Element& a, Scalar c) {
    Element r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp::mul(a[i], c);
    return r;
}

bool element_is_zero(const Element& a) {
    return std::all_of(a.begin(), a.end(), [](Scalar x) { return x == 0; });
}

Element local_inverse(const Algebra& alg, int v, const Element& u) {
    const std::size_t ev = alg.idempotent(v);
    Scalar c = u[ev];
    if (c == 0) throw std::domain_error("element is not a unit of the local ring e_v A e_v");
    Scalar ci = fp::inv(c);
    Element x = element_scale(u, fp::neg(ci));  // x = -c^{-1} r, with r = u - c e_v
    x[ev] = 0;
    Element term = alg.basis_element(ev);
    Element sum = term;
    for (std::size_t k = 0; k <= alg.max_path_length() + 1; ++k) {
        term = alg.multiply(term, x);
        if (element_is_zero(term)) return element_scale(sum, ci);
        sum = element_add(sum, term);
    }
    throw std::domain_error("radical element of e_v A e_v is not nilpotent");
}

}  // namespace reltilt
