#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reltilt/matrix.hpp"

namespace reltilt {

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Arrow {
    std::string id;
    int source = 0;
    int target = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    bool numeric_vertex_ids = false;  // only affects how files are written back

    int vertex_index(const std::string& name) const;  // -1 if absent
    int arrow_index(const std::string& id) const;     // -1 if absent
};

// Paths compose left to right: the word {a, b} means "a then b".
struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;

    std::size_t length() const { return arrows.size(); }
    bool operator==(const Path&) const = default;
};

struct RelationTerm {
    std::int64_t coeff = 0;
    std::vector<int> arrows;  // length >= 2
};
using Relation = std::vector<RelationTerm>;

// Coefficient vector over the path basis.
using Element = std::vector<Scalar>;
using SparseElement = std::vector<std::pair<std::size_t, Scalar>>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Basic algebra KQ/I over F_p with a fixed basis of irreducible paths for a
// confluent rewriting system derived from the given relations.
class Algebra {
public:
    // Throws AlgebraError for malformed relations, non-confluent rewriting, infinite or
    // oversized algebras (dim must stay below p).
    static AlgebraPtr build(Quiver quiver, std::vector<Relation> relations);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    std::size_t vertex_count() const { return quiver_.vertices.size(); }
    std::size_t dim() const { return basis_.size(); }
    const Path& basis(std::size_t i) const { return basis_[i]; }
    std::size_t idempotent(int v) const { return idempotent_[v]; }
    // Indices of basis paths from `from` to `to`, i.e. a basis of e_from A e_to.
    const std::vector<std::size_t>& paths_between(int from, int to) const;
    std::optional<std::size_t> index_of(const Path& p) const;
    std::size_t max_path_length() const { return max_len_; }
    bool is_monomial() const { return monomial_; }

    const SparseElement& product(std::size_t i, std::size_t j) const { return table_[i * basis_.size() + j]; }
    Element zero() const { return Element(dim(), 0); }
    Element basis_element(std::size_t i, Scalar c = 1) const;
    Element multiply(const Element& a, const Element& b) const;
    // Normal form of an arbitrary composable word (trivial when empty).
    Element reduce(int source, const std::vector<int>& word) const;

    // Opposite algebra on the reversed quiver; arrows keep their ids and indices.
    AlgebraPtr opposite() const;

    std::string path_name(std::size_t i) const;
    std::string element_to_string(const Element& x) const;

private:
    struct Rule {
        int source = 0;
        std::vector<int> lead;
        std::vector<std::pair<Scalar, std::vector<int>>> tail;  // lead = sum tail
    };
    struct DegLexLess {
        bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        }
    };
    using Combination = std::map<std::vector<int>, Scalar, DegLexLess>;

    static AlgebraPtr build_impl(Quiver quiver, std::vector<Relation> relations, bool with_opposite);
    void make_rules();
    void check_confluence() const;
    void enumerate_basis();
    void fill_table();
    void check_associativity() const;

    Element reduce_combination(int source, Combination work) const;
    std::optional<std::pair<std::size_t, std::size_t>> find_redex(const std::vector<int>& w) const;
    Combination apply_rule(const std::vector<int>& w, std::size_t rule, std::size_t pos, Scalar c) const;

    Quiver quiver_;
    std::vector<Relation> relations_;
    std::vector<Rule> rules_;
    std::vector<Path> basis_;
    std::map<std::pair<int, std::vector<int>>, std::size_t> index_;
    std::vector<std::size_t> idempotent_;
    std::vector<std::vector<std::size_t>> between_;  // [from * n + to]
    std::vector<SparseElement> table_;
    std::size_t max_len_ = 0;
    bool monomial_ = true;
    AlgebraPtr op_;
    std::weak_ptr<const Algebra> op_back_;
};

// Element helpers.
Element element_add(const Element& a, const Element& b);
Element element_sub(const Element& a, const Element& b);
Element element_scale(const Element& a, Scalar c);
bool element_is_zero(const Element& a);

// Inverse of a unit of the local ring e_v A e_v.
Element local_inverse(const Algebra& alg, int v, const Element& u);

}  // namespace reltilt
