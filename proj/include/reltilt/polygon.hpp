#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reltilt/catalog.hpp"

namespace reltilt {

// Diagonal of the (n+3)-gon with vertices 0..n+2, stored with i < j.
struct Arc {
    int i = 0, j = 0;
    auto operator<=>(const Arc&) const = default;
};

std::string arc_to_string(const Arc& a);
Arc parse_arc(const std::string& s);                  // "0-2"
std::vector<Arc> parse_arcs(const std::string& s);    // "0-2,2-4"; empty string gives no arcs
std::string arcs_to_string(const std::vector<Arc>& arcs);

// Disk model of the cluster category of type A_n.
class Polygon {
public:
    explicit Polygon(int n);
    int n() const { return n_; }
    int size() const { return n_ + 3; }
    Arc arc(int a, int b) const;  // validated and normalised
    bool is_arc(int a, int b) const;
    std::vector<Arc> arcs() const;
    Arc rotate(const Arc& a, int k = 1) const;  // the shift [1]: both endpoints move back by k
    // dim Hom_C(a, b) = dim Ext^1(a, b[-1]) = crossing_number(rotate(a), b).
    int hom_dim(const Arc& a, const Arc& b) const;
    std::vector<std::vector<Arc>> triangulations() const;

private:
    int n_;
};

int crossing_number(const Arc& a, const Arc& b);
bool non_crossing(const std::vector<Arc>& arcs);

struct TilingAlgebra {
    std::vector<Arc> r;  // vertex v of the quiver is r[v]
    AlgebraPtr alg;
};
// End(R)^op as a bound quiver algebra; validated against the crossing formula.
TilingAlgebra tiling_end_algebra(const Polygon& poly, const std::vector<Arc>& r);

struct RelativeProblem {
    Polygon poly;
    TilingAlgebra tiling;
    std::shared_ptr<Workbench> wb;
    std::vector<Arc> x;
    ObjSet x_ids;
    std::map<std::size_t, Arc> arc_of_id;  // every catalog object, by fingerprint
};
// Throws InputError naming the arc when an arc of X is not in R*R[1].
RelativeProblem realize_relative_problem(const Polygon& poly, const std::vector<Arc>& r, const std::vector<Arc>& x);
std::size_t arc_id(const RelativeProblem& p, const Arc& a);
std::vector<Arc> arcs_of(const RelativeProblem& p, const ObjSet& ids);

}  // namespace reltilt
