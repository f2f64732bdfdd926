#pragma once

#include <gdcage/cage.hpp>
#include <gdcage/graph.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gdcage
{
    // gf(p^e) for prime powers up to 32, elements encoded 0..q-1 as
    // base-p digit vectors of polynomial coefficients. the modulus is
    // the lexicographically least monic irreducible, coefficient
    // vectors compared constant term first.
    class FiniteField
    {
    private:
        int p_, e_, q_;
        std::vector<int> modulus_;
        std::vector<int> add_, mul_, neg_, inv_;

        FiniteField(int p, int e);

    public:
        static FiniteField gf(int q);

        int p() const { return p_; }
        int e() const { return e_; }
        int q() const { return q_; }
        // monic of degree e, constant term first
        const std::vector<int> & modulus() const { return modulus_; }

        int add(int a, int b) const { return add_[a * q_ + b]; }
        int mul(int a, int b) const { return mul_[a * q_ + b]; }
        int neg(int a) const { return neg_[a]; }
        int sub(int a, int b) const { return add(a, neg(b)); }
        int inv(int a) const;
    };

    // pg(2, q): points and lines as homogeneous triples normalised to
    // leading coordinate 1, each side sorted lexicographically. a point
    // lies on a line iff their dot product vanishes.
    struct ProjectivePlane
    {
        FiniteField field;
        std::vector<std::array<int, 3>> points;
        std::vector<std::array<int, 3>> lines;

        int q() const { return field.q(); }
        bool incident(int point, int line) const;
        // the unique line through two distinct points
        int line_through(int a, int b) const;
    };

    ProjectivePlane pg2(int q);

    // bipartite incidence graph, points first then lines
    Graph levi(const ProjectivePlane & plane);

    // levi graph of the plane minus a point P, a line l, all lines
    // through P and all points on l. type 1 has P on l, type 2 off l.
    struct BiaffineLevi
    {
        int q = 0;
        int plane_type = 0;
        int deleted_point = 0, deleted_line = 0;
        Graph graph;
        // original plane indices of the surviving objects, in order
        std::vector<int> point_ids, line_ids;
        // vertices grouped by deleted line through P / deleted point on l
        std::vector<std::vector<int>> point_classes, line_classes;
    };

    BiaffineLevi biaffine(const ProjectivePlane & plane, int point, int line, int want_type);

    // the distance-4 pairs must be exactly the same-class pairs
    CageReport distance4_classes(const BiaffineLevi & b);

    // extra edges inside point- or line-classes, vertex indices local
    // to the class
    struct AmalgamClass
    {
        std::string kind; // "point" or "line"
        int index = 0;
        std::vector<std::pair<int, int>> edges;
    };

    struct AmalgamSpec
    {
        std::vector<AmalgamClass> classes;
    };

    std::string amalgam_spec_to_json(const AmalgamSpec & spec);
    AmalgamSpec amalgam_spec_from_json(std::string_view text);

    // host plus the class-internal edges; every vertex must gain the
    // same number of edges. girth and diameter are the caller's to
    // verify.
    Graph amalgamate(const BiaffineLevi & b, const AmalgamSpec & spec);

    struct AmalgamBudget
    {
        std::optional<double> time_budget_secs;
        std::optional<int> max_results;
    };

    // all ways of inserting an a-regular graph into every class, pruned
    // on girth, results deduplicated by canonical form and verified
    // against params. an expired budget returns the partial list.
    struct AmalgamResult
    {
        std::vector<Graph> graphs;
        bool complete = true;
    };

    AmalgamResult search_amalgam(const BiaffineLevi & b, int a, const CageParams & params, const AmalgamBudget & budget = {});
}
