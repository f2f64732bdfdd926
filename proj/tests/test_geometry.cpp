#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <gdcage/cage.hpp>
#include <gdcage/canon.hpp>
#include <gdcage/geometry.hpp>
#include <gdcage/graph.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace gdcage;
using namespace testutil;

namespace
{
    constexpr int prime_powers[] = { 2, 3, 4, 5, 7, 8, 9 };

    int find_point(const ProjectivePlane & plane, std::array<int, 3> triple)
    {
        auto it = std::find(plane.points.begin(), plane.points.end(), triple);
        REQUIRE(it != plane.points.end());
        return static_cast<int>(it - plane.points.begin());
    }

    int find_line(const ProjectivePlane & plane, std::array<int, 3> triple)
    {
        auto it = std::find(plane.lines.begin(), plane.lines.end(), triple);
        REQUIRE(it != plane.lines.end());
        return static_cast<int>(it - plane.lines.begin());
    }

    // biaffine plane with P = (0:1:0) and l = [0:0:1] (a type-1 pair):
    // the surviving points are the affine points (x, y) with x = a/c,
    // y = b/c, and the surviving lines satisfy y = -(a/b) x - (c/b),
    // grouped into classes by x and by slope respectively
    struct CoordinateFrame
    {
        ProjectivePlane plane;
        BiaffineLevi b;
        // per class: field value of y (points) or intercept (lines),
        // mapped to the local index inside the class
        std::vector<std::map<int, int>> point_param, line_param;

        explicit CoordinateFrame(int q)
            : plane(pg2(q))
            , b(biaffine(plane, find_point(plane, { 0, 1, 0 }), find_line(plane, { 0, 0, 1 }), 1))
        {
            const FiniteField & f = plane.field;
            int npts = static_cast<int>(b.point_ids.size());
            for (const auto & cls : b.point_classes) {
                std::map<int, int> param;
                for (std::size_t local = 0; local < cls.size(); ++local) {
                    auto [a, bb, c] = plane.points[b.point_ids[cls[local]]];
                    param[f.mul(bb, f.inv(c))] = static_cast<int>(local);
                }
                REQUIRE(static_cast<int>(param.size()) == q);
                point_param.push_back(std::move(param));
            }
            for (const auto & cls : b.line_classes) {
                std::map<int, int> param;
                for (std::size_t local = 0; local < cls.size(); ++local) {
                    auto [a, bb, c] = plane.lines[b.line_ids[cls[local] - npts]];
                    param[f.mul(c, f.inv(bb))] = static_cast<int>(local);
                }
                REQUIRE(static_cast<int>(param.size()) == q);
                line_param.push_back(std::move(param));
            }
        }

        // insert, into every class on one side, the cycle visiting the
        // parameter values in the given order
        void add_cycles(AmalgamSpec & spec, const std::string & kind, const std::vector<int> & values)
        {
            const auto & params = kind == "point" ? point_param : line_param;
            int len = static_cast<int>(values.size());
            for (std::size_t idx = 0; idx < params.size(); ++idx) {
                AmalgamClass cls;
                cls.kind = kind;
                cls.index = static_cast<int>(idx);
                for (int i = 0; i < len; ++i)
                    cls.edges.emplace_back(params[idx].at(values[i]), params[idx].at(values[(i + 1) % len]));
                spec.classes.push_back(std::move(cls));
            }
        }
    };
}

TEST_CASE("finite field arithmetic axioms hold for every supported order")
{
    for (int q : { 2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32 }) {
        FiniteField f = FiniteField::gf(q);
        INFO("q = " << q);
        CHECK(f.q() == q);
        int p = f.p(), e = f.e();
        int power = 1;
        for (int i = 0; i < e; ++i)
            power *= p;
        CHECK(power == q);

        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0)
                CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
                for (int c = 0; c < std::min(q, 8); ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
    }
}

TEST_CASE("finite field moduli are the lexicographically least irreducibles")
{
    CHECK(FiniteField::gf(2).modulus() == std::vector<int>{ 0, 1 });
    CHECK(FiniteField::gf(7).modulus() == std::vector<int>{ 0, 1 });
    CHECK(FiniteField::gf(4).modulus() == std::vector<int>{ 1, 1, 1 });
    CHECK(FiniteField::gf(8).modulus() == std::vector<int>{ 1, 0, 1, 1 });
    CHECK(FiniteField::gf(9).modulus() == std::vector<int>{ 1, 0, 1 });
    CHECK(FiniteField::gf(16).modulus() == std::vector<int>{ 1, 0, 0, 1, 1 });
    CHECK(FiniteField::gf(25).modulus() == std::vector<int>{ 1, 1, 1 });
    CHECK(FiniteField::gf(27).modulus() == std::vector<int>{ 1, 0, 2, 1 });
    CHECK(FiniteField::gf(32).modulus() == std::vector<int>{ 1, 0, 0, 1, 0, 1 });

    // spot checks of the tabulated arithmetic in the extension fields
    FiniteField f4 = FiniteField::gf(4);
    CHECK(f4.add(1, 1) == 0);
    CHECK(f4.mul(2, 2) == 3);    // x * x = x + 1 mod x^2+x+1
    FiniteField f9 = FiniteField::gf(9);
    CHECK(f9.mul(3, 3) == 2);    // x * x = -1 mod x^2+1
}

TEST_CASE("gf rejects non-prime-powers and out-of-range orders")
{
    for (int q : { -1, 0, 1, 6, 10, 12, 15, 33, 100 })
        CHECK_THROWS_AS(FiniteField::gf(q), std::invalid_argument);
}

TEST_CASE("pg2 incidence structure")
{
    for (int q : prime_powers) {
        ProjectivePlane plane = pg2(q);
        int expected = q * q + q + 1;
        INFO("q = " << q);
        REQUIRE(static_cast<int>(plane.points.size()) == expected);
        REQUIRE(static_cast<int>(plane.lines.size()) == expected);

        // normalised homogeneous triples, sorted, first nonzero = 1
        for (const auto & side : { plane.points, plane.lines }) {
            CHECK(std::is_sorted(side.begin(), side.end()));
            for (const auto & t : side) {
                int lead = t[0] != 0 ? t[0] : t[1] != 0 ? t[1] : t[2];
                CHECK(lead == 1);
            }
        }

        // q+1 points per line, q+1 lines per point
        for (int line = 0; line < expected; ++line) {
            int count = 0;
            for (int point = 0; point < expected; ++point)
                count += plane.incident(point, line);
            CHECK(count == q + 1);
        }
        for (int point = 0; point < expected; ++point) {
            int count = 0;
            for (int line = 0; line < expected; ++line)
                count += plane.incident(point, line);
            CHECK(count == q + 1);
        }

        // exactly one line through every pair of distinct points
        for (int a = 0; a < expected; ++a)
            for (int bp = a + 1; bp < expected; ++bp) {
                int common = 0, found = -1;
                for (int line = 0; line < expected; ++line)
                    if (plane.incident(a, line) && plane.incident(bp, line)) {
                        ++common;
                        found = line;
                    }
                CHECK(common == 1);
                CHECK(plane.line_through(a, bp) == found);
            }
    }
}

TEST_CASE("pg2 duality: two lines meet in exactly one point")
{
    for (int q : { 2, 3, 4, 5 }) {
        ProjectivePlane plane = pg2(q);
        int n = static_cast<int>(plane.lines.size());
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                int common = 0;
                for (int point = 0; point < n; ++point)
                    common += plane.incident(point, a) && plane.incident(point, b);
                CHECK(common == 1);
            }
    }
}

TEST_CASE("levi graphs are (q+1,6,3)-graphs")
{
    for (int q : prime_powers) {
        Graph g = levi(pg2(q));
        INFO("q = " << q);
        CHECK(g.order() == 2 * (q * q + q + 1));
        CHECK(verify_gd_graph(g, { q + 1, 6, 3 }).pass);
    }
    CHECK(are_isomorphic(levi(pg2(2)), heawood()));
    CHECK(aut_order(levi(pg2(2))).order == 336);
}

TEST_CASE("biaffine structure for both types across q and deletions")
{
    std::mt19937 rng(1234);
    for (int q : prime_powers) {
        ProjectivePlane plane = pg2(q);
        int n = static_cast<int>(plane.points.size());
        for (int type : { 1, 2 }) {
            int sampled = 0;
            int guard = 0;
            while (sampled < 5 && guard < 500) {
                ++guard;
                int point = int(rng() % n);
                int line = int(rng() % n);
                bool on = plane.incident(point, line);
                if ((type == 1) != on)
                    continue;
                BiaffineLevi b = biaffine(plane, point, line, type);
                INFO("q = " << q << " type " << type << " P " << point << " l " << line);
                int order = type == 1 ? 2 * q * q : 2 * (q * q - 1);
                int classes = type == 1 ? q : q + 1;
                int size = type == 1 ? q : q - 1;
                CHECK(b.graph.order() == order);
                CHECK(is_regular(b.graph, q));
                REQUIRE(static_cast<int>(b.point_classes.size()) == classes);
                REQUIRE(static_cast<int>(b.line_classes.size()) == classes);
                std::set<int> covered;
                for (const auto & cls : b.point_classes) {
                    CHECK(static_cast<int>(cls.size()) == size);
                    covered.insert(cls.begin(), cls.end());
                }
                for (const auto & cls : b.line_classes) {
                    CHECK(static_cast<int>(cls.size()) == size);
                    covered.insert(cls.begin(), cls.end());
                }
                CHECK(static_cast<int>(covered.size()) == order);
                GraphMetric gi = girth(b.graph);
                CHECK(gi >= 6);
                ++sampled;
            }
            CHECK(sampled == 5);
        }
    }
}

TEST_CASE("biaffine graphs of one type are isomorphic across deletions")
{
    std::mt19937 rng(77);
    for (int q : { 2, 3, 4, 5 }) {
        ProjectivePlane plane = pg2(q);
        int n = static_cast<int>(plane.points.size());
        for (int type : { 1, 2 }) {
            std::set<std::string> forms;
            int sampled = 0, guard = 0;
            while (sampled < 5 && guard < 500) {
                ++guard;
                int point = int(rng() % n);
                int line = int(rng() % n);
                if ((type == 1) != plane.incident(point, line))
                    continue;
                forms.insert(canonical_form(biaffine(plane, point, line, type).graph).bytes);
                ++sampled;
            }
            INFO("q = " << q << " type " << type);
            CHECK(sampled == 5);
            CHECK(forms.size() == 1);
        }
    }
}

TEST_CASE("biaffine rejects mismatched type requests and bad indices")
{
    ProjectivePlane plane = pg2(3);
    int on_point = -1, on_line = -1, off_point = -1, off_line = -1;
    for (int point = 0; point < 13 && on_point < 0; ++point)
        for (int line = 0; line < 13; ++line)
            if (plane.incident(point, line)) {
                on_point = point;
                on_line = line;
                break;
            }
    for (int point = 0; point < 13 && off_point < 0; ++point)
        for (int line = 0; line < 13; ++line)
            if (! plane.incident(point, line)) {
                off_point = point;
                off_line = line;
                break;
            }
    CHECK_THROWS_AS(biaffine(plane, on_point, on_line, 2), std::invalid_argument);
    CHECK_THROWS_AS(biaffine(plane, off_point, off_line, 1), std::invalid_argument);
    CHECK_THROWS_AS(biaffine(plane, -1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(biaffine(plane, 0, 99, 1), std::invalid_argument);
    CHECK_THROWS_AS(biaffine(plane, on_point, on_line, 3), std::invalid_argument);
}

TEST_CASE("distance4_classes passes for q <= 5, both types")
{
    std::mt19937 rng(5150);
    for (int q : { 2, 3, 4, 5 }) {
        ProjectivePlane plane = pg2(q);
        int n = static_cast<int>(plane.points.size());
        for (int type : { 1, 2 }) {
            int sampled = 0, guard = 0;
            while (sampled < 3 && guard < 500) {
                ++guard;
                int point = int(rng() % n);
                int line = int(rng() % n);
                if ((type == 1) != plane.incident(point, line))
                    continue;
                BiaffineLevi b = biaffine(plane, point, line, type);
                CageReport rep = distance4_classes(b);
                INFO("q = " << q << " type " << type);
                CHECK(rep.pass);
                ++sampled;
            }
            CHECK(sampled == 3);
        }
    }
}

TEST_CASE("distance4_classes fails once an auxiliary edge is inserted")
{
    ProjectivePlane plane = pg2(4);
    int line = -1;
    for (int candidate = 0; candidate < static_cast<int>(plane.lines.size()); ++candidate)
        if (plane.incident(0, candidate)) {
            line = candidate;
            break;
        }
    BiaffineLevi b = biaffine(plane, 0, line, 1);
    REQUIRE(distance4_classes(b).pass);

    // join the first same-class pair directly
    REQUIRE(b.point_classes[0].size() >= 2);
    int u = b.point_classes[0][0], v = b.point_classes[0][1];
    auto edges = b.graph.edges();
    edges.emplace_back(std::min(u, v), std::max(u, v));
    BiaffineLevi mutated = b;
    mutated.graph = Graph::from_edges(b.graph.order(), edges);
    CageReport rep = distance4_classes(mutated);
    CHECK(! rep.pass);
    REQUIRE(! rep.failures.empty());
    bool witnessed = false;
    for (const auto & f : rep.failures)
        if (f.witness == std::vector<int>{ u, v } || f.witness == std::vector<int>{ v, u })
            witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("amalgamate with an empty spec returns the host")
{
    ProjectivePlane plane = pg2(3);
    int line = [&] {
        for (int candidate = 0; candidate < 13; ++candidate)
            if (plane.incident(0, candidate))
                return candidate;
        return -1;
    }();
    BiaffineLevi b = biaffine(plane, 0, line, 1);
    Graph same = amalgamate(b, AmalgamSpec{});
    CHECK(same.order() == b.graph.order());
    CHECK(same.edges() == b.graph.edges());
}

TEST_CASE("q=4 type 1 with one perfect matching per class is 5-regular of order 32")
{
    CoordinateFrame frame(4);
    AmalgamSpec spec;
    for (const std::string kind : { "point", "line" })
        for (int idx = 0; idx < 4; ++idx) {
            AmalgamClass cls;
            cls.kind = kind;
            cls.index = idx;
            cls.edges = { { 0, 1 }, { 2, 3 } };
            spec.classes.push_back(cls);
        }
    Graph g = amalgamate(frame.b, spec);
    CHECK(g.order() == 32);
    CHECK(is_regular(g, 5));
}

TEST_CASE("amalgamate rejects malformed specs")
{
    CoordinateFrame frame(4);

    AmalgamSpec bad_kind;
    bad_kind.classes.push_back({ "diagonal", 0, { { 0, 1 } } });
    CHECK_THROWS_AS(amalgamate(frame.b, bad_kind), std::invalid_argument);

    AmalgamSpec bad_index;
    bad_index.classes.push_back({ "point", 9, { { 0, 1 } } });
    CHECK_THROWS_AS(amalgamate(frame.b, bad_index), std::invalid_argument);

    AmalgamSpec bad_local;
    bad_local.classes.push_back({ "point", 0, { { 0, 7 } } });
    CHECK_THROWS_AS(amalgamate(frame.b, bad_local), std::invalid_argument);

    AmalgamSpec loop;
    loop.classes.push_back({ "point", 0, { { 1, 1 } } });
    CHECK_THROWS_AS(amalgamate(frame.b, loop), std::invalid_argument);

    AmalgamSpec duplicate;
    duplicate.classes.push_back({ "point", 0, { { 0, 1 }, { 1, 0 } } });
    CHECK_THROWS_AS(amalgamate(frame.b, duplicate), std::invalid_argument);

    // a single class raises only its own degrees: non-uniform gain
    AmalgamSpec lopsided;
    lopsided.classes.push_back({ "point", 0, { { 0, 1 }, { 2, 3 } } });
    CHECK_THROWS_AS(amalgamate(frame.b, lopsided), std::invalid_argument);
}

TEST_CASE("amalgam spec json roundtrip and rejection")
{
    AmalgamSpec spec;
    spec.classes.push_back({ "point", 2, { { 0, 1 }, { 2, 3 } } });
    spec.classes.push_back({ "line", 0, { { 1, 3 } } });
    AmalgamSpec back = amalgam_spec_from_json(amalgam_spec_to_json(spec));
    REQUIRE(back.classes.size() == 2);
    CHECK(back.classes[0].kind == "point");
    CHECK(back.classes[0].index == 2);
    CHECK(back.classes[0].edges == spec.classes[0].edges);
    CHECK(back.classes[1].kind == "line");

    CHECK_THROWS_AS(amalgam_spec_from_json("not json"), FormatError);
    CHECK_THROWS_AS(amalgam_spec_from_json("{}"), FormatError);
    CHECK_THROWS_AS(amalgam_spec_from_json(R"({"classes":[{"kind":"point"}]})"), FormatError);
    CHECK_THROWS_AS(amalgam_spec_from_json(R"({"classes":[{"kind":"point","index":0,"edges":[[0]]}]})"), FormatError);
}

TEST_CASE("q=7 type 1 with a 7-cycle per class: girth 5 at diameter 3")
{
    // point classes get the cycle y -> y+1; line classes step the
    // intercept by 2 so no inserted point-edge difference matches a
    // line-edge difference, which keeps every mixed cycle length >= 5.
    // the diameter cannot reach 4: cross-class pairs are already within
    // distance 3 in the host, and a 7-cycle closes same-class pairs to
    // within 3, so 98 vertices of degree 9 pin the diameter at exactly 3.
    CoordinateFrame frame(7);
    const FiniteField & f = frame.plane.field;
    std::vector<int> plus_one, plus_two;
    for (int v = 0, step = 0; step < 7; ++step, v = f.add(v, 1))
        plus_one.push_back(v);
    for (int v = 0, step = 0; step < 7; ++step, v = f.add(v, 2))
        plus_two.push_back(v);

    AmalgamSpec spec;
    frame.add_cycles(spec, "point", plus_one);
    frame.add_cycles(spec, "line", plus_two);
    Graph g = amalgamate(frame.b, spec);
    CHECK(g.order() == 98);
    CHECK(is_regular(g, 9));
    CHECK(girth(g) == 5);
    CHECK(diameter(g) == 3);
}

TEST_CASE("q=8 type 1 with an 8-cycle per class is a (10;5,4)-graph")
{
    // characteristic 2: the point cycles walk the reflected gray code
    // (steps 1, 2, 4), the line cycles use steps from {3, 5, 7}, so the
    // two difference sets are disjoint and the inserted 8-cycles have
    // diameter 4, which some same-class pair keeps in the amalgam
    CoordinateFrame frame(8);
    AmalgamSpec spec;
    frame.add_cycles(spec, "point", { 0, 1, 3, 2, 6, 7, 5, 4 });
    frame.add_cycles(spec, "line", { 0, 3, 6, 5, 2, 1, 4, 7 });
    Graph g = amalgamate(frame.b, spec);
    CHECK(g.order() == 128);
    CHECK(is_regular(g, 10));
    CHECK(verify_gd_graph(g, { 10, 5, 4 }).pass);
}

TEST_CASE("search_amalgam q=4 type 1 a=1 recovers moore-bound cages")
{
    CoordinateFrame frame(4);
    AmalgamResult result = search_amalgam(frame.b, 1, { 5, 5, 4 });
    CHECK(result.complete);
    REQUIRE(result.graphs.size() == 3);

    std::set<std::string> cage_forms;
    for (char letter = 'a'; letter <= 'g'; ++letter)
        cage_forms.insert(canonical_form(load_fixture(std::string{ "cage-5-32-" } + letter + ".g6")).bytes);

    std::multiset<unsigned long long> orders;
    for (const auto & g : result.graphs) {
        CHECK(g.order() == 32);
        CHECK(verify_gd_graph(g, { 5, 5, 4 }).pass);
        CHECK(cage_forms.count(canonical_form(g).bytes) == 1);
        orders.insert(aut_order(g).order);
    }
    CHECK(orders == std::multiset<unsigned long long>{ 48, 64, 1920 });
}

TEST_CASE("search_amalgam respects max_results and budgets")
{
    CoordinateFrame frame(4);
    AmalgamBudget caps;
    caps.max_results = 1;
    AmalgamResult capped = search_amalgam(frame.b, 1, { 5, 5, 4 }, caps);
    CHECK(capped.graphs.size() == 1);
    CHECK(! capped.complete);

    AmalgamBudget blink;
    blink.time_budget_secs = 1e-6;
    AmalgamResult rushed = search_amalgam(frame.b, 1, { 5, 5, 4 }, blink);
    CHECK(! rushed.complete);
}

TEST_CASE("search_amalgam honest empties and infeasible increments")
{
    // q=2 type 1: the host is an 8-cycle; no amalgam reaches diameter 4
    // at order 8 with degree 3, so the exhaustive search returns nothing
    ProjectivePlane plane2 = pg2(2);
    int line2 = [&] {
        for (int candidate = 0; candidate < 7; ++candidate)
            if (plane2.incident(0, candidate))
                return candidate;
        return -1;
    }();
    BiaffineLevi b2 = biaffine(plane2, 0, line2, 1);
    AmalgamResult none = search_amalgam(b2, 1, { 3, 5, 4 });
    CHECK(none.complete);
    CHECK(none.graphs.empty());

    // q=4, a=2: every 2-regular graph on a size-4 class is a 4-cycle,
    // killed by the girth prune, so the search exhausts to zero
    CoordinateFrame frame(4);
    AmalgamResult squares = search_amalgam(frame.b, 2, { 6, 5, 4 });
    CHECK(squares.complete);
    CHECK(squares.graphs.empty());

    // a >= class size cannot be regularised inside a class
    CHECK_THROWS_AS(search_amalgam(frame.b, 4, { 8, 5, 4 }), std::invalid_argument);
    // odd a times odd class size has no regular realisation
    ProjectivePlane plane3 = pg2(3);
    int line3 = [&] {
        for (int candidate = 0; candidate < 13; ++candidate)
            if (plane3.incident(0, candidate))
                return candidate;
        return -1;
    }();
    BiaffineLevi b3 = biaffine(plane3, 0, line3, 1);
    CHECK_THROWS_AS(search_amalgam(b3, 1, { 4, 5, 4 }), std::invalid_argument);
}

TEST_CASE("q=5 5-cycle amalgams recover the unique moore graph of degree 7")
{
    // for q=5 the order is 2q^2 = 50 = 1 + 7 + 7*6, so a girth-5 result
    // is forced to be a diameter-2 moore graph: pentagons on the point
    // classes and pentagrams on the line classes give exactly the
    // hoffman-singleton graph, and nothing else survives
    CoordinateFrame frame(5);
    AmalgamBudget budget;
    budget.max_results = 1;
    budget.time_budget_secs = 30.0;
    AmalgamResult result = search_amalgam(frame.b, 2, { 7, 5, 2 }, budget);
    REQUIRE(result.graphs.size() == 1);
    const Graph & g = result.graphs.front();
    CHECK(g.order() == 50);
    CHECK(is_regular(g, 7));
    CHECK(girth(g) == 5);
    CHECK(diameter(g) == 2);
    CHECK(aut_order(g).order == 252000);

    // no girth-5 insertion yields diameter 3, and up to isomorphism the
    // moore graph is the only girth-5 one at all
    AmalgamBudget wide;
    wide.time_budget_secs = 60.0;
    AmalgamResult none = search_amalgam(frame.b, 2, { 7, 5, 3 }, wide);
    CHECK(none.complete);
    CHECK(none.graphs.empty());
    AmalgamResult all = search_amalgam(frame.b, 2, { 7, 5, 2 }, wide);
    CHECK(all.complete);
    CHECK(all.graphs.size() == 1);
}
