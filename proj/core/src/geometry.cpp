#include <gdcage/geometry.hpp>

#include <gdcage/canon.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using std::string;
using std::vector;

namespace gdcage
{
    namespace
    {
        // polynomials over gf(p), coefficients constant term first
        auto poly_mul(const vector<int> & a, const vector<int> & b, int p) -> vector<int>
        {
            vector<int> out(a.size() + b.size() - 1, 0);
            for (unsigned i = 0; i < a.size(); ++i)
                for (unsigned j = 0; j < b.size(); ++j)
                    out[i + j] = (out[i + j] + a[i] * b[j]) % p;
            return out;
        }

        auto poly_mod(vector<int> a, const vector<int> & m, int p) -> vector<int>
        {
            // m is monic so no coefficient inversion is needed
            for (int i = int(a.size()) - 1; i >= int(m.size()) - 1; --i) {
                int c = a[i];
                if (c == 0)
                    continue;
                for (unsigned j = 0; j < m.size(); ++j)
                    a[i - int(m.size()) + 1 + j] = ((a[i - int(m.size()) + 1 + j] - c * m[j]) % p + p) % p;
            }
            a.resize(m.size() - 1);
            return a;
        }

        auto poly_is_zero(const vector<int> & a) -> bool
        {
            return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
        }

        // every monic polynomial of the given degree, in lexicographic
        // order of the constant-first coefficient vector
        auto monic_polys(int degree, int p) -> vector<vector<int>>
        {
            vector<vector<int>> out;
            vector<int> coeffs(degree, 0);
            for (;;) {
                vector<int> poly = coeffs;
                poly.push_back(1);
                out.push_back(poly);
                int i = degree - 1;
                while (i >= 0 && coeffs[i] == p - 1)
                    coeffs[i--] = 0;
                if (i < 0)
                    break;
                ++coeffs[i];
            }
            return out;
        }

        auto is_irreducible(const vector<int> & f, int p) -> bool
        {
            int degree = int(f.size()) - 1;
            for (int d = 1; 2 * d <= degree; ++d)
                for (const auto & g : monic_polys(d, p))
                    if (poly_is_zero(poly_mod(f, g, p)))
                        return false;
            return true;
        }
    }

    FiniteField::FiniteField(int p, int e) :
        p_(p),
        e_(e),
        q_(1)
    {
        for (int i = 0; i < e; ++i)
            q_ *= p;

        for (const auto & f : monic_polys(e, p))
            if (is_irreducible(f, p)) {
                modulus_ = f;
                break;
            }
        if (modulus_.empty())
            throw std::logic_error("no irreducible modulus found");

        auto decode = [&](int a) {
            vector<int> digits(e, 0);
            for (int i = 0; i < e; ++i, a /= p)
                digits[i] = a % p;
            return digits;
        };
        auto encode = [&](const vector<int> & digits) {
            int a = 0;
            for (int i = e - 1; i >= 0; --i)
                a = a * p + digits[i];
            return a;
        };

        add_.resize(q_ * q_);
        mul_.resize(q_ * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            vector<int> da = decode(a);
            vector<int> minus(e);
            for (int i = 0; i < e; ++i)
                minus[i] = (p - da[i]) % p;
            neg_[a] = encode(minus);
            for (int b = 0; b < q_; ++b) {
                vector<int> db = decode(b);
                vector<int> sum(e);
                for (int i = 0; i < e; ++i)
                    sum[i] = (da[i] + db[i]) % p;
                add_[a * q_ + b] = encode(sum);
                mul_[a * q_ + b] = encode(poly_mod(poly_mul(da, db, p), modulus_, p));
            }
        }
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) {
                    inv_[a] = b;
                    break;
                }
        for (int a = 1; a < q_; ++a)
            if (inv_[a] == 0)
                throw std::logic_error("field element without inverse");
    }

    auto FiniteField::gf(int q) -> FiniteField
    {
        if (q < 2 || q > 32)
            throw std::invalid_argument("field order must lie between 2 and 32");
        for (int p = 2; p <= q; ++p) {
            bool prime = true;
            for (int d = 2; d * d <= p; ++d)
                if (p % d == 0)
                    prime = false;
            if (! prime || q % p != 0)
                continue;
            int e = 0, rest = q;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            if (rest != 1)
                throw std::invalid_argument("field order must be a prime power");
            return FiniteField{ p, e };
        }
        throw std::invalid_argument("field order must be a prime power");
    }

    auto FiniteField::inv(int a) const -> int
    {
        if (a == 0)
            throw std::invalid_argument("zero has no inverse");
        return inv_[a];
    }

    auto ProjectivePlane::incident(int point, int line) const -> bool
    {
        const auto & a = points.at(point);
        const auto & b = lines.at(line);
        int dot = 0;
        for (int i = 0; i < 3; ++i)
            dot = field.add(dot, field.mul(a[i], b[i]));
        return dot == 0;
    }

    auto ProjectivePlane::line_through(int a, int b) const -> int
    {
        if (a == b)
            throw std::invalid_argument("line_through needs two distinct points");
        for (unsigned m = 0; m < lines.size(); ++m)
            if (incident(a, int(m)) && incident(b, int(m)))
                return int(m);
        throw std::logic_error("no line through the given points");
    }

    auto pg2(int q) -> ProjectivePlane
    {
        FiniteField field = FiniteField::gf(q);
        vector<std::array<int, 3>> triples;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    int first = a != 0 ? a : b != 0 ? b : c;
                    if (first == 1)
                        triples.push_back({ a, b, c });
                }
        return ProjectivePlane{ std::move(field), triples, triples };
    }

    auto levi(const ProjectivePlane & plane) -> Graph
    {
        int n = int(plane.points.size());
        vector<std::pair<int, int>> edges;
        for (int x = 0; x < n; ++x)
            for (int m = 0; m < n; ++m)
                if (plane.incident(x, m))
                    edges.emplace_back(x, n + m);
        return Graph::from_edges(2 * n, edges);
    }

    auto biaffine(const ProjectivePlane & plane, int point, int line, int want_type) -> BiaffineLevi
    {
        int n = int(plane.points.size());
        if (point < 0 || point >= n)
            throw std::invalid_argument("point index out of range");
        if (line < 0 || line >= n)
            throw std::invalid_argument("line index out of range");
        if (want_type != 1 && want_type != 2)
            throw std::invalid_argument("plane type must be 1 or 2");

        int type = plane.incident(point, line) ? 1 : 2;
        if (type != want_type)
            throw std::invalid_argument("the chosen point and line give a type-" + std::to_string(type) + " plane");

        BiaffineLevi b;
        b.q = plane.q();
        b.plane_type = type;
        b.deleted_point = point;
        b.deleted_line = line;

        vector<int> pmap(n, -1), lmap(n, -1);
        for (int x = 0; x < n; ++x)
            if (x != point && ! plane.incident(x, line)) {
                pmap[x] = int(b.point_ids.size());
                b.point_ids.push_back(x);
            }
        for (int m = 0; m < n; ++m)
            if (m != line && ! plane.incident(point, m)) {
                lmap[m] = int(b.line_ids.size());
                b.line_ids.push_back(m);
            }

        int npts = int(b.point_ids.size());
        vector<std::pair<int, int>> edges;
        for (int x : b.point_ids)
            for (int m : b.line_ids)
                if (plane.incident(x, m))
                    edges.emplace_back(pmap[x], npts + lmap[m]);
        b.graph = Graph::from_edges(npts + int(b.line_ids.size()), edges);

        // surviving points grouped by the deleted line joining them to
        // the deleted point, surviving lines by their crossing with the
        // deleted line; empty groups (the deleted pair itself) drop out
        for (int m = 0; m < n; ++m) {
            if (lmap[m] != -1 || ! plane.incident(point, m))
                continue;
            vector<int> cls;
            for (int x : b.point_ids)
                if (plane.incident(x, m))
                    cls.push_back(pmap[x]);
            if (! cls.empty())
                b.point_classes.push_back(std::move(cls));
        }
        for (int x = 0; x < n; ++x) {
            if (pmap[x] != -1 || ! plane.incident(x, line))
                continue;
            vector<int> cls;
            for (int m : b.line_ids)
                if (plane.incident(x, m))
                    cls.push_back(npts + lmap[m]);
            if (! cls.empty())
                b.line_classes.push_back(std::move(cls));
        }

        return b;
    }

    auto distance4_classes(const BiaffineLevi & b) -> CageReport
    {
        const Graph & g = b.graph;
        int n = g.order();

        vector<int> cid(n, -1);
        int next = 0;
        for (const auto & group : { std::cref(b.point_classes), std::cref(b.line_classes) })
            for (const auto & cls : group.get()) {
                for (int v : cls)
                    cid.at(v) = next;
                ++next;
            }

        CageReport report;
        report.order = n;
        report.regular = is_regular(g, b.q);
        report.girth = girth(g);
        report.diameter = diameter(g);

        for (int v : cid)
            if (v == -1) {
                report.failures.push_back({ "classes", "classes do not cover every vertex", {} });
                report.pass = false;
                return report;
            }

        for (int u = 0; u < n; ++u) {
            auto dist = distances_from(g, u);
            for (int v = u + 1; v < n; ++v) {
                bool same = cid[u] == cid[v];
                bool far = dist[v] == GraphMetric::finite(4);
                if (same && ! far)
                    report.failures.push_back({ "distance4", "same-class vertices at distance " + dist[v].to_string(), { u, v } });
                else if (far && ! same)
                    report.failures.push_back({ "distance4", "cross-class vertices at distance 4", { u, v } });
            }
        }

        report.pass = report.failures.empty();
        return report;
    }

    auto amalgam_spec_to_json(const AmalgamSpec & spec) -> string
    {
        nlohmann::json out;
        out["classes"] = nlohmann::json::array();
        for (const auto & cls : spec.classes) {
            nlohmann::json edges = nlohmann::json::array();
            for (auto [u, v] : cls.edges)
                edges.push_back({ u, v });
            out["classes"].push_back({ { "kind", cls.kind }, { "index", cls.index }, { "edges", edges } });
        }
        return out.dump(2);
    }

    auto amalgam_spec_from_json(std::string_view text) -> AmalgamSpec
    {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw FormatError{ string{ "invalid amalgam json: " } + e.what() };
        }

        if (! doc.is_object() || ! doc.contains("classes") || ! doc["classes"].is_array())
            throw FormatError{ "amalgam spec needs a 'classes' array" };

        AmalgamSpec spec;
        for (const auto & entry : doc["classes"]) {
            if (! entry.is_object() || ! entry.contains("kind") || ! entry["kind"].is_string()
                    || ! entry.contains("index") || ! entry["index"].is_number_integer()
                    || ! entry.contains("edges") || ! entry["edges"].is_array())
                throw FormatError{ "each class needs kind, index and edges" };
            AmalgamClass cls;
            cls.kind = entry["kind"].get<string>();
            if (cls.kind != "point" && cls.kind != "line")
                throw FormatError{ "class kind must be 'point' or 'line'" };
            cls.index = entry["index"].get<int>();
            for (const auto & edge : entry["edges"]) {
                if (! edge.is_array() || edge.size() != 2 || ! edge[0].is_number_integer() || ! edge[1].is_number_integer())
                    throw FormatError{ "each edge must be a pair of integers" };
                cls.edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
            }
            spec.classes.push_back(std::move(cls));
        }
        return spec;
    }

    auto amalgamate(const BiaffineLevi & b, const AmalgamSpec & spec) -> Graph
    {
        auto edges = b.graph.edges();
        vector<int> gained(b.graph.order(), 0);

        for (const auto & cls : spec.classes) {
            if (cls.kind != "point" && cls.kind != "line")
                throw std::invalid_argument("unknown class kind '" + cls.kind + "'");
            const auto & side = cls.kind == "point" ? b.point_classes : b.line_classes;
            if (cls.index < 0 || cls.index >= int(side.size()))
                throw std::invalid_argument("class index out of range");
            const auto & members = side[cls.index];
            for (auto [u, v] : cls.edges) {
                if (u < 0 || u >= int(members.size()) || v < 0 || v >= int(members.size()))
                    throw std::invalid_argument("local vertex out of range");
                if (u == v)
                    throw std::invalid_argument("amalgam edges may not be loops");
                int gu = members[u], gv = members[v];
                if (b.graph.adjacent(gu, gv))
                    throw std::invalid_argument("amalgam edge already present in the host");
                edges.emplace_back(gu, gv);
                ++gained[gu];
                ++gained[gv];
            }
        }

        for (int v = 0; v < b.graph.order(); ++v)
            if (gained[v] != gained[0])
                throw std::invalid_argument("amalgam must raise every degree equally");

        Graph out = Graph::from_edges(b.graph.order(), edges);
        if (out.edge_count() != int(edges.size()))
            throw std::invalid_argument("duplicate edge in amalgam spec");
        return out;
    }

    namespace
    {
        // every a-regular edge set on s labelled vertices: repeatedly
        // pick the least deficient vertex and list its partners in
        // increasing order, so each graph appears exactly once
        auto regular_edge_sets(int s, int a) -> vector<vector<std::pair<int, int>>>
        {
            vector<vector<std::pair<int, int>>> out;
            vector<int> deg(s, 0);
            vector<unsigned> adj(s, 0);
            vector<std::pair<int, int>> edges;

            auto walk = [&](auto && self, int u, int from) -> void {
                while (u < s && deg[u] == a)
                    ++u;
                if (u == s) {
                    out.push_back(edges);
                    return;
                }
                for (int v = std::max(from, u + 1); v < s; ++v) {
                    if (deg[v] == a || (adj[u] >> v & 1))
                        continue;
                    edges.emplace_back(u, v);
                    ++deg[u];
                    ++deg[v];
                    adj[u] |= 1u << v;
                    adj[v] |= 1u << u;
                    if (deg[u] == a)
                        self(self, u + 1, 0);
                    else
                        self(self, u, v + 1);
                    adj[v] &= ~(1u << u);
                    adj[u] &= ~(1u << v);
                    --deg[v];
                    --deg[u];
                    edges.pop_back();
                }
            };
            walk(walk, 0, 0);
            return out;
        }
    }

    auto search_amalgam(const BiaffineLevi & b, int a, const CageParams & params, const AmalgamBudget & budget) -> AmalgamResult
    {
        validate_params(params);
        if (a < 1)
            throw std::invalid_argument("amalgam degree must be at least 1");
        if (budget.max_results && *budget.max_results < 1)
            throw std::invalid_argument("max_results must be positive");
        if (budget.time_budget_secs && *budget.time_budget_secs <= 0)
            throw std::invalid_argument("time budget must be positive");

        // short cycles mix point-side and line-side insertions, so
        // alternating the sides lets the girth prune fire near the root
        // instead of after every same-side choice is already placed
        vector<const vector<int> *> classes;
        for (std::size_t i = 0; i < std::max(b.point_classes.size(), b.line_classes.size()); ++i) {
            if (i < b.point_classes.size())
                classes.push_back(&b.point_classes[i]);
            if (i < b.line_classes.size())
                classes.push_back(&b.line_classes[i]);
        }

        std::map<int, vector<vector<std::pair<int, int>>>> choices_by_size;
        for (const auto * cls : classes) {
            int s = int(cls->size());
            if (a >= s)
                throw std::invalid_argument("amalgam degree must be below the class size");
            if (a * s % 2 != 0)
                throw std::invalid_argument("no regular graph of odd total degree exists");
            if (s > 32)
                throw std::invalid_argument("classes of more than 32 vertices are not supported");
            if (! choices_by_size.count(s))
                choices_by_size[s] = regular_edge_sets(s, a);
        }

        auto deadline = std::chrono::steady_clock::time_point::max();
        if (budget.time_budget_secs)
            deadline = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(*budget.time_budget_secs));

        std::map<CanonicalForm, Graph> found;
        bool stopped = false;
        auto edges = b.graph.edges();

        auto walk = [&](auto && self, unsigned level) -> void {
            if (stopped)
                return;
            if (std::chrono::steady_clock::now() >= deadline) {
                stopped = true;
                return;
            }

            Graph current = Graph::from_edges(b.graph.order(), edges);
            if (girth(current) < params.g)
                return;

            if (level == classes.size()) {
                if (! verify_gd_graph(current, params).pass)
                    return;
                CanonicalForm form = canonical_form(current);
                if (found.emplace(std::move(form), std::move(current)).second
                        && budget.max_results && found.size() >= unsigned(*budget.max_results))
                    stopped = true;
                return;
            }

            const auto & members = *classes[level];
            for (const auto & local : choices_by_size[int(members.size())]) {
                for (auto [u, v] : local)
                    edges.emplace_back(members[u], members[v]);
                self(self, level + 1);
                edges.resize(edges.size() - local.size());
                if (stopped)
                    return;
            }
        };
        walk(walk, 0);

        AmalgamResult result;
        result.complete = ! stopped;
        for (auto & [form, graph] : found)
            result.graphs.push_back(std::move(graph));
        return result;
    }
}
