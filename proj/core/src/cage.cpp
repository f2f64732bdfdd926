#include <gdcage/cage.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

using std::pair;
using std::vector;

namespace gdcage
{
    void validate_params(const CageParams & p)
    {
        if (p.k < 2)
            throw std::invalid_argument{ "degree must be at least 2" };
        if (p.g < 3)
            throw std::invalid_argument{ "girth must be at least 3" };
        if (p.d < 1)
            throw std::invalid_argument{ "diameter must be at least 1" };
        if (p.g / 2 > p.d)
            throw std::invalid_argument{ "girth " + std::to_string(p.g) + " needs diameter at least " + std::to_string(p.g / 2) };
    }

    long long moore_bound(int k)
    {
        if (k < 2)
            throw std::invalid_argument{ "moore_bound needs k >= 2" };
        return static_cast<long long>(k) * k + k + 2;
    }

    CageReport verify_gd_graph(const Graph & g, const CageParams & p)
    {
        validate_params(p);
        CageReport report;
        report.order = g.order();

        report.regular = true;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) != p.k) {
                report.regular = false;
                report.failures.push_back({ "regularity",
                    "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", expected " + std::to_string(p.k),
                    { v } });
                break;
            }
        if (g.order() == 0) {
            report.regular = false;
            report.failures.push_back({ "regularity", "graph is empty", {} });
        }

        vector<int> cycle;
        report.girth = girth(g, &cycle);
        if (! (report.girth == p.g)) {
            if (report.girth < p.g)
                report.failures.push_back({ "girth",
                    "cycle of length " + report.girth.to_string() + " below required " + std::to_string(p.g),
                    cycle });
            else
                report.failures.push_back({ "girth",
                    "girth is " + report.girth.to_string() + ", expected " + std::to_string(p.g),
                    {} });
        }

        pair<int, int> extremal;
        report.diameter = diameter(g, &extremal);
        if (! (report.diameter == p.d)) {
            std::string what = report.diameter.is_infinite()
                ? "no path between " + std::to_string(extremal.first) + " and " + std::to_string(extremal.second)
                : "diameter is " + report.diameter.to_string() + ", expected " + std::to_string(p.d);
            report.failures.push_back({ "diameter", what, { extremal.first, extremal.second } });
        }

        report.pass = report.failures.empty();
        return report;
    }

    pair<int, int> find_antipodal_pair(const Graph & g)
    {
        for (int r = 0; r < g.order(); ++r) {
            auto dist = distances_from(g, r);
            for (int c = 0; c < g.order(); ++c)
                if (dist[c] == 4)
                    return { r, c };
        }
        throw std::invalid_argument{ "no vertex pair at distance 4" };
    }

    int label_rank(int k, int i, int j)
    {
        return i * (k - 1) + (j < i ? j : j - 1);
    }

    MiddleGraph extract_middle(const Graph & g, int r, int c)
    {
        int n = g.order();
        if (r < 0 || r >= n || c < 0 || c >= n)
            throw std::invalid_argument{ "pole out of range" };
        auto dist_r = distances_from(g, r);
        if (! (dist_r[c] == 4))
            throw std::invalid_argument{ "poles are at distance " + dist_r[c].to_string() + ", need 4" };

        int k = g.degree(r);
        vector<int> rows, cols;
        g.neighbours(r).for_each([&](int v) { rows.push_back(v); });
        g.neighbours(c).for_each([&](int v) { cols.push_back(v); });
        if (static_cast<int>(cols.size()) != k)
            throw std::invalid_argument{ "poles have different degrees" };

        vector<bool> removed(n, false);
        removed[r] = removed[c] = true;
        for (int v : rows)
            removed[v] = true;
        for (int v : cols)
            removed[v] = true;

        vector<int> middle;
        for (int v = 0; v < n; ++v)
            if (! removed[v])
                middle.push_back(v);

        // row and column of each middle vertex via its unique neighbour
        // among N(r) and N(c)
        vector<int> row_of(n, -1), col_of(n, -1);
        for (int v : middle) {
            for (int i = 0; i < k; ++i) {
                if (g.adjacent(v, rows[i])) {
                    if (row_of[v] != -1)
                        throw std::invalid_argument{ "vertex " + std::to_string(v) + " has two row neighbours (a 4-cycle through the row pole)" };
                    row_of[v] = i;
                }
                if (g.adjacent(v, cols[i])) {
                    if (col_of[v] != -1)
                        throw std::invalid_argument{ "vertex " + std::to_string(v) + " has two column neighbours (a 4-cycle through the column pole)" };
                    col_of[v] = i;
                }
            }
            if (row_of[v] == -1 || col_of[v] == -1)
                throw std::invalid_argument{ "vertex " + std::to_string(v) + " misses a row or column neighbour (order above the moore bound)" };
        }

        // each row misses one column; rename columns so row i misses i
        vector<int> missing(k, -1);
        for (int i = 0; i < k; ++i) {
            vector<bool> seen(k, false);
            for (int v : middle)
                if (row_of[v] == i) {
                    if (seen[col_of[v]])
                        throw std::invalid_argument{ "two vertices share row " + std::to_string(i) + " and a column (a 4-cycle)" };
                    seen[col_of[v]] = true;
                }
            for (int j = 0; j < k; ++j)
                if (! seen[j]) {
                    if (missing[i] != -1)
                        throw std::invalid_argument{ "row " + std::to_string(i) + " misses two columns (order below the moore bound)" };
                    missing[i] = j;
                }
            if (missing[i] == -1)
                throw std::invalid_argument{ "row " + std::to_string(i) + " meets every column (order above the moore bound)" };
        }
        vector<int> rename(k, -1);
        for (int i = 0; i < k; ++i) {
            if (rename[missing[i]] != -1)
                throw std::invalid_argument{ "two rows miss the same column" };
            rename[missing[i]] = i;
        }

        MiddleGraph h;
        h.k = k;
        h.labels.resize(middle.size());
        vector<int> position(n, -1);
        for (int v : middle) {
            pair<int, int> label{ row_of[v], rename[col_of[v]] };
            int rank = label_rank(k, label.first, label.second);
            if (rank < 0 || rank >= static_cast<int>(middle.size()) || position[v] != -1)
                throw std::invalid_argument{ "middle labelling is not a bijection" };
            h.labels[rank] = label;
            position[v] = rank;
        }
        vector<pair<int, int>> edges;
        for (int u : middle)
            for (int v : middle)
                if (u < v && g.adjacent(u, v))
                    edges.emplace_back(position[u], position[v]);
        h.graph = Graph::from_edges(static_cast<int>(middle.size()), edges);
        return h;
    }

    CageReport check_middle(const MiddleGraph & h)
    {
        CageReport report;
        const Graph & g = h.graph;
        int k = h.k, n = g.order();
        report.order = n;

        if (k < 3)
            report.failures.push_back({ "order", "degree parameter " + std::to_string(k) + " below 3", {} });
        if (n != k * (k - 1))
            report.failures.push_back({ "order",
                "order " + std::to_string(n) + " is not k(k-1) = " + std::to_string(k * (k - 1)), {} });
        if (! report.failures.empty()) {
            report.pass = false;
            return report;
        }
        if (static_cast<int>(h.labels.size()) != n) {
            report.failures.push_back({ "labels", "label count differs from order", {} });
            report.pass = false;
            return report;
        }
        vector<bool> seen(std::max(n, 1), false);
        for (auto [i, j] : h.labels) {
            int rank = (i < 0 || i >= k || j < 0 || j >= k || i == j) ? -1 : label_rank(k, i, j);
            if (rank < 0 || seen[rank]) {
                report.failures.push_back({ "labels", "labels are not a bijection onto pairs (i, j), i != j", {} });
                report.pass = false;
                return report;
            }
            seen[rank] = true;
        }

        report.regular = is_regular(g, k - 2);
        if (! report.regular)
            for (int v = 0; v < n; ++v)
                if (g.degree(v) != k - 2) {
                    report.failures.push_back({ "regularity",
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", expected " + std::to_string(k - 2),
                        { v } });
                    break;
                }

        vector<int> cycle;
        report.girth = girth(g, &cycle);
        if (report.girth < 5)
            report.failures.push_back({ "girth", "cycle of length " + report.girth.to_string() + " below 5", cycle });

        report.diameter = diameter(g);
        if (report.diameter < 3)
            report.failures.push_back({ "diameter", "diameter " + report.diameter.to_string() + " below 3", {} });

        for (int u = 0; u < n; ++u) {
            auto dist = distances_from(g, u);
            for (int v = u + 1; v < n; ++v) {
                bool share = h.labels[u].first == h.labels[v].first || h.labels[u].second == h.labels[v].second;
                if (! share)
                    continue;
                if (g.adjacent(u, v))
                    report.failures.push_back({ "label-adjacency",
                        "adjacent vertices share a coordinate: (" + std::to_string(h.labels[u].first) + "," + std::to_string(h.labels[u].second) + ") and (" + std::to_string(h.labels[v].first) + "," + std::to_string(h.labels[v].second) + ")",
                        { u, v } });
                else if (dist[v] < 3)
                    report.failures.push_back({ "label-distance",
                        "coordinate-sharing vertices at distance " + dist[v].to_string() + ", need >= 3",
                        { u, v } });
            }
        }

        report.pass = report.failures.empty();
        return report;
    }

    Graph extend_middle(const MiddleGraph & h)
    {
        if (h.k < 3)
            throw std::invalid_argument{ "extend_middle needs k >= 3" };
        auto check = check_middle(h);
        if (! check.pass)
            throw std::invalid_argument{ "middle graph fails " + check.failures.front().check + ": " + check.failures.front().detail };

        int k = h.k, m = h.graph.order();
        int r = 0, c = k + 1, base = 2 * k + 2;
        auto row_vertex = [&](int i) { return 1 + i; };
        auto col_vertex = [&](int j) { return k + 2 + j; };

        // position middle vertices in label-lex order regardless of the
        // input vertex order
        vector<int> position(m);
        for (int v = 0; v < m; ++v)
            position[v] = base + label_rank(k, h.labels[v].first, h.labels[v].second);

        vector<pair<int, int>> edges;
        for (int i = 0; i < k; ++i) {
            edges.emplace_back(r, row_vertex(i));
            edges.emplace_back(c, col_vertex(i));
        }
        for (int v = 0; v < m; ++v) {
            edges.emplace_back(row_vertex(h.labels[v].first), position[v]);
            edges.emplace_back(col_vertex(h.labels[v].second), position[v]);
        }
        for (auto [u, v] : h.graph.edges())
            edges.emplace_back(position[u], position[v]);

        return Graph::from_edges(base + m, edges);
    }

    pair<long long, long long> middle_order_identity(int k)
    {
        if (k < 4)
            throw std::invalid_argument{ "middle_order_identity needs k >= 4" };
        return { static_cast<long long>(k) * (k - 1), moore_bound(k - 2) + 2 * (k - 2) };
    }

    MiddleGraph apply_label_symmetry(const MiddleGraph & h, const vector<int> & perm, bool transpose)
    {
        if (static_cast<int>(perm.size()) != h.k)
            throw std::invalid_argument{ "label permutation has wrong size" };
        int n = h.graph.order();
        MiddleGraph out;
        out.k = h.k;
        out.labels.resize(n);
        vector<int> position(n);
        for (int v = 0; v < n; ++v) {
            auto [i, j] = h.labels[v];
            pair<int, int> label = transpose ? pair{ perm[j], perm[i] } : pair{ perm[i], perm[j] };
            int rank = label_rank(h.k, label.first, label.second);
            out.labels[rank] = label;
            position[v] = rank;
        }
        vector<pair<int, int>> edges;
        for (auto [u, v] : h.graph.edges())
            edges.emplace_back(position[u], position[v]);
        out.graph = Graph::from_edges(n, edges);
        return out;
    }

    bool middles_label_equivalent(const MiddleGraph & a, const MiddleGraph & b)
    {
        if (a.k != b.k || a.graph.order() != b.graph.order() || a.graph.edge_count() != b.graph.edge_count())
            return false;
        int n = a.graph.order();
        vector<int> b_at_rank(n, -1);
        for (int v = 0; v < n; ++v)
            b_at_rank[label_rank(b.k, b.labels[v].first, b.labels[v].second)] = v;

        vector<int> perm(a.k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (bool transpose : { false, true }) {
                // image vertices sit at their label rank, so the edge
                // sets coincide iff every image edge appears in b
                MiddleGraph image = apply_label_symmetry(a, perm, transpose);
                bool same = true;
                for (auto [u, v] : image.graph.edges()) {
                    int bu = b_at_rank[u], bv = b_at_rank[v];
                    if (bu == -1 || bv == -1 || ! b.graph.adjacent(bu, bv)) {
                        same = false;
                        break;
                    }
                }
                if (same)
                    return true;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }
}
