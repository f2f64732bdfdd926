#pragma once

#include <gdcage/graph.hpp>

#include <string>
#include <utility>
#include <vector>

namespace gdcage
{
    // target degree, girth and diameter. a graph of girth g has two
    // vertices at distance floor(g/2) on any shortest cycle, so
    // floor(g/2) <= d is required for the triple to be satisfiable.
    struct CageParams
    {
        int k, g, d;
    };

    void validate_params(const CageParams & p);

    // smallest conceivable order of a k-regular graph with girth 5 and
    // diameter 4: 1 + k + k(k-1) neighbourhood layers plus one more
    // vertex, which the degree count forces. k >= 2.
    long long moore_bound(int k);

    struct CheckFailure
    {
        std::string check;
        std::string detail;
        std::vector<int> witness;
    };

    struct CageReport
    {
        bool pass = true;
        int order = 0;
        bool regular = false;
        GraphMetric girth;
        GraphMetric diameter;
        std::vector<CheckFailure> failures;
    };

    // regularity, girth and diameter checks with witnesses; pass iff
    // failures is empty
    CageReport verify_gd_graph(const Graph & g, const CageParams & p);

    // lexicographically least ordered pair at distance exactly 4;
    // raises if no pair exists
    std::pair<int, int> find_antipodal_pair(const Graph & g);

    // graph induced on the vertices outside {r, c} and their two
    // neighbourhoods, with each vertex labelled by (row, column) =
    // (index of its neighbour among N(r), index among N(c)). columns are
    // renamed so that row i misses exactly the pair (i, i).
    struct MiddleGraph
    {
        int k = 0;
        Graph graph;
        // labels[v] = (i, j), i != j, vertices in label-lex order when
        // produced by extract_middle or the enumerator
        std::vector<std::pair<int, int>> labels;
    };

    MiddleGraph extract_middle(const Graph & g, int r, int c);

    // the five middle-graph properties: order k(k-1), (k-2)-regular,
    // girth >= 5, diameter >= 3, and coordinate-sharing vertices
    // non-adjacent and at distance >= 3
    CageReport check_middle(const MiddleGraph & h);

    // rebuild the full graph around h: r = 0, rows 1..k, c = k+1,
    // columns k+2..2k+1, middle vertices at 2k+2+rank in label-lex
    // order. requires check_middle to pass and k >= 3.
    Graph extend_middle(const MiddleGraph & h);

    // order of the middle graph vs the same count written through the
    // moore bound two degrees down: k(k-1) = bound(k-2) + 2(k-2), k >= 4
    std::pair<long long, long long> middle_order_identity(int k);

    // position of label (i, j) in label-lex order over {(i, j) : i != j}
    int label_rank(int k, int i, int j);

    // middle graphs are considered equal up to relabelling by a common
    // permutation of both coordinates and/or swapping the coordinates
    MiddleGraph apply_label_symmetry(const MiddleGraph & h, const std::vector<int> & perm, bool transpose);
    bool middles_label_equivalent(const MiddleGraph & a, const MiddleGraph & b);
}
