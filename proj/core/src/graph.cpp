#include <gdcage/graph.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

using std::pair;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace gdcage
{
    int Bitset512::count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    int Bitset512::count_and(const Bitset512 & other) const
    {
        int c = 0;
        for (unsigned i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    bool Bitset512::intersects(const Bitset512 & other) const
    {
        for (unsigned i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    bool Bitset512::any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    Bitset512 & Bitset512::operator|=(const Bitset512 & other)
    {
        for (unsigned i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    Bitset512 & Bitset512::operator&=(const Bitset512 & other)
    {
        for (unsigned i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    Bitset512 & Bitset512::subtract(const Bitset512 & other)
    {
        for (unsigned i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    Graph Graph::from_edges(int n, std::span<const pair<int, int>> edges)
    {
        if (n < 0 || n > max_order)
            throw std::invalid_argument{ "graph order must be between 0 and " + std::to_string(max_order) };

        Graph g;
        g.n_ = n;
        g.adj_.resize(n);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument{ "edge endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "}" };
            if (u == v)
                throw std::invalid_argument{ "loop at vertex " + std::to_string(u) };
            if (! g.adj_[u].test(v)) {
                g.adj_[u].set(v);
                g.adj_[v].set(u);
                ++g.edge_count_;
            }
        }
        return g;
    }

    Graph Graph::from_edges(int n, std::initializer_list<pair<int, int>> edges)
    {
        return from_edges(n, std::span<const pair<int, int>>{ edges.begin(), edges.size() });
    }

    vector<pair<int, int>> Graph::edges() const
    {
        vector<pair<int, int>> result;
        result.reserve(edge_count_);
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (u < v)
                    result.emplace_back(u, v);
            });
        return result;
    }

    namespace
    {
        // bfs distances into dist (-1 unreachable), optional parents
        void bfs(const Graph & g, int src, vector<int> & dist, vector<int> * parent = nullptr)
        {
            dist.assign(g.order(), -1);
            if (parent)
                parent->assign(g.order(), -1);
            vector<int> queue;
            queue.reserve(g.order());
            queue.push_back(src);
            dist[src] = 0;
            for (unsigned head = 0; head < queue.size(); ++head) {
                int v = queue[head];
                g.neighbours(v).for_each([&](int x) {
                    if (dist[x] == -1) {
                        dist[x] = dist[v] + 1;
                        if (parent)
                            (*parent)[x] = v;
                        queue.push_back(x);
                    }
                });
            }
        }

        // shortest cycle candidate seen from root s, or -1
        int girth_from(const Graph & g, int s, int best, vector<int> & dist, vector<int> & parent)
        {
            bfs(g, s, dist, &parent);
            int local = -1;
            for (int v = 0; v < g.order(); ++v) {
                if (dist[v] == -1 || 2 * dist[v] >= (local == -1 ? best : std::min(best, local)))
                    continue;
                g.neighbours(v).for_each([&](int x) {
                    if (dist[x] == -1 || x == parent[v] || v == parent[x])
                        return;
                    int cand = dist[v] + dist[x] + 1;
                    if (local == -1 || cand < local)
                        local = cand;
                });
            }
            return local;
        }
    }

    GraphMetric girth(const Graph & g, vector<int> * cycle_out)
    {
        int best = g.order() + 1, best_root = -1;
        vector<int> dist, parent;
        for (int s = 0; s < g.order(); ++s) {
            int local = girth_from(g, s, best, dist, parent);
            if (local != -1 && local < best) {
                best = local;
                best_root = s;
            }
        }
        if (best_root == -1)
            return GraphMetric::infinite();

        if (cycle_out) {
            // rebuild the witness at the best root: the two tree paths
            // meet only at the root there, so the walk is a simple cycle
            bfs(g, best_root, dist, &parent);
            int bu = -1, bx = -1;
            for (int v = 0; v < g.order() && bu == -1; ++v) {
                if (dist[v] == -1)
                    continue;
                g.neighbours(v).for_each([&](int x) {
                    if (bu != -1 || dist[x] == -1 || x == parent[v] || v == parent[x])
                        return;
                    if (dist[v] + dist[x] + 1 == best) {
                        bu = v;
                        bx = x;
                    }
                });
            }
            vector<int> up, down;
            for (int v = bu; v != -1; v = parent[v])
                up.push_back(v);
            for (int v = bx; v != best_root; v = parent[v])
                down.push_back(v);
            cycle_out->assign(up.rbegin(), up.rend());
            cycle_out->insert(cycle_out->end(), down.begin(), down.end());
            auto & cyc = *cycle_out;
            bool ok = static_cast<int>(cyc.size()) == best;
            for (unsigned i = 0; ok && i < cyc.size(); ++i) {
                ok = g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]);
                for (unsigned j = i + 1; ok && j < cyc.size(); ++j)
                    ok = cyc[i] != cyc[j];
            }
            if (! ok)
                throw std::logic_error{ "girth witness reconstruction failed" };
        }
        return GraphMetric::finite(best);
    }

    GraphMetric diameter(const Graph & g, pair<int, int> * pair_out)
    {
        if (g.order() <= 1) {
            if (pair_out)
                *pair_out = { 0, 0 };
            return GraphMetric::finite(0);
        }
        int best = 0;
        pair<int, int> arg{ 0, 0 };
        vector<int> dist;
        for (int s = 0; s < g.order(); ++s) {
            bfs(g, s, dist);
            for (int v = 0; v < g.order(); ++v) {
                if (dist[v] == -1) {
                    if (pair_out)
                        *pair_out = { s, v };
                    return GraphMetric::infinite();
                }
                if (dist[v] > best) {
                    best = dist[v];
                    arg = { s, v };
                }
            }
        }
        if (pair_out)
            *pair_out = arg;
        return GraphMetric::finite(best);
    }

    vector<GraphMetric> distances_from(const Graph & g, int v)
    {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument{ "source vertex out of range" };
        vector<int> dist;
        bfs(g, v, dist);
        vector<GraphMetric> result(g.order());
        for (int u = 0; u < g.order(); ++u)
            result[u] = dist[u] == -1 ? GraphMetric::infinite() : GraphMetric::finite(dist[u]);
        return result;
    }

    bool is_regular(const Graph & g, int k)
    {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) != k)
                return false;
        return true;
    }

    namespace
    {
        constexpr int g6_lo = 63, g6_hi = 126;

        long body_bits(long n)
        {
            return n * (n - 1) / 2;
        }
    }

    string graph6_encode(const Graph & g)
    {
        int n = g.order();
        string out;
        if (n <= 62)
            out.push_back(static_cast<char>(g6_lo + n));
        else {
            out.push_back(static_cast<char>(g6_hi));
            out.push_back(static_cast<char>(g6_lo + ((n >> 12) & 63)));
            out.push_back(static_cast<char>(g6_lo + ((n >> 6) & 63)));
            out.push_back(static_cast<char>(g6_lo + (n & 63)));
        }
        int acc = 0, nbits = 0;
        auto push_bit = [&](int b) {
            acc = (acc << 1) | b;
            if (++nbits == 6) {
                out.push_back(static_cast<char>(g6_lo + acc));
                acc = nbits = 0;
            }
        };
        // upper triangle, column by column
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                push_bit(g.adjacent(i, j) ? 1 : 0);
        if (nbits)
            out.push_back(static_cast<char>(g6_lo + (acc << (6 - nbits))));
        return out;
    }

    Graph graph6_decode(string_view text)
    {
        if (text.starts_with(">>graph6<<"))
            text.remove_prefix(10);
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
            text.remove_suffix(1);
        if (text.empty())
            throw FormatError{ "graph6: empty input" };

        for (char c : text)
            if (static_cast<unsigned char>(c) < g6_lo || static_cast<unsigned char>(c) > g6_hi)
                throw FormatError{ "graph6: byte outside 63..126" };

        long n;
        std::size_t pos;
        if (text[0] != char(g6_hi)) {
            n = text[0] - g6_lo;
            pos = 1;
        }
        else if (text.size() >= 2 && text[1] == char(g6_hi)) {
            if (text.size() < 8)
                throw FormatError{ "graph6: truncated length field" };
            n = 0;
            for (int i = 2; i < 8; ++i)
                n = (n << 6) | (text[i] - g6_lo);
            pos = 8;
        }
        else {
            if (text.size() < 4)
                throw FormatError{ "graph6: truncated length field" };
            n = 0;
            for (int i = 1; i < 4; ++i)
                n = (n << 6) | (text[i] - g6_lo);
            if (n <= 62)
                throw FormatError{ "graph6: malformed length field" };
            pos = 4;
        }
        if (n > max_order)
            throw FormatError{ "graph6: order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order) };

        long bits = body_bits(n);
        std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
        if (text.size() - pos != want)
            throw FormatError{ text.size() - pos > want ? "graph6: trailing garbage" : "graph6: body too short" };

        vector<pair<int, int>> edges;
        long bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((text[pos + bit / 6] - g6_lo) >> (5 - bit % 6) & 1)
                    edges.emplace_back(i, j);
        // padding must be zero
        for (long b = bits; b < static_cast<long>(want) * 6; ++b)
            if ((text[pos + b / 6] - g6_lo) >> (5 - b % 6) & 1)
                throw FormatError{ "graph6: nonzero padding" };

        return Graph::from_edges(static_cast<int>(n), edges);
    }

    string edge_list_encode(const Graph & g)
    {
        std::ostringstream out;
        out << g.order() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }

    Graph edge_list_decode(string_view text)
    {
        std::istringstream in{ string{ text } };
        long n, m;
        if (! (in >> n >> m))
            throw FormatError{ "edge list: expected \"n m\" header" };
        if (n < 0 || n > max_order || m < 0)
            throw FormatError{ "edge list: header out of range" };
        vector<pair<int, int>> edges;
        edges.reserve(m);
        for (long i = 0; i < m; ++i) {
            long u, v;
            if (! (in >> u >> v))
                throw FormatError{ "edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i) };
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw FormatError{ "edge list: endpoint out of range in edge " + std::to_string(i) };
            if (u == v)
                throw FormatError{ "edge list: loop at vertex " + std::to_string(u) };
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        string rest;
        if (in >> rest)
            throw FormatError{ "edge list: trailing garbage" };
        return Graph::from_edges(static_cast<int>(n), edges);
    }

    Graph read_graph(string_view text)
    {
        auto eol = text.find('\n');
        string_view first = text.substr(0, eol == string_view::npos ? text.size() : eol);
        bool digits = ! first.empty();
        for (char c : first)
            if (! (std::isdigit(static_cast<unsigned char>(c)) || c == ' ' || c == '\t' || c == '\r'))
                digits = false;
        return digits ? edge_list_decode(text) : graph6_decode(text);
    }
}
