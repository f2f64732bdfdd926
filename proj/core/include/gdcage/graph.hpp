#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gdcage
{
    // hard cap on graph order, eight 64-bit words per adjacency row
    inline constexpr int max_order = 512;

    // thrown on malformed graph6 / edge-list input
    struct FormatError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // distance-like quantity: a non-negative integer or infinity.
    // infinity compares greater than every finite value.
    class GraphMetric
    {
    private:
        static constexpr std::uint32_t inf_raw = 0xffffffffu;
        std::uint32_t raw_ = inf_raw;

    public:
        constexpr GraphMetric() = default;

        static constexpr GraphMetric finite(int v)
        {
            GraphMetric m;
            m.raw_ = static_cast<std::uint32_t>(v);
            return m;
        }

        static constexpr GraphMetric infinite()
        {
            return GraphMetric{};
        }

        constexpr bool is_infinite() const { return raw_ == inf_raw; }

        constexpr int value() const
        {
            if (is_infinite())
                throw std::logic_error{ "value() on infinite metric" };
            return static_cast<int>(raw_);
        }

        friend constexpr bool operator==(GraphMetric a, GraphMetric b) { return a.raw_ == b.raw_; }
        friend constexpr auto operator<=>(GraphMetric a, GraphMetric b) { return a.raw_ <=> b.raw_; }
        friend constexpr bool operator==(GraphMetric a, int b) { return ! a.is_infinite() && static_cast<int>(a.raw_) == b; }
        friend constexpr bool operator<(GraphMetric a, int b) { return ! a.is_infinite() && static_cast<int>(a.raw_) < b; }
        friend constexpr bool operator>=(GraphMetric a, int b) { return ! (a < b); }

        std::string to_string() const
        {
            return is_infinite() ? "inf" : std::to_string(raw_);
        }
    };

    // fixed-width bitset sized for max_order vertices
    class Bitset512
    {
    private:
        std::array<std::uint64_t, max_order / 64> words_{};

    public:
        void set(int i) { words_[i >> 6] |= (std::uint64_t{ 1 } << (i & 63)); }
        void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{ 1 } << (i & 63)); }
        bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

        int count() const;
        int count_and(const Bitset512 & other) const;
        bool intersects(const Bitset512 & other) const;
        bool any() const;

        Bitset512 & operator|=(const Bitset512 & other);
        Bitset512 & operator&=(const Bitset512 & other);
        Bitset512 & subtract(const Bitset512 & other);

        // call f(v) for every set bit, ascending
        template <typename F>
        void for_each(F && f) const
        {
            for (unsigned w = 0; w < words_.size(); ++w) {
                std::uint64_t bits = words_[w];
                while (bits) {
                    int v = static_cast<int>(w * 64) + std::countr_zero(bits);
                    f(v);
                    bits &= bits - 1;
                }
            }
        }

        friend bool operator==(const Bitset512 &, const Bitset512 &) = default;
    };

    // immutable simple undirected graph on 0..n-1
    class Graph
    {
    private:
        int n_ = 0;
        int edge_count_ = 0;
        std::vector<Bitset512> adj_;

    public:
        Graph() = default;

        // deduplicates repeated edges silently; loops and out-of-range
        // endpoints are errors
        static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
        static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

        int order() const { return n_; }
        int edge_count() const { return edge_count_; }

        bool adjacent(int u, int v) const { return adj_[u].test(v); }
        const Bitset512 & neighbours(int v) const { return adj_[v]; }
        int degree(int v) const { return adj_[v].count(); }

        // sorted (u, v) pairs with u < v
        std::vector<std::pair<int, int>> edges() const;
    };

    // length of a shortest cycle, infinite for forests. if cycle_out is
    // given and the girth is finite, it receives the vertices of one
    // shortest cycle in traversal order.
    GraphMetric girth(const Graph & g, std::vector<int> * cycle_out = nullptr);

    // max eccentricity. infinite when disconnected, 0 when n <= 1. if
    // pair_out is given it receives a vertex pair realising the result
    // (an unreachable pair when disconnected).
    GraphMetric diameter(const Graph & g, std::pair<int, int> * pair_out = nullptr);

    std::vector<GraphMetric> distances_from(const Graph & g, int v);

    bool is_regular(const Graph & g, int k);

    // bit-exact graph6, no header, no trailing newline
    std::string graph6_encode(const Graph & g);

    // accepts an optional ">>graph6<<" header and trailing newline;
    // anything else malformed raises FormatError
    Graph graph6_decode(std::string_view text);

    // plain text: first line "n m", then m lines "u v", 0-based
    std::string edge_list_encode(const Graph & g);
    Graph edge_list_decode(std::string_view text);

    // autodetect graph6 vs edge-list by first line shape
    Graph read_graph(std::string_view text);
}
