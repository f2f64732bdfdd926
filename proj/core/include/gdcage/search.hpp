#pragma once

#include <gdcage/cage.hpp>
#include <gdcage/canon.hpp>
#include <gdcage/graph.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace gdcage
{
    struct SearchConfig
    {
        int k = 3;
        // cap on emitted middles (enumerate_middles) or on distinct
        // cages (enumerate_cages); hitting it clears the complete flag
        std::optional<long long> max_solutions;
        std::optional<double> time_budget_secs;
        int workers = 1;
        bool emit_middle_only = false;
        // subtrees done / total, for progress reporting
        std::function<void(std::size_t, std::size_t)> progress;
    };

    void validate_config(const SearchConfig & cfg);

    struct MiddleStats
    {
        unsigned long long emitted = 0;
        bool complete = true;
    };

    // every labelled graph satisfying the middle-graph properties, one
    // representative per orbit of the label-symmetry group, in a
    // deterministic order when workers == 1. the callback may return
    // false to stop early.
    MiddleStats enumerate_middles(const SearchConfig & cfg, const std::function<bool(const MiddleGraph &)> & emit);

    struct CageRecord
    {
        CanonicalForm form;
        Graph graph;
        unsigned long long aut_order = 1;
        // every emitted middle whose extension reached this cage
        std::vector<MiddleGraph> middles;
    };

    struct SearchResult
    {
        // distinct up to isomorphism, sorted by canonical form
        std::vector<CageRecord> cages;
        unsigned long long middles_emitted = 0;
        bool complete = true;
    };

    // extend every middle, deduplicate by canonical form and attach
    // automorphism group orders
    SearchResult enumerate_cages(const SearchConfig & cfg);
}
