#pragma once

#include <gdcage/graph.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gdcage
{
    // graph6 string of the canonically relabelled graph. equal bytes
    // iff isomorphic inputs (of equal order, which graph6 embeds).
    struct CanonicalForm
    {
        std::string bytes;

        friend bool operator==(const CanonicalForm &, const CanonicalForm &) = default;
        friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
    };

    struct AutReport
    {
        unsigned long long order = 1;
        // generating set, each a vertex map held as an image array
        std::vector<std::vector<int>> generators;
    };

    CanonicalForm canonical_form(const Graph & g);

    bool are_isomorphic(const Graph & a, const Graph & b);

    // exact automorphism group order via a stabiliser chain over the
    // generators found during canonical search. order <= 64 vertices.
    AutReport aut_order(const Graph & g);
}
