#include <gdcage/canon.hpp>

#include "stabchain.hpp"

#include <algorithm>
#include <map>
#include <numeric>

using std::vector;

namespace gdcage
{
    namespace
    {
        using detail::Perm;

        using Partition = vector<vector<int>>;

        // split cells by neighbour counts into a splitter cell until
        // equitable. all choices depend only on the ordered partition
        // and counts, so refinement commutes with relabelling.
        void refine(const Graph & g, Partition & cells)
        {
            for (bool changed = true; changed;) {
                changed = false;
                for (unsigned s = 0; s < cells.size() && ! changed; ++s) {
                    Bitset512 splitter;
                    for (int v : cells[s])
                        splitter.set(v);
                    for (unsigned c = 0; c < cells.size(); ++c) {
                        if (cells[c].size() < 2)
                            continue;
                        std::map<int, vector<int>> groups;
                        for (int v : cells[c])
                            groups[g.neighbours(v).count_and(splitter)].push_back(v);
                        if (groups.size() < 2)
                            continue;
                        Partition repl;
                        for (auto & [cnt, vs] : groups)
                            repl.push_back(std::move(vs));
                        cells.erase(cells.begin() + c);
                        cells.insert(cells.begin() + c, std::make_move_iterator(repl.begin()), std::make_move_iterator(repl.end()));
                        changed = true;
                        break;
                    }
                }
            }
        }

        int first_largest_non_singleton(const Partition & cells)
        {
            int best = -1;
            std::size_t size = 1;
            for (unsigned c = 0; c < cells.size(); ++c)
                if (cells[c].size() > size) {
                    best = static_cast<int>(c);
                    size = cells[c].size();
                }
            return best;
        }

        std::string cert_of(const Graph & g, const Perm & pos)
        {
            vector<std::pair<int, int>> edges;
            edges.reserve(g.edge_count());
            for (auto [u, v] : g.edges())
                edges.emplace_back(pos[u], pos[v]);
            return graph6_encode(Graph::from_edges(g.order(), edges));
        }

        struct union_find
        {
            vector<int> up;

            explicit union_find(int n) :
                up(n)
            {
                std::iota(up.begin(), up.end(), 0);
            }

            int find(int x)
            {
                while (up[x] != x)
                    x = up[x] = up[up[x]];
                return x;
            }

            void unite(int a, int b)
            {
                up[find(a)] = find(b);
            }
        };

        struct Searcher
        {
            const Graph & g;
            int n;
            std::string best_cert, first_cert;
            Perm best_perm, first_perm;
            bool have_leaf = false;
            vector<Perm> gens;
            vector<int> path;

            explicit Searcher(const Graph & graph) :
                g(graph),
                n(graph.order())
            {
            }

            void record_automorphism(const Perm & ref, const Perm & pos)
            {
                // both relabellings give the same labelled graph, so
                // sigma = pos^-1 . ref is edge preserving
                Perm sigma = detail::compose(detail::inverse(pos), ref);
                if (detail::is_identity(sigma))
                    return;
                for (auto [u, v] : g.edges())
                    if (! g.adjacent(sigma[u], sigma[v]))
                        throw std::logic_error{ "discovered map is not an automorphism" };
                gens.push_back(std::move(sigma));
            }

            void leaf(const Partition & cells)
            {
                Perm pos(n);
                for (unsigned c = 0; c < cells.size(); ++c)
                    pos[cells[c][0]] = static_cast<int>(c);
                std::string cert = cert_of(g, pos);
                if (! have_leaf) {
                    have_leaf = true;
                    first_cert = best_cert = cert;
                    first_perm = best_perm = pos;
                    return;
                }
                if (cert == first_cert)
                    record_automorphism(first_perm, pos);
                else if (cert == best_cert)
                    record_automorphism(best_perm, pos);
                if (cert < best_cert) {
                    best_cert = std::move(cert);
                    best_perm = std::move(pos);
                }
            }

            // orbits of the subgroup generated by the automorphisms
            // found so far that fix every individualised vertex
            union_find path_orbits()
            {
                union_find uf{ n };
                for (const auto & sigma : gens) {
                    bool fixes = true;
                    for (int x : path)
                        if (sigma[x] != x) {
                            fixes = false;
                            break;
                        }
                    if (fixes)
                        for (int x = 0; x < n; ++x)
                            uf.unite(x, sigma[x]);
                }
                return uf;
            }

            void dfs(Partition cells)
            {
                refine(g, cells);
                int t = first_largest_non_singleton(cells);
                if (t == -1) {
                    leaf(cells);
                    return;
                }
                vector<int> explored;
                for (int v : cells[t]) {
                    if (! explored.empty()) {
                        // a pruned branch is the image of an explored one,
                        // so it adds no new leaf certificates
                        union_find uf = path_orbits();
                        bool pruned = false;
                        for (int u : explored)
                            if (uf.find(u) == uf.find(v)) {
                                pruned = true;
                                break;
                            }
                        if (pruned)
                            continue;
                    }
                    explored.push_back(v);

                    Partition child;
                    child.reserve(cells.size() + 1);
                    for (unsigned c = 0; c < cells.size(); ++c) {
                        if (static_cast<int>(c) == t) {
                            child.push_back({ v });
                            vector<int> rest;
                            for (int x : cells[c])
                                if (x != v)
                                    rest.push_back(x);
                            child.push_back(std::move(rest));
                        }
                        else
                            child.push_back(cells[c]);
                    }
                    path.push_back(v);
                    dfs(std::move(child));
                    path.pop_back();
                }
            }

            void run()
            {
                if (n == 0) {
                    best_cert = graph6_encode(g);
                    have_leaf = true;
                    return;
                }
                vector<int> all(n);
                std::iota(all.begin(), all.end(), 0);
                dfs(Partition{ all });
            }
        };
    }

    CanonicalForm canonical_form(const Graph & g)
    {
        Searcher s{ g };
        s.run();
        return CanonicalForm{ std::move(s.best_cert) };
    }

    bool are_isomorphic(const Graph & a, const Graph & b)
    {
        if (a.order() != b.order() || a.edge_count() != b.edge_count())
            return false;
        return canonical_form(a) == canonical_form(b);
    }

    AutReport aut_order(const Graph & g)
    {
        if (g.order() > 64)
            throw std::invalid_argument{ "aut_order supports at most 64 vertices" };
        Searcher s{ g };
        s.run();
        detail::StabChain chain{ g.order() };
        chain.build(s.gens);
        return AutReport{ chain.order(), std::move(s.gens) };
    }
}
