#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace gdcage::detail
{
    using Perm = std::vector<int>;

    inline Perm compose(const Perm & a, const Perm & b)
    {
        // (a then-after b applied first): result[x] = a[b[x]]
        Perm r(a.size());
        for (unsigned x = 0; x < a.size(); ++x)
            r[x] = a[b[x]];
        return r;
    }

    inline Perm inverse(const Perm & a)
    {
        Perm r(a.size());
        for (unsigned x = 0; x < a.size(); ++x)
            r[a[x]] = static_cast<int>(x);
        return r;
    }

    inline bool is_identity(const Perm & a)
    {
        for (unsigned x = 0; x < a.size(); ++x)
            if (a[x] != static_cast<int>(x))
                return false;
        return true;
    }

    inline int min_moved(const Perm & a)
    {
        for (unsigned x = 0; x < a.size(); ++x)
            if (a[x] != static_cast<int>(x))
                return static_cast<int>(x);
        return -1;
    }

    // deterministic schreier-sims stabiliser chain. group order is the
    // product of transversal sizes, so elements are never enumerated.
    class StabChain
    {
    private:
        int n_;
        std::vector<int> base_;
        std::vector<std::vector<Perm>> gens_;
        std::vector<std::map<int, Perm>> transversal_;

        void add_level(int point)
        {
            base_.push_back(point);
            gens_.emplace_back();
            transversal_.emplace_back();
        }

        void rebuild_transversal(unsigned level)
        {
            auto & t = transversal_[level];
            t.clear();
            Perm id(n_);
            for (int x = 0; x < n_; ++x)
                id[x] = x;
            t.emplace(base_[level], id);
            std::vector<int> frontier{ base_[level] };
            while (! frontier.empty()) {
                int p = frontier.back();
                frontier.pop_back();
                for (const auto & s : gens_[level]) {
                    int q = s[p];
                    if (! t.contains(q)) {
                        t.emplace(q, compose(s, t.at(p)));
                        frontier.push_back(q);
                    }
                }
            }
        }

        // strip g through levels >= from; returns residue and drop level
        std::pair<Perm, unsigned> sift_from(unsigned from, Perm g) const
        {
            for (unsigned i = from; i < base_.size(); ++i) {
                int img = g[base_[i]];
                auto it = transversal_[i].find(img);
                if (it == transversal_[i].end())
                    return { std::move(g), i };
                g = compose(inverse(it->second), g);
            }
            return { std::move(g), static_cast<unsigned>(base_.size()) };
        }

        void complete_level(unsigned level)
        {
            for (bool again = true; again;) {
                again = false;
                rebuild_transversal(level);
                for (const auto & [p, tp] : transversal_[level]) {
                    for (const auto & s : gens_[level]) {
                        Perm schreier = compose(inverse(transversal_[level].at(s[p])), compose(s, tp));
                        if (is_identity(schreier))
                            continue;
                        auto [h, drop] = sift_from(level + 1, std::move(schreier));
                        if (is_identity(h))
                            continue;
                        if (drop == base_.size())
                            add_level(min_moved(h));
                        for (unsigned m = level + 1; m <= drop; ++m)
                            gens_[m].push_back(h);
                        // the new generator reaches every level down to
                        // drop, so each of them needs recompleting,
                        // deepest first so sifting stays reliable
                        for (unsigned m = drop; m > level; --m)
                            complete_level(m);
                        again = true;
                        break;
                    }
                    if (again)
                        break;
                }
            }
        }

    public:
        explicit StabChain(int n) :
            n_(n)
        {
        }

        void build(const std::vector<Perm> & generators)
        {
            std::vector<Perm> todo;
            for (const auto & g : generators)
                if (! is_identity(g))
                    todo.push_back(g);
            if (todo.empty())
                return;

            add_level(min_moved(todo.front()));
            gens_[0] = todo;
            // a generator fixing the whole base prefix belongs deeper too
            for (unsigned level = 0; level < base_.size(); ++level) {
                std::vector<Perm> fixing;
                for (const auto & g : gens_[level])
                    if (g[base_[level]] == base_[level])
                        fixing.push_back(g);
                if (fixing.empty())
                    break;
                add_level(min_moved(fixing.front()));
                gens_[level + 1] = std::move(fixing);
            }
            for (unsigned level = base_.size(); level-- > 0;)
                complete_level(level);

            // every input generator must sift to identity
            for (const auto & g : todo)
                if (! is_identity(sift_from(0, g).first))
                    throw std::logic_error{ "stabiliser chain incomplete" };
        }

        unsigned long long order() const
        {
            unsigned long long o = 1;
            for (const auto & t : transversal_)
                o *= t.size();
            return o;
        }
    };
}
