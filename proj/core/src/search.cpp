#include <gdcage/search.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

using std::pair;
using std::uint64_t;
using std::vector;

namespace gdcage
{
    void validate_config(const SearchConfig & cfg)
    {
        if (cfg.k < 3)
            throw std::invalid_argument{ "search needs k >= 3" };
        if (cfg.k > 7)
            throw std::invalid_argument{ "search supports k <= 7 (cage order beyond 64 otherwise)" };
        if (cfg.workers < 1)
            throw std::invalid_argument{ "workers must be at least 1" };
        if (cfg.max_solutions && *cfg.max_solutions < 1)
            throw std::invalid_argument{ "max_solutions must be positive" };
        if (cfg.time_budget_secs && *cfg.time_budget_secs <= 0)
            throw std::invalid_argument{ "time budget must be positive" };
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        // the fixed vertex set: labels (i, j) with i != j in lex order,
        // and the symmetry group acting on it. vertex count k(k-1) fits
        // one 64-bit mask for k <= 7.
        struct LabelSpace
        {
            int k, n;
            vector<pair<int, int>> labels;
            vector<uint64_t> compatible; // may become adjacent
            vector<uint64_t> shares;     // same row or same column
            vector<vector<std::uint8_t>> group;

            explicit LabelSpace(int kk) :
                k(kk),
                n(kk * (kk - 1))
            {
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        if (i != j)
                            labels.emplace_back(i, j);

                compatible.assign(n, 0);
                shares.assign(n, 0);
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        if (u == v)
                            continue;
                        if (labels[u].first != labels[v].first && labels[u].second != labels[v].second)
                            compatible[u] |= uint64_t{ 1 } << v;
                        else
                            shares[u] |= uint64_t{ 1 } << v;
                    }

                vector<int> pi(k);
                std::iota(pi.begin(), pi.end(), 0);
                do {
                    for (bool transpose : { false, true }) {
                        vector<std::uint8_t> map(n);
                        bool identity = true;
                        for (int t = 0; t < n; ++t) {
                            auto [i, j] = labels[t];
                            int a = transpose ? pi[j] : pi[i];
                            int b = transpose ? pi[i] : pi[j];
                            map[t] = static_cast<std::uint8_t>(label_rank(k, a, b));
                            identity = identity && map[t] == t;
                        }
                        if (! identity)
                            group.push_back(std::move(map));
                    }
                } while (std::next_permutation(pi.begin(), pi.end()));
            }
        };

        struct Shared
        {
            const LabelSpace & ls;
            const SearchConfig & cfg;
            const std::function<bool(const MiddleGraph &)> & emit;
            std::optional<Clock::time_point> deadline;
            std::atomic<bool> stop{ false };
            std::atomic<bool> early{ false };
            std::atomic<std::size_t> next_task{ 0 };
            std::size_t done_tasks = 0;
            unsigned long long emitted = 0;
            std::mutex mutex;
        };

        struct Walker
        {
            Shared & sh;
            const LabelSpace & ls;
            int deg_target;
            uint64_t adj[64] = {};
            int deg[64] = {};
            vector<pair<int, int>> edges;
            vector<vector<pair<int, int>>> * capture = nullptr;
            unsigned ticks = 0;

            explicit Walker(Shared & shared) :
                sh(shared),
                ls(shared.ls),
                deg_target(shared.ls.k - 2)
            {
            }

            bool out_of_time()
            {
                if ((++ticks & 1023) == 0 && sh.deadline && Clock::now() > *sh.deadline) {
                    sh.early.store(true);
                    sh.stop.store(true);
                }
                return sh.stop.load(std::memory_order_relaxed);
            }

            bool can_add(int v, int w) const
            {
                if (! (ls.compatible[v] >> w & 1) || deg[w] >= deg_target)
                    return false;
                if (adj[v] & adj[w])
                    return false; // triangle
                if ((adj[v] & ls.shares[w]) || (adj[w] & ls.shares[v]))
                    return false; // common neighbour for a sharing pair
                uint64_t nv = adj[v];
                while (nv) {
                    int x = std::countr_zero(nv);
                    nv &= nv - 1;
                    if (adj[x] & adj[w])
                        return false; // 4-cycle
                }
                return true;
            }

            void add(int v, int w)
            {
                adj[v] |= uint64_t{ 1 } << w;
                adj[w] |= uint64_t{ 1 } << v;
                ++deg[v];
                ++deg[w];
                edges.emplace_back(v, w);
            }

            void remove(int v, int w)
            {
                adj[v] &= ~(uint64_t{ 1 } << w);
                adj[w] &= ~(uint64_t{ 1 } << v);
                --deg[v];
                --deg[w];
                edges.pop_back();
            }

            // lexicographic comparison of the permuted adjacency matrix
            // against the current one over the decided prefix (rows
            // 0..v). true means the image is strictly smaller, so no
            // extension of this prefix is the orbit representative.
            bool image_smaller(const std::uint8_t * g, int v) const
            {
                for (int a = 0; a <= v; ++a) {
                    int ga = g[a];
                    for (int b = a + 1; b < ls.n; ++b) {
                        int gb = g[b];
                        if (std::min(ga, gb) > v)
                            return false; // image bit undecided
                        int bit_a = adj[a] >> b & 1;
                        int bit_g = adj[ga] >> gb & 1;
                        if (bit_a != bit_g)
                            return bit_g < bit_a;
                    }
                }
                return false;
            }

            bool prefix_minimal(int v) const
            {
                for (const auto & g : ls.group)
                    if (image_smaller(g.data(), v))
                        return false;
                return true;
            }

            // cheap degree feasibility for vertices whose row is not
            // yet complete
            bool future_feasible(int v) const
            {
                uint64_t above = ls.n >= 64 ? ~uint64_t{ 0 } : (uint64_t{ 1 } << ls.n) - 1;
                above &= ~((uint64_t{ 2 } << v) - 1);
                uint64_t full = 0;
                for (int u = v + 1; u < ls.n; ++u)
                    if (deg[u] >= deg_target)
                        full |= uint64_t{ 1 } << u;
                for (int u = v + 1; u < ls.n; ++u) {
                    int room = std::popcount(ls.compatible[u] & ~adj[u] & above & ~full);
                    if (deg[u] + room < deg_target)
                        return false;
                }
                return true;
            }

            void emit_solution()
            {
                MiddleGraph h;
                h.k = ls.k;
                h.labels = ls.labels;
                vector<pair<int, int>> es;
                for (int u = 0; u < ls.n; ++u) {
                    uint64_t later = adj[u] & ~((uint64_t{ 2 } << u) - 1);
                    while (later) {
                        int w = std::countr_zero(later);
                        later &= later - 1;
                        es.emplace_back(u, w);
                    }
                }
                h.graph = Graph::from_edges(ls.n, es);
                if (! check_middle(h).pass)
                    throw std::logic_error{ "enumerated graph fails the middle checks" };

                std::lock_guard<std::mutex> guard{ sh.mutex };
                if (sh.stop.load())
                    return;
                ++sh.emitted;
                bool more = sh.emit(h);
                bool capped = sh.cfg.max_solutions && sh.emitted >= static_cast<unsigned long long>(*sh.cfg.max_solutions);
                if (! more || capped) {
                    sh.early.store(true);
                    sh.stop.store(true);
                }
            }

            void choose(int v, int start, int need)
            {
                if (out_of_time())
                    return;
                if (need == 0) {
                    if (! prefix_minimal(v) || ! future_feasible(v))
                        return;
                    descend(v + 1);
                    return;
                }
                for (int w = start; w + need <= ls.n; ++w)
                    if (can_add(v, w)) {
                        add(v, w);
                        choose(v, w + 1, need - 1);
                        remove(v, w);
                        if (sh.stop.load(std::memory_order_relaxed))
                            return;
                    }
            }

            void descend(int v)
            {
                if (capture && v == 2) {
                    capture->push_back(edges);
                    return;
                }
                if (v == ls.n) {
                    emit_solution();
                    return;
                }
                choose(v, v + 1, deg_target - deg[v]);
            }

            void replay(const vector<pair<int, int>> & prefix)
            {
                for (auto [v, w] : prefix)
                    add(v, w);
            }
        };
    }

    MiddleStats enumerate_middles(const SearchConfig & cfg, const std::function<bool(const MiddleGraph &)> & emit)
    {
        validate_config(cfg);
        LabelSpace ls{ cfg.k };
        Shared sh{ ls, cfg, emit };
        if (cfg.time_budget_secs)
            sh.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>{ *cfg.time_budget_secs });

        // rows 0 and 1 define the frontier of independent subtrees
        vector<vector<pair<int, int>>> tasks;
        {
            Walker scout{ sh };
            scout.capture = &tasks;
            scout.descend(0);
        }
        std::size_t total = tasks.size();
        if (cfg.progress)
            cfg.progress(0, total);

        auto work = [&]() {
            while (! sh.stop.load()) {
                std::size_t t = sh.next_task.fetch_add(1);
                if (t >= tasks.size())
                    break;
                Walker walker{ sh };
                walker.replay(tasks[t]);
                walker.descend(2);
                std::lock_guard<std::mutex> guard{ sh.mutex };
                ++sh.done_tasks;
                if (cfg.progress)
                    cfg.progress(sh.done_tasks, total);
            }
        };

        if (cfg.workers == 1)
            work();
        else {
            vector<std::thread> pool;
            for (int w = 0; w < cfg.workers; ++w)
                pool.emplace_back(work);
            for (auto & th : pool)
                th.join();
        }

        return MiddleStats{ sh.emitted, ! sh.early.load() };
    }

    SearchResult enumerate_cages(const SearchConfig & cfg)
    {
        validate_config(cfg);
        SearchConfig inner = cfg;
        inner.max_solutions.reset();
        inner.emit_middle_only = false;

        SearchResult result;
        std::map<CanonicalForm, std::size_t> index;

        // the emit callback runs under the enumeration lock
        auto stats = enumerate_middles(inner, [&](const MiddleGraph & h) {
            Graph cage = extend_middle(h);
            CanonicalForm form = canonical_form(cage);
            auto it = index.find(form);
            if (it == index.end()) {
                CageRecord record;
                record.form = form;
                record.graph = cage;
                record.aut_order = aut_order(cage).order;
                record.middles.push_back(h);
                index.emplace(std::move(form), result.cages.size());
                result.cages.push_back(std::move(record));
                if (cfg.max_solutions && static_cast<long long>(result.cages.size()) >= *cfg.max_solutions)
                    return false;
            }
            else
                result.cages[it->second].middles.push_back(h);
            return true;
        });

        result.middles_emitted = stats.emitted;
        result.complete = stats.complete;
        std::sort(result.cages.begin(), result.cages.end(),
            [](const CageRecord & a, const CageRecord & b) { return a.form < b.form; });
        return result;
    }
}
