#include <gdcage/cage.hpp>
#include <gdcage/canon.hpp>
#include <gdcage/geometry.hpp>
#include <gdcage/graph.hpp>
#include <gdcage/search.hpp>

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

using namespace gdcage;

namespace
{
    Graph load_fixture(const std::string & file)
    {
        std::ifstream in{ std::string{ GDCAGE_FIXTURES_DIR "/" } + file, std::ios::binary };
        std::ostringstream buf;
        buf << in.rdbuf();
        return read_graph(buf.str());
    }

    const Graph & cage6()
    {
        static Graph g = load_fixture("cage-6-44.g6");
        return g;
    }

    const Graph & cage5()
    {
        static Graph g = load_fixture("cage-5-32-g.g6");
        return g;
    }
}

static void bm_girth(benchmark::State & state)
{
    const Graph & g = cage6();
    for (auto _ : state)
        benchmark::DoNotOptimize(girth(g));
}
BENCHMARK(bm_girth);

static void bm_diameter(benchmark::State & state)
{
    const Graph & g = cage6();
    for (auto _ : state)
        benchmark::DoNotOptimize(diameter(g));
}
BENCHMARK(bm_diameter);

static void bm_canonical_form_44(benchmark::State & state)
{
    const Graph & g = cage6();
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(bm_canonical_form_44);

static void bm_aut_order_32(benchmark::State & state)
{
    const Graph & g = cage5();
    for (auto _ : state)
        benchmark::DoNotOptimize(aut_order(g));
}
BENCHMARK(bm_aut_order_32);

static void bm_verify_44(benchmark::State & state)
{
    const Graph & g = cage6();
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_gd_graph(g, { 6, 5, 4 }));
}
BENCHMARK(bm_verify_44);

static void bm_search_k3(benchmark::State & state)
{
    for (auto _ : state) {
        SearchConfig cfg;
        cfg.k = 3;
        benchmark::DoNotOptimize(enumerate_cages(cfg));
    }
}
BENCHMARK(bm_search_k3);

static void bm_search_k4(benchmark::State & state)
{
    for (auto _ : state) {
        SearchConfig cfg;
        cfg.k = 4;
        benchmark::DoNotOptimize(enumerate_cages(cfg));
    }
}
BENCHMARK(bm_search_k4)->Unit(benchmark::kMillisecond);

static void bm_graph6_roundtrip(benchmark::State & state)
{
    std::string text = graph6_encode(cage6());
    for (auto _ : state)
        benchmark::DoNotOptimize(graph6_encode(graph6_decode(text)));
}
BENCHMARK(bm_graph6_roundtrip);

static void bm_levi_q9(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(levi(pg2(9)));
}
BENCHMARK(bm_levi_q9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
