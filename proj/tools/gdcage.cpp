#include <gdcage/cage.hpp>
#include <gdcage/canon.hpp>
#include <gdcage/geometry.hpp>
#include <gdcage/graph.hpp>
#include <gdcage/search.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace gdcage;

using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    auto slurp(const string & path) -> string
    {
        if (path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            return buf.str();
        }
        std::ifstream in{ path, std::ios::binary };
        if (! in)
            throw FormatError{ "cannot open '" + path + "'" };
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    auto load_graph(const string & path) -> Graph
    {
        return read_graph(slurp(path));
    }

    class Timer
    {
    private:
        std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

    public:
        auto ms() const -> double
        {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        }
    };

    auto metric_json(GraphMetric m) -> json
    {
        if (m.is_infinite())
            return nullptr;
        return m.value();
    }

    auto failures_json(const vector<CheckFailure> & failures) -> json
    {
        json out = json::array();
        for (const auto & f : failures)
            out.push_back({ { "check", f.check }, { "detail", f.detail }, { "witness", f.witness } });
        return out;
    }

    auto report_json(const string & command, json params, bool pass, const Graph & g,
            const vector<CheckFailure> & failures, double wall_ms,
            std::optional<unsigned long long> aut = std::nullopt) -> json
    {
        json metrics;
        metrics["order"] = g.order();
        metrics["regular_degree"] = nullptr;
        if (g.order() > 0 && is_regular(g, g.degree(0)))
            metrics["regular_degree"] = g.degree(0);
        metrics["girth"] = metric_json(girth(g));
        metrics["diameter"] = metric_json(diameter(g));
        if (aut)
            metrics["aut_order"] = *aut;
        return json{
            { "command", command },
            { "params", std::move(params) },
            { "verdict", pass ? "pass" : "fail" },
            { "metrics", metrics },
            { "failures", failures_json(failures) },
            { "wall_time_ms", wall_ms },
        };
    }

    auto lex_labels(int k) -> vector<std::pair<int, int>>
    {
        vector<std::pair<int, int>> labels;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j)
                    labels.emplace_back(i, j);
        return labels;
    }

    auto make_progress() -> std::function<void(std::size_t, std::size_t)>
    {
        auto last = std::make_shared<std::size_t>(0);
        return [last](std::size_t done, std::size_t total) {
            std::size_t step = std::max<std::size_t>(1, total / 100);
            if (done == 0 || done == total || done - *last >= step) {
                *last = done;
                std::cerr << "progress: " << done << "/" << total << " subtrees\n";
            }
        };
    }

    // pick the least point and line matching the wanted incidence when
    // the caller leaves either unspecified
    auto resolve_biaffine(int q, int type, std::optional<int> point, std::optional<int> line) -> BiaffineLevi
    {
        ProjectivePlane plane = pg2(q);
        int n = static_cast<int>(plane.points.size());
        int p = -1, l = -1;
        if (point && line) {
            p = *point;
            l = *line;
        }
        else if (point) {
            p = *point;
            if (p < 0 || p >= n)
                throw std::invalid_argument{ "point index out of range" };
            for (int m = 0; m < n && l == -1; ++m)
                if (plane.incident(p, m) == (type == 1))
                    l = m;
        }
        else if (line) {
            l = *line;
            if (l < 0 || l >= n)
                throw std::invalid_argument{ "line index out of range" };
            for (int x = 0; x < n && p == -1; ++x)
                if (plane.incident(x, l) == (type == 1))
                    p = x;
        }
        else {
            p = 0;
            for (int m = 0; m < n && l == -1; ++m)
                if (plane.incident(p, m) == (type == 1))
                    l = m;
        }
        return biaffine(plane, p, l, type);
    }

    auto run_verify(int k, int g, int d, const string & file) -> int
    {
        Timer timer;
        CageParams params{ k, g, d };
        validate_params(params);
        Graph graph = load_graph(file);
        CageReport rep = verify_gd_graph(graph, params);
        std::optional<unsigned long long> aut;
        if (rep.pass && graph.order() <= 64)
            aut = aut_order(graph).order;
        json jparams{ { "k", k }, { "g", g }, { "d", d }, { "input", file } };
        std::cout << report_json("verify", jparams, rep.pass, graph, rep.failures, timer.ms(), aut).dump(2) << "\n";
        return rep.pass ? 0 : 1;
    }

    auto run_middle_check(int k, const string & file) -> int
    {
        Timer timer;
        MiddleGraph h{ k, load_graph(file), lex_labels(k) };
        CageReport rep = check_middle(h);
        json jparams{ { "k", k }, { "input", file } };
        std::cout << report_json("middle-check", jparams, rep.pass, h.graph, rep.failures, timer.ms()).dump(2) << "\n";
        return rep.pass ? 0 : 1;
    }

    auto run_middle_extend(int k, const string & file) -> int
    {
        Timer timer;
        MiddleGraph h{ k, load_graph(file), lex_labels(k) };
        CageReport rep = check_middle(h);
        if (! rep.pass) {
            json jparams{ { "k", k }, { "input", file } };
            std::cout << report_json("middle-extend", jparams, false, h.graph, rep.failures, timer.ms()).dump(2) << "\n";
            return 1;
        }
        std::cout << graph6_encode(extend_middle(h)) << "\n";
        return 0;
    }

    auto run_search(const SearchConfig & cfg, const json & jparams) -> int
    {
        Timer timer;
        validate_config(cfg);
        if (cfg.emit_middle_only) {
            MiddleStats stats = enumerate_middles(cfg, [](const MiddleGraph & h) {
                std::cout << graph6_encode(h.graph) << "\n";
                return true;
            });
            json summary{
                { "command", "search" },
                { "params", jparams },
                { "counts", { { "middles", stats.emitted } } },
                { "complete", stats.complete },
                { "wall_time_ms", timer.ms() },
            };
            std::cout << summary.dump(2) << "\n";
            return stats.emitted > 0 ? 0 : 1;
        }

        SearchResult result = enumerate_cages(cfg);
        json aut_orders = json::array();
        for (const auto & rec : result.cages) {
            std::cout << rec.form.bytes << "\n";
            aut_orders.push_back(rec.aut_order);
        }
        json summary{
            { "command", "search" },
            { "params", jparams },
            { "counts", { { "cages", result.cages.size() }, { "middles", result.middles_emitted } } },
            { "aut_orders", aut_orders },
            { "complete", result.complete },
            { "wall_time_ms", timer.ms() },
        };
        std::cout << summary.dump(2) << "\n";
        return result.cages.empty() ? 1 : 0;
    }

    auto run_search_amalgam(const BiaffineLevi & b, int a, const CageParams & params,
            const AmalgamBudget & budget, const json & jparams) -> int
    {
        Timer timer;
        AmalgamResult result = search_amalgam(b, a, params, budget);
        json aut_orders = json::array();
        bool small = true;
        for (const auto & g : result.graphs) {
            std::cout << canonical_form(g).bytes << "\n";
            if (g.order() <= 64)
                aut_orders.push_back(aut_order(g).order);
            else
                small = false;
        }
        json summary{
            { "command", "geom-search-amalgam" },
            { "params", jparams },
            { "counts", { { "graphs", result.graphs.size() } } },
            { "complete", result.complete },
            { "wall_time_ms", timer.ms() },
        };
        if (small)
            summary["aut_orders"] = aut_orders;
        std::cout << summary.dump(2) << "\n";
        return result.graphs.empty() ? 1 : 0;
    }

    auto run_hog_fetch(long long id) -> int
    {
        httplib::Client client{ "https://houseofgraphs.org" };
        client.set_connection_timeout(15);
        client.set_read_timeout(30);
        client.set_follow_location(true);
        auto res = client.Get("/api/graphs/" + std::to_string(id));
        if (! res) {
            std::cerr << "error: network failure: " << httplib::to_string(res.error()) << "\n";
            return 3;
        }
        if (res->status != 200) {
            std::cerr << "error: http status " << res->status << "\n";
            return 3;
        }
        json doc = json::parse(res->body, nullptr, false);
        if (doc.is_discarded() || ! doc.is_object() || ! doc.contains("graphString") || ! doc["graphString"].is_string()) {
            std::cerr << "error: unexpected response shape, wanted a json object with a graphString\n";
            return 3;
        }
        Graph g = graph6_decode(doc["graphString"].get<string>());
        std::cout << graph6_encode(g) << "\n";
        return 0;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{ "construct, verify and enumerate girth-5 diameter-4 cages" };
    app.require_subcommand(1);

    int moore_k = 0;
    auto * moore_cmd = app.add_subcommand("moore", "print the least possible order k^2+k+2 of a (k;5,4)-graph");
    moore_cmd->add_option("k", moore_k, "degree, at least 2")->required();

    int verify_k = 0, verify_g = 0, verify_d = 0;
    string verify_file;
    auto * verify_cmd = app.add_subcommand("verify", "check that a graph is k-regular with girth g and diameter d");
    verify_cmd->add_option("--k", verify_k, "degree")->required();
    verify_cmd->add_option("--g", verify_g, "girth")->required();
    verify_cmd->add_option("--d", verify_d, "diameter")->required();
    verify_cmd->add_option("file", verify_file, "graph6 or edge-list file, - for stdin")->required();

    string girth_file;
    auto * girth_cmd = app.add_subcommand("girth", "print the girth of a graph, inf if acyclic");
    girth_cmd->add_option("file", girth_file, "graph6 or edge-list file, - for stdin")->required();

    string diameter_file;
    auto * diameter_cmd = app.add_subcommand("diameter", "print the diameter of a graph, inf if disconnected");
    diameter_cmd->add_option("file", diameter_file, "graph6 or edge-list file, - for stdin")->required();

    string aut_file;
    auto * aut_cmd = app.add_subcommand("aut", "print the automorphism group order of a graph");
    aut_cmd->add_option("file", aut_file, "graph6 or edge-list file, - for stdin")->required();

    string canon_file;
    auto * canon_cmd = app.add_subcommand("canon", "print the canonical graph6 form of a graph");
    canon_cmd->add_option("file", canon_file, "graph6 or edge-list file, - for stdin")->required();

    auto * middle_cmd = app.add_subcommand("middle", "middle graphs of girth-5 diameter-4 cages");
    middle_cmd->require_subcommand(1);

    string mex_file;
    std::optional<int> mex_row, mex_col;
    auto * mex_cmd = middle_cmd->add_subcommand("extract", "cut the middle graph out of a cage around a distance-4 pair");
    mex_cmd->add_option("file", mex_file, "graph6 or edge-list file, - for stdin")->required();
    auto * mex_row_opt = mex_cmd->add_option("--row", mex_row, "first pole, defaults to the least distance-4 pair");
    auto * mex_col_opt = mex_cmd->add_option("--col", mex_col, "second pole");
    mex_row_opt->needs(mex_col_opt);
    mex_col_opt->needs(mex_row_opt);

    int mch_k = 0;
    string mch_file;
    auto * mch_cmd = middle_cmd->add_subcommand("check", "verify the middle-graph properties, vertices in label-lex order");
    mch_cmd->add_option("--k", mch_k, "degree of the target cage")->required();
    mch_cmd->add_option("file", mch_file, "graph6 or edge-list file, - for stdin")->required();

    int mxt_k = 0;
    string mxt_file;
    auto * mxt_cmd = middle_cmd->add_subcommand("extend", "rebuild the order k^2+k+2 cage candidate around a middle graph");
    mxt_cmd->add_option("--k", mxt_k, "degree of the target cage")->required();
    mxt_cmd->add_option("file", mxt_file, "graph6 or edge-list file, - for stdin")->required();

    SearchConfig search_cfg;
    auto * search_cmd = app.add_subcommand("search", "enumerate all (k;5,4)-cages of order k^2+k+2");
    search_cmd->add_option("--k", search_cfg.k, "degree")->required();
    search_cmd->add_option("--workers", search_cfg.workers, "parallel workers, default 1");
    search_cmd->add_option("--budget", search_cfg.time_budget_secs, "wall-clock budget in seconds");
    search_cmd->add_option("--max", search_cfg.max_solutions, "stop after this many results");
    search_cmd->add_flag("--middle-only", search_cfg.emit_middle_only, "emit middle graphs without extending them");

    auto * geom_cmd = app.add_subcommand("geom", "projective planes, levi graphs and amalgams");
    geom_cmd->require_subcommand(1);

    int pg2_q = 0;
    auto * pg2_cmd = geom_cmd->add_subcommand("pg2", "print the points and lines of pg(2,q) as json");
    pg2_cmd->add_option("--q", pg2_q, "prime power at most 32")->required();

    int levi_q = 0;
    auto * levi_cmd = geom_cmd->add_subcommand("levi", "print the point-line incidence graph of pg(2,q)");
    levi_cmd->add_option("--q", levi_q, "prime power at most 32")->required();

    int bia_q = 0, bia_type = 0;
    std::optional<int> bia_point, bia_line;
    bool bia_classes = false;
    auto * bia_cmd = geom_cmd->add_subcommand("biaffine", "levi graph of a biaffine plane, type 1 deletes an incident pair");
    bia_cmd->add_option("--q", bia_q, "prime power at most 32")->required();
    bia_cmd->add_option("--type", bia_type, "1 for a point on the line, 2 for a point off it")->required();
    bia_cmd->add_option("--point", bia_point, "deleted point, defaults to the least valid choice");
    bia_cmd->add_option("--line", bia_line, "deleted line, defaults to the least valid choice");
    bia_cmd->add_flag("--classes", bia_classes, "also print the distance-4 class structure as json");

    int ama_q = 0, ama_type = 0;
    std::optional<int> ama_point, ama_line;
    string ama_spec;
    auto * ama_cmd = geom_cmd->add_subcommand("amalgamate", "add class-internal edges from a json spec to a biaffine levi graph");
    ama_cmd->add_option("--q", ama_q, "prime power at most 32")->required();
    ama_cmd->add_option("--type", ama_type, "biaffine plane type")->required();
    ama_cmd->add_option("--point", ama_point, "deleted point");
    ama_cmd->add_option("--line", ama_line, "deleted line");
    ama_cmd->add_option("--spec", ama_spec, "amalgam json file, - for stdin")->required();

    int sam_q = 0, sam_type = 0, sam_a = 0, sam_k = 0, sam_g = 0, sam_d = 0;
    std::optional<int> sam_point, sam_line;
    AmalgamBudget sam_budget;
    auto * sam_cmd = geom_cmd->add_subcommand("search-amalgam", "try every class-internal a-regular insertion and keep the (k;g,d)-graphs");
    sam_cmd->add_option("--q", sam_q, "prime power at most 32")->required();
    sam_cmd->add_option("--type", sam_type, "biaffine plane type")->required();
    sam_cmd->add_option("--a", sam_a, "degree added inside every class")->required();
    sam_cmd->add_option("--k", sam_k, "wanted degree")->required();
    sam_cmd->add_option("--g", sam_g, "wanted girth")->required();
    sam_cmd->add_option("--d", sam_d, "wanted diameter")->required();
    sam_cmd->add_option("--point", sam_point, "deleted point");
    sam_cmd->add_option("--line", sam_line, "deleted line");
    sam_cmd->add_option("--budget", sam_budget.time_budget_secs, "wall-clock budget in seconds");
    sam_cmd->add_option("--max", sam_budget.max_results, "stop after this many results");

    auto * io_cmd = app.add_subcommand("io", "format conversion");
    io_cmd->require_subcommand(1);

    string conv_to, conv_file;
    auto * conv_cmd = io_cmd->add_subcommand("convert", "convert between graph6 and edge-list formats");
    conv_cmd->add_option("--to", conv_to, "target format")->required()->check(CLI::IsMember({ "g6", "edges" }));
    conv_cmd->add_option("file", conv_file, "graph6 or edge-list file, - for stdin")->required();

    auto * hog_cmd = app.add_subcommand("hog", "house of graphs client");
    hog_cmd->require_subcommand(1);

    long long hog_id = 0;
    auto * fetch_cmd = hog_cmd->add_subcommand("fetch", "download a graph by its house of graphs id and print graph6");
    fetch_cmd->add_option("id", hog_id, "graph id")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 2;
    }

    try {
        if (moore_cmd->parsed()) {
            std::cout << moore_bound(moore_k) << "\n";
            return 0;
        }
        if (verify_cmd->parsed())
            return run_verify(verify_k, verify_g, verify_d, verify_file);
        if (girth_cmd->parsed()) {
            std::cout << girth(load_graph(girth_file)).to_string() << "\n";
            return 0;
        }
        if (diameter_cmd->parsed()) {
            std::cout << diameter(load_graph(diameter_file)).to_string() << "\n";
            return 0;
        }
        if (aut_cmd->parsed()) {
            std::cout << aut_order(load_graph(aut_file)).order << "\n";
            return 0;
        }
        if (canon_cmd->parsed()) {
            std::cout << canonical_form(load_graph(canon_file)).bytes << "\n";
            return 0;
        }
        if (mex_cmd->parsed()) {
            Graph g = load_graph(mex_file);
            auto [r, c] = mex_row ? std::pair{ *mex_row, *mex_col } : find_antipodal_pair(g);
            MiddleGraph h = extract_middle(g, r, c);
            std::cerr << "middle graph for k " << h.k << " around poles " << r << " and " << c << "\n";
            std::cout << graph6_encode(h.graph) << "\n";
            return 0;
        }
        if (mch_cmd->parsed())
            return run_middle_check(mch_k, mch_file);
        if (mxt_cmd->parsed())
            return run_middle_extend(mxt_k, mxt_file);
        if (search_cmd->parsed()) {
            json jparams{ { "k", search_cfg.k }, { "workers", search_cfg.workers },
                { "middle_only", search_cfg.emit_middle_only } };
            if (search_cfg.time_budget_secs)
                jparams["budget_secs"] = *search_cfg.time_budget_secs;
            if (search_cfg.max_solutions)
                jparams["max"] = *search_cfg.max_solutions;
            search_cfg.progress = make_progress();
            return run_search(search_cfg, jparams);
        }
        if (pg2_cmd->parsed()) {
            ProjectivePlane plane = pg2(pg2_q);
            json out{ { "q", pg2_q }, { "points", plane.points }, { "lines", plane.lines } };
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (levi_cmd->parsed()) {
            std::cout << graph6_encode(levi(pg2(levi_q))) << "\n";
            return 0;
        }
        if (bia_cmd->parsed()) {
            BiaffineLevi b = resolve_biaffine(bia_q, bia_type, bia_point, bia_line);
            std::cout << graph6_encode(b.graph) << "\n";
            if (bia_classes) {
                json out{ { "q", b.q }, { "type", b.plane_type },
                    { "point", b.deleted_point }, { "line", b.deleted_line },
                    { "point_classes", b.point_classes }, { "line_classes", b.line_classes } };
                std::cout << out.dump() << "\n";
            }
            return 0;
        }
        if (ama_cmd->parsed()) {
            BiaffineLevi b = resolve_biaffine(ama_q, ama_type, ama_point, ama_line);
            AmalgamSpec spec = amalgam_spec_from_json(slurp(ama_spec));
            std::cout << graph6_encode(amalgamate(b, spec)) << "\n";
            return 0;
        }
        if (sam_cmd->parsed()) {
            BiaffineLevi b = resolve_biaffine(sam_q, sam_type, sam_point, sam_line);
            json jparams{ { "q", sam_q }, { "type", sam_type }, { "a", sam_a },
                { "k", sam_k }, { "g", sam_g }, { "d", sam_d } };
            return run_search_amalgam(b, sam_a, CageParams{ sam_k, sam_g, sam_d }, sam_budget, jparams);
        }
        if (conv_cmd->parsed()) {
            Graph g = load_graph(conv_file);
            if (conv_to == "g6")
                std::cout << graph6_encode(g) << "\n";
            else {
                string body = edge_list_encode(g);
                std::cout << body;
                if (body.empty() || body.back() != '\n')
                    std::cout << "\n";
            }
            return 0;
        }
        if (fetch_cmd->parsed())
            return run_hog_fetch(hog_id);
    }
    catch (const FormatError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    return 2;
}
