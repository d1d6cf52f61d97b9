#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minrank/canonical.hpp"
#include "minrank/catalog.hpp"
#include "minrank/forcing.hpp"
#include "minrank/graph.hpp"
#include "minrank/graph6.hpp"
#include "minrank/matrix.hpp"
#include "minrank/pipeline.hpp"
#include "minrank/witness.hpp"

namespace {

using namespace minrank;

Graph graph_arg(const std::string& g6) { return g6_decode(g6); }

Mat matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open matrix file " + path);
    return parse_matrix(in);
}

LoopConfig parse_loop_config(const std::string& text, int n) {
    if (static_cast<int>(text.size()) != n)
        throw error("loop config needs one of 0/1/? per vertex, got \"" + text + "\" for " +
                    std::to_string(n) + " vertices");
    LoopConfig cfg;
    for (int i = 0; i < n; i++) {
        char c = text[static_cast<size_t>(i)];
        if (c == '1')
            cfg.loop |= bit(i);
        else if (c == '0')
            cfg.noloop |= bit(i);
        else if (c != '?')
            throw error(std::string("loop config characters must be 0, 1 or ?, got ") + c);
    }
    return cfg;
}

int run_decode(const std::string& g6) {
    Graph g = graph_arg(g6);
    std::cout << "n " << g.n << "\n";
    std::cout << "edges " << format_edge_list(g) << "\n";
    return 0;
}

int run_encode(int n, const std::string& edges) {
    Graph g = parse_edge_list(n, edges == "-" ? "" : edges);
    std::cout << g6_encode(g) << "\n";
    return 0;
}

int run_zf(const std::string& g6, const std::string& loops, bool psd) {
    Graph g = graph_arg(g6);
    if (psd) {
        std::cout << "Z_plus = " << psd_zero_forcing_number(g) << "\n";
        return 0;
    }
    if (!loops.empty()) {
        ZResult r = looped_forcing_number(g, parse_loop_config(loops, g.n));
        std::cout << "Z_loops = " << r.z << "\n";
        std::cout << "witness = " << format_vertex_set(r.witness) << "\n";
        return 0;
    }
    ZResult r = zero_forcing_number(g);
    std::cout << "Z = " << r.z << "\n";
    std::cout << "witness = " << format_vertex_set(r.witness) << "\n";
    return 0;
}

int run_zhat(const std::string& g6) {
    std::cout << "Zhat = " << zhat(graph_arg(g6)) << "\n";
    return 0;
}

int run_forts(const std::string& g6, bool minimal) {
    Graph g = graph_arg(g6);
    std::vector<Mask> family = minimal ? minimal_forts(g) : forts(g);
    std::cout << "count " << family.size() << "\n";
    for (Mask f : family) std::cout << format_vertex_set(f) << "\n";
    return 0;
}

int run_mr(const std::string& g6, bool ledger, const std::string& store_path) {
    Graph g = graph_arg(g6);
    std::optional<WitnessStore> store;
    if (!store_path.empty()) store.emplace(store_path);
    Pipeline pipe(store ? &*store : nullptr);
    MrResult r = pipe.compute_M(g);
    std::cout << "mr = " << g.n - r.m << "\n";
    std::cout << "M = " << r.m << "\n";
    std::cout << "Z = " << r.z << "\n";
    std::cout << "stage = " << r.stage << "\n";
    if (ledger)
        for (const auto& [tag, v] : r.ledger.provenance)
            std::cout << "bound " << tag << " " << v << "\n";
    return 0;
}

int run_witness_verify(const std::string& g6, const std::string& file, int nullity) {
    Graph g = graph_arg(g6);
    Mat a = matrix_file(file);
    int claimed = nullity >= 0 ? nullity : a.rows - rank(a);
    if (verify_witness(g, a, claimed)) {
        std::cout << "valid nullity " << claimed << "\n";
        return 0;
    }
    std::cout << "invalid\n";
    return 3;
}

int run_witness_lift(const std::string& g6, int v, const std::string& file) {
    Graph g = graph_arg(g6);
    Mat a = matrix_file(file);
    auto b = lift(a, g, v);
    if (!b) {
        std::cout << "absent\n";
        return 3;
    }
    std::cout << format_matrix(*b);
    return 0;
}

int run_witness_search(const std::string& g6, int bound) {
    Graph g = graph_arg(g6);
    auto rep = search_rank3_witness(g, bound);
    if (!rep) {
        std::cout << "absent\n";
        return 3;
    }
    std::cout << "vectors\n" << format_matrix(rep->m);
    std::cout << "gram\n" << format_matrix(gram_witness(*rep, g));
    return 0;
}

int run_census(const std::string& file, int jobs, const std::string& out_dir,
               const std::string& store_path, bool no_store, bool serial, bool classify) {
    std::ifstream in(file);
    if (!in) throw error("cannot open graph file " + file);
    std::vector<Graph> graphs;
    std::string line;
    int lineno = 0;
    int max_n = 0;
    while (std::getline(in, line)) {
        lineno++;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            graphs.push_back(g6_decode(line));
        } catch (const error& e) {
            throw error(file + ":" + std::to_string(lineno) + ": " + e.what());
        }
        max_n = std::max(max_n, graphs.back().n);
    }

    std::optional<WitnessStore> store;
    if (!no_store) store.emplace(store_path);
    Pipeline pipe(store ? &*store : nullptr);
    if (store && max_n >= 8) {
        auto coverage = pipe.seed_witness_layers(7);
        for (const auto& [n, frac] : coverage)
            std::cerr << "seeded layer " << n << " coverage " << frac << "\n";
    }

    auto [records, report] = serial ? pipe.census_serial(graphs) : pipe.census(graphs, jobs);

    std::filesystem::create_directories(out_dir);
    {
        std::ofstream jf(out_dir + "/census.jsonl", std::ios::binary);
        jf << census_jsonl(records);
    }
    {
        std::ofstream cf(out_dir + "/census_summary.csv", std::ios::binary);
        cf << census_summary_csv(records);
    }

    int exceptional = 0;
    for (const auto& rec : records)
        if (!rec.error_text && rec.exceptional) exceptional++;
    std::cout << records.size() << " processed, " << exceptional << " exceptional\n";

    if (classify) {
        auto names = Pipeline::classify_exceptional(records);
        for (const auto& [key, name] : names) std::cout << name << " " << key << "\n";
    }

    if (!report.unresolved.empty()) {
        std::cerr << report.unresolved.size() << " unresolved\n";
        return 3;
    }
    return 0;
}

int run_catalog_list() {
    for (const auto& entry : Catalog::builtin().entries())
        std::cout << entry.name << " " << entry.graph.n << " " << g6_encode(entry.graph) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero forcing and minimum rank toolkit for graphs on up to 10 vertices"};
    app.require_subcommand(1);
    int rc = 0;

    std::string g6, edges, loops, file, store_path, out_dir = ".";
    int n = 0, vertex = 0, nullity = -1, bound = 4, jobs = 0;
    bool psd = false, minimal = false, ledger = false;
    bool no_store = false, serial = false, classify = false;

    auto* decode = app.add_subcommand("decode", "print order and edge list of a graph6 string");
    decode->add_option("graph6", g6)->required();
    decode->callback([&] { rc = run_decode(g6); });

    auto* encode = app.add_subcommand("encode", "encode an edge list as graph6");
    encode->add_option("n", n)->required();
    encode->add_option("edges", edges, "comma separated u-v pairs, - for no edges")->required();
    encode->callback([&] { rc = run_encode(n, edges); });

    auto* zf = app.add_subcommand("zf", "zero forcing number and one minimum forcing set");
    zf->add_option("graph6", g6)->required();
    auto* lopt = zf->add_option("--loops", loops, "diagonal pattern, one of 0/1/? per vertex");
    zf->add_flag("--psd", psd, "positive semidefinite forcing number")->excludes(lopt);
    zf->callback([&] { rc = run_zf(g6, loops, psd); });

    auto* zh = app.add_subcommand("zhat", "maximum looped forcing number over all diagonals");
    zh->add_option("graph6", g6)->required();
    zh->callback([&] { rc = run_zhat(g6); });

    auto* ft = app.add_subcommand("forts", "list forts, ascending as vertex sets");
    ft->add_option("graph6", g6)->required();
    ft->add_flag("--minimal", minimal, "only inclusion-minimal forts");
    ft->callback([&] { rc = run_forts(g6, minimal); });

    auto* mr = app.add_subcommand("mr", "exact minimum rank and maximum nullity");
    mr->add_option("graph6", g6)->required();
    mr->add_flag("--ledger", ledger, "print every bound event with its stage tag");
    mr->add_option("--store", store_path, "witness store to consult and extend");
    mr->callback([&] { rc = run_mr(g6, ledger, store_path); });

    auto* wit = app.add_subcommand("witness", "matrix witness operations");
    wit->require_subcommand(1);
    auto* wv = wit->add_subcommand("verify", "check a matrix against a graph pattern");
    wv->add_option("graph6", g6)->required();
    wv->add_option("file", file, "matrix file")->required();
    wv->add_option("--nullity", nullity, "claimed nullity, default n - rank");
    wv->callback([&] { rc = run_witness_verify(g6, file, nullity); });
    auto* wl = wit->add_subcommand("lift", "lift a witness of g-v to g");
    wl->add_option("graph6", g6, "target graph")->required();
    wl->add_option("vertex", vertex, "vertex absent from the witness graph")->required();
    wl->add_option("file", file, "matrix file for g-v")->required();
    wl->callback([&] { rc = run_witness_lift(g6, vertex, file); });
    auto* ws = wit->add_subcommand("search", "exhaustive rank-3 Gram witness search");
    ws->add_option("graph6", g6)->required();
    ws->add_option("--bound", bound, "entry bound for the vector search");
    ws->callback([&] { rc = run_witness_search(g6, bound); });

    auto* cs = app.add_subcommand("census", "solve every graph6 line of a file");
    cs->add_option("file", file)->required();
    cs->add_option("--jobs", jobs, "worker cap, 0 = all cores");
    cs->add_option("--out", out_dir, "output directory for census.jsonl and census_summary.csv");
    cs->add_option("--store", store_path, "witness store path")
        ->default_val(minrank::WitnessStore::default_path());
    cs->add_flag("--no-store", no_store, "run without a witness store");
    cs->add_flag("--serial", serial, "use the serial reference driver");
    cs->add_flag("--classify", classify, "name each exceptional graph, error if unknown");
    cs->callback([&] { rc = run_census(file, jobs, out_dir, store_path, no_store, serial, classify); });

    auto* cat = app.add_subcommand("catalog", "built-in named graphs");
    auto* cl = cat->add_subcommand("list", "print name, order and graph6 of every entry");
    cl->callback([&] { rc = run_catalog_list(); });
    cat->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
