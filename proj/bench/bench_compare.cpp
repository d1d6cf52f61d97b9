// Compares the serial kernels with their parallel counterparts: the
// loop-configuration sweep on the order-8 catalog graphs, then the census
// driver on every connected graph of order at most 7. Outputs must agree
// exactly; the tables report wall times and speedups.

#include <chrono>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "minrank/catalog.hpp"
#include "minrank/enumerate.hpp"
#include "minrank/forcing.hpp"
#include "minrank/graph.hpp"
#include "minrank/pipeline.hpp"

using namespace minrank;

namespace {

double now() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, Graph>> eights;
    for (const CatalogEntry& e : Catalog::builtin().entries())
        if (e.graph.n == 8) eights.emplace_back(e.name, e.graph);

    std::printf("loop sweep on %zu catalog graphs of order 8\n", eights.size());
    std::printf("%-14s %5s %9s %11s %8s\n", "graph", "zhat", "serial_s", "parallel_s", "speedup");
    double ts_total = 0, tp_total = 0;
    bool ok = true;
    for (const auto& [name, g] : eights) {
        double t0 = now();
        int zs = zhat_serial(g);
        double t1 = now();
        int zp = zhat(g);
        double t2 = now();
        ok = ok && zs == zp;
        ts_total += t1 - t0;
        tp_total += t2 - t1;
        std::printf("%-14s %5d %9.3f %11.3f %8.2f\n", name.c_str(), zp, t1 - t0, t2 - t1,
                    (t1 - t0) / (t2 - t1));
    }
    std::printf("sweep totals: serial %.3fs, parallel %.3fs, speedup %.2f\n\n", ts_total, tp_total,
                ts_total / tp_total);

    // Fresh pipeline per run so neither side inherits the other's memo.
    std::vector<Graph> inputs;
    for (int n = 1; n <= 7; n++)
        for (const Graph& g : enumerate_connected(n)) inputs.push_back(g);
    std::printf("census on %zu connected graphs of order <= 7\n", inputs.size());

    Pipeline serial_pipe;
    double t0 = now();
    auto [serial_records, serial_report] = serial_pipe.census_serial(inputs);
    double t1 = now();
    Pipeline parallel_pipe;
    auto [records, report] = parallel_pipe.census(inputs);
    double t2 = now();
    (void)serial_report;
    (void)report;

    bool same = census_jsonl(serial_records) == census_jsonl(records) &&
                census_summary_csv(serial_records) == census_summary_csv(records);
    std::printf("serial %.3fs, parallel %.3fs, speedup %.2f, outputs %s\n", t1 - t0, t2 - t1,
                (t1 - t0) / (t2 - t1), same ? "identical" : "DIFFER");

    if (!ok || !same) {
        std::printf("mismatch between serial and parallel results\n");
        return 1;
    }
    return 0;
}
