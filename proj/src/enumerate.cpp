#include "minrank/enumerate.hpp"

#include <unordered_set>

#include "minrank/canonical.hpp"

namespace minrank {

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1) throw error("enumerate_connected needs n >= 1");
    if (n > 7)
        throw error("enumerate_connected is built in only for n <= 7; supply larger "
                    "orders as a graph6 file");
    std::vector<Graph> out;
    if (n == 1) {
        out.emplace_back(1);
        return out;
    }
    int pairs = n * (n - 1) / 2;
    std::unordered_set<uint64_t> seen;
    for (uint32_t mask = 0; mask < (1u << pairs); mask++) {
        Graph g(n);
        int p = 0;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++, p++)
                if ((mask >> p) & 1) g.add_edge(u, v);
        if (!is_connected(g)) continue;
        uint64_t code = canonical_form(g).canon.code();
        if (seen.insert(code).second) out.push_back(g);
    }
    return out;
}

std::vector<Graph> extend_by_vertex(const std::vector<Graph>& base) {
    std::vector<Graph> out;
    std::unordered_set<uint64_t> seen;
    for (const Graph& g : base) {
        for (Mask nbrs = 1; nbrs < (1u << g.n); nbrs++) {
            Graph h = add_vertex(g, nbrs);
            uint64_t code = canonical_form(h).canon.code();
            if (seen.insert(code).second) out.push_back(h);
        }
    }
    return out;
}

}  // namespace minrank
