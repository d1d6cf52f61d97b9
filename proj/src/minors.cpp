#include "minrank/minors.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "minrank/canonical.hpp"

namespace minrank {

namespace {

// Enumerate k-subsets of {0..n-1} as masks, ascending.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
    for (Mask s = 0; s < (1u << n); s++)
        if (popcount(s) == k)
            if (f(s)) return;
}

bool embed(const Graph& h, const Graph& g, std::array<int, MAXV>& map, Mask used, int next) {
    if (next == h.n) return true;
    for (int cand = 0; cand < g.n; cand++) {
        if (has_bit(used, cand)) continue;
        if (g.degree(cand) < h.degree(next)) continue;
        bool ok = true;
        for (int prev = 0; prev < next; prev++)
            if (h.has_edge(prev, next) && !g.has_edge(map[prev], cand)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        map[next] = cand;
        if (embed(h, g, map, used | bit(cand), next + 1)) return true;
    }
    return false;
}

struct PairHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
        return std::hash<uint64_t>()(p.first * 1000003u ^ p.second);
    }
};

std::mutex minor_mx;
std::unordered_map<std::pair<uint64_t, uint64_t>, bool, PairHash> minor_memo;

bool has_minor_inner(const Graph& g, const Graph& h);

bool has_minor_uncached(const Graph& g, const Graph& h) {
    // Any single vertex deletion or edge contraction keeping enough vertices.
    for (int v = 0; v < g.n; v++)
        if (has_minor_inner(delete_vertex(g, v), h)) return true;
    for (auto [u, v] : g.edges())
        if (has_minor_inner(contract_edge(g, u, v), h)) return true;
    return false;
}

bool has_minor_inner(const Graph& g, const Graph& h) {
    if (h.n > g.n || h.edge_count() > g.edge_count()) return false;
    if (h.n == g.n) return spanning_subgraph_iso(h, g);
    auto key = std::make_pair(canonical_code(g), canonical_code(h));
    {
        std::lock_guard<std::mutex> lock(minor_mx);
        auto it = minor_memo.find(key);
        if (it != minor_memo.end()) return it->second;
    }
    bool result = has_minor_uncached(g, h);
    std::lock_guard<std::mutex> lock(minor_mx);
    minor_memo.emplace(key, result);
    return result;
}

}  // namespace

bool spanning_subgraph_iso(const Graph& h, const Graph& g) {
    if (h.n != g.n) return false;
    std::array<int, MAXV> hdeg{}, gdeg{};
    for (int v = 0; v < h.n; v++) hdeg[v] = h.degree(v);
    for (int v = 0; v < g.n; v++) gdeg[v] = g.degree(v);
    std::sort(hdeg.begin(), hdeg.begin() + h.n);
    std::sort(gdeg.begin(), gdeg.begin() + g.n);
    for (int i = 0; i < h.n; i++)
        if (hdeg[i] > gdeg[i]) return false;
    std::array<int, MAXV> map{};
    return embed(h, g, map, 0, 0);
}

bool contains_induced(const Graph& g, const Graph& h) {
    if (h.n > g.n) return false;
    std::string hkey = canonical_key(h);
    bool found = false;
    for_each_subset(g.n, h.n, [&](Mask s) {
        if (canonical_key(induced_subgraph(g, s)) == hkey) {
            found = true;
            return true;
        }
        return false;
    });
    return found;
}

bool has_minor(const Graph& g, const Graph& h) {
    if (h.n < 1) throw error("has_minor needs a nonempty pattern");
    return has_minor_inner(g, h);
}

}  // namespace minrank
