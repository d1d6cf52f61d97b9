#include "minrank/graph.hpp"

#include <algorithm>
#include <sstream>

namespace minrank {

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph parse_edge_list(int n, const std::string& text) {
    Graph g(n);
    if (text.empty()) return g;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw error("bad edge token '" + item + "'");
        int u = std::stoi(item.substr(0, dash));
        int v = std::stoi(item.substr(dash + 1));
        g.add_edge(u, v);
    }
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        if (!out.empty()) out += ',';
        out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
}

std::string format_vertex_set(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < MAXV; v++)
        if (has_bit(m, v)) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
    return out + "}";
}

Graph induced_subgraph(const Graph& g, Mask keep) {
    std::array<int, MAXV> relabel{};
    int m = 0;
    for (int v = 0; v < g.n; v++)
        if (has_bit(keep, v)) relabel[v] = m++;
    Graph h(m);
    for (int u = 0; u < g.n; u++) {
        if (!has_bit(keep, u)) continue;
        Mask nb = g.adj[u] & keep;
        for (int v = 0; v < g.n; v++)
            if (has_bit(nb, v)) h.adj[relabel[u]] |= bit(relabel[v]);
    }
    return h;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw error("vertex out of range");
    return induced_subgraph(g, full_mask(g.n) & static_cast<Mask>(~bit(v)));
}

Graph identify_vertices(const Graph& g, int r1, int r2) {
    if (r1 == r2) throw error("identify_vertices needs distinct vertices");
    Graph h = g;
    h.adj[r1] |= g.adj[r2] & static_cast<Mask>(~bit(r1));
    for (int v = 0; v < g.n; v++)
        if (v != r1 && has_bit(g.adj[r2], v)) h.adj[v] |= bit(r1);
    h.adj[r1] &= static_cast<Mask>(~bit(r2));
    return delete_vertex(h, r2);
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw error("contract_edge needs an edge");
    return identify_vertices(g, u, v);
}

Graph complement(const Graph& g) {
    Graph h(g.n);
    for (int v = 0; v < g.n; v++)
        h.adj[v] = full_mask(g.n) & static_cast<Mask>(~(g.adj[v] | bit(v)));
    return h;
}

Graph add_vertex(const Graph& g, Mask nbrs) {
    Graph h(g.n + 1);
    h.adj = g.adj;
    for (int v = 0; v < g.n; v++)
        if (has_bit(nbrs, v)) h.add_edge(v, g.n);
    return h;
}

Mask component_of(const Graph& g, int v) {
    Mask comp = bit(v);
    Mask frontier = comp;
    while (frontier) {
        Mask next = 0;
        for (int u = 0; u < g.n; u++)
            if (has_bit(frontier, u)) next |= g.adj[u];
        next &= static_cast<Mask>(~comp);
        comp |= next;
        frontier = next;
    }
    return comp;
}

std::vector<Mask> components(const Graph& g) {
    std::vector<Mask> out;
    Mask seen = 0;
    for (int v = 0; v < g.n; v++) {
        if (has_bit(seen, v)) continue;
        Mask c = component_of(g, v);
        out.push_back(c);
        seen |= c;
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    return component_of(g, 0) == full_mask(g.n);
}

bool is_complete(const Graph& g) {
    for (int v = 0; v < g.n; v++)
        if (g.adj[v] != (full_mask(g.n) & static_cast<Mask>(~bit(v)))) return false;
    return true;
}

bool is_clique(const Graph& g, Mask s) {
    for (int v = 0; v < g.n; v++)
        if (has_bit(s, v) && (g.adj[v] & s) != (s & static_cast<Mask>(~bit(v)))) return false;
    return true;
}

int vertex_connectivity(const Graph& g) {
    if (!is_connected(g)) throw error("vertex_connectivity needs a connected graph");
    if (is_complete(g)) return g.n - 1;
    // Smallest k such that removing some k-subset disconnects the rest.
    for (int k = 1; k <= g.n - 2; k++) {
        for (Mask s = 0; s < (1u << g.n); s++) {
            if (popcount(s) != k) continue;
            Graph h = induced_subgraph(g, full_mask(g.n) & static_cast<Mask>(~s));
            if (h.n >= 2 && !is_connected(h)) return k;
        }
    }
    return g.n - 1;
}

Mask cut_vertices(const Graph& g) {
    Mask out = 0;
    for (int v = 0; v < g.n; v++) {
        Graph h = delete_vertex(g, v);
        if (h.n >= 2 && !is_connected(h)) out |= bit(v);
    }
    return out;
}

Mask dominating_vertices(const Graph& g) {
    Mask out = 0;
    for (int v = 0; v < g.n; v++)
        if (g.adj[v] == (full_mask(g.n) & static_cast<Mask>(~bit(v)))) out |= bit(v);
    return out;
}

std::vector<TwinPair> twins(const Graph& g) {
    std::vector<TwinPair> out;
    for (int v = 0; v < g.n; v++)
        for (int w = v + 1; w < g.n; w++) {
            Mask ignore = bit(v) | bit(w);
            if ((g.adj[v] & static_cast<Mask>(~ignore)) ==
                (g.adj[w] & static_cast<Mask>(~ignore)))
                out.push_back({v, w, g.has_edge(v, w)});
        }
    return out;
}

}  // namespace minrank
