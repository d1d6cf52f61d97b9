#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minrank {

constexpr int MAXV = 11;

// Vertex sets are bitsets over at most MAXV vertices.
using Mask = uint16_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline bool has_bit(Mask m, int v) { return (m >> v) & 1u; }
inline Mask bit(int v) { return static_cast<Mask>(1u << v); }
inline Mask full_mask(int n) { return static_cast<Mask>((1u << n) - 1u); }

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when the solver cannot certify a value; carries the failure context.
struct unresolved_error : error {
    using error::error;
};

// Simple undirected graph on at most MAXV vertices; adjacency as bitsets.
struct Graph {
    int n = 0;
    std::array<Mask, MAXV> adj{};

    Graph() = default;
    explicit Graph(int n_) : n(n_) {
        if (n_ < 0 || n_ > MAXV) throw error("vertex count out of range");
    }

    bool has_edge(int u, int v) const { return has_bit(adj[u], v); }
    void add_edge(int u, int v) {
        if (u == v) throw error("self-loops are not representable");
        if (u < 0 || v < 0 || u >= n || v >= n) throw error("edge endpoint out of range");
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    void remove_edge(int u, int v) {
        adj[u] &= static_cast<Mask>(~bit(v));
        adj[v] &= static_cast<Mask>(~bit(u));
    }
    int degree(int v) const { return popcount(adj[v]); }
    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; v++) s += degree(v);
        return s / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }
    // Packs n and the upper-triangle bits into one integer; used for hashing
    // and memo keys. 4 bits of n plus C(11,2) = 55 edge bits fit in 64.
    uint64_t code() const {
        uint64_t c = static_cast<uint64_t>(n);
        int p = 4;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++, p++)
                if (has_edge(u, v)) c |= (uint64_t(1) << p);
        return c;
    }
    bool operator==(const Graph&) const = default;
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// Textual edge list "u-v,u-v,..."; empty string means no edges.
Graph parse_edge_list(int n, const std::string& text);
std::string format_edge_list(const Graph& g);
std::string format_vertex_set(Mask m);

// Induced subgraph on the vertices of keep, relabeled in ascending order.
Graph induced_subgraph(const Graph& g, Mask keep);
Graph delete_vertex(const Graph& g, int v);
// Merge r2 into r1 (any parallel edges collapse), then relabel.
Graph identify_vertices(const Graph& g, int r1, int r2);
Graph contract_edge(const Graph& g, int u, int v);
Graph complement(const Graph& g);
// Append a new vertex adjacent to nbrs.
Graph add_vertex(const Graph& g, Mask nbrs);

Mask component_of(const Graph& g, int v);
std::vector<Mask> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_clique(const Graph& g, Mask s);

// Minimum number of vertices whose removal disconnects the graph or leaves a
// single vertex; n-1 for complete graphs. Errors on disconnected input.
int vertex_connectivity(const Graph& g);
Mask cut_vertices(const Graph& g);
Mask dominating_vertices(const Graph& g);

struct TwinPair {
    int v, w;
    bool adjacent;
};
// Pairs v < w with the same neighborhood outside {v, w}.
std::vector<TwinPair> twins(const Graph& g);

}  // namespace minrank
