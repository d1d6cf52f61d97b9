#include "minrank/kpath.hpp"

#include <algorithm>
#include <unordered_set>

#include "minrank/canonical.hpp"
#include "minrank/catalog.hpp"
#include "minrank/minors.hpp"

namespace minrank {

bool valid_sequence(const CliqueSequence& seq, const Graph& g) {
    int k = seq.k;
    size_t p = seq.t.size();
    if (k < 1 || p < 1 || seq.e.size() != p + 1) return false;
    for (Mask e : seq.e)
        if (popcount(e) != k || !is_clique(g, e)) return false;
    for (Mask t : seq.t)
        if (popcount(t) != k + 1 || !is_clique(g, t)) return false;
    for (size_t i = 0; i < p; i++)
        if ((seq.e[i] | seq.e[i + 1]) != seq.t[i]) return false;
    for (size_t i = 0; i < seq.e.size(); i++)
        for (size_t j = i + 1; j < seq.e.size(); j++)
            if (seq.e[i] == seq.e[j]) return false;
    for (size_t i = 0; i < p; i++)
        for (size_t j = i + 1; j < p; j++)
            if (seq.t[i] == seq.t[j]) return false;
    Mask verts = 0;
    for (Mask t : seq.t) verts |= t;
    if (verts != full_mask(g.n)) return false;
    return graph_of_sequence(seq) == g;
}

Graph graph_of_sequence(const CliqueSequence& seq) {
    Mask verts = 0;
    for (Mask t : seq.t) verts |= t;
    if (!verts) throw error("graph_of_sequence: empty sequence");
    int n = 0;
    for (int v = 0; v < MAXV; v++)
        if (has_bit(verts, v)) n = v + 1;
    Graph g(n);
    for (Mask t : seq.t)
        for (int u = 0; u < n; u++)
            if (has_bit(t, u))
                for (int v = u + 1; v < n; v++)
                    if (has_bit(t, v)) g.add_edge(u, v);
    return g;
}

bool mr_le_2(const Graph& g) {
    if (!is_connected(g)) throw error("mr_le_2 needs a connected graph");
    if (g.n > 8) throw error("mr_le_2 applies only below 9 vertices");
    const Catalog& cat = Catalog::builtin();
    return !contains_induced(g, cat.get("p4")) && !contains_induced(g, cat.get("campstool")) &&
           !contains_induced(g, cat.get("dart"));
}

namespace {

bool is_simplicial_k(const Graph& g, Mask alive, int v, int k) {
    Mask nb = g.adj[v] & alive;
    return popcount(nb) == k && is_clique(g, nb);
}

}  // namespace

std::optional<CliqueSequence> recognize_k_path(const Graph& g, int k) {
    if (k < 1) throw error("recognize_k_path needs k >= 1");
    if (!is_connected(g)) throw error("recognize_k_path needs a connected graph");
    if (g.n < k + 1) return std::nullopt;

    // k-tree test: peel simplicial degree-k vertices down to K_{k+1}.
    Mask alive = full_mask(g.n);
    while (popcount(alive) > k + 1) {
        int pick = -1;
        for (int v = 0; v < g.n && pick < 0; v++)
            if (has_bit(alive, v) && is_simplicial_k(g, alive, v, k)) pick = v;
        if (pick < 0) return std::nullopt;
        alive &= static_cast<Mask>(~bit(pick));
    }
    if (!is_clique(g, alive)) return std::nullopt;

    if (g.n == k + 1) {
        // K_{k+1} is the one-clique k-path; take the two lexicographic ends.
        CliqueSequence seq;
        seq.k = k;
        seq.t = {full_mask(g.n)};
        seq.e = {static_cast<Mask>(full_mask(g.n) & ~bit(g.n - 1)),
                 static_cast<Mask>(full_mask(g.n) & ~bit(0))};
        return seq;
    }

    // A k-path has exactly two degree-k vertices, its ends.
    std::vector<int> ends;
    for (int v = 0; v < g.n; v++)
        if (g.degree(v) == k) ends.push_back(v);
    if (ends.size() != 2) return std::nullopt;

    // Peel from the higher end, keeping the lower end as the anchor; each
    // step the current graph has exactly two simplicial degree-k vertices.
    int anchor = ends[0];
    alive = full_mask(g.n);
    std::vector<Mask> t_rev;
    while (popcount(alive) > k + 1) {
        int pick = -1;
        for (int v = 0; v < g.n; v++) {
            if (v == anchor || !has_bit(alive, v)) continue;
            if (is_simplicial_k(g, alive, v, k)) {
                if (pick >= 0) return std::nullopt;  // ambiguous: not a path
                pick = v;
            }
        }
        if (pick < 0) return std::nullopt;
        t_rev.push_back((g.adj[pick] & alive) | bit(pick));
        alive &= static_cast<Mask>(~bit(pick));
    }

    CliqueSequence seq;
    seq.k = k;
    seq.t.push_back(alive);
    for (auto it = t_rev.rbegin(); it != t_rev.rend(); ++it) seq.t.push_back(*it);
    int p = static_cast<int>(seq.t.size());

    auto last_in_t = [&](int u) {
        int last = 0;
        for (int i = 0; i < p; i++)
            if (has_bit(seq.t[i], u)) last = i + 1;
        return last;
    };
    auto first_in_t = [&](int u) {
        for (int i = 0; i < p; i++)
            if (has_bit(seq.t[i], u)) return i + 1;
        return p + 1;
    };

    // e0 drops the vertex of t1 that stays active longest; ep drops the
    // vertex of tp that arrived earliest. Ties break to the lowest index.
    int drop_front = -1, best_last = -1;
    for (int u = 0; u < g.n; u++)
        if (has_bit(seq.t[0], u) && last_in_t(u) > best_last) {
            best_last = last_in_t(u);
            drop_front = u;
        }
    int drop_back = -1, best_first = p + 2;
    for (int u = 0; u < g.n; u++)
        if (has_bit(seq.t[p - 1], u) && first_in_t(u) < best_first) {
            best_first = first_in_t(u);
            drop_back = u;
        }

    seq.e.push_back(seq.t[0] & static_cast<Mask>(~bit(drop_front)));
    for (int i = 0; i + 1 < p; i++) seq.e.push_back(seq.t[i] & seq.t[i + 1]);
    seq.e.push_back(seq.t[p - 1] & static_cast<Mask>(~bit(drop_back)));

    if (!valid_sequence(seq, g)) return std::nullopt;
    return seq;
}

KPathChains kpath_forcing_chains(const CliqueSequence& seq) {
    Graph g = graph_of_sequence(seq);
    if (!valid_sequence(seq, g)) throw error("kpath_forcing_chains: invalid sequence");
    ForceLog log;
    for (size_t i = 0; i < seq.t.size(); i++) {
        Mask forcer = seq.t[i] & static_cast<Mask>(~seq.e[i + 1]);
        Mask forced = seq.t[i] & static_cast<Mask>(~seq.e[i]);
        if (popcount(forcer) != 1 || popcount(forced) != 1)
            throw error("kpath_forcing_chains: malformed step");
        log.push_back({static_cast<int8_t>(lowest_bit(forcer)),
                       static_cast<int8_t>(lowest_bit(forced))});
    }
    KPathChains out;
    out.e0 = seq.e[0];
    out.chains = forcing_chains(g, seq.e[0], log);
    if (!is_zfs(g, seq.e[0])) throw error("kpath_forcing_chains: e0 fails to force");
    return out;
}

bool chain_edge_connectivity_property(const CliqueSequence& seq, const Graph& g) {
    if (!valid_sequence(seq, g)) throw error("chain_edge_connectivity_property: invalid sequence");
    auto chains = kpath_forcing_chains(seq).chains;
    for (const auto& chain : chains)
        for (size_t i = 0; i + 1 < chain.size(); i++) {
            Graph h = g;
            h.remove_edge(chain[i], chain[i + 1]);
            int kappa = is_connected(h) ? vertex_connectivity(h) : 0;
            if (kappa >= seq.k) return false;
        }
    return true;
}

std::optional<int> three_connected_z4_rule(const Graph& g) {
    if (!is_connected(g) || g.n < 4) return std::nullopt;
    if (vertex_connectivity(g) < 3) return std::nullopt;
    if (zero_forcing_number(g).z != 4) return std::nullopt;
    return 4;
}

std::optional<Graph> complete_to_kpath(const Graph& g, int k) {
    if (k < 1) throw error("complete_to_kpath needs k >= 1");
    // A graph that already is a k-path needs no search, whatever its order.
    if (g.n >= k + 1 && recognize_k_path(g, k)) return g;
    if (g.n > 8 || k > 3) throw error("complete_to_kpath supports n <= 8, k <= 3");
    if (g.n < k + 1) return std::nullopt;
    // Every k-tree on n vertices has exactly nk - k(k+1)/2 edges, so only one
    // added-edge count can work.
    int target = g.n * k - k * (k + 1) / 2;
    int need = target - g.edge_count();
    if (need < 0) return std::nullopt;

    std::vector<std::pair<int, int>> nonedges;
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++)
            if (!g.has_edge(u, v)) nonedges.emplace_back(u, v);
    if (need > static_cast<int>(nonedges.size())) return std::nullopt;

    std::unordered_set<uint64_t> failed;
    std::vector<int> pick(need);
    std::optional<Graph> found;
    // Lexicographic combinations of added edges.
    auto rec = [&](auto&& self, int idx, int start) -> bool {
        if (idx == need) {
            Graph h = g;
            for (int i : pick) h.add_edge(nonedges[i].first, nonedges[i].second);
            uint64_t code = canonical_code(h);
            if (failed.count(code)) return false;
            if (recognize_k_path(h, k)) {
                found = h;
                return true;
            }
            failed.insert(code);
            return false;
        }
        for (int i = start; i < static_cast<int>(nonedges.size()); i++) {
            pick[idx] = i;
            if (self(self, idx + 1, i + 1)) return true;
        }
        return false;
    };
    rec(rec, 0, 0);
    return found;
}

}  // namespace minrank
