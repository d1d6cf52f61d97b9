#include "minrank/separation.hpp"

#include <algorithm>

namespace minrank {

namespace {

std::vector<Mask> components_within(const Graph& g, Mask sub) {
    std::vector<Mask> out;
    Mask seen = 0;
    for (int v = 0; v < g.n; v++) {
        if (!has_bit(sub, v) || has_bit(seen, v)) continue;
        Mask comp = bit(v), frontier = comp;
        while (frontier) {
            Mask next = 0;
            for (int u = 0; u < g.n; u++)
                if (has_bit(frontier, u)) next |= g.adj[u];
            next &= sub & static_cast<Mask>(~comp);
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        seen |= comp;
    }
    return out;
}

// Induced subgraph with chosen vertices relabeled to the front, in order.
Graph induced_front(const Graph& g, Mask keep, const std::vector<int>& front) {
    std::array<int, MAXV> relabel{};
    int m = 0;
    for (int v : front) relabel[v] = m++;
    for (int v = 0; v < g.n; v++) {
        if (!has_bit(keep, v)) continue;
        bool in_front = false;
        for (int f : front) in_front |= (f == v);
        if (!in_front) relabel[v] = m++;
    }
    Graph h(m);
    for (int u = 0; u < g.n; u++) {
        if (!has_bit(keep, u)) continue;
        for (int v = u + 1; v < g.n; v++)
            if (has_bit(keep, v) && g.has_edge(u, v)) h.add_edge(relabel[u], relabel[v]);
    }
    return h;
}

// One side of a 2-separation with r1, r2 relabeled to 0, 1. The separation
// edge r1r2 is kept only when asked for (it belongs to side 1).
Graph side_graph(const Graph& g, Mask part, int r1, int r2, bool with_sep_edge) {
    Graph h = induced_front(g, part | bit(r1) | bit(r2), {r1, r2});
    if (!with_sep_edge) h.remove_edge(0, 1);
    return h;
}

}  // namespace

std::vector<std::pair<Graph, Graph>> split_at_cut_vertex(const Graph& g, int v) {
    Mask rest = full_mask(g.n) & static_cast<Mask>(~bit(v));
    auto comps = components_within(g, rest);
    if (comps.size() < 2) throw error("split_at_cut_vertex: not a cut vertex");
    int m = static_cast<int>(comps.size());
    std::vector<std::pair<Graph, Graph>> out;
    // Unordered bipartitions: component 0 always stays on side 2.
    for (Mask pick = 1; pick < (1u << (m - 1)); pick++) {
        Mask s1 = 0, s2 = comps[0];
        for (int i = 1; i < m; i++)
            (has_bit(pick, i - 1) ? s1 : s2) |= comps[i];
        out.emplace_back(induced_front(g, s1 | bit(v), {v}),
                         induced_front(g, s2 | bit(v), {v}));
    }
    return out;
}

std::vector<TwoSeparation> two_separations(const Graph& g) {
    std::vector<TwoSeparation> out;
    for (int r1 = 0; r1 < g.n; r1++)
        for (int r2 = r1 + 1; r2 < g.n; r2++) {
            Mask rest = full_mask(g.n) & static_cast<Mask>(~(bit(r1) | bit(r2)));
            auto comps = components_within(g, rest);
            int m = static_cast<int>(comps.size());
            if (m < 2) continue;
            // Ordered bipartitions: every nonempty proper subset of components.
            for (Mask pick = 1; pick + 1u < (1u << m); pick++) {
                Mask s1 = 0, s2 = 0;
                for (int i = 0; i < m; i++)
                    (has_bit(pick, i) ? s1 : s2) |= comps[i];
                Mask r = static_cast<Mask>(bit(r1) | bit(r2));
                out.push_back({r1, r2, static_cast<Mask>(s1 | r), static_cast<Mask>(s2 | r)});
            }
        }
    return out;
}

SeparationParts derived_separation_graphs(const Graph& g, const TwoSeparation& sep) {
    Mask r = bit(sep.r1) | bit(sep.r2);
    Mask part1 = sep.v1 & static_cast<Mask>(~r);
    Mask part2 = sep.v2 & static_cast<Mask>(~r);
    SeparationParts p;
    p.g1 = side_graph(g, part1, sep.r1, sep.r2, g.has_edge(sep.r1, sep.r2));
    p.g2 = side_graph(g, part2, sep.r1, sep.r2, false);
    p.h1 = p.g1;
    p.h1.add_edge(0, 1);
    p.h2 = p.g2;
    p.h2.add_edge(0, 1);
    p.g1bar = identify_vertices(p.g1, 0, 1);
    p.g2bar = identify_vertices(p.g2, 0, 1);
    p.g1_minus_r1 = delete_vertex(p.g1, 0);
    p.g2_minus_r1 = delete_vertex(p.g2, 0);
    p.g1_minus_r2 = delete_vertex(p.g1, 1);
    p.g2_minus_r2 = delete_vertex(p.g2, 1);
    p.g1_minus_both = induced_subgraph(p.g1, full_mask(p.g1.n) & static_cast<Mask>(~Mask(3)));
    p.g2_minus_both = induced_subgraph(p.g2, full_mask(p.g2.n) & static_cast<Mask>(~Mask(3)));
    return p;
}

int separation_formula(const Graph& g, const TwoSeparation& sep,
                       const std::function<int(const Graph&)>& nullity) {
    SeparationParts p = derived_separation_graphs(g, sep);
    int best = nullity(p.g1) + nullity(p.g2);
    best = std::max(best, nullity(p.h1) + nullity(p.h2));
    best = std::max(best, nullity(p.g1bar) + nullity(p.g2bar));
    best = std::max(best, nullity(p.g1_minus_r1) + nullity(p.g2_minus_r1));
    best = std::max(best, nullity(p.g1_minus_r2) + nullity(p.g2_minus_r2));
    best = std::max(best, nullity(p.g1_minus_both) + nullity(p.g2_minus_both));
    return best - 2;
}

}  // namespace minrank
