#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "minrank/graph.hpp"

namespace minrank {

// Splits of a connected graph at a cut vertex v: each bipartition of the
// components of G - v into two nonempty groups gives (G1, G2), both
// containing v. Pairs are unordered; each bipartition appears once.
std::vector<std::pair<Graph, Graph>> split_at_cut_vertex(const Graph& g, int v);

// A 2-separation: V1 and V2 overlap exactly in R = {r1, r2}, every edge lies
// in exactly one side, and the edge r1r2 (if present) is assigned to side 1.
// Both orders of the component bipartition are enumerated.
struct TwoSeparation {
    int r1, r2;
    Mask v1, v2;
};
std::vector<TwoSeparation> two_separations(const Graph& g);

// The twelve graphs feeding the 2-separation rank formula. Side graphs keep
// the edge assignment: g1 contains r1r2 when present in g, g2 never does.
// In each side graph r1 and r2 come first (labels 0 and 1).
struct SeparationParts {
    Graph g1, g2;            // the two sides
    Graph h1, h2;            // sides with the edge r1r2 added
    Graph g1bar, g2bar;      // sides with r1 and r2 identified
    Graph g1_minus_r1, g2_minus_r1;
    Graph g1_minus_r2, g2_minus_r2;
    Graph g1_minus_both, g2_minus_both;
};
SeparationParts derived_separation_graphs(const Graph& g, const TwoSeparation& sep);

// Six-term separation value: the largest of the paired nullity sums over the
// derived graphs, reduced by two. `nullity` must return the maximum nullity
// of a (possibly disconnected) graph. Every term lower-bounds the nullity of
// g; the maximum over all separations is exact for graphs of minimum rank at
// least 3, while K_{2,k}-style rank-2 graphs can undershoot on every
// separation.
int separation_formula(const Graph& g, const TwoSeparation& sep,
                       const std::function<int(const Graph&)>& nullity);

}  // namespace minrank
