#pragma once

#include <optional>
#include <vector>

#include "minrank/forcing.hpp"
#include "minrank/graph.hpp"

namespace minrank {

// Alternating clique sequence e0, t1, e1, ..., tp, ep of a k-path:
// |e_i| = k, |t_i| = k+1, all distinct, t_i = e_{i-1} union e_i.
struct CliqueSequence {
    int k = 0;
    std::vector<Mask> e;  // p+1 entries
    std::vector<Mask> t;  // p entries
};

bool valid_sequence(const CliqueSequence& seq, const Graph& g);

// The graph a sequence describes: the union of its t-cliques.
Graph graph_of_sequence(const CliqueSequence& seq);

// Rank at most 2 for connected graphs of order < 9: no induced path on four
// vertices, campstool, or dart.
bool mr_le_2(const Graph& g);

// Is g a k-path (a k-tree with exactly two degree-k vertices)? Reconstructs
// the clique sequence by peeling simplicial vertices from one end.
std::optional<CliqueSequence> recognize_k_path(const Graph& g, int k);

struct KPathChains {
    Mask e0;
    std::vector<std::vector<int>> chains;
};
// The canonical forcing process of a k-path: t_i minus e_i forces t_i minus
// e_{i-1}; e0 is a zero forcing set and the log splits into k chains.
KPathChains kpath_forcing_chains(const CliqueSequence& seq);

// Every chain edge is critical for k-connectedness: removing it drops
// vertex connectivity below k. Test-oriented diagnostic.
bool chain_edge_connectivity_property(const CliqueSequence& seq, const Graph& g);

// A 3-connected graph with forcing number 4 has maximum nullity 4.
std::optional<int> three_connected_z4_rule(const Graph& g);

// Smallest edge superset of g on the same vertices that is a k-path, if one
// exists; searched by added-edge count with isomorphism memoization.
std::optional<Graph> complete_to_kpath(const Graph& g, int k);

}  // namespace minrank
