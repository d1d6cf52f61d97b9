#pragma once

#include "minrank/graph.hpp"

namespace minrank {

// Does g contain an induced subgraph isomorphic to h?
bool contains_induced(const Graph& g, const Graph& h);

// Is h a minor of g (vertex deletions, edge deletions, edge contractions)?
bool has_minor(const Graph& g, const Graph& h);

// Is there a bijection of labels embedding h's edges into g's (same n)?
bool spanning_subgraph_iso(const Graph& h, const Graph& g);

}  // namespace minrank
