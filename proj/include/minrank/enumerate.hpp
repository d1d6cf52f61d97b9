#pragma once

#include <vector>

#include "minrank/graph.hpp"

namespace minrank {

// All connected graphs on n vertices up to isomorphism, one representative
// each, in a deterministic order. Supported for n <= 7; larger orders must be
// supplied externally (e.g. a graph6 file fed to the census).
std::vector<Graph> enumerate_connected(int n);

// Connected graphs on n vertices formed by attaching one vertex to every
// graph of base in all possible ways, deduplicated canonically. Used to grow
// order n from order n-1 without a built-in order-n list.
std::vector<Graph> extend_by_vertex(const std::vector<Graph>& base);

}  // namespace minrank
