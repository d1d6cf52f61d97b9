#pragma once

#include <string>

#include "minrank/graph.hpp"

namespace minrank {

// graph6 codec for graphs on 1..MAXV vertices (short form only).
Graph g6_decode(const std::string& s);
std::string g6_encode(const Graph& g);

}  // namespace minrank
