#pragma once

#include <array>
#include <string>

#include "minrank/graph.hpp"

namespace minrank {

struct CanonicalForm {
    Graph canon;
    std::array<uint8_t, MAXV> perm{};  // perm[old label] = canonical label
};

// Canonical relabeling: isomorphic graphs map to the identical canon graph.
CanonicalForm canonical_form(const Graph& g);

// graph6 string of the canonical relabeling; memoized process-wide.
std::string canonical_key(const Graph& g);

// code() of the canonical relabeling; cheap comparison key.
uint64_t canonical_code(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace minrank
