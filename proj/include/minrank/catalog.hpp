#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minrank/graph.hpp"

namespace minrank {

struct CatalogEntry {
    std::string name;
    Graph graph;
};

// Named reference graphs: the small forbidden subgraphs for low rank, the
// seven exceptional order-8 graphs e1..e7 with their hub h7, the complete
// minor-monotone obstruction family, and the order-8 graphs where the
// positive semidefinite forcing number drops below the standard one.
class Catalog {
  public:
    static const Catalog& builtin();
    static Catalog parse(const std::string& text);
    static Catalog load_file(const std::string& path);

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const Graph& get(const std::string& name) const;
    std::optional<std::string> name_of(const Graph& g) const;  // up to isomorphism
    std::vector<CatalogEntry> with_prefix(const std::string& prefix) const;

  private:
    std::vector<CatalogEntry> entries_;
};

}  // namespace minrank
