#include "minrank/catalog.hpp"

#include <fstream>
#include <sstream>

#include "minrank/canonical.hpp"

namespace minrank {

namespace {

const char* builtin_text =
    "p4 4 0-1,1-2,2-3\n"
    "campstool 5 0-1,0-2,1-2,2-3,2-4\n"
    "dart 5 0-1,0-3,1-2,1-3,2-3,3-4\n"
    "e1 8 0-1,1-2,1-3,1-4,1-5,2-4,3-5,4-5,4-6,5-7\n"
    "e2 8 0-1,0-2,0-4,0-6,1-3,1-6,1-7,2-3,2-5,2-7,3-4,4-5,4-6\n"
    "e3 8 0-1,0-2,0-4,0-6,1-2,1-3,1-6,1-7,2-3,2-5,2-7,3-4,4-5,4-6\n"
    "e4 8 0-1,0-2,0-4,0-6,1-3,1-4,1-6,1-7,2-3,2-5,2-7,3-4,4-5,4-6\n"
    "e5 8 0-1,0-2,0-4,0-6,1-2,1-3,1-6,1-7,2-3,2-4,2-5,2-7,3-4,4-5,4-6\n"
    "e6 8 0-1,0-2,0-4,0-6,1-2,1-3,1-4,1-6,1-7,2-3,2-5,2-7,3-4,4-5,4-6\n"
    "e7 8 0-1,0-2,0-4,0-6,1-2,1-3,1-4,1-6,1-7,2-3,2-4,2-5,2-7,3-4,4-5,4-6\n"
    "h7 7 0-1,0-2,0-3,0-4,1-3,2-4,3-4,3-5,4-6\n"
    "petersen_k6 6 0-1,0-2,0-3,0-4,0-5,1-2,1-3,1-4,1-5,2-3,2-4,2-5,3-4,3-5,4-5\n"
    "petersen_k331 7 0-1,0-2,0-3,0-4,0-5,0-6,1-2,1-4,1-6,2-3,2-5,3-4,3-6,4-5,5-6\n"
    "petersen_7v 7 0-1,0-2,0-3,0-4,0-5,1-2,1-3,1-4,1-5,2-3,2-4,2-5,3-6,4-6,5-6\n"
    "petersen_k44me 8 0-1,0-5,0-6,1-2,1-4,1-7,2-3,2-5,2-6,3-4,3-7,4-5,4-6,5-7,6-7\n"
    "petersen_8v 8 0-1,0-3,0-4,0-6,0-7,1-2,1-4,1-6,2-3,2-7,3-4,3-6,4-5,5-6,5-7\n"
    "petersen_9v 9 0-1,0-5,0-8,1-2,1-7,2-3,2-6,3-4,3-8,4-5,4-7,5-6,6-7,6-8,7-8\n"
    "petersen_10v 10 0-1,0-4,0-8,1-2,1-5,2-3,2-7,3-4,3-9,4-6,5-6,5-9,6-7,7-8,8-9\n"
    "zplus01 8 0-1,0-2,0-3,0-4,0-6,0-7,1-3,1-5,2-3,2-5,2-6,2-7,3-4,3-5,4-5,4-6,4-7\n"
    "zplus02 8 0-1,0-3,0-5,0-6,0-7,1-3,1-5,2-3,2-5,2-6,2-7,3-4,3-5,3-6,4-5,4-6,4-7,5-7\n"
    "zplus03 8 0-1,0-3,0-6,0-7,1-3,1-5,2-3,2-5,2-6,2-7,3-4,3-5,3-6,4-5,4-6,4-7,5-7\n"
    "zplus04 8 0-1,0-6,0-7,1-3,1-5,2-3,2-5,2-6,2-7,3-4,3-5,3-6,4-5,4-6,4-7,5-7\n"
    "zplus05 8 0-1,0-6,0-7,1-3,1-5,2-3,2-5,2-6,2-7,3-4,3-5,3-6,4-5,4-6,4-7,5-7,6-7\n"
    "zplus06 8 0-1,0-2,0-3,0-4,0-6,1-3,1-4,1-5,1-7,2-3,2-4,2-5,2-6,2-7,3-5,3-7,4-5,4-6,4-7\n"
    "zplus07 8 0-1,0-3,0-4,0-6,1-3,1-4,1-5,1-7,2-3,2-4,2-5,2-6,2-7,3-5,3-7,4-5,4-6,4-7\n"
    "zplus08 8 0-1,0-2,0-4,0-7,1-3,1-4,1-5,2-3,2-4,2-6,3-5,3-7,4-5,4-6,4-7,5-6,6-7\n"
    "zplus09 8 0-1,0-2,0-4,0-5,0-7,1-3,1-4,2-3,2-4,3-5,3-7,4-5,4-6,5-6,5-7,6-7\n"
    "zplus10 8 0-1,0-2,0-6,0-7,1-3,1-4,2-3,2-4,3-5,3-7,4-5,4-6,5-6,5-7,6-7\n"
    "zplus11 8 0-1,0-2,0-3,0-6,0-7,1-3,1-4,2-3,2-4,3-5,3-7,4-5,4-6,5-6,5-7,6-7\n"
    "zplus12 8 0-1,0-2,0-5,0-6,0-7,1-3,1-4,2-3,2-4,3-5,3-7,4-5,4-6,5-6,5-7,6-7\n"
    "zplus13 8 0-1,0-2,0-3,0-5,0-6,0-7,1-3,1-4,2-3,2-4,3-4,3-5,3-7,4-5,4-6,5-6,5-7,6-7\n";

}  // namespace

const Catalog& Catalog::builtin() {
    static const Catalog c = parse(builtin_text);
    return c;
}

Catalog Catalog::parse(const std::string& text) {
    Catalog c;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ls(line);
        std::string name, edges;
        int n;
        if (!(ls >> name >> n)) throw error("catalog: bad line '" + line + "'");
        ls >> edges;
        CatalogEntry e{name, parse_edge_list(n, edges)};
        for (const auto& prev : c.entries_)
            if (prev.name == name) throw error("catalog: duplicate name '" + name + "'");
        c.entries_.push_back(std::move(e));
    }
    return c;
}

Catalog Catalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("catalog: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

const Graph& Catalog::get(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e.graph;
    throw error("catalog: no entry named '" + name + "'");
}

std::optional<std::string> Catalog::name_of(const Graph& g) const {
    std::string key = canonical_key(g);
    for (const auto& e : entries_)
        if (e.graph.n == g.n && canonical_key(e.graph) == key) return e.name;
    return std::nullopt;
}

std::vector<CatalogEntry> Catalog::with_prefix(const std::string& prefix) const {
    std::vector<CatalogEntry> out;
    for (const auto& e : entries_)
        if (e.name.rfind(prefix, 0) == 0) out.push_back(e);
    return out;
}

}  // namespace minrank
