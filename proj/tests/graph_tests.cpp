#include <algorithm>
#include <numeric>
#include <set>

#include <doctest.h>

#include "minrank/canonical.hpp"
#include "minrank/catalog.hpp"
#include "minrank/enumerate.hpp"
#include "minrank/graph.hpp"
#include "minrank/graph6.hpp"
#include "minrank/minors.hpp"
#include "minrank/separation.hpp"

using namespace minrank;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; u++) g.add_edge(u, u + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[size_t(u)], perm[size_t(v)]);
    return h;
}

}  // namespace

TEST_CASE("edge list parsing round trips") {
    Graph g = parse_edge_list(5, "0-1,0-2,1-2,2-3,2-4");
    CHECK(g.n == 5);
    CHECK(g.edge_count() == 5);
    CHECK(format_edge_list(g) == "0-1,0-2,1-2,2-3,2-4");
    CHECK(format_edge_list(Graph(2)) == "");
    CHECK(format_vertex_set(Mask(bit(0) | bit(2) | bit(4))) == "{0,2,4}");
    CHECK_THROWS_AS(parse_edge_list(3, "0-3"), error);
    CHECK_THROWS_AS(parse_edge_list(3, "1-1"), error);
}

TEST_CASE("induced subgraphs relabel ascending") {
    Graph g = Catalog::builtin().get("campstool");
    Graph h = induced_subgraph(g, Mask(bit(1) | bit(2) | bit(4)));
    CHECK(h.n == 3);
    CHECK(format_edge_list(h) == "0-1,1-2");
    Graph d = delete_vertex(g, 0);
    CHECK(d.n == 4);
    CHECK(format_edge_list(d) == "0-1,1-2,1-3");
}

TEST_CASE("vertex operations") {
    Graph c4 = cycle(4);
    Graph merged = identify_vertices(c4, 0, 2);
    CHECK(merged.n == 3);
    CHECK(format_edge_list(merged) == "0-1,0-2");
    Graph contracted = contract_edge(cycle(5), 0, 1);
    CHECK(contracted.n == 4);
    CHECK(are_isomorphic(contracted, cycle(4)));
    CHECK(complement(complete(4)).edge_count() == 0);
    Graph grown = add_vertex(path(2), Mask(bit(0) | bit(1)));
    CHECK(are_isomorphic(grown, complete(3)));
}

TEST_CASE("connectivity") {
    CHECK(is_connected(path(6)));
    CHECK_FALSE(is_connected(induced_subgraph(path(4), Mask(bit(0) | bit(3)))));
    CHECK(components(complement(complete(3))).size() == 3);
    CHECK(vertex_connectivity(path(4)) == 1);
    CHECK(vertex_connectivity(cycle(5)) == 2);
    CHECK(vertex_connectivity(complete(5)) == 4);
    CHECK(vertex_connectivity(Catalog::builtin().get("petersen_10v")) == 3);
    CHECK(vertex_connectivity(Graph(1)) == 0);
    CHECK_THROWS_AS(vertex_connectivity(complement(complete(2))), error);
}

TEST_CASE("cut vertices, dominating vertices, twins") {
    CHECK(cut_vertices(Catalog::builtin().get("campstool")) == Mask(bit(2)));
    CHECK(cut_vertices(Catalog::builtin().get("e1")) == Mask(bit(1) | bit(4) | bit(5)));
    CHECK(cut_vertices(cycle(5)) == 0);
    CHECK(dominating_vertices(Catalog::builtin().get("dart")) == Mask(bit(3)));
    CHECK(dominating_vertices(complete(4)) == full_mask(4));
    CHECK(dominating_vertices(cycle(5)) == 0);

    auto k23_twins = twins(parse_edge_list(5, "0-2,0-3,0-4,1-2,1-3,1-4"));
    CHECK(k23_twins.size() == 4);  // pairs within {0,1} and within {2,3,4}
    for (const auto& tp : k23_twins) CHECK_FALSE(tp.adjacent);
    auto k3_twins = twins(complete(3));
    CHECK(k3_twins.size() == 3);
    for (const auto& tp : k3_twins) CHECK(tp.adjacent);
}

TEST_CASE("graph6 codec") {
    CHECK(format_edge_list(g6_decode("A_")) == "0-1");
    CHECK(g6_encode(g6_decode("A_")) == "A_");

    // Published adjacency of the rank-3 search fixture.
    Graph g = g6_decode("G~xX{s");
    CHECK(format_edge_list(g) ==
          "0-1,0-2,0-3,0-4,0-7,1-2,1-3,1-4,1-5,2-3,2-4,2-6,3-5,3-6,3-7,4-5,4-6,4-7,5-6,6-7");

    for (const auto& entry : Catalog::builtin().entries()) {
        CAPTURE(entry.name);
        CHECK(g6_decode(g6_encode(entry.graph)) == entry.graph);
    }

    CHECK_THROWS_AS(g6_decode(""), error);
    CHECK_THROWS_AS(g6_decode("~"), error);      // long form unsupported
    CHECK_THROWS_AS(g6_decode("A"), error);      // missing data byte
    CHECK_THROWS_AS(g6_decode("A_1"), error);    // trailing byte
    CHECK_THROWS_AS(g6_decode("A\x19"), error);  // byte below range
    CHECK_THROWS_AS(g6_decode("Aw"), error);     // nonzero padding
}

TEST_CASE("canonical labeling is isomorphism invariant") {
    for (int n = 1; n <= 5; n++) {
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (const Graph& g : enumerate_connected(n)) {
            std::string key = canonical_key(g);
            std::vector<int> p = perm;
            do {
                CHECK(canonical_key(relabel(g, p)) == key);
            } while (std::next_permutation(p.begin(), p.end()));
        }
    }
}

TEST_CASE("canonical form permutation maps onto the canonical graph") {
    for (const auto& entry : Catalog::builtin().entries()) {
        CanonicalForm cf = canonical_form(entry.graph);
        Graph mapped(entry.graph.n);
        for (auto [u, v] : entry.graph.edges()) mapped.add_edge(cf.perm[u], cf.perm[v]);
        CHECK(mapped == cf.canon);
        CHECK(g6_encode(cf.canon) == canonical_key(entry.graph));
    }
}

TEST_CASE("isomorphism checks") {
    CHECK(are_isomorphic(cycle(5), relabel(cycle(5), {3, 1, 4, 0, 2})));
    CHECK_FALSE(are_isomorphic(path(4), cycle(4)));
    CHECK_FALSE(are_isomorphic(Catalog::builtin().get("e2"), Catalog::builtin().get("e3")));
}

TEST_CASE("induced subgraph containment") {
    CHECK(contains_induced(cycle(5), path(4)));
    CHECK_FALSE(contains_induced(cycle(4), path(4)));
    CHECK(contains_induced(Catalog::builtin().get("dart"), complete(3)));
    CHECK_FALSE(contains_induced(complete(4), path(3)));
}

TEST_CASE("minor containment") {
    CHECK(has_minor(complete(5), complete(4)));
    CHECK(has_minor(cycle(5), complete(3)));
    CHECK_FALSE(has_minor(path(6), complete(3)));
    Graph petersen = Catalog::builtin().get("petersen_10v");
    CHECK(has_minor(petersen, complete(5)));
    CHECK_FALSE(has_minor(petersen, complete(6)));
    CHECK(has_minor(Catalog::builtin().get("petersen_k44me"), cycle(8)));
    CHECK_FALSE(has_minor(complete(4), complete(5)));
}

TEST_CASE("spanning subgraph embedding") {
    CHECK(spanning_subgraph_iso(cycle(4), complete(4)));
    CHECK_FALSE(spanning_subgraph_iso(cycle(4), path(4)));
    CHECK(spanning_subgraph_iso(path(4), cycle(4)));
}

TEST_CASE("connected graph counts up to order 6") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; n++) CHECK(int(enumerate_connected(n).size()) == expected[n]);
    CHECK_THROWS_AS(enumerate_connected(8), error);
}

TEST_CASE("vertex extension regenerates the next layer") {
    CHECK(extend_by_vertex(enumerate_connected(4)).size() == 21);
}

TEST_CASE("cut vertex splits") {
    Graph camp = Catalog::builtin().get("campstool");
    auto splits = split_at_cut_vertex(camp, 2);
    CHECK(splits.size() == 3);
    for (const auto& [g1, g2] : splits) {
        CHECK(is_connected(g1));
        CHECK(is_connected(g2));
        CHECK(g1.n + g2.n == camp.n + 1);
        CHECK(g1.n >= 2);
        CHECK(g2.n >= 2);
    }
}

TEST_CASE("two separations of a four cycle") {
    Graph c4 = cycle(4);
    auto seps = two_separations(c4);
    REQUIRE_FALSE(seps.empty());
    const auto& sep = seps.front();
    CHECK(sep.r1 < sep.r2);
    CHECK_FALSE(c4.has_edge(sep.r1, sep.r2));
    SeparationParts p = derived_separation_graphs(c4, sep);
    CHECK(p.g1.n == 3);
    CHECK(p.g2.n == 3);
    CHECK(are_isomorphic(p.h1, complete(3)));
    CHECK(are_isomorphic(p.g1bar, complete(2)));
    CHECK(p.g1_minus_both.n == 1);
    CHECK(two_separations(complete(5)).empty());
}

TEST_CASE("catalog integrity") {
    const Catalog& cat = Catalog::builtin();
    CHECK(cat.entries().size() == 31);
    CHECK(cat.get("p4").n == 4);
    CHECK(cat.with_prefix("e").size() == 7);
    CHECK(cat.with_prefix("petersen_").size() == 7);
    CHECK(cat.with_prefix("zplus").size() == 13);
    Graph shuffled = relabel(cat.get("e1"), {7, 6, 5, 4, 3, 2, 1, 0});
    CHECK(cat.name_of(shuffled) == "e1");
    CHECK_FALSE(cat.name_of(complete(3)).has_value());
    CHECK_THROWS_AS(cat.get("nope"), error);

    // The 13 catalog entries mirror the published graph6 strings in order.
    const char* strings[] = {"Gvd|TO", "GfF|tW", "GfD|tW", "GbD|tW", "GbD|t[", "Gvx|Ro",
                             "Gfx|Ro", "GrxX[s", "GryW[k", "GrW[[k", "GvW[[k", "GrY[[k",
                             "Gv][[k"};
    auto zplus = cat.with_prefix("zplus");
    for (size_t i = 0; i < zplus.size(); i++) {
        CAPTURE(zplus[i].name);
        CHECK(are_isomorphic(zplus[i].graph, g6_decode(strings[i])));
    }
}
