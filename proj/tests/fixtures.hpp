#pragma once

// Shared fixtures: named graphs and matrices with frozen expected values.

#include <string>
#include <vector>

#include "minrank/graph.hpp"
#include "minrank/matrix.hpp"

namespace fx {

using minrank::Graph;
using minrank::Mat;
using minrank::Rational;

inline Mat mk(int rows, int cols, const std::vector<long long>& vals) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; i++)
        for (int j = 0; j < cols; j++) m.at(i, j) = Rational(vals[size_t(i * cols + j)]);
    return m;
}

// 11-vertex 3-path: e0 = {0,1,2}, t1 = {0,1,2,3}, ..., e8 = {8,9,10}.
inline Graph fig2() {
    return minrank::parse_edge_list(
        11,
        "0-1,1-2,0-2,2-3,1-3,0-3,1-4,3-4,0-4,4-6,3-6,1-6,4-5,3-5,5-6,3-7,6-7,5-7,6-9,3-9,7-9,"
        "6-8,8-9,7-8,8-10,9-10,7-10");
}

// Complete bipartite K_{2,3}: parts {0,1} and {2,3,4}; the lifted vertex is 4.
inline Graph house() { return minrank::parse_edge_list(5, "0-2,0-3,0-4,1-2,1-3,1-4"); }

// Witness for house minus vertex 4 (a 4-cycle).
inline Mat house_minor_witness() {
    return mk(4, 4, {0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0});
}

// The printed lift of house_minor_witness: new row (2,2,0,0), corner 0.
inline Mat house_lifted() {
    return mk(5, 5,
              {0, 0, 1, 1, 2, 0, 0, 1, 1, 2, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 2, 2, 0, 0, 0});
}

// Graph where lifting fails: two equal witness rows split by the new vertex.
inline Graph lift_absent_graph() {
    return minrank::parse_edge_list(5, "0-1,0-2,1-2,1-4,2-3,3-4");
}

inline Mat lift_absent_witness() {
    return mk(4, 4, {1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 2, 1, 0, 0, 1, 1});
}

// 8-vertex lift fixture; vertex 6 is deleted and restored.
inline Graph lift8_graph() {
    return minrank::parse_edge_list(
        8, "0-1,0-6,0-7,1-3,1-5,1-6,2-3,2-5,2-6,2-7,3-4,3-5,3-6,4-5,4-6,4-7,5-6");
}

inline Mat lift8_minor_witness() {
    return mk(7, 7, {1, -1, 0, 0, 0, 0, 2,  -1, 1, 0, 2, 0, 2, 0,  0, 0, 0, 2, 0, 2, 2,
                     0, 2,  2, 2, 2, 2, 0,  0,  0, 0, 2, 0, 2, 2,  0, 2, 2, 2, 2, 2, 0,
                     2, 0,  2, 0, 2, 0, 2});
}

inline Mat lift8_lifted() {
    return mk(8, 8, {1,  -1, 0,  0,  0,  0,  -6, 2,  -1, 1,  0,  2,  0,  2,  4,  0,
                     0,  0,  0,  2,  0,  2,  -2, 2,  0,  2,  2,  2,  2,  2,  10, 0,
                     0,  0,  0,  2,  0,  2,  -2, 2,  0,  2,  2,  2,  2,  2,  10, 0,
                     -6, 4,  -2, 10, -2, 10, 14, 0,  2,  0,  2,  0,  2,  0,  0,  2});
}

// Rank-3 Gram fixture graph and its published representation.
inline const char* rank3_g6() { return "G~xX{s"; }

inline Mat rank3_rep() {
    return mk(3, 8, {1, 2, 1, 1, 2, 0, 2, 0, 0, 1, 0, 1, 1, 1, -4, 0, 2, 0, 0, 1, 3, 0, 1, 1});
}

inline Mat rank3_witness() {
    return mk(8, 8, {-3, 2, 1,  -1, -4, 0,  0,  -2, 2,  5, 2, 3,  5,  1,  0,  0,
                     1,  2, 1,  1,  2,  0,  2,  0,  -1, 3, 1, 1,  0,  1,  -3, -1,
                     -4, 5, 2,  0,  -4, 1,  -3, -3, 0,  1, 0, 1,  1,  1,  -4, 0,
                     0,  0, 2,  -3, -3, -4, 19, -1, -2, 0, 0, -1, -3, 0,  -1, -1});
}

// The 13 graphs whose PSD forcing number drops below the forcing number.
inline std::vector<std::string> psd_drop_g6() {
    return {"Gvd|TO", "GfF|tW", "GfD|tW", "GbD|tW", "GbD|t[", "Gvx|Ro", "Gfx|Ro",
            "GrxX[s", "GryW[k", "GrW[[k", "GvW[[k", "GrY[[k", "Gv][[k"};
}

// Five-clique cover of the catalog graph e7 with the published sum template:
// bit b of cover_template()[i][j] set means coefficient b+1 appears in entry
// (i, j) of the sum.
inline std::vector<minrank::Mask> e7_cover() {
    using minrank::bit;
    return {minrank::Mask(bit(1) | bit(2) | bit(3) | bit(4)),
            minrank::Mask(bit(1) | bit(2) | bit(7)),
            minrank::Mask(bit(2) | bit(4) | bit(5)),
            minrank::Mask(bit(0) | bit(1) | bit(4) | bit(6)),
            minrank::Mask(bit(0) | bit(2))};
}

inline std::vector<std::vector<unsigned>> e7_cover_template() {
    const unsigned a1 = 1, a2 = 2, a3 = 4, a4 = 8, a5 = 16;
    return {
        {a4 | a5, a4, a5, 0, a4, 0, a4, 0},
        {a4, a1 | a2 | a4, a1 | a2, a1, a1 | a4, 0, a4, a2},
        {a5, a1 | a2, a1 | a2 | a3 | a5, a1, a1 | a3, a3, 0, a2},
        {0, a1, a1, a1, a1, 0, 0, 0},
        {a4, a1 | a4, a1 | a3, a1, a1 | a3 | a4, a3, a4, 0},
        {0, 0, a3, 0, a3, a3, 0, 0},
        {a4, a4, 0, 0, a4, 0, a4, 0},
        {0, a2, a2, 0, 0, 0, 0, a2},
    };
}

}  // namespace fx
