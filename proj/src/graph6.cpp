#include "minrank/graph6.hpp"

namespace minrank {

namespace {

std::string offset_msg(const std::string& what, size_t offset) {
    return "graph6: " + what + " at byte " + std::to_string(offset);
}

}  // namespace

Graph g6_decode(const std::string& s) {
    if (s.empty()) throw error("graph6: empty string");
    unsigned char h = static_cast<unsigned char>(s[0]);
    if (h == 126) throw error(offset_msg("long-form header unsupported", 0));
    if (h < 63 || h > 126) throw error(offset_msg("header out of printable range", 0));
    int n = h - 63;
    if (n == 0) throw error(offset_msg("empty graph unsupported", 0));
    if (n > MAXV) throw error(offset_msg("vertex count above " + std::to_string(MAXV), 0));

    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (s.size() != 1 + nbytes)
        throw error("graph6: expected " + std::to_string(1 + nbytes) + " bytes, got " +
                    std::to_string(s.size()));

    Graph g(n);
    size_t idx = 0;  // bit index over the upper triangle, column by column
    for (int v = 1; v < n; v++)
        for (int u = 0; u < v; u++, idx++) {
            size_t byte = 1 + idx / 6;
            unsigned char c = static_cast<unsigned char>(s[byte]);
            if (c < 63 || c > 126) throw error(offset_msg("data byte out of range", byte));
            int bitpos = 5 - static_cast<int>(idx % 6);
            if (((c - 63) >> bitpos) & 1) g.add_edge(u, v);
        }
    // Padding bits of the final byte must be zero.
    for (size_t pad = nbits; pad < nbytes * 6; pad++) {
        size_t byte = 1 + pad / 6;
        unsigned char c = static_cast<unsigned char>(s[byte]);
        int bitpos = 5 - static_cast<int>(pad % 6);
        if (((c - 63) >> bitpos) & 1) throw error(offset_msg("nonzero padding", byte));
    }
    return g;
}

std::string g6_encode(const Graph& g) {
    if (g.n < 1 || g.n > MAXV) throw error("graph6: vertex count out of range");
    size_t nbits = static_cast<size_t>(g.n) * (g.n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    std::string out(1 + nbytes, char(63));
    out[0] = static_cast<char>(63 + g.n);
    size_t idx = 0;
    for (int v = 1; v < g.n; v++)
        for (int u = 0; u < v; u++, idx++)
            if (g.has_edge(u, v))
                out[1 + idx / 6] += static_cast<char>(1 << (5 - idx % 6));
    return out;
}

}  // namespace minrank
