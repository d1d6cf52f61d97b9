#include "minrank/canonical.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "minrank/graph6.hpp"

namespace minrank {

namespace {

// Ordered partition of the vertex set, finest cells first kept in place.
using Partition = std::vector<Mask>;

int cell_degree(const Graph& g, int v, Mask cell) { return popcount(g.adj[v] & cell); }

// Equitable refinement: split cells by degree into each cell until stable.
// Split parts are ordered by ascending degree so the result is deterministic.
void refine(const Graph& g, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t si = 0; si < cells.size() && !changed; si++) {
            Mask splitter = cells[si];
            for (size_t xi = 0; xi < cells.size() && !changed; xi++) {
                Mask x = cells[xi];
                if (popcount(x) <= 1) continue;
                std::array<Mask, MAXV + 1> parts{};
                for (int v = 0; v < g.n; v++)
                    if (has_bit(x, v)) parts[cell_degree(g, v, splitter)] |= bit(v);
                int nparts = 0;
                for (auto p : parts)
                    if (p) nparts++;
                if (nparts <= 1) continue;
                Partition next;
                for (size_t i = 0; i < cells.size(); i++) {
                    if (i != xi) {
                        next.push_back(cells[i]);
                        continue;
                    }
                    for (auto p : parts)
                        if (p) next.push_back(p);
                }
                cells = std::move(next);
                changed = true;
            }
        }
    }
}

struct Searcher {
    const Graph& g;
    uint64_t best_code = 0;
    std::array<uint8_t, MAXV> best_perm{};
    bool have_best = false;
    std::vector<std::array<uint8_t, MAXV>> generators;

    explicit Searcher(const Graph& g_) : g(g_) {}

    uint64_t relabel_code(const std::array<uint8_t, MAXV>& perm) const {
        std::array<int, MAXV> inv{};
        for (int x = 0; x < g.n; x++) inv[perm[x]] = x;
        uint64_t c = 0;
        int p = 0;
        for (int i = 0; i < g.n; i++)
            for (int j = i + 1; j < g.n; j++, p++)
                if (g.has_edge(inv[i], inv[j])) c |= (uint64_t(1) << p);
        return c;
    }

    void leaf(const Partition& cells) {
        std::array<uint8_t, MAXV> perm{};
        for (size_t i = 0; i < cells.size(); i++) perm[lowest_bit(cells[i])] = static_cast<uint8_t>(i);
        uint64_t c = relabel_code(perm);
        if (!have_best || c > best_code) {
            best_code = c;
            best_perm = perm;
            have_best = true;
        } else if (c == best_code) {
            // Two labelings with the same code differ by an automorphism.
            std::array<uint8_t, MAXV> inv{}, gamma{};
            for (int v = 0; v < g.n; v++) inv[best_perm[v]] = static_cast<uint8_t>(v);
            bool identity = true;
            for (int v = 0; v < g.n; v++) {
                gamma[v] = inv[perm[v]];
                if (gamma[v] != v) identity = false;
            }
            if (!identity &&
                std::find(generators.begin(), generators.end(), gamma) == generators.end() &&
                generators.size() < 64)
                generators.push_back(gamma);
        }
    }

    void search(Partition cells, const std::vector<int>& path) {
        refine(g, cells);
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); i++)
            if (popcount(cells[i]) > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        Mask cell = cells[target];
        Mask tried = 0;
        for (int v = 0; v < g.n; v++) {
            if (!has_bit(cell, v)) continue;
            if (tried && prune(path, tried, v)) {
                tried |= bit(v);
                continue;
            }
            tried |= bit(v);
            Partition next;
            for (size_t i = 0; i < cells.size(); i++) {
                if (i == target) {
                    next.push_back(bit(v));
                    next.push_back(cell & static_cast<Mask>(~bit(v)));
                } else {
                    next.push_back(cells[i]);
                }
            }
            std::vector<int> next_path = path;
            next_path.push_back(v);
            search(std::move(next), next_path);
        }
    }

    // Skip v if some known automorphism fixes the individualized path
    // pointwise and maps an already-tried vertex of this cell onto v.
    bool prune(const std::vector<int>& path, Mask tried, int v) const {
        Mask orbit = tried;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& gamma : generators) {
                bool fixes = true;
                for (int p : path)
                    if (gamma[p] != p) {
                        fixes = false;
                        break;
                    }
                if (!fixes) continue;
                Mask image = 0;
                for (int u = 0; u < g.n; u++)
                    if (has_bit(orbit, u)) image |= bit(gamma[u]);
                if (image & static_cast<Mask>(~orbit)) {
                    orbit |= image;
                    grew = true;
                }
            }
        }
        return has_bit(orbit, v);
    }
};

std::mutex memo_mx;
std::unordered_map<uint64_t, std::string> key_memo;

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.n < 1) throw error("canonical_form needs at least one vertex");
    Searcher s(g);
    s.search({full_mask(g.n)}, {});
    CanonicalForm out;
    out.perm = s.best_perm;
    out.canon = Graph(g.n);
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++)
            if (g.has_edge(u, v)) out.canon.add_edge(s.best_perm[u], s.best_perm[v]);
    return out;
}

std::string canonical_key(const Graph& g) {
    uint64_t code = g.code();
    {
        std::lock_guard<std::mutex> lock(memo_mx);
        auto it = key_memo.find(code);
        if (it != key_memo.end()) return it->second;
    }
    std::string key = g6_encode(canonical_form(g).canon);
    std::lock_guard<std::mutex> lock(memo_mx);
    key_memo.emplace(code, key);
    return key;
}

uint64_t canonical_code(const Graph& g) { return g6_decode(canonical_key(g)).code(); }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace minrank
