#include "minrank/forcing.hpp"

#include <algorithm>

namespace minrank {

namespace {

std::vector<Mask> white_components(const Graph& g, Mask white) {
    std::vector<Mask> out;
    Mask seen = 0;
    for (int v = 0; v < g.n; v++) {
        if (!has_bit(white, v) || has_bit(seen, v)) continue;
        Mask comp = bit(v), frontier = comp;
        while (frontier) {
            Mask next = 0;
            for (int u = 0; u < g.n; u++)
                if (has_bit(frontier, u)) next |= g.adj[u];
            next &= white & static_cast<Mask>(~comp);
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        seen |= comp;
    }
    return out;
}

// The single force the lowest eligible vertex can perform, if any.
// Returns {forcer, forced} or {-1, -1}.
std::pair<int, int> next_force(const Graph& g, Mask blue, Rule rule, LoopConfig cfg) {
    Mask white = full_mask(g.n) & static_cast<Mask>(~blue);
    std::vector<Mask> comps;
    if (rule == Rule::psd) comps = white_components(g, white);
    for (int u = 0; u < g.n; u++) {
        bool u_blue = has_bit(blue, u);
        switch (rule) {
            case Rule::standard: {
                if (!u_blue) break;
                Mask w = g.adj[u] & white;
                if (popcount(w) == 1) return {u, lowest_bit(w)};
                break;
            }
            case Rule::looped: {
                // A loopless row never involves u's own value, so u forces
                // its unique white neighbor whatever its own color. A blue u
                // forces as in the standard rule for any diagonal. A white u
                // with a loop forces itself once its neighbors are all blue.
                if (has_bit(cfg.noloop, u) || u_blue) {
                    Mask w = g.adj[u] & white;
                    if (popcount(w) == 1) return {u, lowest_bit(w)};
                } else if (has_bit(cfg.loop, u)) {
                    if ((g.adj[u] & white) == 0) return {u, u};
                }
                break;
            }
            case Rule::psd: {
                if (!u_blue) break;
                int target = -1;
                for (Mask c : comps) {
                    Mask w = g.adj[u] & c;
                    if (popcount(w) == 1) {
                        int t = lowest_bit(w);
                        if (target < 0 || t < target) target = t;
                    }
                }
                if (target >= 0) return {u, target};
                break;
            }
        }
    }
    return {-1, -1};
}

}  // namespace

std::pair<Mask, ForceLog> closure(const Graph& g, Mask start, Rule rule, LoopConfig cfg) {
    if (cfg.loop & cfg.noloop) throw error("loop config assigns a vertex both ways");
    if (start & static_cast<Mask>(~full_mask(g.n))) throw error("start set out of range");
    Mask blue = start;
    ForceLog log;
    while (true) {
        auto [f, w] = next_force(g, blue, rule, cfg);
        if (f < 0) break;
        blue |= bit(w);
        log.push_back({static_cast<int8_t>(f), static_cast<int8_t>(w)});
    }
    return {blue, log};
}

bool is_zfs(const Graph& g, Mask b) {
    return closure(g, b, Rule::standard).first == full_mask(g.n);
}

ZResult zero_forcing_number(const Graph& g) {
    if (g.n < 1) throw error("zero_forcing_number needs vertices");
    auto mforts = minimal_forts(g);
    for (int k = 1; k <= g.n; k++) {
        for (Mask b = 0; b < (1u << g.n); b++) {
            if (popcount(b) != k) continue;
            bool hits_all = true;
            for (Mask f : mforts)
                if (!(f & b)) {
                    hits_all = false;
                    break;
                }
            if (!hits_all) continue;
            if (is_zfs(g, b)) return {k, b};
        }
    }
    throw error("zero_forcing_number: unreachable");
}

ZResult looped_forcing_number(const Graph& g, LoopConfig cfg) {
    for (int k = 0; k <= g.n; k++)
        for (Mask b = 0; b < (1u << g.n); b++) {
            if (popcount(b) != k) continue;
            if (closure(g, b, Rule::looped, cfg).first == full_mask(g.n)) return {k, b};
        }
    throw error("looped_forcing_number: unreachable");
}

int zhat_serial(const Graph& g) {
    int best = 0;
    for (Mask c = 0; c < (1u << g.n); c++) {
        LoopConfig cfg{c, static_cast<Mask>(full_mask(g.n) & ~c)};
        best = std::max(best, looped_forcing_number(g, cfg).z);
    }
    return best;
}

int zhat(const Graph& g) {
    int best = 0;
    int total = 1 << g.n;
#pragma omp parallel for schedule(dynamic, 8) reduction(max : best)
    for (int c = 0; c < total; c++) {
        LoopConfig cfg{static_cast<Mask>(c), static_cast<Mask>(full_mask(g.n) & ~c)};
        best = std::max(best, looped_forcing_number(g, cfg).z);
    }
    return best;
}

int psd_zero_forcing_number(const Graph& g) {
    if (g.n < 1) throw error("psd_zero_forcing_number needs vertices");
    for (int k = 1; k <= g.n; k++)
        for (Mask b = 0; b < (1u << g.n); b++) {
            if (popcount(b) != k) continue;
            if (closure(g, b, Rule::psd).first == full_mask(g.n)) return k;
        }
    throw error("psd_zero_forcing_number: unreachable");
}

std::vector<std::vector<int>> forcing_chains(const Graph& g, Mask start, const ForceLog& log) {
    Mask blue = start;
    std::array<int, MAXV> succ{};
    succ.fill(-1);
    for (size_t i = 0; i < log.size(); i++) {
        int f = log[i].forcer, w = log[i].forced;
        if (f < 0 || f >= g.n || w < 0 || w >= g.n || f == w)
            throw error("forcing_chains: malformed force " + std::to_string(i));
        if (!has_bit(blue, f)) throw error("forcing_chains: forcer not blue at step " + std::to_string(i));
        if (has_bit(blue, w)) throw error("forcing_chains: target already blue at step " + std::to_string(i));
        Mask white_nbrs = g.adj[f] & static_cast<Mask>(~blue);
        if (white_nbrs != bit(w))
            throw error("forcing_chains: not the unique white neighbor at step " + std::to_string(i));
        succ[f] = w;
        blue |= bit(w);
    }
    std::vector<std::vector<int>> chains;
    for (int v = 0; v < g.n; v++) {
        if (!has_bit(start, v)) continue;
        std::vector<int> chain{v};
        for (int u = succ[v]; u >= 0; u = succ[u]) chain.push_back(u);
        chains.push_back(std::move(chain));
    }
    return chains;
}

std::vector<Mask> forts(const Graph& g) {
    std::vector<Mask> out;
    for (Mask f = 1; f < (1u << g.n); f++) {
        bool ok = true;
        for (int v = 0; v < g.n && ok; v++)
            if (!has_bit(f, v) && popcount(g.adj[v] & f) == 1) ok = false;
        if (ok) out.push_back(f);
    }
    return out;
}

std::vector<Mask> minimal_forts(const Graph& g) {
    auto all = forts(g);
    std::vector<Mask> out;
    for (Mask f : all) {
        bool minimal = true;
        for (Mask f2 : all)
            if (f2 != f && (f2 & f) == f2) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(f);
    }
    return out;
}

bool zfs_family_equal(const Graph& g, const Graph& h) {
    if (g.n != h.n) return false;
    // Equal fort families force equal zero forcing families: a set forces
    // exactly when it meets every fort.
    return forts(g) == forts(h);
}

DiagCertificate diag_certificate(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.n) throw error("diag_certificate: vertex out of range");
    if (k < 1) throw error("diag_certificate: k must be a positive lower bound");
    auto forces_below_k = [&](LoopConfig cfg) {
        for (int s = 0; s < k; s++)
            for (Mask b = 0; b < (1u << g.n); b++) {
                if (popcount(b) != s) continue;
                if (closure(g, b, Rule::looped, cfg).first == full_mask(g.n)) return true;
            }
        return false;
    };
    bool zero = forces_below_k({bit(v), 0});
    bool nonzero = forces_below_k({0, bit(v)});
    if (zero && nonzero) return DiagCertificate::both;
    if (zero) return DiagCertificate::forced_zero;
    if (nonzero) return DiagCertificate::forced_nonzero;
    return DiagCertificate::unknown;
}

}  // namespace minrank
