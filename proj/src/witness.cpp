#include "minrank/witness.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>

#include "minrank/canonical.hpp"
#include "minrank/graph6.hpp"

namespace minrank {

bool verify_witness(const Graph& g, const Mat& a, int claimed_nullity) {
    if (!in_pattern(a, g)) return false;
    return g.n - rank(a) == claimed_nullity;
}

std::optional<Mat> lift(const Mat& a, const Graph& g, int v) {
    if (g.n < 2) throw error("lift needs at least two vertices");
    if (v < 0 || v >= g.n) throw error("lift: vertex out of range");
    Graph h = delete_vertex(g, v);
    if (a.rows != h.n || !in_pattern(a, h))
        throw error("lift: matrix is not a witness for the graph minus " + std::to_string(v));

    std::vector<int> nbr, nonnbr, all;
    for (int u = 0; u < g.n; u++) {
        if (u == v) continue;
        int idx = u - (u > v);
        (g.has_edge(u, v) ? nbr : nonnbr).push_back(idx);
        all.push_back(idx);
    }

    auto kernel = nullspace_basis(submatrix(a, nonnbr, all));
    if (kernel.empty()) return std::nullopt;

    std::vector<std::vector<Rational>> candidates;
    std::vector<Rational> total(h.n);
    for (const auto& k : kernel)
        for (int i = 0; i < h.n; i++) total[i] += k[i];
    candidates.push_back(total);
    for (const auto& k : kernel) candidates.push_back(k);
    for (size_t i = 0; i < kernel.size(); i++)
        for (size_t j = i + 1; j < kernel.size(); j++) {
            std::vector<Rational> s(h.n);
            for (int l = 0; l < h.n; l++) s[l] = kernel[i][l] + kernel[j][l];
            candidates.push_back(std::move(s));
        }

    for (const auto& w : candidates) {
        std::vector<Rational> y = mat_vec(a, w);
        bool ok = true;
        for (int i : nbr)
            if (y[i] == 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int i : nonnbr)
            if (y[i] != 0) throw error("lift: kernel candidate leaks outside the neighborhood");

        Rational corner = 0;
        for (int i = 0; i < h.n; i++) corner += w[i] * y[i];
        Mat b(g.n, g.n);
        for (int ug = 0, uh = 0; ug < g.n; ug++) {
            if (ug == v) continue;
            for (int wg = 0, wh = 0; wg < g.n; wg++) {
                if (wg == v) continue;
                b.at(ug, wg) = a.at(uh, wh);
                wh++;
            }
            b.at(ug, v) = y[uh];
            b.at(v, ug) = y[uh];
            uh++;
        }
        b.at(v, v) = corner;
        if (!in_pattern(b, g)) throw error("lift: produced matrix leaves the pattern");
        if (rank(b) != rank(a)) throw error("lift: rank changed");
        return b;
    }
    return std::nullopt;
}

std::vector<Mask> greedy_clique_cover(const Graph& g) {
    std::vector<Mask> cover;
    auto edges = g.edges();
    std::vector<bool> covered(edges.size(), false);
    for (size_t e = 0; e < edges.size(); e++) {
        if (covered[e]) continue;
        Mask c = bit(edges[e].first) | bit(edges[e].second);
        for (int w = 0; w < g.n; w++) {
            if (has_bit(c, w)) continue;
            if ((g.adj[w] & c) == c) c |= bit(w);
        }
        cover.push_back(c);
        for (size_t f = 0; f < edges.size(); f++)
            if (has_bit(c, edges[f].first) && has_bit(c, edges[f].second)) covered[f] = true;
    }
    return cover;
}

std::optional<Mat> clique_cover_witness(const Graph& g, const CliqueCover& cover) {
    if (cover.cliques.size() != cover.coeffs.size())
        throw error("clique cover: coefficient count mismatch");
    for (size_t i = 0; i < cover.cliques.size(); i++) {
        if (!is_clique(g, cover.cliques[i])) throw error("clique cover: set is not a clique");
        if (cover.coeffs[i] == 0) throw error("clique cover: zero coefficient");
    }
    for (auto [u, v] : g.edges()) {
        bool hit = false;
        for (Mask c : cover.cliques)
            if (has_bit(c, u) && has_bit(c, v)) hit = true;
        if (!hit) throw error("clique cover: edge " + std::to_string(u) + "-" +
                              std::to_string(v) + " uncovered");
    }
    Mat a(g.n, g.n);
    for (size_t i = 0; i < cover.cliques.size(); i++)
        for (int u = 0; u < g.n; u++)
            if (has_bit(cover.cliques[i], u))
                for (int v = 0; v < g.n; v++)
                    if (has_bit(cover.cliques[i], v)) a.at(u, v) += cover.coeffs[i];
    if (!in_pattern(a, g)) return std::nullopt;
    return a;
}

std::optional<Mat> clique_cover_witness_auto(const Graph& g, const std::vector<Mask>& cliques) {
    int k = static_cast<int>(cliques.size());
    for (int attempt = 0; attempt < 8; attempt++) {
        CliqueCover cover{cliques, {}};
        for (int i = 0; i < k; i++) {
            switch (attempt) {
                case 0: cover.coeffs.push_back(1); break;
                case 1: cover.coeffs.push_back(i + 1); break;
                case 2: cover.coeffs.push_back((i % 2 == 0) ? (i / 2 + 1) : -(i / 2 + 1)); break;
                case 3: cover.coeffs.push_back(Rational(Int(1) << i)); break;
                case 4: cover.coeffs.push_back((i + 1) * (i + 1)); break;
                case 5: cover.coeffs.push_back(2 * i + 1); break;
                case 6: cover.coeffs.push_back((i % 2 == 0) ? (2 * i + 1) : -(2 * i + 1)); break;
                default: cover.coeffs.push_back(3 * i + 2); break;
            }
        }
        auto a = clique_cover_witness(g, cover);
        if (a) return a;
    }
    return std::nullopt;
}

Mat gram_witness(const VectorRep& rep, const Graph& g) {
    if (rep.m.rows != 3 || rep.m.cols != g.n) throw error("gram_witness: shape mismatch");
    Mat d(3, 3);
    d.at(0, 0) = 1;
    d.at(1, 1) = 1;
    d.at(2, 2) = -1;
    Mat a = congruence(rep.m, d);
    std::string bad;
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++)
            if ((a.at(u, v) != 0) != g.has_edge(u, v)) {
                if (!bad.empty()) bad += ", ";
                bad += std::to_string(u) + "-" + std::to_string(v);
            }
    if (!bad.empty()) throw error("gram_witness: pattern mismatch at pairs " + bad);
    return a;
}

std::optional<VectorRep> search_rank3_witness(const Graph& g, int entry_bound, long node_budget) {
    if (g.n < 1) throw error("search_rank3_witness needs vertices");
    int n = g.n;

    // Smallest-last order; assign the dense core first.
    std::vector<int> order(n);
    {
        Mask rem = full_mask(n);
        for (int i = n - 1; i >= 0; i--) {
            int best = -1, bestdeg = MAXV + 1;
            for (int v = 0; v < n; v++) {
                if (!has_bit(rem, v)) continue;
                int d = popcount(g.adj[v] & rem);
                if (d < bestdeg) {
                    bestdeg = d;
                    best = v;
                }
            }
            order[i] = best;
            rem &= static_cast<Mask>(~bit(best));
        }
    }

    // Candidate coordinates, leading sign normalized, lexicographic.
    std::vector<std::array<int, 3>> cand;
    for (int x = -entry_bound; x <= entry_bound; x++)
        for (int y = -entry_bound; y <= entry_bound; y++)
            for (int z = -entry_bound; z <= entry_bound; z++) {
                int lead = x != 0 ? x : (y != 0 ? y : z);
                if (lead <= 0) continue;
                cand.push_back({x, y, z});
            }

    std::array<std::array<int, 3>, MAXV> vec{};
    long nodes = 0;
    auto dot = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
        return a[0] * b[0] + a[1] * b[1] - a[2] * b[2];
    };

    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) return true;
        int v = order[i];
        for (const auto& c : cand) {
            if (++nodes > node_budget) return false;
            bool ok = true;
            for (int j = 0; j < i && ok; j++) {
                int u = order[j];
                bool want_edge = g.has_edge(u, v);
                if ((dot(c, vec[u]) != 0) != want_edge) ok = false;
            }
            if (!ok) continue;
            vec[v] = c;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;

    VectorRep rep;
    rep.m = Mat(3, n);
    for (int v = 0; v < n; v++)
        for (int r = 0; r < 3; r++) rep.m.at(r, v) = vec[v][r];
    return rep;
}

std::optional<Mat> search_rank2_witness(const Graph& g, int entry_bound, long node_budget) {
    if (g.n < 1) throw error("search_rank2_witness needs vertices");
    int n = g.n;

    std::vector<std::array<int, 2>> cand;
    for (int x = -entry_bound; x <= entry_bound; x++)
        for (int y = -entry_bound; y <= entry_bound; y++) {
            int lead = x != 0 ? x : y;
            if (lead <= 0) continue;
            cand.push_back({x, y});
        }

    // The two plane forms up to scaling. The indefinite one admits isotropic
    // vectors (repeated legs of K_{2,k} style graphs), so it goes first.
    for (int s : {-1, 1}) {
        std::array<std::array<int, 2>, MAXV> vec{};
        long nodes = 0;
        auto dot = [&](const std::array<int, 2>& a, const std::array<int, 2>& b) {
            return a[0] * b[0] + s * a[1] * b[1];
        };
        std::function<bool(int)> rec = [&](int i) -> bool {
            if (i == n) return true;
            for (const auto& c : cand) {
                if (++nodes > node_budget) return false;
                bool ok = true;
                for (int j = 0; j < i && ok; j++)
                    if ((dot(c, vec[j]) != 0) != g.has_edge(j, i)) ok = false;
                if (!ok) continue;
                vec[i] = c;
                if (rec(i + 1)) return true;
            }
            return false;
        };
        if (!rec(0)) continue;
        Mat a(n, n);
        for (int u = 0; u < n; u++)
            for (int v = 0; v < n; v++) a.at(u, v) = dot(vec[u], vec[v]);
        return a;
    }
    return std::nullopt;
}

namespace {

using nlohmann::ordered_json;

ordered_json record_to_json(const WitnessRecord& rec) {
    ordered_json jm = ordered_json::array();
    for (int i = 0; i < rec.matrix.rows; i++) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < rec.matrix.cols; j++) {
            const Rational& x = rec.matrix.at(i, j);
            row.push_back({numerator(x).str(), denominator(x).str()});
        }
        jm.push_back(row);
    }
    return ordered_json{{"key", rec.key}, {"n", rec.n}, {"rank", rec.rank},
                        {"matrix", jm},   {"source", rec.source}};
}

WitnessRecord record_from_json(const ordered_json& j) {
    WitnessRecord rec;
    rec.key = j.at("key").get<std::string>();
    rec.n = j.at("n").get<int>();
    rec.rank = j.at("rank").get<int>();
    rec.source = j.at("source").get<std::string>();
    const auto& jm = j.at("matrix");
    rec.matrix = Mat(static_cast<int>(jm.size()), static_cast<int>(jm.size()));
    for (int i = 0; i < rec.matrix.rows; i++)
        for (int j2 = 0; j2 < rec.matrix.cols; j2++) {
            const auto& cell = jm.at(i).at(j2);
            rec.matrix.at(i, j2) = Rational(Int(cell.at(0).get<std::string>()),
                                            Int(cell.at(1).get<std::string>()));
        }
    return rec;
}

void verify_record(const WitnessRecord& rec, const std::string& where) {
    Graph g = g6_decode(rec.key);
    if (g.n != rec.n) throw error("witness store: vertex count mismatch " + where);
    if (canonical_key(g) != rec.key) throw error("witness store: key not canonical " + where);
    if (!in_pattern(rec.matrix, g)) throw error("witness store: pattern violation " + where);
    if (rank(rec.matrix) != rec.rank) throw error("witness store: rank mismatch " + where);
}

}  // namespace

WitnessStore::WitnessStore(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;  // fresh store
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) continue;
        WitnessRecord rec;
        try {
            rec = record_from_json(ordered_json::parse(line));
        } catch (const std::exception& e) {
            throw error("witness store: bad json at " + path_ + ":" + std::to_string(lineno));
        }
        verify_record(rec, "at " + path_ + ":" + std::to_string(lineno));
        auto it = map_.find(rec.key);
        if (it == map_.end() || rec.rank < it->second.rank) map_[rec.key] = std::move(rec);
    }
}

std::string WitnessStore::default_path() {
    if (const char* env = std::getenv("MINRANK_WITNESS_STORE")) return env;
    return "witnesses.jsonl";
}

std::optional<WitnessRecord> WitnessStore::get(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mx_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

bool WitnessStore::put(const Graph& g, const Mat& a, const std::string& source) {
    if (!in_pattern(a, g)) throw error("witness store: put rejected, matrix off pattern");
    CanonicalForm cf = canonical_form(g);
    WitnessRecord rec;
    rec.key = g6_encode(cf.canon);
    rec.n = g.n;
    rec.rank = rank(a);
    rec.source = source;
    rec.matrix = Mat(g.n, g.n);
    for (int i = 0; i < g.n; i++)
        for (int j = 0; j < g.n; j++) rec.matrix.at(cf.perm[i], cf.perm[j]) = a.at(i, j);
    verify_record(rec, "(new record for " + rec.key + ")");

    std::lock_guard<std::mutex> lock(mx_);
    auto it = map_.find(rec.key);
    if (it != map_.end() && it->second.rank <= rec.rank) return false;
    if (!path_.empty()) append_line(rec);
    map_[rec.key] = std::move(rec);
    return true;
}

void WitnessStore::append_line(const WitnessRecord& rec) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw error("witness store: cannot write " + path_);
    out << record_to_json(rec).dump() << "\n";
}

size_t WitnessStore::size() const {
    std::lock_guard<std::mutex> lock(mx_);
    return map_.size();
}

std::vector<std::string> WitnessStore::keys() const {
    std::lock_guard<std::mutex> lock(mx_);
    std::vector<std::string> out;
    out.reserve(map_.size());
    for (const auto& [k, v] : map_) out.push_back(k);
    return out;
}

}  // namespace minrank
