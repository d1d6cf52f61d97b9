#include "minrank/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "minrank/canonical.hpp"
#include "minrank/catalog.hpp"
#include "minrank/enumerate.hpp"
#include "minrank/forcing.hpp"
#include "minrank/graph6.hpp"
#include "minrank/kpath.hpp"
#include "minrank/matrix.hpp"
#include "minrank/minors.hpp"
#include "minrank/separation.hpp"

namespace minrank {

void BoundLedger::raise_lower(const std::string& tag, int v) {
    if (v <= lower) return;
    if (v > upper) throw error("bound ledger violation: lower " + std::to_string(v) +
                               " above upper " + std::to_string(upper) + " at " + tag);
    lower = v;
    provenance.emplace_back(tag, v);
}

void BoundLedger::cut_upper(const std::string& tag, int v) {
    if (v >= upper) return;
    if (v < lower) throw error("bound ledger violation: upper " + std::to_string(v) +
                               " below lower " + std::to_string(lower) + " at " + tag);
    upper = v;
    provenance.emplace_back(tag, v);
}

std::string BoundLedger::text() const {
    std::ostringstream os;
    os << "[" << lower << "," << (upper >= (1 << 20) ? std::string("inf") : std::to_string(upper))
       << "]";
    for (const auto& [tag, v] : provenance) os << " " << tag << "=" << v;
    return os.str();
}

const std::vector<std::string>& stage_tags() {
    static const std::vector<std::string> tags = {
        "base",       "kappa-z",        "mr2",  "dominating", "cut-vertex",
        "two-separation", "twin",       "z4-rule", "zhat",    "petersen-minor",
        "lift",       "clique-cover",   "gram"};
    return tags;
}

namespace {

int z_component_sum(const Graph& g) {
    int total = 0;
    for (Mask comp : components(g)) total += zero_forcing_number(induced_subgraph(g, comp)).z;
    return total;
}

}  // namespace

int Pipeline::nullity_sum(const Graph& g) { return nullity_sum_inner(g, -1); }

int Pipeline::nullity_sum_inner(const Graph& g, int parent_n) {
    int total = 0;
    for (Mask comp : components(g)) {
        MrResult r = compute_connected(induced_subgraph(g, comp), parent_n);
        total += r.m;
    }
    return total;
}

MrResult Pipeline::compute_M(const Graph& g) { return compute_connected(g, -1); }

MrResult Pipeline::compute_connected(const Graph& g, int parent_n) {
    if (g.n > 8) throw error("maximum nullity solver supports at most 8 vertices");
    if (!is_connected(g)) throw error("maximum nullity solver needs a connected graph");
    if (parent_n >= 0 && g.n >= parent_n)
        throw error("internal: recursive nullity call did not shrink the graph");

    uint64_t code = canonical_code(g);
    {
        std::lock_guard<std::mutex> lock(memo_mx_);
        auto it = memo_.find(code);
        if (it != memo_.end()) {
            MrResult res;
            res.m = it->second.m;
            res.z = it->second.z;
            res.stage = it->second.stage;
            res.zhat_value = it->second.zhat_value;
            res.ledger.raise_lower("memo", res.m);
            res.ledger.cut_upper("memo", res.m);
            return res;
        }
    }

    MrResult res;
    BoundLedger& led = res.ledger;
    const int n = g.n;

    auto finish = [&](const std::string& stage) -> MrResult {
        if (!led.resolved()) throw error("internal: stage " + stage + " finished unresolved");
        res.m = led.lower;
        res.stage = stage;
        std::lock_guard<std::mutex> lock(memo_mx_);
        memo_[code] = MemoEntry{res.m, res.z, res.stage, res.zhat_value};
        return res;
    };

    // (0) orders up to 6: maximum nullity equals the zero forcing number.
    res.z = zero_forcing_number(g).z;
    if (n <= 6) {
        led.raise_lower("base", res.z);
        led.cut_upper("base", res.z);
        return finish("base");
    }

    // (1) bracket by vertex connectivity below and zero forcing above.
    led.cut_upper("z-upper", res.z);
    led.raise_lower("kappa-lower", vertex_connectivity(g));
    if (led.resolved()) return finish("kappa-z");

    // (2) minimum rank at most 2 recognized by forbidden induced subgraphs.
    if (mr_le_2(g)) {
        int m = n - (is_complete(g) ? 1 : 2);
        led.raise_lower("mr2", m);
        led.cut_upper("mr2", m);
        return finish("mr2");
    }

    // (3) a dominating vertex whose removal leaves nullity equal to forcing
    // pins M(G) = Z(G).
    for (Mask dom = dominating_vertices(g); dom;) {
        int v = lowest_bit(dom);
        dom &= Mask(dom - 1);
        Graph h = delete_vertex(g, v);
        if (nullity_sum_inner(h, n) == z_component_sum(h)) {
            led.raise_lower("dominating", res.z);
            return finish("dominating");
        }
    }

    // (4) cut vertex reduction, exact for every split.
    if (Mask cvs = cut_vertices(g)) {
        int v = lowest_bit(cvs);
        int best = -1;
        for (const auto& [g1, g2] : split_at_cut_vertex(g, v)) {
            int whole = nullity_sum_inner(g1, n) + nullity_sum_inner(g2, n);
            int held = nullity_sum_inner(delete_vertex(g1, 0), n) +
                       nullity_sum_inner(delete_vertex(g2, 0), n);
            best = std::max(best, std::max(whole, held) - 1);
        }
        led.raise_lower("cut-vertex", best);
        led.cut_upper("cut-vertex", best);
        return finish("cut-vertex");
    }

    // (5) 2-separation reduction. Each of the six terms is a lower bound on
    // the nullity for every separation; the maximum over all separations is
    // exact once rank-2 graphs have been peeled off at (2), which is the only
    // family where every separation undershoots (K_{2,k} style graphs).
    {
        auto seps = two_separations(g);
        if (!seps.empty()) {
            auto msum = [&](const Graph& a) { return nullity_sum_inner(a, n); };
            int best = -1;
            for (const TwoSeparation& sep : seps)
                best = std::max(best, separation_formula(g, sep, msum));
            led.raise_lower("two-separation", best);
            led.cut_upper("two-separation", best);
            return finish("two-separation");
        }
    }

    // (6) connectivity equal to forcing number is already caught at (1).

    // (7) twin reduction when the diagonal certificate matches the twin type.
    for (const TwinPair& tp : twins(g)) {
        Graph h = delete_vertex(g, tp.w);
        int mh = nullity_sum_inner(h, n);
        int v_in_h = tp.v - (tp.v > tp.w ? 1 : 0);
        DiagCertificate cert = diag_certificate(h, v_in_h, mh);
        bool usable = tp.adjacent
                          ? (cert == DiagCertificate::forced_nonzero ||
                             cert == DiagCertificate::both)
                          : (cert == DiagCertificate::forced_zero ||
                             cert == DiagCertificate::both);
        if (usable) {
            led.raise_lower("twin", mh + 1);
            led.cut_upper("twin", mh + 1);
            return finish("twin");
        }
    }

    // (8) 3-connected graphs with forcing number 4 have nullity 4.
    if (auto m = three_connected_z4_rule(g)) {
        led.raise_lower("z4-rule", *m);
        led.cut_upper("z4-rule", *m);
        return finish("z4-rule");
    }

    // (9) loop-configuration sweep tightens the upper bound.
    res.zhat_value = zhat(g);
    led.cut_upper("zhat", *res.zhat_value);
    if (led.resolved()) return finish("zhat");

    // (10) a Petersen-family minor pushes the lower bound to 5 when Z = 5.
    if (res.z == 5) {
        for (const auto& entry : Catalog::builtin().with_prefix("petersen_")) {
            if (entry.graph.n > n) continue;
            if (has_minor(g, entry.graph)) {
                led.raise_lower("petersen-minor", 5);
                break;
            }
        }
        if (led.resolved()) return finish("petersen-minor");
    }

    // (11) lift a stored optimal witness of a one-vertex-deleted subgraph.
    if (store_) {
        for (int v = 0; v < n; v++) {
            Graph h = delete_vertex(g, v);
            if (!is_connected(h)) continue;
            auto rec = store_->get(canonical_key(h));
            if (!rec) continue;
            if (rec->rank != h.n - nullity_sum_inner(h, n)) continue;
            CanonicalForm cf = canonical_form(h);
            Mat a(h.n, h.n);
            for (int i = 0; i < h.n; i++)
                for (int j = 0; j < h.n; j++) a.at(i, j) = rec->matrix.at(cf.perm[i], cf.perm[j]);
            auto b = lift(a, g, v);
            if (!b) continue;
            store_->put(g, *b, "lift");
            led.raise_lower("lift", n - rec->rank);
            if (led.resolved()) return finish("lift");
        }
    }

    // (12) clique cover witness.
    {
        auto cover = greedy_clique_cover(g);
        if (auto a = clique_cover_witness_auto(g, cover)) {
            if (store_) store_->put(g, *a, "clique-cover");
            led.raise_lower("clique-cover", n - rank(*a));
            if (led.resolved()) return finish("clique-cover");
        }
    }

    // (13) exhaustive rank-3 Gram search when the bracket allows rank 3.
    // Small bounds first: their trees are cheap to exhaust, and a witness
    // found under a small bound is valid under every larger one. Starting
    // large instead buries the solution region behind a huge prefix of the
    // lexicographic candidate order and burns the node budget.
    if (led.lower <= n - 3 && n - 3 <= led.upper) {
        for (int bound : {1, 2, 3, 4, 6}) {
            auto rep = search_rank3_witness(g, bound);
            if (!rep) continue;
            Mat a = gram_witness(*rep, g);
            if (store_) store_->put(g, a, "gram");
            led.raise_lower("gram", n - rank(a));
            break;
        }
        if (led.resolved()) return finish("gram");
    }

    throw unresolved_error("unresolved nullity for " + g6_encode(g) + " ledger " + led.text());
}

CensusRecord Pipeline::census_one(const Graph& g, bool duplicate) {
    CensusRecord rec;
    rec.key = canonical_key(g);
    rec.n = g.n;
    if (duplicate) {
        rec.error_text = "duplicate of an earlier input graph";
        return rec;
    }
    if (!is_connected(g)) {
        rec.error_text = "disconnected input graph";
        return rec;
    }
    try {
        MrResult r = compute_M(g);
        rec.z = r.z;
        rec.m = r.m;
        rec.mr = g.n - r.m;
        rec.zhat_value = r.zhat_value;
        rec.exceptional = r.m < r.z;
        rec.stage = r.stage;
        if (r.stage == "gram") rec.zplus_value = psd_zero_forcing_number(g);
    } catch (const std::exception& e) {
        rec.error_text = e.what();
    }
    return rec;
}

std::pair<std::vector<CensusRecord>, StageReport> Pipeline::census_with(
    const std::vector<Graph>& graphs, int jobs, bool parallel) {
    const int count = static_cast<int>(graphs.size());
    std::vector<char> duplicate(count, 0);
    {
        std::set<uint64_t> seen;
        for (int i = 0; i < count; i++)
            if (!seen.insert(canonical_code(graphs[i])).second) duplicate[i] = 1;
    }

    std::vector<CensusRecord> records(count);
    if (parallel) {
#ifdef _OPENMP
        int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
        for (int i = 0; i < count; i++) records[i] = census_one(graphs[i], duplicate[i]);
#else
        (void)jobs;
        for (int i = 0; i < count; i++) records[i] = census_one(graphs[i], duplicate[i]);
#endif
    } else {
        for (int i = 0; i < count; i++) records[i] = census_one(graphs[i], duplicate[i]);
    }

    StageReport report;
    report.total = count;
    for (const CensusRecord& rec : records) {
        if (rec.error_text) {
            report.unresolved.push_back(rec.key);
        } else {
            report.resolved[rec.stage]++;
        }
    }
    return {std::move(records), std::move(report)};
}

std::pair<std::vector<CensusRecord>, StageReport> Pipeline::census(const std::vector<Graph>& graphs,
                                                                   int jobs) {
    return census_with(graphs, jobs, true);
}

std::pair<std::vector<CensusRecord>, StageReport> Pipeline::census_serial(
    const std::vector<Graph>& graphs) {
    return census_with(graphs, 1, false);
}

std::map<int, double> Pipeline::seed_witness_layers(int max_n) {
    if (!store_) throw error("witness seeding needs an attached store");
    if (max_n > 8) throw error("witness seeding supports at most 8 vertices");
    std::map<int, double> coverage;
    for (int n = 2; n <= max_n; n++) {
        std::vector<Graph> layer = enumerate_connected(n);
        const int count = static_cast<int>(layer.size());
        std::atomic<int> stored{0};

        auto seed_one = [&](const Graph& g) {
            int mr = g.n - compute_M(g).m;
            std::string key = canonical_key(g);
            if (auto existing = store_->get(key); existing && existing->rank == mr) {
                stored++;
                return;
            }
            auto keep = [&](const Mat& a) {
                if (rank(a) != mr) return false;
                stored++;
                return true;
            };
            if (auto a = clique_cover_witness_auto(g, greedy_clique_cover(g))) {
                if (keep(*a)) {
                    store_->put(g, *a, "clique-cover");
                    return;
                }
            }
            for (int v = 0; v < g.n; v++) {
                Graph h = delete_vertex(g, v);
                if (!is_connected(h)) continue;
                auto rec = store_->get(canonical_key(h));
                if (!rec || rec->rank != h.n - compute_M(h).m) continue;
                CanonicalForm cf = canonical_form(h);
                Mat a(h.n, h.n);
                for (int i = 0; i < h.n; i++)
                    for (int j = 0; j < h.n; j++)
                        a.at(i, j) = rec->matrix.at(cf.perm[i], cf.perm[j]);
                auto b = lift(a, g, v);
                if (b && keep(*b)) {
                    store_->put(g, *b, "lift");
                    return;
                }
            }
            if (mr == 2) {
                for (int bound : {1, 2, 3}) {
                    auto a = search_rank2_witness(g, bound);
                    if (a && keep(*a)) {
                        store_->put(g, *a, "gram");
                        return;
                    }
                }
            }
            if (mr == 3) {
                for (int bound : {1, 2, 3, 4, 6}) {
                    auto rep = search_rank3_witness(g, bound);
                    if (!rep) continue;
                    Mat a = gram_witness(*rep, g);
                    if (keep(a)) {
                        store_->put(g, a, "gram");
                        return;
                    }
                }
            }
        };

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
        for (int i = 0; i < count; i++) seed_one(layer[i]);

        coverage[n] = count == 0 ? 1.0 : double(stored.load()) / double(count);
    }
    return coverage;
}

std::map<std::string, std::string> Pipeline::classify_exceptional(
    const std::vector<CensusRecord>& records) {
    const Catalog& cat = Catalog::builtin();
    std::map<std::string, std::string> key_to_name;
    for (const auto& entry : cat.with_prefix("e"))
        key_to_name[canonical_key(entry.graph)] = entry.name;

    std::map<std::string, std::string> out;
    std::set<std::string> used;
    for (const CensusRecord& rec : records) {
        if (rec.error_text || !rec.exceptional) continue;
        auto it = key_to_name.find(rec.key);
        if (it == key_to_name.end())
            throw error("exceptional graph outside the known list: " + rec.key);
        if (!used.insert(it->second).second)
            throw error("exceptional graph matched twice: " + it->second + " by " + rec.key);
        out[rec.key] = it->second;
    }
    return out;
}

std::string census_jsonl(const std::vector<CensusRecord>& records) {
    using ordered_json = nlohmann::ordered_json;
    std::ostringstream os;
    for (const CensusRecord& rec : records) {
        ordered_json j;
        j["key"] = rec.key;
        j["n"] = rec.n;
        if (rec.error_text) {
            j["error"] = *rec.error_text;
        } else {
            j["z"] = rec.z;
            j["m"] = rec.m;
            j["mr"] = rec.mr;
            j["zhat"] = rec.zhat_value ? ordered_json(*rec.zhat_value) : ordered_json(nullptr);
            j["zplus"] = rec.zplus_value ? ordered_json(*rec.zplus_value) : ordered_json(nullptr);
            j["exceptional"] = rec.exceptional;
            j["stage"] = rec.stage;
        }
        os << j.dump() << "\n";
    }
    return os.str();
}

std::string census_summary_csv(const std::vector<CensusRecord>& records) {
    std::map<int, std::map<std::string, int>> by_n;
    std::map<int, int> totals, exceptional, errors;
    for (const CensusRecord& rec : records) {
        totals[rec.n]++;
        if (rec.error_text) {
            errors[rec.n]++;
        } else {
            by_n[rec.n][rec.stage]++;
            if (rec.exceptional) exceptional[rec.n]++;
        }
    }
    std::ostringstream os;
    os << "n,count,exceptional,error";
    for (const std::string& tag : stage_tags()) os << "," << tag;
    os << "\n";
    for (const auto& [n, total] : totals) {
        os << n << "," << total << "," << exceptional[n] << "," << errors[n];
        for (const std::string& tag : stage_tags()) os << "," << by_n[n][tag];
        os << "\n";
    }
    return os.str();
}

}  // namespace minrank
