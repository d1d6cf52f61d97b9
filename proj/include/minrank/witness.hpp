#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "minrank/graph.hpp"
#include "minrank/matrix.hpp"

namespace minrank {

// Does A realize g's pattern with the claimed nullity?
bool verify_witness(const Graph& g, const Mat& a, int claimed_nullity);

// Rank-preserving one-vertex extension: given a witness A for g minus v,
// look for w with A[rows off N(v)] w = 0 and (Aw) nonzero exactly on N(v);
// the new row/column sits at index v. Candidates, in order: the sum of the
// echelonized kernel basis, each basis vector, then pairwise sums.
std::optional<Mat> lift(const Mat& a, const Graph& g, int v);

struct CliqueCover {
    std::vector<Mask> cliques;
    std::vector<Rational> coeffs;
};

// Greedy edge cover by maximal cliques, deterministic.
std::vector<Mask> greedy_clique_cover(const Graph& g);

// Weighted sum of clique indicator blocks; absent when some coefficient
// cancellation breaks the pattern. Rank is at most the cover size.
std::optional<Mat> clique_cover_witness(const Graph& g, const CliqueCover& cover);

// Tries a fixed ladder of coefficient families until the pattern holds.
std::optional<Mat> clique_cover_witness_auto(const Graph& g, const std::vector<Mask>& cliques);

// Three rows of integer coordinates under the signature (+,+,-); column v is
// the vector of vertex v.
struct VectorRep {
    Mat m;  // 3 x n
};

// Gram matrix of the representation; errors if its orthogonality pattern
// disagrees with g, listing the offending pairs.
Mat gram_witness(const VectorRep& rep, const Graph& g);

// Backtracking search for a rank <= 3 witness with coordinates in
// [-entry_bound, entry_bound]. Complete up to the bound and the node budget;
// deterministic. Columns are normalized to leading positive sign, which is
// harmless because the pattern only constrains zero versus nonzero products.
std::optional<VectorRep> search_rank3_witness(const Graph& g, int entry_bound,
                                              long node_budget = 200000000L);

// Backtracking search for a rank <= 2 witness, trying the indefinite and the
// definite plane forms. Same normalization and completeness notes as the
// rank-3 search; returns the Gram matrix itself.
std::optional<Mat> search_rank2_witness(const Graph& g, int entry_bound,
                                        long node_budget = 10000000L);

struct WitnessRecord {
    std::string key;  // canonical graph6; the graph is recoverable from it
    int n = 0;
    int rank = 0;
    Mat matrix;  // in the canonical labeling
    std::string source;
};

// Append-only JSONL store of verified witnesses, keyed by canonical graph6.
// Every record is re-verified on load and on put; at most one record per key
// is kept in memory (the lowest rank wins). Safe for concurrent use.
class WitnessStore {
  public:
    // Empty path keeps the store in memory only.
    explicit WitnessStore(std::string path);
    // Path from MINRANK_WITNESS_STORE, or witnesses.jsonl in the cwd.
    static std::string default_path();

    std::optional<WitnessRecord> get(const std::string& key) const;
    // Verifies, relabels to canonical form and stores; returns false when an
    // existing record is at least as good.
    bool put(const Graph& g, const Mat& a, const std::string& source);
    size_t size() const;
    std::vector<std::string> keys() const;
    const std::string& path() const { return path_; }

  private:
    void append_line(const WitnessRecord& rec);

    mutable std::mutex mx_;
    std::string path_;
    std::unordered_map<std::string, WitnessRecord> map_;
};

}  // namespace minrank
