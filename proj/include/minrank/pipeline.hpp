#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "minrank/graph.hpp"
#include "minrank/witness.hpp"

namespace minrank {

// Monotone bracket around M(G) with provenance of every bound event.
struct BoundLedger {
    int lower = 0;
    int upper = 1 << 20;
    std::vector<std::pair<std::string, int>> provenance;

    bool resolved() const { return lower == upper; }
    void raise_lower(const std::string& tag, int v);
    void cut_upper(const std::string& tag, int v);
    std::string text() const;
};

struct MrResult {
    int m = 0;
    int z = 0;
    std::string stage;
    BoundLedger ledger;
    std::optional<int> zhat_value;  // set when the loop-sweep stage ran
};

struct CensusRecord {
    std::string key;  // canonical graph6
    int n = 0;
    int z = 0;
    int m = 0;
    int mr = 0;
    std::optional<int> zhat_value;
    std::optional<int> zplus_value;
    bool exceptional = false;  // m < z
    std::string stage;
    std::optional<std::string> error_text;  // set on per-graph failure
};

struct StageReport {
    std::map<std::string, int> resolved;
    std::vector<std::string> unresolved;  // keys of error records
    int total = 0;
};

// Stage-ordered exact solver for the maximum nullity of connected graphs on
// at most 8 vertices, with a census driver and witness-store integration.
class Pipeline {
  public:
    explicit Pipeline(WitnessStore* store = nullptr) : store_(store) {}

    // Exact M(G) with the resolving stage and the bound ledger. Errors with
    // an unresolved_error carrying the ledger when no stage closes the gap.
    MrResult compute_M(const Graph& g);

    // Component sum of M over any graph on <= 8-vertex components.
    int nullity_sum(const Graph& g);

    // One record per input, merged in input order. Disconnected or duplicate
    // inputs yield error records; processing continues.
    std::pair<std::vector<CensusRecord>, StageReport> census(const std::vector<Graph>& graphs,
                                                             int jobs = 0);
    std::pair<std::vector<CensusRecord>, StageReport> census_serial(
        const std::vector<Graph>& graphs);

    // Bottom-up witness construction for all connected graphs of order
    // 2..max_n: clique cover, then lifting, then rank-3 search. Returns the
    // fraction of graphs per layer holding an optimal stored witness.
    std::map<int, double> seed_witness_layers(int max_n);

    // Maps each exceptional record's key to its catalog name e1..e7; any
    // unmatched or doubly-matched exceptional record is a hard error.
    static std::map<std::string, std::string> classify_exceptional(
        const std::vector<CensusRecord>& records);

    WitnessStore* store() const { return store_; }

  private:
    struct MemoEntry {
        int m = 0, z = 0;
        std::string stage;
        std::optional<int> zhat_value;
    };

    MrResult compute_connected(const Graph& g, int parent_n);
    int nullity_sum_inner(const Graph& g, int parent_n);
    CensusRecord census_one(const Graph& g, bool duplicate);
    std::pair<std::vector<CensusRecord>, StageReport> census_with(
        const std::vector<Graph>& graphs, int jobs, bool parallel);

    WitnessStore* store_;
    std::mutex memo_mx_;
    std::unordered_map<uint64_t, MemoEntry> memo_;
};

// Fixed-field-order serializations of census results.
std::string census_jsonl(const std::vector<CensusRecord>& records);
std::string census_summary_csv(const std::vector<CensusRecord>& records);

// The stage tags in reporting order.
const std::vector<std::string>& stage_tags();

}  // namespace minrank
