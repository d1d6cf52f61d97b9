#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "minrank/graph.hpp"

namespace minrank {

// Diagonal constraint pattern for the looped forcing rule. Bits absent from
// both masks are unspecified; a vertex may not be in both.
struct LoopConfig {
    Mask loop = 0;
    Mask noloop = 0;
};

enum class Rule { standard, looped, psd };

struct Force {
    int8_t forcer, forced;  // forcer == forced marks a self-force
};
using ForceLog = std::vector<Force>;

// Runs the chosen color change rule to a fixpoint. Returns the final blue
// set and the chronological list of forces. Deterministic: at each step the
// lowest eligible forcer acts on its lowest eligible target.
std::pair<Mask, ForceLog> closure(const Graph& g, Mask start, Rule rule, LoopConfig cfg = {});

bool is_zfs(const Graph& g, Mask b);

struct ZResult {
    int z;
    Mask witness;
};

// Minimum size of a zero forcing set, with one minimum set. Candidate sets
// are pruned through minimal forts: a set that misses some fort never forces.
ZResult zero_forcing_number(const Graph& g);

// Minimum size of a forcing set under the looped rule for one diagonal
// constraint pattern.
ZResult looped_forcing_number(const Graph& g, LoopConfig cfg);

// Maximum of the looped forcing number over all 2^n full diagonal patterns.
int zhat(const Graph& g);
int zhat_serial(const Graph& g);

int psd_zero_forcing_number(const Graph& g);

// Replays the log under the standard rule, rejecting any illegal force, then
// splits the blue history into forcing chains, one per start vertex.
std::vector<std::vector<int>> forcing_chains(const Graph& g, Mask start, const ForceLog& log);

// All forts: nonempty sets F such that no outside vertex has exactly one
// neighbor in F. Ascending as masks.
std::vector<Mask> forts(const Graph& g);
std::vector<Mask> minimal_forts(const Graph& g);

// Same family of minimum-size zero forcing sets?
bool zfs_family_equal(const Graph& g, const Graph& h);

// Evidence about the diagonal entry at v across optimal matrices, searched
// with the looped rule: can a small forcing set certify that the entry must
// be zero (loop clause at v) or nonzero (loopless clause at v)? k must be a
// valid lower bound on the maximum nullity of g; searched sizes are < k.
enum class DiagCertificate { forced_zero, forced_nonzero, both, unknown };
DiagCertificate diag_certificate(const Graph& g, int v, int k);

}  // namespace minrank
