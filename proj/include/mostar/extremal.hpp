#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mostar/graph.hpp"
#include "mostar/numeric.hpp"

namespace mostar {

// A tree in preorder parent form: parent[0] == -1, parent[i] < i.
// The buffer is owned by the enumerator and reused between callbacks.
struct TreeView {
    int n = 0;
    const int* parent = nullptr;
};

// Streams exactly one representative per isomorphism class of free trees of
// order n. Trees are rooted at their centroid (or split at the central edge
// when bicentroidal) and assembled from canonical rooted subtrees, so the
// stream is duplicate-free by construction. Practical cap n <= 24.
void for_each_free_tree(int n, const std::function<void(const TreeView&)>& fn);

// Number of free trees of order n, computed independently of the stream via
// the rooted-tree recurrence and Otter's dissimilarity formula.
BigInt free_tree_count(int n);

// All connected labeled graphs on n vertices (n <= 7), one callback per
// labeled edge subset. Objectives are isomorphism-invariant, so labeled
// scanning is sound for optima.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);
BigInt connected_labeled_graph_count(int n);  // inclusion-exclusion oracle

// O(n) tree measures off the parent array (no adjacency materialization).
struct TreeBasics {
    std::int64_t mo = 0;
    std::int64_t irr = 0;
    std::int64_t mo_top = 0;
};
TreeBasics tree_basics(const TreeView& t);
Graph tree_to_graph(const TreeView& t);

// Canonical AHU code of a free tree (for duplicate checks and cross-checks
// against labeled enumeration).
std::string canonical_tree_code(const Graph& g);
// Lexicographically-least edge list over all relabelings; n <= 9.
std::string canonical_graph_code(const Graph& g);

// Prufer decode (labeled-tree oracle).
Graph prufer_decode(const std::vector<int>& seq);

enum class Objective {
    Mo,
    MoTop,
    MoStar,
    Irr,
    MoMinusIrr,
    Peri,
    Spr,
    EPeri,
    ESpr,
    PeriPlusDeg,    // max over vertices of peri(v)+deg(v)
    EPeriPlusEdeg,  // max over edges of eperi(e)+edeg(e)
};
const char* objective_name(Objective o);
std::optional<Objective> objective_from_name(const std::string& s);

enum class GeneratorKind { FreeTrees, ConnectedGraphs };

struct ScanOptions {
    std::string checkpoint_path;            // empty: no checkpoints
    std::uint64_t checkpoint_every = 100000;
    std::uint64_t resume_cursor = 0;        // skip evaluation below this stream index
};

struct ExtremalResult {
    std::string objective;
    int n = 0;
    bool maximize = true;
    std::int64_t optimum = 0;
    std::vector<std::string> witnesses;  // canonical sorted edge lists
    std::uint64_t witness_count = 0;     // total optima seen (witnesses may be capped)
    std::uint64_t count_scanned = 0;
};

ExtremalResult scan(Objective obj, int n, bool maximize, GeneratorKind gen,
                    const ScanOptions& opts = {});

struct ClaimResult {
    std::string id;
    int n = 0;
    std::string expected;
    std::string actual;
    bool pass = false;
    std::string note;
};

// Runs the named claim checks (ids, or the groups "trees" / "connected" /
// "all") over n in [n_lo, n_hi] where applicable. long_run enables the
// minutes-scale checks (the n=22 tree scan).
std::vector<ClaimResult> verify_claims(const std::vector<std::string>& which, int n_lo, int n_hi,
                                       bool long_run);
std::vector<std::string> claim_ids();
void claims_to_json(std::ostream& out, const std::vector<ClaimResult>& results);

}  // namespace mostar
