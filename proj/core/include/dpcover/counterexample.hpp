#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpcover/checked_int.hpp"
#include "dpcover/counting.hpp"
#include "dpcover/cover.hpp"
#include "dpcover/graph.hpp"

namespace dpcover {

/// The 6-vertex base graph of the tessellation chain: a universal vertex w
/// over a theta graph with three paths of length two. v1, v2 are the theta
/// end vertices (degree 4 here), u1, u2, u3 the path midpoints (degree 3).
struct G0 {
    Graph graph;
    int w = 0, v1 = 0, v2 = 0, u1 = 0, u2 = 0, u3 = 0;
};
G0 build_g0();

/// The specific 4-fold cover of G0 with 104 colorings: identity matchings
/// everywhere except v1-u2 (labels shift by one) and v1-u3 (shift by two).
Cover build_g0_twisted_cover();

/// Step-by-step recount of the inclusion-exclusion that pins N((w,j)) = 26
/// on the twisted cover: restrict to the theta part with the three labels
/// that survive (w,1), drop the two twisted edges to get a tree cover with
/// 48 colorings, and subtract the 22 colorings hitting a twisted cross-edge.
struct DecompositionCheck {
    struct Item {
        std::string name;
        CheckedInt expected;
        CheckedInt actual;
        bool ok() const { return expected == actual; }
    };
    std::vector<Item> items;
    bool all_ok() const;
};
DecompositionCheck verify_g0_count_decomposition();

/// Exhaustive precoloring-extension sweep: over every cover of the
/// symmetry-reduced space of g at fold m, check that every independent
/// triple on every triangle of g extends to a full coloring. Budget steps
/// are covers scanned plus branch assignments enumerated. Requires m <= 4.
struct TriangleSweepResult {
    bool all_extend = true;
    bool complete = true;
    std::uint64_t covers_checked = 0;
    std::uint64_t steps = 0;
    // first failure in odometer order, when any
    unsigned __int128 cover_index = 0;
    VertexSet triangle;
    int labels[3] = {0, 0, 0};
};
TriangleSweepResult verify_triangle_extension_sweep(const Graph& g, int m,
                                                    std::uint64_t budget = 40'000'000'000ull,
                                                    int shards = 1);

/// What is known about one P_DP value in the chain.
struct ChainBound {
    enum class Kind { Exact, Upper, Unknown } kind = Kind::Unknown;
    CheckedInt value; // the exact value or the upper bound
    std::string provenance;
};

struct ChainIndexReport {
    Graph graph;
    ChainBound bound;
    /// Comparison P_DP(G_k,4) <= P_DP(G_{k-1},4) * 24/24 for k >= 1:
    /// +1 violated, 0 holds, -1 undecidable from the available values.
    int inequality_status = -1;
};

struct ChainOptions {
    std::vector<std::uint64_t> budgets; // per index; defaults used when empty
    int shards = 1;
    enum class Sweep { Run, AssumeVerified, Skip } sweep = Sweep::Run;
    std::uint64_t sweep_budget = 40'000'000'000ull;
};

struct ChainState {
    G0 base;
    std::vector<VertexSet> triangles; // t1..t6 of the base graph, t1 = {w,v1,u1}
    std::vector<ChainIndexReport> reports; // indices 0..6
    CheckedInt pdp_k4;                     // verified by search
    /// The computational facts this run established, one line each.
    std::vector<std::string> certificate;
    /// True when every hypothesis needed for the some-index-fails conclusion
    /// was verified (here or by the caller): the gap 104 < 120, the
    /// triangle-extension sweep, and P_DP(K4,4) = 24.
    bool some_index_fails_certified = false;
    /// Index k with a decided violation, if the exact values allow one.
    std::optional<int> violated_index;
};
ChainState run_chain(const ChainOptions& opt = {});

/// Both minima for one graph/clique, for probing whether restricting to
/// conducive covers can cost colorings.
struct ConduciveGapReport {
    DpResult unrestricted;
    DpResult conducive;
    CheckedInt gap; // conducive - unrestricted, always >= 0
};
ConduciveGapReport probe_conducive_gap(const Graph& g, const VertexSet& clique, int m,
                                       const DpOptions& opt = {});

} // namespace dpcover
