#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dpcover/checked_int.hpp"
#include "dpcover/cover.hpp"
#include "dpcover/graph.hpp"

namespace dpcover {

/// At most one part-vertex per host vertex; must be independent in the cover
/// for a positive count (a dependent set counts 0 by convention).
using PrescribedSet = std::vector<PartVertex>;

constexpr std::uint64_t kDefaultBudget = 1'000'000'000ull;

/// Exact number of transversal independent sets of the cover.
/// Throws ResourceLimitError when the node budget runs out.
CheckedInt count_colorings(const Cover& c, std::uint64_t budget = kDefaultBudget);

/// Count of colorings containing every part-vertex of p. Returns 0 for a
/// dependent prescribed set (two labels in one part, or a cross-edge inside p).
CheckedInt count_with_prescribed(const Cover& c, const PrescribedSet& p,
                                 std::uint64_t budget = kDefaultBudget);

/// count_with_prescribed(c, p) >= 1, decided by early-exit backtracking.
bool greedy_extension_exists(const Cover& c, const PrescribedSet& p);

/// Count plus provenance, for machine-readable reports.
struct CountReport {
    CheckedInt count;
    Cover cover;
    PrescribedSet prescribed;
    std::uint64_t nodes_expanded = 0;
};
CountReport count_report(const Cover& c, const PrescribedSet& p = {},
                         std::uint64_t budget = kDefaultBudget);

/// The symmetry-reduced space of full covers: identity matchings on the
/// fixed edges (a spanning structure), free permutations elsewhere. Every
/// full cover is relabel-equivalent to exactly one point when the fixed
/// edges are a spanning forest; the minimum over all covers is attained
/// here because completing a partial matching only removes colorings.
struct SearchSpace {
    Graph host;
    int m = 0;
    std::vector<int> fixed_edges; // edge indices, identity
    std::vector<int> free_edges;  // edge indices, odometer digit order
};

/// Fixed edges form a BFS spanning forest rooted at the lowest index of each
/// component.
SearchSpace tree_search_space(const Graph& g, int m);

/// Fixed edges are all edges inside the clique plus a BFS spanning structure
/// grown outward from the clique; searches covers conducive to the clique.
SearchSpace clique_search_space(const Graph& g, const VertexSet& clique, int m);

/// (m!)^{#free}; throws OverflowError past 2^127.
unsigned __int128 search_space_size(const SearchSpace& ss);

struct DpOptions {
    std::uint64_t budget = kDefaultBudget; // (cover + node-expansion) steps
    int shards = 1;
};

struct DpResult {
    CheckedInt value;   // minimum found; an upper bound only when !exact
    Cover argmin;       // first cover attaining the minimum (odometer order)
    bool exact = false; // false iff the budget was exhausted
    std::uint64_t covers_scanned = 0;
    std::uint64_t nodes_expanded = 0;
    CheckedInt space_size; // number of covers in the reduced space
};

/// Minimum coloring count over the symmetry-reduced space; with shards > 1
/// the odometer range is split into contiguous blocks and the (min, lex-min
/// index) reduction makes the result identical for every shard count.
DpResult dp_search(const SearchSpace& ss, const DpOptions& opt = {});

/// P_DP(G,m): exact minimum over all m-fold covers.
DpResult dp_color_function(const Graph& g, int m, const DpOptions& opt = {});

/// P'_DP(G,K,m): exact minimum over covers conducive to the clique K.
DpResult canonical_dp_color_function(const Graph& g, const VertexSet& clique, int m,
                                     const DpOptions& opt = {});

/// Cover at a given odometer index of a search space.
Cover cover_at(const SearchSpace& ss, unsigned __int128 index);

} // namespace dpcover
