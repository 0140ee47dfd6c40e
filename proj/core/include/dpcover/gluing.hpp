#pragma once

#include <vector>

#include "dpcover/checked_int.hpp"
#include "dpcover/counting.hpp"
#include "dpcover/cover.hpp"
#include "dpcover/graph.hpp"

namespace dpcover {

/// Ordered permutations (f_2,...,f_n) pairing up the glued-clique labels of
/// inputs 2..n with those of input 1 (input 1 is implicitly the identity).
struct PermTable {
    std::vector<Perm> fs;
    int arity() const { return static_cast<int>(fs.size()) + 1; }
};

/// A clique-gluing instance: the inputs, their chosen cliques, and the glued
/// graph with vertex maps.
struct GluingSpec {
    std::vector<Graph> parts;
    std::vector<VertexSet> cliques;
    int p = 0;
    GlueResult glue;
};
GluingSpec make_gluing(std::vector<Graph> parts, std::vector<VertexSet> cliques, int p);

/// One glued summand plus its cover.
struct CoverPart {
    Cover cover;
    VertexSet clique; // in the part's own vertex indices, identification order
};

/// The cover of part i extracted from a cover of the glued graph: matchings
/// pull back along the vertex map, glued parts play the clique parts.
Cover separated_cover(const GluingSpec& spec, const Cover& glued_cover, int i);

/// Edge-gluing amalgamation. Each cover must be full; the labels of v_i are
/// first renamed so its glued edge becomes the identity, then label j of the
/// glued parts stands for label f_i(j) of cover i. Returns the cover of the
/// edge-glued graph (glued vertices u1, u2).
Cover amalgamate_edges(const std::vector<CoverPart>& parts, const PermTable& F);

/// Clique-gluing amalgamation over covers conducive to their cliques; the
/// result is conducive to the glued clique.
Cover amalgamate_cliques(const std::vector<CoverPart>& parts, const PermTable& F);

/// Same operation built as a left fold of binary amalgamations; counts agree
/// with the direct construction (tested), the covers may differ by labels.
Cover amalgamate_cliques_folded(const std::vector<CoverPart>& parts, const PermTable& F);

/// The product-count identity for an edge gluing under permutation f:
/// D = sum_{j1,j2} N({(u1,j1),(v1,j2)}) * N({(u2,f(j1)),(v2,f(j2))}),
/// evaluated after the same renaming amalgamate_edges performs. Equals the
/// coloring count of the f-amalgamated cover.
CheckedInt product_count_edge(const CoverPart& a, const CoverPart& b, const Perm& f);

/// D = sum_{j in [m]^p} N(P_{1,j}) * prod_i N(P_{i,gamma_i(j)}) where
/// gamma_i lifts f_i coordinatewise; equals the coloring count of the
/// F-amalgamated cover.
CheckedInt product_count_clique(const std::vector<CoverPart>& parts, const PermTable& F);

struct BestGluing {
    Perm f;            // argmin over S_m, lexicographically first
    CheckedInt d_min;  // minimum product count
    CheckedInt d_sum;  // sum of D over all m! permutations
};

/// Exhaustive scan of all m! pairings of two conducive covers. Guarantees
/// d_min * prod_{i<p}(m-i) <= total(a) * total(b) (the averaging bound) and
/// d_sum == (m-p)! * total(a) * total(b); both are recomputed and checked.
BestGluing best_gluing_permutation(const CoverPart& a, const CoverPart& b);

struct PairBoundCheck {
    bool holds = true;
    CheckedInt pdp;              // P_DP(g, m) from exhaustive search
    CheckedInt denominator;      // m(m-1)
    // first failure, if any
    unsigned __int128 cover_index = 0;
    Edge edge{0, 0};
    int j1 = 0, j2 = 0;
    CheckedInt count;
    std::uint64_t pairs_checked = 0;
};

/// Checks N({p1,p2}) * m(m-1) >= P_DP(g,m) for every tree-canonicalized full
/// m-fold cover, every edge uv and every non-cross-adjacent label pair.
PairBoundCheck verify_pair_lower_bound(const Graph& g, int m, const DpOptions& opt = {});

} // namespace dpcover
