#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpcover/graph.hpp"
#include "dpcover/perm.hpp"

namespace dpcover {

/// A vertex of the cover graph H: label `label` in the part of host vertex
/// `vertex` (0-based; files use 1-based labels).
struct PartVertex {
    int vertex = 0;
    int label = 0;
    bool operator==(const PartVertex&) const = default;
    auto operator<=>(const PartVertex&) const = default;
};

/// Per-vertex permutations of the labels; conjugates every edge matching and
/// leaves the coloring count unchanged.
class Relabeling {
public:
    Relabeling(int n, int m); // identity everywhere
    explicit Relabeling(std::vector<Perm> per_vertex);

    int n() const { return static_cast<int>(perms_.size()); }
    int fold() const { return perms_.empty() ? 0 : perms_[0].size(); }
    const Perm& at(int v) const { return perms_[static_cast<std::size_t>(v)]; }
    void set(int v, Perm p);

    Relabeling inverse() const;
    bool is_identity() const;

private:
    std::vector<Perm> perms_;
};

/// An m-fold cover of a host graph: one partial matching per host edge,
/// stored for the sorted edge (u,v), u < v, mapping labels of u to labels of
/// v. Parts are implicit m-cliques; sigma(v,u) is the inverse implied.
class Cover {
public:
    Cover() = default;
    /// All matchings empty.
    Cover(Graph host, int m);

    /// Identity permutation on every edge.
    static Cover canonical(Graph host, int m);

    const Graph& host() const { return host_; }
    int fold() const { return m_; }

    const Matching& matching(int edge_idx) const { return sig_[static_cast<std::size_t>(edge_idx)]; }
    /// Matching oriented from u's labels to v's labels (inverted if u > v).
    Matching oriented(int u, int v) const;
    void set_matching(int u, int v, const Matching& sigma);

    bool full() const;
    /// True iff the two part-vertices are joined in H (same part with
    /// different labels, or a cross-edge).
    bool joined(const PartVertex& a, const PartVertex& b) const;

    bool operator==(const Cover&) const = default;

private:
    Graph host_;
    int m_ = 0;
    std::vector<Matching> sig_; // parallel to host_.edges()
};

/// One raw cross-edge (u,ju)-(v,jv); used to validate arbitrary structures
/// that may violate the cover axioms (e.g. entries on non-edges or repeated
/// endpoints within one matching).
struct CrossEdge {
    int u = 0, v = 0;
    int ju = 0, jv = 0;
};

/// Axiom check on an explicit cross-edge list; returns one message per
/// violation and never throws. Empty result means the structure is a valid
/// m-fold cover of the host.
std::vector<std::string> validate_cross_edges(const Graph& host, int m,
                                              const std::vector<CrossEdge>& entries);

/// Axiom check of a structured cover (labels in range, each sigma a
/// matching). Empty result means ok.
std::vector<std::string> validate(const Cover& c);

/// Cover of host[verts] keeping all matchings between retained vertices.
Cover subcover_induced(const Cover& c, const VertexSet& verts);

/// Cover over sub (vertices matched by name, edges a subset of host edges)
/// keeping only the matchings of sub's edges.
Cover subcover_corresponding(const Cover& c, const Graph& sub);

/// sigma'(u,v) = r_v o sigma(u,v) o r_u^{-1}.
Cover relabel(const Cover& c, const Relabeling& r);

/// For a full cover: the relabeling making every matching the identity, if
/// one exists. Witness construction fixes the identity at the lowest-index
/// root of a BFS spanning forest and propagates along tree edges.
std::optional<Relabeling> has_canonical_labeling(const Cover& c);

/// Under the current labels, is sigma(e) != identity? Requires a full cover.
bool is_twisted(const Cover& c, int u, int v);

/// Full and the subcover induced by the clique admits a canonical labeling.
bool is_conducive(const Cover& c, const VertexSet& clique);

} // namespace dpcover
