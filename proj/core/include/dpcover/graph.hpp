#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dpcover {

using Edge = std::pair<int, int>; // always stored with first < second
using VertexSet = std::vector<int>;
using EdgeList = std::vector<Edge>;

/// Labeled simple undirected graph. Vertex names are unique strings; indices
/// are stable and 0-based. No self-loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> names);

    int n() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    /// Index of the named vertex, or -1.
    int index_of(const std::string& name) const;

    bool adjacent(int u, int v) const;
    /// Edges sorted lexicographically as (u,v) with u < v.
    const EdgeList& edges() const { return edges_; }
    /// Position of (u,v) in edges(), or -1 if not an edge.
    int edge_index(int u, int v) const;

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::uint64_t adj_bits(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    void add_edge(int u, int v);
    bool has_vertex(int v) const { return v >= 0 && v < n(); }

    /// Subgraph induced by verts (order kept); old_of_new[i] gives the
    /// source index of new vertex i.
    Graph induced(const VertexSet& verts, std::vector<int>* old_of_new = nullptr) const;

    bool is_clique(const VertexSet& verts) const;
    /// Component id per vertex, ids 0..k-1 in order of first appearance.
    std::vector<int> component_ids(int* count = nullptr) const;

    /// Same vertex names in the same order and the same edge set.
    bool operator==(const Graph&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<std::uint64_t> adj_;
    EdgeList edges_;
};

// Builders for the standard graphs used throughout; vertices come out in
// cyclic/linear order with names v1..vn.
Graph build_path(int n);
Graph build_cycle(int n);
Graph build_complete(int n);

/// Two end vertices a, b joined by three internally disjoint paths of lengths
/// l1, l2, l3 (at most one length may be 1, else a multi-edge would result).
Graph build_theta(int l1, int l2, int l3);

struct ConeResult {
    Graph graph;
    int apex; // index of the new universal vertex
};
/// Join a new universal vertex (named "w", suffixed if taken) to all of g.
ConeResult cone(const Graph& g);

/// Contract edge (u,v): identify v into u, merge parallel edges, drop loops.
Graph contract_edge(const Graph& g, int u, int v);

struct GlueResult {
    Graph glued;
    /// vertex_maps[i][x] = index in glued of vertex x of input i
    std::vector<std::vector<int>> vertex_maps;
    /// indices of the identified clique vertices u_1..u_p in glued
    VertexSet glued_clique;
};
/// Identify the chosen p-cliques of the inputs into one clique u_1..u_p.
/// Identification follows the order of each supplied clique list.
GlueResult glue_on_clique(const std::vector<Graph>& graphs,
                          const std::vector<VertexSet>& cliques, int p);

/// Add one new vertex adjacent to exactly the triangle t = {a,b,c}.
Graph tessellate(const Graph& g, const VertexSet& triangle,
                 const std::string& new_name = "d");

/// All 3-cliques, lexicographic on sorted index triples.
std::vector<VertexSet> list_triangles(const Graph& g);

} // namespace dpcover
