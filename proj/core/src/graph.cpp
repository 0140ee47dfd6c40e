#include "dpcover/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dpcover {

static constexpr int kMaxVertices = 64;

Graph::Graph(std::vector<std::string> names) : names_(std::move(names)) {
    if (static_cast<int>(names_.size()) > kMaxVertices)
        throw std::invalid_argument("Graph: at most 64 vertices supported");
    std::set<std::string> uniq(names_.begin(), names_.end());
    if (uniq.size() != names_.size()) throw std::invalid_argument("Graph: vertex names must be distinct");
    adj_.assign(names_.size(), 0);
}

int Graph::index_of(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

bool Graph::adjacent(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it != edges_.end() && *it == Edge{u, v}) return static_cast<int>(it - edges_.begin());
    return -1;
}

int Graph::degree(int v) const { return __builtin_popcountll(adj_[static_cast<std::size_t>(v)]); }

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    std::uint64_t bits = adj_[static_cast<std::size_t>(v)];
    while (bits) {
        int u = __builtin_ctzll(bits);
        out.push_back(u);
        bits &= bits - 1;
    }
    return out;
}

void Graph::add_edge(int u, int v) {
    if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    if (u > v) std::swap(u, v);
    if (adjacent(u, v)) throw std::invalid_argument("add_edge: multi-edge");
    adj_[static_cast<std::size_t>(u)] |= 1ull << v;
    adj_[static_cast<std::size_t>(v)] |= 1ull << u;
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), Edge{u, v}), Edge{u, v});
}

Graph Graph::induced(const VertexSet& verts, std::vector<int>* old_of_new) const {
    std::vector<std::string> names;
    names.reserve(verts.size());
    for (int v : verts) {
        if (!has_vertex(v)) throw std::invalid_argument("induced: vertex out of range");
        names.push_back(name(v));
    }
    Graph out(std::move(names));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (old_of_new) *old_of_new = verts;
    return out;
}

bool Graph::is_clique(const VertexSet& verts) const {
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (!has_vertex(verts[i])) return false;
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!adjacent(verts[i], verts[j])) return false;
    }
    return true;
}

std::vector<int> Graph::component_ids(int* count) const {
    std::vector<int> id(static_cast<std::size_t>(n()), -1);
    int next = 0;
    for (int s = 0; s < n(); ++s) {
        if (id[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<int> stack{s};
        id[static_cast<std::size_t>(s)] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : neighbors(v))
                if (id[static_cast<std::size_t>(u)] == -1) {
                    id[static_cast<std::size_t>(u)] = next;
                    stack.push_back(u);
                }
        }
        ++next;
    }
    if (count) *count = next;
    return id;
}

static std::vector<std::string> numbered_names(int n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

Graph build_path(int n) {
    if (n < 1) throw std::invalid_argument("build_path: need n >= 1");
    Graph g(numbered_names(n, "v"));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph build_cycle(int n) {
    if (n < 3) throw std::invalid_argument("build_cycle: need n >= 3");
    Graph g(numbered_names(n, "v"));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph build_complete(int n) {
    if (n < 1) throw std::invalid_argument("build_complete: need n >= 1");
    Graph g(numbered_names(n, "v"));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph build_theta(int l1, int l2, int l3) {
    int ls[3] = {l1, l2, l3};
    for (int l : ls)
        if (l < 1) throw std::invalid_argument("build_theta: path lengths must be >= 1");
    int ones = 0;
    for (int l : ls) ones += (l == 1);
    if (ones > 1) throw std::invalid_argument("build_theta: more than one path of length 1 would create a multi-edge");

    std::vector<std::string> names{"a", "b"};
    for (int p = 0; p < 3; ++p)
        for (int i = 1; i < ls[p]; ++i) names.push_back("p" + std::to_string(p + 1) + "_" + std::to_string(i));
    Graph g(std::move(names));
    int next = 2;
    for (int p = 0; p < 3; ++p) {
        int prev = 0; // vertex a
        for (int i = 1; i < ls[p]; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1); // into b
    }
    return g;
}

static std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
    auto used = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
    if (!used(base)) return base;
    for (int k = 2;; ++k) {
        std::string cand = base + "#" + std::to_string(k);
        if (!used(cand)) return cand;
    }
}

ConeResult cone(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("cone: graph is empty");
    std::vector<std::string> names = g.names();
    names.push_back(fresh_name(g.names(), "w"));
    Graph out(std::move(names));
    for (const Edge& e : g.edges()) out.add_edge(e.first, e.second);
    int apex = out.n() - 1;
    for (int v = 0; v < g.n(); ++v) out.add_edge(v, apex);
    return {std::move(out), apex};
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (g.edge_index(u, v) < 0) throw std::invalid_argument("contract_edge: not an edge");
    if (u > v) std::swap(u, v);
    // v is removed; its other neighbors attach to u (parallels merged, loop dropped)
    std::vector<std::string> names;
    std::vector<int> old_of_new;
    for (int x = 0; x < g.n(); ++x)
        if (x != v) {
            names.push_back(g.name(x));
            old_of_new.push_back(x);
        }
    Graph out(std::move(names));
    auto new_of_old = [&](int x) {
        if (x == v) x = u;
        return static_cast<int>(std::lower_bound(old_of_new.begin(), old_of_new.end(), x) - old_of_new.begin());
    };
    for (const Edge& e : g.edges()) {
        int a = new_of_old(e.first), b = new_of_old(e.second);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (!out.adjacent(a, b)) out.add_edge(a, b);
    }
    return out;
}

GlueResult glue_on_clique(const std::vector<Graph>& graphs, const std::vector<VertexSet>& cliques, int p) {
    if (graphs.size() < 2) throw std::invalid_argument("glue_on_clique: need at least two graphs");
    if (cliques.size() != graphs.size()) throw std::invalid_argument("glue_on_clique: one clique per graph");
    if (p < 1) throw std::invalid_argument("glue_on_clique: p >= 1");
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (static_cast<int>(cliques[i].size()) != p)
            throw std::invalid_argument("glue_on_clique: clique " + std::to_string(i) + " has wrong size");
        if (!graphs[i].is_clique(cliques[i]))
            throw std::invalid_argument("glue_on_clique: chosen vertices are not a clique in graph " + std::to_string(i));
    }

    std::vector<std::string> names;
    for (int q = 1; q <= p; ++q) names.push_back("u" + std::to_string(q));
    std::vector<std::vector<int>> maps(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        maps[i].assign(static_cast<std::size_t>(graphs[i].n()), -1);
        for (int q = 0; q < p; ++q) maps[i][static_cast<std::size_t>(cliques[i][static_cast<std::size_t>(q)])] = q;
        for (int x = 0; x < graphs[i].n(); ++x) {
            if (maps[i][static_cast<std::size_t>(x)] != -1) continue;
            maps[i][static_cast<std::size_t>(x)] = static_cast<int>(names.size());
            names.push_back(fresh_name(names, graphs[i].name(x)));
        }
    }
    Graph glued(std::move(names));
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (const Edge& e : graphs[i].edges()) {
            int a = maps[i][static_cast<std::size_t>(e.first)], b = maps[i][static_cast<std::size_t>(e.second)];
            if (!glued.adjacent(a, b)) glued.add_edge(a, b);
        }
    VertexSet uq(static_cast<std::size_t>(p));
    for (int q = 0; q < p; ++q) uq[static_cast<std::size_t>(q)] = q;
    return {std::move(glued), std::move(maps), std::move(uq)};
}

Graph tessellate(const Graph& g, const VertexSet& triangle, const std::string& new_name) {
    if (triangle.size() != 3 || !g.is_clique(triangle))
        throw std::invalid_argument("tessellate: the given vertices are not a triangle");
    std::vector<std::string> names = g.names();
    names.push_back(fresh_name(g.names(), new_name));
    Graph out(std::move(names));
    for (const Edge& e : g.edges()) out.add_edge(e.first, e.second);
    int d = out.n() - 1;
    for (int v : triangle) out.add_edge(v, d);
    return out;
}

std::vector<VertexSet> list_triangles(const Graph& g) {
    std::vector<VertexSet> out;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int c = b + 1; c < g.n(); ++c)
                if (g.adjacent(a, c) && g.adjacent(b, c)) out.push_back({a, b, c});
        }
    return out;
}

} // namespace dpcover
