#include "dpcover/cover.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace dpcover {

Relabeling::Relabeling(int n, int m) {
    perms_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perms_.push_back(Perm::identity(m));
}

Relabeling::Relabeling(std::vector<Perm> per_vertex) : perms_(std::move(per_vertex)) {
    for (const Perm& p : perms_)
        if (p.size() != fold()) throw std::invalid_argument("Relabeling: mixed folds");
}

void Relabeling::set(int v, Perm p) {
    if (p.size() != fold()) throw std::invalid_argument("Relabeling::set: wrong fold");
    perms_[static_cast<std::size_t>(v)] = std::move(p);
}

Relabeling Relabeling::inverse() const {
    std::vector<Perm> out;
    out.reserve(perms_.size());
    for (const Perm& p : perms_) out.push_back(p.inverse());
    return Relabeling(std::move(out));
}

bool Relabeling::is_identity() const {
    return std::all_of(perms_.begin(), perms_.end(), [](const Perm& p) { return p.is_identity(); });
}

Cover::Cover(Graph host, int m) : host_(std::move(host)), m_(m) {
    if (m < 1 || m > kMaxFold) throw std::invalid_argument("Cover: fold out of range");
    sig_.assign(host_.edges().size(), Matching::empty(m));
}

Cover Cover::canonical(Graph host, int m) {
    Cover c(std::move(host), m);
    for (auto& s : c.sig_) s = Matching::identity(m);
    return c;
}

Matching Cover::oriented(int u, int v) const {
    int ei = host_.edge_index(u, v);
    if (ei < 0) throw std::invalid_argument("Cover::oriented: not a host edge");
    const Matching& s = sig_[static_cast<std::size_t>(ei)];
    return u < v ? s : s.inverse();
}

void Cover::set_matching(int u, int v, const Matching& sigma) {
    int ei = host_.edge_index(u, v);
    if (ei < 0) throw std::invalid_argument("Cover::set_matching: not a host edge");
    if (sigma.fold() != m_) throw std::invalid_argument("Cover::set_matching: wrong fold");
    if (!sigma.is_matching()) throw std::invalid_argument("Cover::set_matching: not a matching");
    sig_[static_cast<std::size_t>(ei)] = u < v ? sigma : sigma.inverse();
}

bool Cover::full() const {
    return std::all_of(sig_.begin(), sig_.end(), [](const Matching& s) { return s.full(); });
}

bool Cover::joined(const PartVertex& a, const PartVertex& b) const {
    if (a.vertex == b.vertex) return a.label != b.label; // parts are cliques
    int ei = host_.edge_index(a.vertex, b.vertex);
    if (ei < 0) return false;
    const PartVertex& lo = a.vertex < b.vertex ? a : b;
    const PartVertex& hi = a.vertex < b.vertex ? b : a;
    return sig_[static_cast<std::size_t>(ei)].to(lo.label) == hi.label;
}

std::vector<std::string> validate_cross_edges(const Graph& host, int m,
                                              const std::vector<CrossEdge>& entries) {
    std::vector<std::string> out;
    if (m < 1) {
        out.push_back("fold m must be >= 1");
        return out;
    }
    auto vname = [&](int v) { return host.has_vertex(v) ? host.name(v) : "<" + std::to_string(v) + ">"; };
    // group by unordered endpoint pair to check the matching axiom
    std::vector<std::pair<Edge, std::pair<int, int>>> grouped;
    for (const CrossEdge& e : entries) {
        if (!host.has_vertex(e.u) || !host.has_vertex(e.v)) {
            out.push_back("cross-edge references unknown vertex index");
            continue;
        }
        if (e.ju < 0 || e.ju >= m || e.jv < 0 || e.jv >= m) {
            out.push_back("cross-edge " + vname(e.u) + "-" + vname(e.v) + " has a label outside [m]");
            continue;
        }
        if (e.u == e.v) {
            out.push_back("axiom (3): cross-edge inside one part at " + vname(e.u));
            continue;
        }
        if (!host.adjacent(e.u, e.v)) {
            out.push_back("axiom (3): entry on non-edge " + vname(e.u) + "-" + vname(e.v));
            continue;
        }
        int u = e.u, v = e.v, ju = e.ju, jv = e.jv;
        if (u > v) {
            std::swap(u, v);
            std::swap(ju, jv);
        }
        grouped.push_back({{u, v}, {ju, jv}});
    }
    std::sort(grouped.begin(), grouped.end());
    for (std::size_t i = 0; i < grouped.size(); ++i) {
        for (std::size_t j = i + 1; j < grouped.size() && grouped[j].first == grouped[i].first; ++j) {
            const auto& [e, lab] = grouped[i];
            const auto& lab2 = grouped[j].second;
            if (lab == lab2) continue; // duplicate entry, harmless
            if (lab.first == lab2.first || lab.second == lab2.second)
                out.push_back("axiom (4): not a matching on edge " + vname(e.first) + "-" + vname(e.second));
        }
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> validate(const Cover& c) {
    std::vector<CrossEdge> entries;
    for (const Edge& e : c.host().edges()) {
        const Matching& s = c.matching(c.host().edge_index(e.first, e.second));
        for (int j = 0; j < c.fold(); ++j)
            if (s.to(j) != kUnmatched) entries.push_back({e.first, e.second, j, s.to(j)});
    }
    return validate_cross_edges(c.host(), c.fold(), entries);
}

Cover subcover_induced(const Cover& c, const VertexSet& verts) {
    for (int v : verts)
        if (!c.host().has_vertex(v)) throw std::invalid_argument("subcover_induced: vertex out of range");
    Graph sub = c.host().induced(verts);
    Cover out(sub, c.fold());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            int ei = c.host().edge_index(verts[i], verts[j]);
            if (ei < 0) continue;
            out.set_matching(static_cast<int>(i), static_cast<int>(j), c.oriented(verts[i], verts[j]));
        }
    return out;
}

Cover subcover_corresponding(const Cover& c, const Graph& sub) {
    std::vector<int> host_of(static_cast<std::size_t>(sub.n()));
    for (int v = 0; v < sub.n(); ++v) {
        int hv = c.host().index_of(sub.name(v));
        if (hv < 0) throw std::invalid_argument("subcover_corresponding: vertex \"" + sub.name(v) + "\" not in host");
        host_of[static_cast<std::size_t>(v)] = hv;
    }
    Cover out(sub, c.fold());
    for (const Edge& e : sub.edges()) {
        int hu = host_of[static_cast<std::size_t>(e.first)], hv = host_of[static_cast<std::size_t>(e.second)];
        if (c.host().edge_index(hu, hv) < 0)
            throw std::invalid_argument("subcover_corresponding: edge " + sub.name(e.first) + "-" +
                                        sub.name(e.second) + " is not a host edge");
        out.set_matching(e.first, e.second, c.oriented(hu, hv));
    }
    return out;
}

Cover relabel(const Cover& c, const Relabeling& r) {
    if (r.n() != c.host().n() || r.fold() != c.fold())
        throw std::invalid_argument("relabel: relabeling shape mismatch");
    Cover out(c.host(), c.fold());
    for (std::size_t ei = 0; ei < c.host().edges().size(); ++ei) {
        const Edge& e = c.host().edges()[ei];
        out.set_matching(e.first, e.second, c.matching(static_cast<int>(ei)).conjugate(r.at(e.first), r.at(e.second)));
    }
    return out;
}

std::optional<Relabeling> has_canonical_labeling(const Cover& c) {
    if (!c.full()) throw std::invalid_argument("has_canonical_labeling: cover must be full");
    const Graph& g = c.host();
    const int n = g.n(), m = c.fold();
    Relabeling r(n, m);
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    std::vector<Edge> non_tree;
    for (int root = 0; root < n; ++root) {
        if (placed[static_cast<std::size_t>(root)]) continue;
        placed[static_cast<std::size_t>(root)] = true; // identity at the root
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                // want r_v o sigma_{uv} o r_u^{-1} = id  =>  r_v = r_u o sigma_{uv}^{-1}
                Perm sig_uv = c.oriented(u, v).as_perm();
                r.set(v, sig_uv.inverse().then(r.at(u)));
                placed[static_cast<std::size_t>(v)] = true;
                queue.push_back(v);
            }
        }
    }
    Cover rc = relabel(c, r);
    for (const Edge& e : g.edges())
        if (!rc.matching(g.edge_index(e.first, e.second)).is_identity()) return std::nullopt;
    return r;
}

bool is_twisted(const Cover& c, int u, int v) {
    int ei = c.host().edge_index(u, v);
    if (ei < 0) throw std::invalid_argument("is_twisted: not a host edge");
    if (!c.full()) throw std::invalid_argument("is_twisted: cover must be full");
    return !c.matching(ei).is_identity();
}

bool is_conducive(const Cover& c, const VertexSet& clique) {
    if (!c.host().is_clique(clique)) throw std::invalid_argument("is_conducive: vertices are not a clique");
    if (!c.full()) return false;
    return has_canonical_labeling(subcover_induced(c, clique)).has_value();
}

} // namespace dpcover
