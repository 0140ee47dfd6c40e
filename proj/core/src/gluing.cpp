#include "dpcover/gluing.hpp"

#include <stdexcept>

#include "dpcover/errors.hpp"
#include "dpcover/kernel.hpp"

namespace dpcover {

namespace {

// sigma o f : j -> sigma(f(j))
Matching precompose(const Matching& s, const Perm& f) {
    Matching out = Matching::empty(s.fold());
    for (int j = 0; j < s.fold(); ++j) out.set(j, s.to(f(j)));
    return out;
}

// Rename labels of v so the matching on edge (u,v) becomes the identity.
Cover align_edge_identity(const Cover& c, int u, int v) {
    Relabeling r(c.host().n(), c.fold());
    r.set(v, c.oriented(u, v).as_perm().inverse());
    return relabel(c, r);
}

// Rename labels of the clique's parts so every matching inside it is the
// identity; requires a conducive cover.
Cover align_clique_canonical(const Cover& c, const VertexSet& clique) {
    auto witness = has_canonical_labeling(subcover_induced(c, clique));
    if (!witness) throw std::invalid_argument("cover is not conducive to the given clique");
    Relabeling r(c.host().n(), c.fold());
    for (std::size_t q = 0; q < clique.size(); ++q)
        r.set(clique[static_cast<std::size_t>(q)], witness->at(static_cast<int>(q)));
    return relabel(c, r);
}

void check_parts(const std::vector<CoverPart>& parts, const PermTable& F, int p) {
    if (parts.size() < 2) throw std::invalid_argument("amalgamation needs at least two covers");
    if (F.arity() != static_cast<int>(parts.size()))
        throw std::invalid_argument("PermTable arity does not match the number of covers");
    const int m = parts[0].cover.fold();
    for (const CoverPart& part : parts) {
        if (part.cover.fold() != m) throw std::invalid_argument("amalgamation: mixed folds");
        if (static_cast<int>(part.clique.size()) != p)
            throw std::invalid_argument("amalgamation: clique size mismatch");
        if (!part.cover.host().is_clique(part.clique))
            throw std::invalid_argument("amalgamation: chosen vertices are not a clique");
        if (!part.cover.full()) throw std::invalid_argument("amalgamation: cover must be full");
    }
    for (const Perm& f : F.fs)
        if (f.size() != m) throw std::invalid_argument("amalgamation: permutation fold mismatch");
}

// Shared construction once each input cover has identity matchings inside
// its glued clique: label j of the glued parts stands for label f_i(j) in
// cover i.
Cover assemble(const std::vector<CoverPart>& parts, const std::vector<Cover>& aligned,
               const PermTable& F, int p) {
    const int m = aligned[0].fold();
    std::vector<Graph> graphs;
    graphs.reserve(parts.size());
    for (const CoverPart& part : parts) graphs.push_back(part.cover.host());
    std::vector<VertexSet> cliques;
    cliques.reserve(parts.size());
    for (const CoverPart& part : parts) cliques.push_back(part.clique);
    GlueResult glue = glue_on_clique(graphs, cliques, p);

    Cover out(glue.glued, m);
    for (int q = 0; q < p; ++q)
        for (int q2 = q + 1; q2 < p; ++q2) out.set_matching(q, q2, Matching::identity(m));

    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Cover& ci = aligned[i];
        const std::vector<int>& mu = glue.vertex_maps[i];
        Perm fi = i == 0 ? Perm::identity(m) : F.fs[i - 1];
        std::vector<bool> in_clique(static_cast<std::size_t>(ci.host().n()), false);
        for (int v : parts[i].clique) in_clique[static_cast<std::size_t>(v)] = true;
        for (const Edge& e : ci.host().edges()) {
            bool cu = in_clique[static_cast<std::size_t>(e.first)];
            bool cv = in_clique[static_cast<std::size_t>(e.second)];
            if (cu && cv) continue; // glued clique edges already identity
            int a = mu[static_cast<std::size_t>(e.first)], b = mu[static_cast<std::size_t>(e.second)];
            if (!cu && !cv) {
                out.set_matching(a, b, ci.oriented(e.first, e.second));
            } else {
                // one endpoint glued: its glued label j means label f_i(j)
                int cl = cu ? e.first : e.second;
                int x = cu ? e.second : e.first;
                Matching from_clique = ci.oriented(cl, x);
                out.set_matching(mu[static_cast<std::size_t>(cl)], mu[static_cast<std::size_t>(x)],
                                 precompose(from_clique, fi));
            }
        }
    }
    return out;
}

} // namespace

GluingSpec make_gluing(std::vector<Graph> parts, std::vector<VertexSet> cliques, int p) {
    GluingSpec spec;
    spec.glue = glue_on_clique(parts, cliques, p);
    spec.parts = std::move(parts);
    spec.cliques = std::move(cliques);
    spec.p = p;
    return spec;
}

Cover separated_cover(const GluingSpec& spec, const Cover& glued_cover, int i) {
    if (i < 0 || i >= static_cast<int>(spec.parts.size()))
        throw std::invalid_argument("separated_cover: index out of range");
    if (glued_cover.host() != spec.glue.glued)
        throw std::invalid_argument("separated_cover: cover does not match the glued graph");
    const Graph& gi = spec.parts[static_cast<std::size_t>(i)];
    const std::vector<int>& mu = spec.glue.vertex_maps[static_cast<std::size_t>(i)];
    Cover out(gi, glued_cover.fold());
    for (const Edge& e : gi.edges())
        out.set_matching(e.first, e.second,
                         glued_cover.oriented(mu[static_cast<std::size_t>(e.first)], mu[static_cast<std::size_t>(e.second)]));
    return out;
}

Cover amalgamate_edges(const std::vector<CoverPart>& parts, const PermTable& F) {
    check_parts(parts, F, 2);
    for (const CoverPart& part : parts)
        if (part.cover.host().edge_index(part.clique[0], part.clique[1]) < 0)
            throw std::invalid_argument("amalgamate_edges: glued pair is not an edge");
    std::vector<Cover> aligned;
    aligned.reserve(parts.size());
    for (const CoverPart& part : parts)
        aligned.push_back(align_edge_identity(part.cover, part.clique[0], part.clique[1]));
    return assemble(parts, aligned, F, 2);
}

Cover amalgamate_cliques(const std::vector<CoverPart>& parts, const PermTable& F) {
    const int p = parts.empty() ? 0 : static_cast<int>(parts[0].clique.size());
    check_parts(parts, F, p);
    std::vector<Cover> aligned;
    aligned.reserve(parts.size());
    for (const CoverPart& part : parts) aligned.push_back(align_clique_canonical(part.cover, part.clique));
    Cover out = assemble(parts, aligned, F, p);
    VertexSet glued_clique(static_cast<std::size_t>(p));
    for (int q = 0; q < p; ++q) glued_clique[static_cast<std::size_t>(q)] = q;
    if (!is_conducive(out, glued_clique))
        throw InternalError("amalgamate_cliques: result is not conducive to the glued clique");
    return out;
}

Cover amalgamate_cliques_folded(const std::vector<CoverPart>& parts, const PermTable& F) {
    const int p = parts.empty() ? 0 : static_cast<int>(parts[0].clique.size());
    check_parts(parts, F, p);
    VertexSet glued_clique(static_cast<std::size_t>(p));
    for (int q = 0; q < p; ++q) glued_clique[static_cast<std::size_t>(q)] = q;
    CoverPart acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        PermTable step{{F.fs[i - 1]}};
        Cover next = amalgamate_cliques({acc, parts[i]}, step);
        acc = CoverPart{next, glued_clique};
    }
    return acc.cover;
}

namespace {

// N(P_j) for every j in [m]^p, indexed base-m with j_1 most significant.
std::vector<CheckedInt> prescribed_table(const Cover& c, const VertexSet& clique) {
    const int m = c.fold();
    const int p = static_cast<int>(clique.size());
    std::size_t total = 1;
    for (int q = 0; q < p; ++q) total *= static_cast<std::size_t>(m);
    std::vector<CheckedInt> table(total);
    std::vector<int> j(static_cast<std::size_t>(p), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (int q = p; q-- > 0;) {
            j[static_cast<std::size_t>(q)] = static_cast<int>(rem % static_cast<std::size_t>(m));
            rem /= static_cast<std::size_t>(m);
        }
        PrescribedSet ps;
        for (int q = 0; q < p; ++q) ps.push_back({clique[static_cast<std::size_t>(q)], j[static_cast<std::size_t>(q)]});
        table[idx] = count_with_prescribed(c, ps);
    }
    return table;
}

// index of gamma_f(j) given index of j
std::size_t lift_index(std::size_t idx, const Perm& f, int p, int m) {
    std::size_t out = 0;
    std::vector<int> digs(static_cast<std::size_t>(p));
    for (int q = p; q-- > 0;) {
        digs[static_cast<std::size_t>(q)] = static_cast<int>(idx % static_cast<std::size_t>(m));
        idx /= static_cast<std::size_t>(m);
    }
    for (int q = 0; q < p; ++q) out = out * static_cast<std::size_t>(m) + static_cast<std::size_t>(f(digs[static_cast<std::size_t>(q)]));
    return out;
}

} // namespace

CheckedInt product_count_edge(const CoverPart& a, const CoverPart& b, const Perm& f) {
    PermTable F{{f}};
    check_parts({a, b}, F, 2);
    Cover ca = align_edge_identity(a.cover, a.clique[0], a.clique[1]);
    Cover cb = align_edge_identity(b.cover, b.clique[0], b.clique[1]);
    const int m = ca.fold();
    CheckedInt d(0);
    for (int j1 = 0; j1 < m; ++j1)
        for (int j2 = 0; j2 < m; ++j2) {
            CheckedInt n1 = count_with_prescribed(ca, {{a.clique[0], j1}, {a.clique[1], j2}});
            if (n1.is_zero()) continue;
            CheckedInt n2 = count_with_prescribed(cb, {{b.clique[0], f(j1)}, {b.clique[1], f(j2)}});
            d += n1 * n2;
        }
    return d;
}

CheckedInt product_count_clique(const std::vector<CoverPart>& parts, const PermTable& F) {
    const int p = parts.empty() ? 0 : static_cast<int>(parts[0].clique.size());
    check_parts(parts, F, p);
    const int m = parts[0].cover.fold();
    std::vector<std::vector<CheckedInt>> tables;
    tables.reserve(parts.size());
    for (const CoverPart& part : parts)
        tables.push_back(prescribed_table(align_clique_canonical(part.cover, part.clique), part.clique));
    CheckedInt d(0);
    for (std::size_t idx = 0; idx < tables[0].size(); ++idx) {
        CheckedInt term = tables[0][idx];
        for (std::size_t i = 1; i < parts.size() && !term.is_zero(); ++i)
            term *= tables[i][lift_index(idx, F.fs[i - 1], p, m)];
        d += term;
    }
    return d;
}

BestGluing best_gluing_permutation(const CoverPart& a, const CoverPart& b) {
    const int p = static_cast<int>(a.clique.size());
    const int m = a.cover.fold();
    if (static_cast<int>(b.clique.size()) != p || b.cover.fold() != m)
        throw std::invalid_argument("best_gluing_permutation: clique size or fold mismatch");
    if (m < p) throw std::invalid_argument("best_gluing_permutation: need m >= p");
    Cover ca = align_clique_canonical(a.cover, a.clique);
    Cover cb = align_clique_canonical(b.cover, b.clique);
    std::vector<CheckedInt> ta = prescribed_table(ca, a.clique);
    std::vector<CheckedInt> tb = prescribed_table(cb, b.clique);

    PermTableLex perms(m);
    BestGluing best;
    best.d_sum = CheckedInt(0);
    bool first = true;
    for (std::uint32_t pi = 0; pi < perms.count(); ++pi) {
        Perm f = perms.perm(pi);
        CheckedInt d(0);
        for (std::size_t idx = 0; idx < ta.size(); ++idx) {
            if (ta[idx].is_zero()) continue;
            d += ta[idx] * tb[lift_index(idx, f, p, m)];
        }
        best.d_sum += d;
        if (first || d < best.d_min) {
            first = false;
            best.d_min = d;
            best.f = f;
        }
    }

    CheckedInt total_a(0), total_b(0);
    for (const CheckedInt& x : ta) total_a += x;
    for (const CheckedInt& x : tb) total_b += x;
    CheckedInt fall(1);
    for (int i = 0; i < p; ++i) fall *= CheckedInt(m - i);
    CheckedInt mp_fact(1);
    for (int i = 2; i <= m - p; ++i) mp_fact *= CheckedInt(i);
    if (best.d_sum != mp_fact * total_a * total_b)
        throw InternalError("best_gluing_permutation: permutation-sum identity failed");
    if (best.d_min * fall > total_a * total_b)
        throw InternalError("best_gluing_permutation: averaging bound failed");
    return best;
}

PairBoundCheck verify_pair_lower_bound(const Graph& g, int m, const DpOptions& opt) {
    DpResult dp = dp_color_function(g, m, opt);
    if (!dp.exact) throw ResourceLimitError("verify_pair_lower_bound: dp search exceeded its budget");
    PairBoundCheck out;
    out.pdp = dp.value;
    out.denominator = CheckedInt(m) * CheckedInt(m - 1);

    SearchSpace ss = tree_search_space(g, m);
    unsigned __int128 total = search_space_size(ss);
    for (unsigned __int128 idx = 0; idx < total; ++idx) {
        Cover c = cover_at(ss, idx);
        for (const Edge& e : g.edges()) {
            for (int j1 = 0; j1 < m; ++j1)
                for (int j2 = 0; j2 < m; ++j2) {
                    PartVertex p1{e.first, j1}, p2{e.second, j2};
                    if (c.joined(p1, p2)) continue;
                    CheckedInt n = count_with_prescribed(c, {p1, p2});
                    ++out.pairs_checked;
                    if (n * out.denominator < out.pdp) {
                        out.holds = false;
                        out.cover_index = idx;
                        out.edge = e;
                        out.j1 = j1;
                        out.j2 = j2;
                        out.count = n;
                        return out;
                    }
                }
        }
    }
    return out;
}

} // namespace dpcover
