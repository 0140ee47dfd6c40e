#include "dpcover/counting.hpp"

#include <algorithm>
#include <deque>
#include <thread>

#include "dpcover/errors.hpp"
#include "dpcover/kernel.hpp"

namespace dpcover {

CheckedInt count_colorings(const Cover& c, std::uint64_t budget) {
    CountKernel k(c.host(), c.fold());
    k.load(c);
    std::uint64_t nodes = 0, result = 0;
    if (!k.count(budget, nodes, result))
        throw ResourceLimitError("count_colorings: node budget exhausted");
    return CheckedInt(result);
}

namespace {

// -1 valid and independent; otherwise dependent (counts 0)
int prescribed_state(const Cover& c, const PrescribedSet& p) {
    for (const PartVertex& pv : p) {
        if (!c.host().has_vertex(pv.vertex) || pv.label < 0 || pv.label >= c.fold())
            throw std::invalid_argument("prescribed set references an unknown vertex or label");
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i].vertex == p[j].vertex && p[i].label == p[j].label) continue; // duplicate entry
            if (p[i].vertex == p[j].vertex || c.joined(p[i], p[j])) return 1;
        }
    return -1;
}

} // namespace

CheckedInt count_with_prescribed(const Cover& c, const PrescribedSet& p, std::uint64_t budget) {
    if (prescribed_state(c, p) != -1) return CheckedInt(0);
    CountKernel k(c.host(), c.fold());
    k.load(c);
    for (const PartVertex& pv : p) k.prescribe(pv.vertex, pv.label);
    std::uint64_t nodes = 0, result = 0;
    if (!k.count(budget, nodes, result))
        throw ResourceLimitError("count_with_prescribed: node budget exhausted");
    return CheckedInt(result);
}

bool greedy_extension_exists(const Cover& c, const PrescribedSet& p) {
    if (prescribed_state(c, p) != -1) return false;
    CountKernel k(c.host(), c.fold());
    k.load(c);
    for (const PartVertex& pv : p) k.prescribe(pv.vertex, pv.label);
    return k.exists();
}

CountReport count_report(const Cover& c, const PrescribedSet& p, std::uint64_t budget) {
    CountReport r;
    r.cover = c;
    r.prescribed = p;
    if (!p.empty() && prescribed_state(c, p) != -1) {
        r.count = CheckedInt(0);
        return r;
    }
    CountKernel k(c.host(), c.fold());
    k.load(c);
    for (const PartVertex& pv : p) k.prescribe(pv.vertex, pv.label);
    std::uint64_t nodes = 0, result = 0;
    if (!k.count(budget, nodes, result)) throw ResourceLimitError("count_report: node budget exhausted");
    r.count = CheckedInt(result);
    r.nodes_expanded = nodes;
    return r;
}

SearchSpace tree_search_space(const Graph& g, int m) {
    SearchSpace ss{g, m, {}, {}};
    std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
    std::vector<bool> fixed(g.edges().size(), false);
    for (int root = 0; root < g.n(); ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = true;
        std::deque<int> q{root};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u))
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    fixed[static_cast<std::size_t>(g.edge_index(u, v))] = true;
                    q.push_back(v);
                }
        }
    }
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei)
        (fixed[ei] ? ss.fixed_edges : ss.free_edges).push_back(static_cast<int>(ei));
    return ss;
}

SearchSpace clique_search_space(const Graph& g, const VertexSet& clique, int m) {
    if (clique.empty() || !g.is_clique(clique))
        throw std::invalid_argument("clique_search_space: vertices are not a nonempty clique");
    SearchSpace ss{g, m, {}, {}};
    std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
    std::vector<bool> fixed(g.edges().size(), false);
    for (std::size_t i = 0; i < clique.size(); ++i) {
        seen[static_cast<std::size_t>(clique[i])] = true;
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            fixed[static_cast<std::size_t>(g.edge_index(clique[i], clique[j]))] = true;
    }
    std::deque<int> q(clique.begin(), clique.end());
    for (int root = 0; root <= g.n(); ++root) {
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u))
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    fixed[static_cast<std::size_t>(g.edge_index(u, v))] = true;
                    q.push_back(v);
                }
        }
        if (root < g.n() && !seen[static_cast<std::size_t>(root)]) {
            seen[static_cast<std::size_t>(root)] = true;
            q.push_back(root);
        }
    }
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei)
        (fixed[ei] ? ss.fixed_edges : ss.free_edges).push_back(static_cast<int>(ei));
    return ss;
}

unsigned __int128 search_space_size(const SearchSpace& ss) {
    const unsigned __int128 fact = factorial_u64(ss.m);
    const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 126;
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < ss.free_edges.size(); ++i) {
        if (total > limit / fact)
            throw OverflowError("search_space_size: space exceeds the supported range");
        total *= fact;
    }
    return total;
}

Cover cover_at(const SearchSpace& ss, unsigned __int128 index) {
    PermTableLex table(ss.m);
    Cover c(ss.host, ss.m);
    for (int ei : ss.fixed_edges) {
        const Edge& e = ss.host.edges()[static_cast<std::size_t>(ei)];
        c.set_matching(e.first, e.second, Matching::identity(ss.m));
    }
    for (std::size_t d = ss.free_edges.size(); d-- > 0;) {
        std::uint32_t digit = static_cast<std::uint32_t>(index % table.count());
        index /= table.count();
        const Edge& e = ss.host.edges()[static_cast<std::size_t>(ss.free_edges[d])];
        c.set_matching(e.first, e.second, Matching::of_perm(table.perm(digit)));
    }
    return c;
}

namespace {

struct ShardOutcome {
    std::uint64_t best = UINT64_MAX;
    unsigned __int128 best_index = 0;
    bool complete = true;
    std::uint64_t covers = 0, nodes = 0;
};

// Scans odometer indices [begin,end); each cover costs 1 step plus its node
// expansions against the step budget.
ShardOutcome scan_range(const SearchSpace& ss, const PermTableLex& table,
                        unsigned __int128 begin, unsigned __int128 end, std::uint64_t budget) {
    ShardOutcome out;
    if (begin >= end) return out;
    CountKernel kernel(ss.host, ss.m);
    for (int ei : ss.fixed_edges) kernel.set_edge_identity(ei);

    const int k = static_cast<int>(ss.free_edges.size());
    const std::uint32_t fact = table.count();
    std::vector<std::uint32_t> digit(static_cast<std::size_t>(k), 0);
    unsigned __int128 rem = begin;
    for (int d = k; d-- > 0;) {
        digit[static_cast<std::size_t>(d)] = static_cast<std::uint32_t>(rem % fact);
        rem /= fact;
    }
    for (int d = 0; d < k; ++d)
        kernel.set_edge_maps(ss.free_edges[static_cast<std::size_t>(d)],
                             table.row(digit[static_cast<std::size_t>(d)]),
                             table.inv_row(digit[static_cast<std::size_t>(d)]));

    std::uint64_t steps = 0;
    for (unsigned __int128 idx = begin; idx < end; ++idx) {
        if (++steps > budget) {
            out.complete = false;
            break;
        }
        std::uint64_t nodes = 0, cnt = 0;
        if (!kernel.count(budget - steps, nodes, cnt)) {
            steps += nodes;
            out.nodes += nodes;
            out.complete = false;
            break;
        }
        steps += nodes;
        out.nodes += nodes;
        ++out.covers;
        if (cnt < out.best) {
            out.best = cnt;
            out.best_index = idx;
        }
        // advance the odometer (last digit fastest)
        for (int d = k; d-- > 0;) {
            std::uint32_t nd = digit[static_cast<std::size_t>(d)] + 1;
            if (nd == fact) nd = 0;
            digit[static_cast<std::size_t>(d)] = nd;
            kernel.set_edge_maps(ss.free_edges[static_cast<std::size_t>(d)], table.row(nd), table.inv_row(nd));
            if (nd != 0) break;
        }
    }
    return out;
}

} // namespace

DpResult dp_search(const SearchSpace& ss, const DpOptions& opt) {
    if (opt.shards < 1) throw std::invalid_argument("dp_search: shards >= 1");
    if (opt.budget == 0) throw std::invalid_argument("dp_search: budget must be positive");
    PermTableLex table(ss.m);
    unsigned __int128 total = search_space_size(ss);

    int shards = opt.shards;
    if (static_cast<unsigned __int128>(shards) > total) shards = static_cast<int>(total);

    std::vector<ShardOutcome> outs(static_cast<std::size_t>(shards));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(shards));
    for (int s = 0; s < shards; ++s) {
        unsigned __int128 b = total / static_cast<unsigned __int128>(shards) * static_cast<unsigned __int128>(s) +
                              std::min<unsigned __int128>(static_cast<unsigned __int128>(s), total % static_cast<unsigned __int128>(shards));
        unsigned __int128 e = total / static_cast<unsigned __int128>(shards) * static_cast<unsigned __int128>(s + 1) +
                              std::min<unsigned __int128>(static_cast<unsigned __int128>(s + 1), total % static_cast<unsigned __int128>(shards));
        std::uint64_t share = opt.budget / static_cast<std::uint64_t>(shards);
        if (s < static_cast<int>(opt.budget % static_cast<std::uint64_t>(shards))) ++share;
        threads.emplace_back([&ss, &table, b, e, share, s, &outs] { outs[static_cast<std::size_t>(s)] = scan_range(ss, table, b, e, share); });
    }
    for (auto& t : threads) t.join();

    DpResult r;
    r.exact = true;
    std::uint64_t best = UINT64_MAX;
    unsigned __int128 best_idx = 0;
    bool any = false;
    for (const ShardOutcome& o : outs) {
        r.covers_scanned += o.covers;
        r.nodes_expanded += o.nodes;
        r.exact = r.exact && o.complete;
        if (o.covers > 0 && (!any || o.best < best)) { // shards in index order: first wins ties
            any = true;
            best = o.best;
            best_idx = o.best_index;
        }
    }
    if (!any) throw ResourceLimitError("dp_search: budget too small to evaluate a single cover");
    r.value = CheckedInt(static_cast<unsigned long long>(best));
    r.argmin = cover_at(ss, best_idx);
    r.space_size = CheckedInt::from_raw(static_cast<__int128>(total));
    return r;
}

DpResult dp_color_function(const Graph& g, int m, const DpOptions& opt) {
    return dp_search(tree_search_space(g, m), opt);
}

DpResult canonical_dp_color_function(const Graph& g, const VertexSet& clique, int m, const DpOptions& opt) {
    return dp_search(clique_search_space(g, clique, m), opt);
}

} // namespace dpcover
