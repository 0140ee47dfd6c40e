// Brute-force reference implementations used as independent oracles. These
// deliberately share no code with the counting kernel or the search: they
// enumerate label tuples / relabelings directly from the definitions.
#pragma once

#include <vector>

#include "dpcover/checked_int.hpp"
#include "dpcover/counting.hpp"
#include "dpcover/cover.hpp"
#include "dpcover/graph.hpp"
#include "dpcover/perm.hpp"

namespace dpcover::oracle {

// Counts transversal independent sets by enumerating all m^n label tuples
// and testing every pair against the cover's cross-edges and parts.
inline CheckedInt count_colorings(const Cover& c, const PrescribedSet& prescribed = {}) {
    const int n = c.host().n(), m = c.fold();
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    long long total = 0;
    while (true) {
        bool ok = true;
        for (const PartVertex& pv : prescribed)
            if (labels[static_cast<std::size_t>(pv.vertex)] != pv.label) ok = false;
        if (ok) {
            for (int u = 0; u < n && ok; ++u)
                for (int v = u + 1; v < n && ok; ++v)
                    if (c.joined({u, labels[static_cast<std::size_t>(u)]}, {v, labels[static_cast<std::size_t>(v)]}))
                        ok = false;
            if (ok) ++total;
        }
        int pos = n - 1;
        while (pos >= 0 && labels[static_cast<std::size_t>(pos)] == m - 1) labels[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++labels[static_cast<std::size_t>(pos)];
    }
    return CheckedInt(total);
}

// Proper m-colorings by enumeration.
inline CheckedInt chromatic_count(const Graph& g, int m) {
    const int n = g.n();
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    long long total = 0;
    while (true) {
        bool ok = true;
        for (const Edge& e : g.edges())
            if (colors[static_cast<std::size_t>(e.first)] == colors[static_cast<std::size_t>(e.second)]) {
                ok = false;
                break;
            }
        if (ok) ++total;
        int pos = n - 1;
        while (pos >= 0 && colors[static_cast<std::size_t>(pos)] == m - 1) colors[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++colors[static_cast<std::size_t>(pos)];
    }
    return CheckedInt(total);
}

// Tries every relabeling in (m!)^n; only usable for tiny covers.
inline bool has_canonical_by_exhaustion(const Cover& c) {
    const int n = c.host().n(), m = c.fold();
    PermTableLex table(m);
    std::vector<std::uint32_t> digit(static_cast<std::size_t>(n), 0);
    while (true) {
        Relabeling r(n, m);
        for (int v = 0; v < n; ++v) r.set(v, table.perm(digit[static_cast<std::size_t>(v)]));
        Cover rc = relabel(c, r);
        bool all_id = true;
        for (int ei = 0; ei < c.host().edge_count() && all_id; ++ei)
            all_id = rc.matching(ei).is_identity();
        if (all_id) return true;
        int pos = n - 1;
        while (pos >= 0 && digit[static_cast<std::size_t>(pos)] == table.count() - 1)
            digit[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) return false;
        ++digit[static_cast<std::size_t>(pos)];
    }
}

} // namespace dpcover::oracle
