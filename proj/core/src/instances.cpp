#include "dpcover/instances.hpp"

#include <algorithm>
#include <numeric>

namespace dpcover {

Perm random_perm(Rng& rng, int m) {
    std::vector<std::int8_t> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), static_cast<std::int8_t>(0));
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
}

Graph random_connected_graph(Rng& rng, int n, int extra) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    Graph g(std::move(names));
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(pick(rng), v);
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int tries = 0; extra > 0 && tries < 20 * extra; ++tries) {
        int u = pick(rng), v = pick(rng);
        if (u == v || g.adjacent(u, v)) continue;
        g.add_edge(u, v);
        --extra;
    }
    return g;
}

Cover random_full_cover(Rng& rng, const Graph& g, int m) {
    Cover c(g, m);
    for (const Edge& e : g.edges()) c.set_matching(e.first, e.second, Matching::of_perm(random_perm(rng, m)));
    return c;
}

Cover random_conducive_cover(Rng& rng, const Graph& g, const VertexSet& clique, int m) {
    Cover c = random_full_cover(rng, g, m);
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            c.set_matching(clique[i], clique[j], Matching::identity(m));
    Relabeling r(g.n(), m);
    for (int v = 0; v < g.n(); ++v) r.set(v, random_perm(rng, m));
    return relabel(c, r);
}

} // namespace dpcover
