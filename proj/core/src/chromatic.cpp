#include "dpcover/chromatic.hpp"

#include <map>
#include <string>

#include "dpcover/errors.hpp"

namespace dpcover {

namespace {

// Minor in index form: n plus sorted edge list.
struct Minor {
    int n = 0;
    EdgeList edges;
};

std::string fingerprint(const Minor& m) {
    std::string key;
    key.reserve(2 + m.edges.size() * 2);
    key.push_back(static_cast<char>(m.n));
    for (const Edge& e : m.edges) {
        key.push_back(static_cast<char>(e.first));
        key.push_back(static_cast<char>(e.second));
    }
    return key;
}

IntPoly falling_factorial_poly(int k) {
    // m(m-1)...(m-k+1)
    IntPoly acc = IntPoly::constant(CheckedInt(1));
    for (int i = 0; i < k; ++i) acc = acc * (IntPoly::x() - IntPoly::constant(CheckedInt(i)));
    return acc;
}

Minor delete_edge(const Minor& g, std::size_t ei) {
    Minor out{g.n, {}};
    out.edges.reserve(g.edges.size() - 1);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (i != ei) out.edges.push_back(g.edges[i]);
    return out;
}

Minor contract(const Minor& g, std::size_t ei) {
    auto [u, v] = g.edges[ei];
    Minor out{g.n - 1, {}};
    auto remap = [&](int x) {
        if (x == v) x = u;
        return x > v ? x - 1 : x;
    };
    for (const Edge& e : g.edges) {
        int a = remap(e.first), b = remap(e.second);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        out.edges.push_back({a, b});
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

class Solver {
public:
    IntPoly solve(const Minor& g) {
        // Isolated vertices factor out as m^k.
        std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
        for (const Edge& e : g.edges) {
            ++deg[static_cast<std::size_t>(e.first)];
            ++deg[static_cast<std::size_t>(e.second)];
        }
        int isolated = 0;
        for (int d : deg) isolated += (d == 0);
        if (isolated > 0) {
            Minor core{g.n - isolated, {}};
            std::vector<int> remap(static_cast<std::size_t>(g.n), -1);
            int next = 0;
            for (int v = 0; v < g.n; ++v)
                if (deg[static_cast<std::size_t>(v)] > 0) remap[static_cast<std::size_t>(v)] = next++;
            for (const Edge& e : g.edges)
                core.edges.push_back({remap[static_cast<std::size_t>(e.first)], remap[static_cast<std::size_t>(e.second)]});
            std::sort(core.edges.begin(), core.edges.end());
            IntPoly rest = core.n == 0 ? IntPoly::constant(CheckedInt(1)) : solve(core);
            return IntPoly::monomial(CheckedInt(1), isolated) * rest;
        }
        if (g.edges.empty()) return IntPoly::monomial(CheckedInt(1), g.n);
        // Forest: m(m-1)^{n-1} per tree, i.e. m^c (m-1)^{edges} overall.
        if (static_cast<int>(g.edges.size()) <= g.n - components(g)) {
            // a graph with |E| <= n - c and no isolated vertices is a forest
            IntPoly mm1 = IntPoly::x() - IntPoly::constant(CheckedInt(1));
            return IntPoly::monomial(CheckedInt(1), components(g)) * mm1.pow(static_cast<unsigned>(g.edges.size()));
        }
        if (static_cast<int>(g.edges.size()) == g.n * (g.n - 1) / 2) return falling_factorial_poly(g.n);

        std::string key = fingerprint(g);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        IntPoly result = solve(delete_edge(g, 0)) - solve(contract(g, 0));
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    static int components(const Minor& g) {
        std::vector<int> parent(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) parent[static_cast<std::size_t>(v)] = v;
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };
        int c = g.n;
        for (const Edge& e : g.edges) {
            int a = find(e.first), b = find(e.second);
            if (a != b) {
                parent[static_cast<std::size_t>(a)] = b;
                --c;
            }
        }
        return c;
    }

    std::map<std::string, IntPoly> memo_;
};

} // namespace

IntPoly chromatic_polynomial(const Graph& g, int max_vertices) {
    if (g.n() > max_vertices)
        throw ResourceLimitError("chromatic_polynomial: graph has " + std::to_string(g.n()) +
                                 " vertices, bound is " + std::to_string(max_vertices));
    Minor m{g.n(), g.edges()};
    Solver s;
    return s.solve(m);
}

CheckedInt chromatic_count(const Graph& g, int m, int max_vertices) {
    if (m < 0) throw std::invalid_argument("chromatic_count: m >= 0");
    return chromatic_polynomial(g, max_vertices).eval(CheckedInt(m));
}

} // namespace dpcover
