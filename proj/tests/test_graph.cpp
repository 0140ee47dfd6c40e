#include <doctest.h>

#include "dpcover/graph.hpp"
#include "dpcover/instances.hpp"

using namespace dpcover;

TEST_CASE("standard builders") {
    Graph c4 = build_cycle(4);
    CHECK(c4.n() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(build_complete(4).edge_count() == 6);
    Graph p1 = build_path(1);
    CHECK(p1.n() == 1);
    CHECK(p1.edge_count() == 0);
    CHECK_THROWS_AS(build_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(build_path(0), std::invalid_argument);
}

TEST_CASE("theta graphs") {
    Graph t = build_theta(2, 2, 2);
    CHECK(t.n() == 5);
    CHECK(t.edge_count() == 6);
    // complete bipartite between the two ends and the three midpoints
    int a = t.index_of("a"), b = t.index_of("b");
    CHECK(!t.adjacent(a, b));
    for (int v = 0; v < t.n(); ++v)
        if (v != a && v != b) {
            CHECK(t.adjacent(a, v));
            CHECK(t.adjacent(b, v));
            CHECK(t.degree(v) == 2);
        }

    Graph k4e = build_theta(1, 2, 2);
    CHECK(k4e.n() == 4);
    CHECK(k4e.edge_count() == 5);

    CHECK_THROWS_AS(build_theta(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_theta(0, 2, 2), std::invalid_argument);
}

TEST_CASE("cone") {
    ConeResult r = cone(build_theta(2, 2, 2));
    CHECK(r.graph.n() == 6);
    CHECK(r.graph.edge_count() == 11);
    CHECK(r.graph.degree(r.apex) == 5);

    ConeResult k2 = cone(build_path(1));
    CHECK(k2.graph.n() == 2);
    CHECK(k2.graph.edge_count() == 1);

    ConeResult w4 = cone(build_cycle(4));
    CHECK(w4.graph.edge_count() == 8);
    CHECK(w4.graph.degree(w4.apex) == 4);
}

TEST_CASE("contract_edge") {
    Graph c3 = contract_edge(build_cycle(4), 0, 1);
    CHECK(c3.n() == 3);
    CHECK(c3.edge_count() == 3);

    Graph p2 = contract_edge(build_cycle(3), 0, 1);
    CHECK(p2.n() == 2);
    CHECK(p2.edge_count() == 1);

    Graph k3 = contract_edge(build_complete(4), 1, 3);
    CHECK(k3.n() == 3);
    CHECK(k3.edge_count() == 3);

    CHECK_THROWS_AS(contract_edge(build_cycle(5), 0, 2), std::invalid_argument);
}

TEST_CASE("glue_on_clique") {
    Graph c3 = build_cycle(3);
    GlueResult diamond = glue_on_clique({c3, c3}, {{0, 1}, {0, 1}}, 2);
    CHECK(diamond.glued.n() == 4);
    CHECK(diamond.glued.edge_count() == 5);

    Graph k4 = build_complete(4);
    GlueResult two_k4 = glue_on_clique({k4, k4}, {{0, 1, 2}, {0, 1, 2}}, 3);
    CHECK(two_k4.glued.n() == 5);
    CHECK(two_k4.glued.edge_count() == 9);

    Graph c4 = build_cycle(4);
    GlueResult two_c4 = glue_on_clique({c4, c4}, {{0, 1}, {2, 3}}, 2);
    CHECK(two_c4.glued.n() == 6);
    CHECK(two_c4.glued.edge_count() == 7);

    CHECK_THROWS_AS(glue_on_clique({c4, c4}, {{0, 2}, {0, 1}}, 2), std::invalid_argument);

    // vertex maps send each clique onto u_1..u_p and are injective per input
    for (int i = 0; i < 2; ++i) {
        CHECK(two_c4.vertex_maps[static_cast<std::size_t>(i)].size() == 4);
        for (int q = 0; q < 2; ++q)
            CHECK(two_c4.vertex_maps[static_cast<std::size_t>(i)]
                                    [static_cast<std::size_t>(i == 0 ? q : q + 2)] == q);
    }
}

TEST_CASE("glued edge count identity") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        int p = 1 + static_cast<int>(rng() % 3);
        std::vector<Graph> gs;
        std::vector<VertexSet> ks;
        for (int i = 0; i < n; ++i) {
            Graph g = random_connected_graph(rng, 4 + static_cast<int>(rng() % 3), 3);
            // force a clique of size p on the lowest indices
            for (int a = 0; a < p; ++a)
                for (int b = a + 1; b < p; ++b)
                    if (!g.adjacent(a, b)) g.add_edge(a, b);
            VertexSet k;
            for (int q = 0; q < p; ++q) k.push_back(q);
            gs.push_back(std::move(g));
            ks.push_back(std::move(k));
        }
        GlueResult r = glue_on_clique(gs, ks, p);
        int sum = 0;
        for (const Graph& g : gs) sum += g.edge_count();
        CHECK(r.glued.edge_count() == sum - (n - 1) * (p * (p - 1) / 2));
    }
}

TEST_CASE("tessellate") {
    Graph k4 = tessellate(build_cycle(3), {0, 1, 2});
    CHECK(k4.n() == 4);
    CHECK(k4.edge_count() == 6);

    CHECK_THROWS_AS(tessellate(build_cycle(4), {0, 1, 2}), std::invalid_argument);

    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_graph(rng, 5 + static_cast<int>(rng() % 3), 4);
        auto tris = list_triangles(g);
        if (tris.empty()) continue;
        const VertexSet& t = tris[rng() % tris.size()];
        Graph out = tessellate(g, t);
        CHECK(out.n() == g.n() + 1);
        CHECK(out.edge_count() == g.edge_count() + 3);
        int d = out.n() - 1;
        CHECK(out.degree(d) == 3);
        for (int v : t) CHECK(out.adjacent(d, v));
    }
}

TEST_CASE("list_triangles") {
    CHECK(list_triangles(build_cycle(4)).empty());
    CHECK(list_triangles(build_complete(4)).size() == 4);
    auto tris = list_triangles(build_complete(5));
    CHECK(tris.size() == 10);
    // lexicographic on sorted triples
    for (std::size_t i = 1; i < tris.size(); ++i) CHECK(tris[i - 1] < tris[i]);
}

TEST_CASE("contraction keeps graphs simple") {
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(rng, 4 + static_cast<int>(rng() % 4), 4);
        const Edge e = g.edges()[rng() % g.edges().size()];
        Graph out = contract_edge(g, e.first, e.second);
        CHECK(out.n() == g.n() - 1);
        // Graph's invariants forbid loops/multi-edges; re-derive the edge set
        for (const Edge& oe : out.edges()) CHECK(oe.first < oe.second);
    }
}

TEST_CASE("induced subgraph and components") {
    Graph g = build_cycle(6);
    Graph p = g.induced({0, 1, 2});
    CHECK(p.n() == 3);
    CHECK(p.edge_count() == 2);
    int comp_count = 0;
    g.induced({0, 2, 4}).component_ids(&comp_count);
    CHECK(comp_count == 3);
}
