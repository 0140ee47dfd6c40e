#include <doctest.h>

#include "dpcover/chromatic.hpp"
#include "dpcover/counterexample.hpp"
#include "dpcover/counting.hpp"
#include "dpcover/cover.hpp"
#include "dpcover/instances.hpp"
#include "oracles.hpp"

using namespace dpcover;

TEST_CASE("canonical covers count like proper colorings") {
    CHECK(count_colorings(Cover::canonical(build_cycle(4), 3)) == CheckedInt(18));
    CHECK(count_colorings(Cover::canonical(build_path(1), 5)) == CheckedInt(5));
    CHECK(count_colorings(Cover::canonical(build_complete(4), 4)) == CheckedInt(24));
}

TEST_CASE("axiom validation") {
    Cover ok = Cover::canonical(build_cycle(4), 3);
    CHECK(validate(ok).empty());

    Graph c4 = build_cycle(4);
    // repeated first coordinate: (1,2) and (1,3) on one edge
    auto v1 = validate_cross_edges(c4, 3, {{0, 1, 0, 1}, {0, 1, 0, 2}});
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].find("not a matching") != std::string::npos);
    // repeated second coordinate
    auto v2 = validate_cross_edges(c4, 3, {{0, 1, 0, 1}, {0, 1, 2, 1}});
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].find("axiom (4)") != std::string::npos);
    // entry on a non-edge
    auto v3 = validate_cross_edges(c4, 3, {{0, 2, 0, 0}});
    REQUIRE(v3.size() == 1);
    CHECK(v3[0].find("axiom (3)") != std::string::npos);
    // label out of range
    CHECK(!validate_cross_edges(c4, 3, {{0, 1, 0, 3}}).empty());
}

TEST_CASE("subcovers") {
    Cover c = build_g0_twisted_cover();
    VertexSet all;
    for (int v = 0; v < c.host().n(); ++v) all.push_back(v);
    CHECK(subcover_induced(c, all) == c);
    CHECK(subcover_corresponding(c, c.host()) == c);

    // dropping one edge keeps the rest intact
    Graph host = c.host();
    Graph sub(host.names());
    for (const Edge& e : host.edges())
        if (!(e.first == 0 && e.second == 1)) sub.add_edge(e.first, e.second);
    Cover sc = subcover_corresponding(c, sub);
    CHECK(sc.host().edge_count() == host.edge_count() - 1);
    for (const Edge& e : sub.edges())
        CHECK(sc.oriented(e.first, e.second) == c.oriented(e.first, e.second));

    CHECK_THROWS_AS(subcover_induced(c, {0, 99}), std::invalid_argument);
}

TEST_CASE("relabel basics") {
    Rng rng(23);
    Cover c = random_full_cover(rng, build_cycle(4), 4);
    Relabeling id(4, 4);
    CHECK(relabel(c, id) == c);
    Relabeling r(4, 4);
    for (int v = 0; v < 4; ++v) r.set(v, random_perm(rng, 4));
    CHECK(relabel(relabel(c, r), r.inverse()) == c);
}

TEST_CASE("relabeling preserves counts on every full 3-fold cover of C3") {
    Graph c3 = build_cycle(3);
    PermTableLex table(3);
    Rng rng(29);
    for (std::uint32_t a = 0; a < table.count(); ++a)
        for (std::uint32_t b = 0; b < table.count(); ++b)
            for (std::uint32_t c = 0; c < table.count(); ++c) {
                Cover cov(c3, 3);
                cov.set_matching(0, 1, Matching::of_perm(table.perm(a)));
                cov.set_matching(1, 2, Matching::of_perm(table.perm(b)));
                cov.set_matching(0, 2, Matching::of_perm(table.perm(c)));
                Relabeling r(3, 3);
                for (int v = 0; v < 3; ++v) r.set(v, random_perm(rng, 3));
                CHECK(count_colorings(cov) == count_colorings(relabel(cov, r)));
            }
}

TEST_CASE("relabeling preserves counts on random 4-fold covers of C4") {
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        Cover c = random_full_cover(rng, build_cycle(4), 4);
        Relabeling r(4, 4);
        for (int v = 0; v < 4; ++v) r.set(v, random_perm(rng, 4));
        CHECK(count_colorings(c) == count_colorings(relabel(c, r)));
    }
}

TEST_CASE("canonical labeling of trees always exists") {
    Rng rng(37);
    for (int t = 0; t < 25; ++t) {
        Graph tree = random_connected_graph(rng, 4 + static_cast<int>(rng() % 4), 0);
        Cover c = random_full_cover(rng, tree, 3);
        auto witness = has_canonical_labeling(c);
        REQUIRE(witness.has_value());
        Cover rc = relabel(c, *witness);
        for (int ei = 0; ei < tree.edge_count(); ++ei) CHECK(rc.matching(ei).is_identity());
    }
}

TEST_CASE("one twisted edge on an even cycle blocks the canonical labeling") {
    Graph c4 = build_cycle(4);
    Cover c = Cover::canonical(c4, 2);
    Matching swap = Matching::empty(2);
    swap.set(0, 1);
    swap.set(1, 0);
    c.set_matching(0, 1, swap);
    CHECK(!has_canonical_labeling(c).has_value());
    CHECK(count_colorings(c) == CheckedInt(0)); // (m-1)^4 - 1 at m = 2

    auto witness = has_canonical_labeling(Cover::canonical(c4, 3));
    REQUIRE(witness.has_value());
    CHECK(witness->is_identity());
}

TEST_CASE("canonical labeling exists iff the count matches the chromatic value") {
    // hosts: a path, a triangle and C4, all full covers enumerated
    for (int m = 2; m <= 3; ++m) {
        for (const Graph& host : {build_path(3), build_cycle(3), build_cycle(4)}) {
            PermTableLex table(m);
            CheckedInt chrom = chromatic_count(host, m);
            const int k = host.edge_count();
            std::vector<std::uint32_t> digit(static_cast<std::size_t>(k), 0);
            while (true) {
                Cover cov(host, m);
                for (int ei = 0; ei < k; ++ei) {
                    const Edge& e = host.edges()[static_cast<std::size_t>(ei)];
                    cov.set_matching(e.first, e.second, Matching::of_perm(table.perm(digit[static_cast<std::size_t>(ei)])));
                }
                bool canonical = has_canonical_labeling(cov).has_value();
                bool matches = count_colorings(cov) == chrom;
                CHECK(canonical == matches);
                int pos = k - 1;
                while (pos >= 0 && digit[static_cast<std::size_t>(pos)] == table.count() - 1)
                    digit[static_cast<std::size_t>(pos--)] = 0;
                if (pos < 0) break;
                ++digit[static_cast<std::size_t>(pos)];
            }
        }
    }
}

TEST_CASE("is_twisted") {
    Cover c = build_g0_twisted_cover();
    const Graph& g = c.host();
    int v1 = g.index_of("v1"), u2 = g.index_of("u2"), u3 = g.index_of("u3");
    int twisted = 0;
    for (const Edge& e : g.edges()) twisted += is_twisted(c, e.first, e.second) ? 1 : 0;
    CHECK(twisted == 2);
    CHECK(is_twisted(c, v1, u2));
    CHECK(is_twisted(c, v1, u3));
    CHECK(!is_twisted(c, 0, v1));
    CHECK_THROWS_AS(is_twisted(c, g.index_of("u1"), u2), std::invalid_argument);

    // any single edge can be untwisted by a relabeling
    Rng rng(41);
    Cover rc = random_full_cover(rng, build_cycle(4), 3);
    Relabeling fix(4, 3);
    fix.set(1, rc.oriented(0, 1).as_perm().inverse());
    CHECK(!is_twisted(relabel(rc, fix), 0, 1));
}

TEST_CASE("is_conducive") {
    Rng rng(43);
    // cliques of size <= 2 never obstruct
    for (int t = 0; t < 20; ++t) {
        Graph g = random_connected_graph(rng, 5, 3);
        Cover c = random_full_cover(rng, g, 3);
        const Edge e = g.edges()[rng() % g.edges().size()];
        CHECK(is_conducive(c, {e.first}));
        CHECK(is_conducive(c, {e.first, e.second}));
    }
    // canonical cover on any clique
    Graph k4 = build_complete(4);
    CHECK(is_conducive(Cover::canonical(k4, 4), {0, 1, 2}));

    // a triangle whose holonomy is a 3-cycle cannot be made canonical
    Graph k3 = build_cycle(3);
    Cover hol(k3, 3);
    hol.set_matching(0, 1, Matching::identity(3));
    hol.set_matching(1, 2, Matching::identity(3));
    Matching rot = Matching::empty(3);
    rot.set(0, 1);
    rot.set(1, 2);
    rot.set(2, 0);
    hol.set_matching(0, 2, rot);
    CHECK(!is_conducive(hol, {0, 1, 2}));
    CHECK(oracle::has_canonical_by_exhaustion(hol) == false);
    CHECK(oracle::has_canonical_by_exhaustion(Cover::canonical(k3, 3)) == true);

    CHECK_THROWS_AS(is_conducive(Cover::canonical(build_cycle(4), 3), {0, 2}), std::invalid_argument);
}
