#include <doctest.h>

#include "dpcover/chromatic.hpp"
#include "dpcover/counting.hpp"
#include "dpcover/formulas.hpp"

using namespace dpcover;
using namespace dpcover::formulas;

TEST_CASE("closed forms") {
    CHECK(p_cycle(5, 3) == CheckedInt(30));
    CHECK(p_complete(4, 4) == CheckedInt(24));
    for (int m = 0; m <= 5; ++m) CHECK(p_tree(1, m) == CheckedInt(m));
    CHECK(p_tree(4, 3) == CheckedInt(24));

    CHECK(pdp_cycle(4, 3) == CheckedInt(15));
    CHECK(pdp_cycle(5, 3) == CheckedInt(30));
    CHECK(pdp_cycle(4, 2) == CheckedInt(0));
    CHECK(pdp_cycle(4, 1) == CheckedInt(0));
    CHECK(pdp_cycle(6, 3) == CheckedInt(63));
    for (int n = 3; n <= 7; n += 2)
        for (int m = 2; m <= 4; ++m) CHECK(pdp_cycle(n, m) == p_cycle(n, m));
    CHECK_THROWS_AS(pdp_cycle(2, 3), std::invalid_argument);
}

TEST_CASE("chorded cycle values and exact divisions") {
    CHECK(pdp_chorded_cycle(4, 4, 3).value == CheckedInt(36));
    CHECK(pdp_chorded_cycle(3, 4, 3).value == CheckedInt(15));
    CHECK(pdp_chorded_cycle(3, 5, 3).value == CheckedInt(30));
    CHECK(pdp_chorded_cycle(3, 3, 3).value == CheckedInt(6));
    // every division on the stated domain is exact (no InternalError)
    for (int n1 = 3; n1 <= 6; ++n1)
        for (int n2 = 3; n2 <= 6; ++n2)
            for (int m = 3; m <= 5; ++m) {
                FormulaResult r = pdp_chorded_cycle(n1, n2, m);
                CHECK(r.value * r.divisor ==
                      (n1 % 2 == 0 && n2 % 2 == 0
                           ? CheckedInt(m - 1).pow(static_cast<unsigned>(n1 + n2 - 1)) -
                                 CheckedInt(m - 1).pow(static_cast<unsigned>(n1 - 1)) -
                                 CheckedInt(m - 1).pow(static_cast<unsigned>(n2 - 1)) - CheckedInt(m) - CheckedInt(1)
                           : pdp_cycle(n1, m) * pdp_cycle(n2, m)));
            }
    CHECK_THROWS_AS(pdp_chorded_cycle(4, 4, 2), std::invalid_argument);
}

TEST_CASE("formula values match exhaustive search on small folds") {
    for (int n = 3; n <= 6; ++n)
        for (int m = 2; m <= 3; ++m)
            CHECK(pdp_cycle(n, m) == dp_color_function(build_cycle(n), m).value);
    for (auto [n1, n2] : {std::pair<int, int>{3, 3}, {3, 4}, {4, 4}, {3, 5}}) {
        GlueResult glue = glue_on_clique({build_cycle(n1), build_cycle(n2)}, {{0, 1}, {0, 1}}, 2);
        CHECK(pdp_chorded_cycle(n1, n2, 3).value == dp_color_function(glue.glued, 3).value);
    }
}

TEST_CASE("gluing formula for chromatic values") {
    // two cliques glued on a triangle
    Graph k4 = build_complete(4);
    GlueResult g1 = glue_on_clique({k4, k4}, {{0, 1, 2}, {0, 1, 2}}, 3);
    Rat r1 = chromatic_gluing_formula({chromatic_count(k4, 4), chromatic_count(k4, 4)}, 3, 4);
    CHECK(r1.is_integer());
    CHECK(r1.integer() == chromatic_count(g1.glued, 4));
    CHECK(r1.integer() == CheckedInt(24));

    // vertex-gluing of two single edges gives the 3-vertex path
    Graph p2 = build_path(2);
    GlueResult g2 = glue_on_clique({p2, p2}, {{0}, {0}}, 1);
    Rat r2 = chromatic_gluing_formula({CheckedInt(6), CheckedInt(6)}, 1, 3);
    CHECK(r2.integer() == CheckedInt(12));
    CHECK(r2.integer() == chromatic_count(g2.glued, 3));

    // three triangles glued on one edge
    Graph c3 = build_cycle(3);
    GlueResult g3 = glue_on_clique({c3, c3, c3}, {{0, 1}, {0, 1}, {0, 1}}, 2);
    Rat r3 = chromatic_gluing_formula({CheckedInt(6), CheckedInt(6), CheckedInt(6)}, 2, 3);
    CHECK(r3.integer() == CheckedInt(6));
    CHECK(r3.integer() == chromatic_count(g3.glued, 3));

    // the identity holds across the corpus for every m in [p, 5]
    for (int m = 3; m <= 5; ++m) {
        GlueResult g = glue_on_clique({build_cycle(4), build_cycle(5)}, {{0, 1}, {0, 1}}, 2);
        Rat r = chromatic_gluing_formula({chromatic_count(build_cycle(4), m), chromatic_count(build_cycle(5), m)}, 2, m);
        CHECK(r.is_integer());
        CHECK(r.integer() == chromatic_count(g.glued, m));
    }
}

TEST_CASE("product-bound checks") {
    // edge-gluings satisfy the bound
    InequalityCheck e = question12_check({build_cycle(3), build_cycle(4)}, {{0, 1}, {0, 1}}, 2, 3);
    CHECK(e.holds);
    CHECK(e.lhs == CheckedInt(15));
    // vertex-gluings satisfy the bound
    InequalityCheck v = question12_check({build_cycle(4), build_cycle(4)}, {{0}, {0}}, 1, 3);
    CHECK(v.holds);
}

TEST_CASE("simplicial vertex checks") {
    // pendant vertex on a cycle
    Graph c5p = build_cycle(5);
    {
        std::vector<std::string> names = c5p.names();
        names.push_back("p");
        Graph g(names);
        for (const Edge& e : c5p.edges()) g.add_edge(e.first, e.second);
        g.add_edge(0, 5);
        InequalityCheck r = question13_check(g, 5, 3);
        CHECK(r.holds);
    }
    // degree-2 simplicial vertex (apex of a triangle glued on an edge)
    Graph diamond = build_theta(1, 2, 2);
    int apex = diamond.index_of("p2_1");
    REQUIRE(diamond.degree(apex) == 2);
    CHECK(question13_check(diamond, apex, 3).holds);
    // degree-3 simplicial vertex in a chordal graph: equality
    Graph t = tessellate(build_complete(4), {0, 1, 2});
    InequalityCheck r3 = question13_check(t, 4, 4);
    CHECK(r3.holds);
    CHECK(r3.lhs == CheckedInt(24));
    // non-simplicial vertex rejected
    CHECK_THROWS_AS(question13_check(build_cycle(4), 0, 3), std::invalid_argument);
}
