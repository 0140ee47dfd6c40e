#include <doctest.h>

#include "dpcover/chromatic.hpp"
#include "dpcover/errors.hpp"
#include "dpcover/instances.hpp"
#include "dpcover/int_poly.hpp"
#include "oracles.hpp"

using namespace dpcover;

TEST_CASE("checked integer arithmetic") {
    CheckedInt big = CheckedInt(10).pow(30);
    CHECK(big.str() == "1000000000000000000000000000000");
    CHECK(CheckedInt::from_string("-42").to_i64() == -42);
    CHECK(CheckedInt::from_string(big.str()) == big);
    CHECK_THROWS_AS(big * big * big * big * big, OverflowError);
    CHECK(div_exact(CheckedInt(36), CheckedInt(3)) == CheckedInt(12));
    CHECK_THROWS_AS(div_exact(CheckedInt(7), CheckedInt(3)), InternalError);
    CHECK(divides(CheckedInt(6), CheckedInt(36)));
    CHECK(!divides(CheckedInt(5), CheckedInt(36)));
}

TEST_CASE("polynomial arithmetic") {
    IntPoly x = IntPoly::x();
    IntPoly sq = (x - IntPoly::constant(1)) * (x - IntPoly::constant(1));
    CHECK(sq.coeff(0) == CheckedInt(1));
    CHECK(sq.coeff(1) == CheckedInt(-2));
    CHECK(sq.coeff(2) == CheckedInt(1));
    CHECK(sq.eval(CheckedInt(5)) == CheckedInt(16));
    CHECK((x.pow(3) - x.pow(3)).is_zero());
    CHECK(sq.degree() == 2);
    CHECK(sq.str() == "m^2 - 2m + 1");
}

TEST_CASE("chromatic polynomial reference values") {
    CHECK(chromatic_count(build_cycle(5), 3) == CheckedInt(30));
    CHECK(chromatic_count(cone(build_theta(2, 2, 2)).graph, 4) == CheckedInt(120));
    CHECK(chromatic_count(build_theta(2, 2, 2), 3) == CheckedInt(30));
    // (m-1)^n + (-1)^n (m-1) for cycles
    for (int n = 3; n <= 7; ++n)
        for (int m = 0; m <= 4; ++m) {
            CheckedInt mm1(m - 1);
            CheckedInt want = mm1.pow(static_cast<unsigned>(n)) + CheckedInt(n % 2 ? -1 : 1) * mm1;
            CHECK(chromatic_count(build_cycle(n), m) == want);
        }
}

TEST_CASE("chromatic polynomial shape") {
    for (const Graph& g : {build_cycle(5), build_complete(5), build_theta(2, 3, 4)}) {
        IntPoly p = chromatic_polynomial(g);
        CHECK(p.degree() == g.n());
        CHECK(p.leading() == CheckedInt(1));
        CHECK(p.eval(CheckedInt(0)) == CheckedInt(0));
    }
}

TEST_CASE("chromatic polynomial equals brute force on small graphs") {
    Rng rng(17);
    std::vector<Graph> corpus{build_path(4), build_cycle(5), build_complete(4), build_theta(1, 2, 2),
                              cone(build_cycle(4)).graph};
    for (int t = 0; t < 6; ++t) corpus.push_back(random_connected_graph(rng, 5 + static_cast<int>(rng() % 4), 4));
    for (const Graph& g : corpus) {
        REQUIRE(g.n() <= 8);
        IntPoly p = chromatic_polynomial(g);
        for (int m = 2; m <= 4; ++m) CHECK(p.eval(CheckedInt(m)) == oracle::chromatic_count(g, m));
    }
}

TEST_CASE("chromatic size bound") {
    std::vector<std::string> names;
    for (int i = 0; i < 17; ++i) names.push_back("x" + std::to_string(i));
    Graph big(names);
    CHECK_THROWS_AS(chromatic_polynomial(big), ResourceLimitError);
    CHECK(chromatic_polynomial(big, 17).degree() == 17);
}
