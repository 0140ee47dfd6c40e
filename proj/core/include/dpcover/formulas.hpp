#pragma once

#include <map>
#include <string>
#include <vector>

#include "dpcover/checked_int.hpp"
#include "dpcover/counting.hpp"
#include "dpcover/graph.hpp"

namespace dpcover {
namespace formulas {

/// Exact rational with positive denominator, kept reduced.
struct Rat {
    CheckedInt num{0};
    CheckedInt den{1};
    bool is_integer() const { return divides(den, num); }
    CheckedInt integer() const { return div_exact(num, den); }
};
Rat make_rat(CheckedInt num, CheckedInt den);

/// A named closed-form evaluation, with the divisor certificate where the
/// formula carries an exact division (e.g. a leading 1/m factor).
struct FormulaResult {
    std::string name;
    std::map<std::string, long long> params;
    CheckedInt value;
    CheckedInt divisor{1}; // value * divisor is the undivided numerator
};

// Chromatic polynomials of the standard families.
CheckedInt p_complete(int n, int m);
CheckedInt p_cycle(int n, int m);
CheckedInt p_tree(int n, int m);

/// DP color function of the n-cycle: (m-1)^n - 1 for even n (0 when m = 1),
/// the chromatic value for odd n.
CheckedInt pdp_cycle(int n, int m);

/// DP color function of the edge-gluing of two cycles; both-even inputs use
/// the one-over-m form, otherwise the product form over m(m-1). All
/// divisions must be exact. Requires n1, n2 >= 3 and m >= 3.
FormulaResult pdp_chorded_cycle(int n1, int n2, int m);

/// prod(values) / (prod_{i<p}(m-i))^{n-1} as an exact rational.
Rat chromatic_gluing_formula(const std::vector<CheckedInt>& values, int p, int m);

struct InequalityCheck {
    CheckedInt lhs;       // P_DP of the glued graph
    Rat rhs;              // the product bound
    bool holds = false;   // lhs <= rhs compared exactly (cross-multiplied)
    std::vector<CheckedInt> component_values;
};

/// Does P_DP(glued, m) <= prod P_DP(G_i, m) / (prod_{i<p}(m-i))^{n-1} hold?
/// All DP values come from exhaustive search within the budget.
InequalityCheck question12_check(const std::vector<Graph>& graphs,
                                 const std::vector<VertexSet>& cliques, int p, int m,
                                 const DpOptions& opt = {});

/// Does P_DP(G, m) <= (m - d(v)) * P_DP(G - v, m) hold for a simplicial v?
InequalityCheck question13_check(const Graph& g, int v, int m, const DpOptions& opt = {});

} // namespace formulas
} // namespace dpcover
