#include "dpcover/formulas.hpp"

#include <numeric>
#include <stdexcept>

#include "dpcover/errors.hpp"

namespace dpcover {
namespace formulas {

Rat make_rat(CheckedInt num, CheckedInt den) {
    if (den.is_zero()) throw std::invalid_argument("Rat: zero denominator");
    if (den.negative()) {
        num = -num;
        den = -den;
    }
    // reduce with 64-bit gcd steps; values here stay far below 128 bits
    __int128 a = num.raw() < 0 ? -num.raw() : num.raw();
    __int128 b = den.raw();
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num = CheckedInt::from_raw(num.raw() / a);
        den = CheckedInt::from_raw(den.raw() / a);
    }
    return {num, den};
}

CheckedInt p_complete(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("p_complete: need n >= 1, m >= 0");
    CheckedInt acc(1);
    for (int i = 0; i < n; ++i) acc *= CheckedInt(m - i);
    return acc;
}

CheckedInt p_cycle(int n, int m) {
    if (n < 3 || m < 0) throw std::invalid_argument("p_cycle: need n >= 3, m >= 0");
    CheckedInt mm1(m - 1);
    CheckedInt sign(n % 2 == 0 ? 1 : -1);
    return mm1.pow(static_cast<unsigned>(n)) + sign * mm1;
}

CheckedInt p_tree(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("p_tree: need n >= 1, m >= 0");
    return CheckedInt(m) * CheckedInt(m - 1).pow(static_cast<unsigned>(n - 1));
}

CheckedInt pdp_cycle(int n, int m) {
    if (n < 3 || m < 1) throw std::invalid_argument("pdp_cycle: need n >= 3, m >= 1");
    if (n % 2 == 1) return p_cycle(n, m);
    if (m == 1) return CheckedInt(0); // no proper coloring of a cycle with one label
    return CheckedInt(m - 1).pow(static_cast<unsigned>(n)) - CheckedInt(1);
}

FormulaResult pdp_chorded_cycle(int n1, int n2, int m) {
    if (n1 < 3 || n2 < 3) throw std::invalid_argument("pdp_chorded_cycle: need n1, n2 >= 3");
    if (m < 3) throw std::invalid_argument("pdp_chorded_cycle: stated for m >= 3");
    FormulaResult r;
    r.name = "pdp_chorded_cycle";
    r.params = {{"n1", n1}, {"n2", n2}, {"m", m}};
    if (n1 % 2 == 0 && n2 % 2 == 0) {
        CheckedInt mm1(m - 1);
        CheckedInt numerator = mm1.pow(static_cast<unsigned>(n1 + n2 - 1)) -
                               mm1.pow(static_cast<unsigned>(n1 - 1)) -
                               mm1.pow(static_cast<unsigned>(n2 - 1)) - CheckedInt(m) - CheckedInt(1);
        r.divisor = CheckedInt(m);
        r.value = div_exact(numerator, r.divisor);
    } else {
        CheckedInt numerator = pdp_cycle(n1, m) * pdp_cycle(n2, m);
        r.divisor = CheckedInt(m) * CheckedInt(m - 1);
        r.value = div_exact(numerator, r.divisor);
    }
    return r;
}

Rat chromatic_gluing_formula(const std::vector<CheckedInt>& values, int p, int m) {
    if (values.size() < 2) throw std::invalid_argument("chromatic_gluing_formula: need n >= 2 values");
    if (m < p) throw std::invalid_argument("chromatic_gluing_formula: need m >= p");
    CheckedInt num(1);
    for (const CheckedInt& v : values) num *= v;
    CheckedInt fall(1);
    for (int i = 0; i < p; ++i) fall *= CheckedInt(m - i);
    return make_rat(num, fall.pow(static_cast<unsigned>(values.size() - 1)));
}

namespace {

// lhs <= num/den with den > 0, compared in exact integers
bool leq_rat(const CheckedInt& lhs, const Rat& r) { return lhs * r.den <= r.num; }

} // namespace

InequalityCheck question12_check(const std::vector<Graph>& graphs,
                                 const std::vector<VertexSet>& cliques, int p, int m,
                                 const DpOptions& opt) {
    if (m < p) throw std::invalid_argument("question12_check: need m >= p");
    GlueResult glue = glue_on_clique(graphs, cliques, p);
    InequalityCheck out;
    DpResult glued = dp_color_function(glue.glued, m, opt);
    if (!glued.exact) throw ResourceLimitError("question12_check: glued search exceeded budget");
    out.lhs = glued.value;
    CheckedInt num(1);
    for (const Graph& g : graphs) {
        DpResult r = dp_color_function(g, m, opt);
        if (!r.exact) throw ResourceLimitError("question12_check: component search exceeded budget");
        out.component_values.push_back(r.value);
        num *= r.value;
    }
    CheckedInt fall(1);
    for (int i = 0; i < p; ++i) fall *= CheckedInt(m - i);
    out.rhs = make_rat(num, fall.pow(static_cast<unsigned>(graphs.size() - 1)));
    out.holds = leq_rat(out.lhs, out.rhs);
    return out;
}

InequalityCheck question13_check(const Graph& g, int v, int m, const DpOptions& opt) {
    if (!g.has_vertex(v)) throw std::invalid_argument("question13_check: vertex out of range");
    std::vector<int> nbrs = g.neighbors(v);
    if (!g.is_clique(nbrs)) throw std::invalid_argument("question13_check: vertex is not simplicial");
    int d = static_cast<int>(nbrs.size());
    if (m < d) throw std::invalid_argument("question13_check: need m >= d(v)");

    VertexSet rest;
    for (int x = 0; x < g.n(); ++x)
        if (x != v) rest.push_back(x);
    Graph without = g.induced(rest);

    InequalityCheck out;
    DpResult whole = dp_color_function(g, m, opt);
    DpResult deleted = dp_color_function(without, m, opt);
    if (!whole.exact || !deleted.exact)
        throw ResourceLimitError("question13_check: search exceeded budget");
    out.lhs = whole.value;
    out.component_values = {deleted.value};
    out.rhs = make_rat(CheckedInt(m - d) * deleted.value, CheckedInt(1));
    out.holds = leq_rat(out.lhs, out.rhs);
    return out;
}

} // namespace formulas
} // namespace dpcover
