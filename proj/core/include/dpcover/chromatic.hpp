#pragma once

#include "dpcover/graph.hpp"
#include "dpcover/int_poly.hpp"

namespace dpcover {

/// Exact chromatic polynomial by deletion-contraction. Minors are memoized
/// on an edge-set fingerprint (vertex count + edge list), not on isomorphism
/// classes. Throws ResourceLimitError when |V| exceeds max_vertices.
IntPoly chromatic_polynomial(const Graph& g, int max_vertices = 16);

/// chromatic_polynomial(g).eval(m) without building the caller's poly twice.
CheckedInt chromatic_count(const Graph& g, int m, int max_vertices = 16);

} // namespace dpcover
