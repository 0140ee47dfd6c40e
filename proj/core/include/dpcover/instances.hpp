#pragma once

#include <cstdint>
#include <random>

#include "dpcover/cover.hpp"
#include "dpcover/graph.hpp"

namespace dpcover {

/// Reproducible random instances for the verification suites. All draws use
/// the supplied engine, so a fixed seed pins the whole suite.
using Rng = std::mt19937_64;

/// Connected graph on n vertices: a random spanning tree plus `extra` random
/// non-tree edges (fewer when the graph saturates).
Graph random_connected_graph(Rng& rng, int n, int extra);

/// Full m-fold cover with uniformly random permutation matchings.
Cover random_full_cover(Rng& rng, const Graph& g, int m);

/// Full cover conducive to the clique: canonical on the clique, random
/// elsewhere, then hidden behind a random relabeling of every part.
Cover random_conducive_cover(Rng& rng, const Graph& g, const VertexSet& clique, int m);

Perm random_perm(Rng& rng, int m);

} // namespace dpcover
