#ifndef CROSSMAX_GENERATORS_HPP
#define CROSSMAX_GENERATORS_HPP

#include <cstdint>

#include "crossmax/graph.hpp"

namespace crossmax {

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
/// Sides 0..a-1 and a..a+b-1.
Graph complete_bipartite(int a, int b);
/// Center 0, leaves 1..leaves.
Graph star_graph(int leaves);
/// Smallest non-caterpillar tree: center 0, legs 0-1-2, 0-3-4, 0-5-6.
Graph spider_graph();
/// Two triangles 0-1-2 and 3-4-5 joined by the matching i -- i+3.
Graph triangular_prism();
/// Vertices of `b` are shifted by `a.num_vertices()`.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Induced on `keep` (sorted), relabelled 0..|keep|-1 in order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

/// Erdos-Renyi G(n, 1/2)-style sample with edge probability `p_percent`/100.
Graph random_graph(int n, int p_percent, std::uint64_t seed);
/// Uniformly random labelled tree (Pruefer sequence).
Graph random_tree(int n, std::uint64_t seed);
/// Random 3-regular simple graph by rejection sampling of pairings; n even, n >= 4.
Graph random_cubic(int n, std::uint64_t seed);

}  // namespace crossmax

#endif  // CROSSMAX_GENERATORS_HPP
