#ifndef CROSSMAX_BIPARTITE_HPP
#define CROSSMAX_BIPARTITE_HPP

#include <string_view>
#include <vector>

#include "crossmax/convex.hpp"
#include "crossmax/graph.hpp"

namespace crossmax {

/// Vertices on two parallel lines; every edge joins the two lines.
struct TwoLayerDrawing {
    std::vector<int> top;
    std::vector<int> bottom;

    friend bool operator==(const TwoLayerDrawing&, const TwoLayerDrawing&) = default;
};

class BipartiteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws BipartiteError unless top and bottom partition the vertices and
/// every edge has one endpoint on each line.
void check_two_layer(const Graph& g, const TwoLayerDrawing& d);

/// Weighted number of independent pairs whose top and bottom orders disagree.
Rational two_layer_crossings(const Graph& g, const TwoLayerDrawing& d);

/// The same drawing read as a convex one: top order, then bottom reversed.
CircularOrder separated_order(const TwoLayerDrawing& d);

TwoLayerDrawing reversed_bottom(const TwoLayerDrawing& d);

struct LayerResult {
    Rational value;
    TwoLayerDrawing drawing;
};

/// Minimum two-layer crossing weight over all bipartitions (components may be
/// flipped independently) and all order pairs. The smaller side is enumerated
/// and the other one is ordered by a subset DP; the first optimum in
/// enumeration order is returned.
LayerResult bcr_exact(const Graph& g, int max_side = 9);

/// M(G) - bcr(G), realized by the bcr-optimal drawing with the bottom reversed.
LayerResult max_separated_convex(const Graph& g, int max_side = 9);

/// Best bottom order for a fixed top order, by brute force.
LayerResult one_sided_exact(const Graph& g, const std::vector<int>& top, int max_side = 9);

/// Bottom sorted by lower median of neighbor positions on the fixed top line;
/// ties put odd degree first, then smaller id. Isolated vertices go last.
TwoLayerDrawing median_heuristic(const Graph& g, const std::vector<int>& top);

/// Line 1: top order, line 2: bottom order.
TwoLayerDrawing parse_two_layer(std::string_view text);

}  // namespace crossmax

#endif  // CROSSMAX_BIPARTITE_HPP
