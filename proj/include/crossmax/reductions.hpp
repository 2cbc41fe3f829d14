#ifndef CROSSMAX_REDUCTIONS_HPP
#define CROSSMAX_REDUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "crossmax/convex.hpp"
#include "crossmax/graph.hpp"
#include "crossmax/rectilinear.hpp"

namespace crossmax {

/// Boyer-Myrvold planarity test.
bool is_planar(const Graph& g);

/// Independent edge pairs declared crossing, with optional realization data.
struct CrossingScheme {
    Graph graph;
    /// Edge id pairs (e, f) with e < f.
    std::vector<std::pair<int, int>> crossings;
    /// Per vertex, the cyclic order of its neighbors.
    std::optional<std::vector<std::vector<int>>> rotation;
    /// Per edge {u, v} with u < v, the edges crossing it in order from u to v.
    std::optional<std::vector<std::vector<int>>> edge_orders;
};

class SchemeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws SchemeError when a pair is not independent, repeated, or the
/// realization data does not match the graph and the crossing set.
void check_scheme(const CrossingScheme& s);

/// Lines `(u1 v1)x(u2 v2)`, `rotation v: n1 n2 ...` and `order (u v): (a b) (c d) ...`;
/// `#` comments and a `graph <file>` line (resolved by the caller) are skipped.
CrossingScheme parse_scheme(std::string_view text, const Graph& g);


/// Crossing pairs, per-edge orders and rotation read off a valid straight-line drawing.
CrossingScheme scheme_from_drawing(const Graph& g, const PointDrawing& d);

enum class SchemeMode { necessary, exact };

struct SchemeVerdict {
    bool feasible = false;
    int planarized_vertices = 0;
    std::uint64_t orders_tried = 0;
    std::uint64_t embeddings_tried = 0;
    /// Per-edge crossing orders of a realization (exact) or of a planar planarization (necessary).
    std::vector<std::vector<int>> witness_orders;
};

/// necessary: some choice of per-edge orders gives a planar planarization.
/// exact: some such planarization has an embedding in which the two strands
/// cross at every dummy vertex, and which respects the given rotation.
/// Exact mode throws SizeLimitError beyond `max_vertices` planarized vertices.
SchemeVerdict scheme_feasible(const CrossingScheme& s, SchemeMode mode, int max_vertices = 20);

struct McrResult {
    std::int64_t value = 0;
    std::vector<std::pair<int, int>> crossings;
    /// Convex optimum; a convex drawing realizes it, so the search starts above it.
    std::int64_t convex_lower_bound = 0;
    std::uint64_t schemes_tested = 0;
};

/// Largest realizable crossing set by descending enumeration, for M(g) <= max_pairs.
McrResult mcr_exact_tiny(const Graph& g, int max_pairs = 12, int max_vertices = 20);

struct ReductionReport {
    Rational t;
    Graph construction;
    Rational value;
    Integer recovered_mcut;
    Rational reference_mcut;
    bool sandwich = false;
    bool match = false;
};

/// g plus a disjoint star with binom(m,2)+1 edges.
std::pair<Graph, Rational> build_star_augmented(const Graph& g);

/// mccr of the star augmentation, computed on the contraction of the leaves.
ReductionReport verify_star_reduction(const Graph& g, int max_vertices = 8, int threads = 1);

/// g (3-regular, unit weights) plus a disjoint triangle of weight 9n^2/8.
std::pair<Graph, Rational> build_triangle_augmented(const Graph& g);

struct TriangleBounds {
    Rational t;
    Rational lower;
    /// Exclusive.
    Rational upper;
    Rational mcut;
    /// floor(W/t) - 2m == mcut for every integer W in [lower, upper) and at lower itself.
    bool recovery = false;
    bool mcut_at_least_n = false;
};

TriangleBounds triangle_bounds(const Graph& g);

/// K_{k,k,k} with classes 0..k-1, k..2k-1, 2k..3k-1.
Graph build_tripartite(int k);
/// Convex value of the order with the three classes as consecutive blocks.
Rational tripartite_block_value(int k);
std::int64_t harborth_formula(int k);
/// Every 4-cycle of K_{k,k,k} has a crossing pair in the block order.
bool verify_tripartite_4cycles(int k);

}  // namespace crossmax

#endif  // CROSSMAX_REDUCTIONS_HPP
