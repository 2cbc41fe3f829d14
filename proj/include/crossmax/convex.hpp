#ifndef CROSSMAX_CONVEX_HPP
#define CROSSMAX_CONVEX_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "crossmax/graph.hpp"

namespace crossmax {

/// Cyclic order of the vertices of a convex drawing.
class CircularOrder {
public:
    CircularOrder() = default;
    explicit CircularOrder(std::vector<int> sequence) : seq_(std::move(sequence)) {}

    const std::vector<int>& sequence() const noexcept { return seq_; }
    int size() const noexcept { return static_cast<int>(seq_.size()); }
    int operator[](int i) const { return seq_.at(static_cast<std::size_t>(i)); }

    bool is_permutation_of(int n) const;
    /// Position of every vertex; requires a permutation.
    std::vector<int> positions() const;
    /// Rotated so the smallest vertex comes first, reflected so the second
    /// entry is smaller than the last.
    CircularOrder canonical() const;
    bool is_canonical() const { return *this == canonical(); }
    CircularOrder reflected() const;
    CircularOrder rotated(int shift) const;
    std::string str() const;

    friend bool operator==(const CircularOrder&, const CircularOrder&) = default;
    friend auto operator<=>(const CircularOrder& a, const CircularOrder& b) { return a.seq_ <=> b.seq_; }

private:
    std::vector<int> seq_;
};

/// Reads a single line of space separated vertex ids.
CircularOrder parse_order(std::string_view text);

/// Endpoints of two independent chords alternate along the circle.
inline bool chords_alternate(int a, int b, int c, int d) noexcept {
    if (a > b) std::swap(a, b);
    return (a < c && c < b) != (a < d && d < b);
}

/// Weighted number of crossing independent pairs; O(m^2) pair scan.
/// Throws std::invalid_argument when `order` is not a permutation of g's vertices.
Rational convex_crossing_value(const Graph& g, const CircularOrder& order);

struct ConvexResult {
    Rational value = 0;
    CircularOrder order;
    Rational loss = 0;
    std::uint64_t nodes_explored = 0;
    bool optimal = true;
};

struct ConvexSearchOptions {
    /// 0 picks the default: 13 vertices for unit weights, 11 otherwise.
    int max_vertices = 0;
    bool unbounded = false;
    /// 0 disables the timeout; on expiry the best order so far is returned with optimal=false.
    std::int64_t timeout_ms = 0;
    int threads = 1;
};

/// Exact maximum convex crossing number by branch and bound over canonical orders.
///
/// Vertex 0 is fixed first and reflections are removed by requiring the second
/// vertex to be smaller than the last. A partial order is extended vertex by
/// vertex; once all four endpoints of an independent pair are placed the pair is
/// decided. The bound adds the full weight of every undecided pair. Among optimal
/// orders the lexicographically smallest is returned, independent of `threads`.
ConvexResult mccr_exact(const Graph& g, const ConvexSearchOptions& options = {});

/// Visits every canonical circular order of 0..n-1 in lexicographic order.
/// The callback receives the sequence; returning false stops the enumeration.
void for_each_canonical_order(int n, const std::function<bool(std::span<const int>)>& visit);

/// Plain enumeration over all canonical orders; reference oracle for small n.
ConvexResult mccr_enumerate(const Graph& g);

/// Result of collapsing twin classes into single weighted vertices.
struct ContractedInstance {
    Graph graph;
    Rational constant = 0;
    /// Original vertices represented by each contracted vertex.
    std::vector<std::vector<int>> members;

    /// Expands an order of the contracted graph, each class contiguous and sorted.
    CircularOrder expand(const CircularOrder& contracted_order) const;
};

class ContractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Contracts every class with at least two members.
///
/// Requires that each class is a set of twins, that classes are disjoint and
/// that no neighbor of a class is itself in a contracted class; otherwise throws
/// ContractionError. Then mccr(g) = mccr(contracted) + constant.
ContractedInstance contract_twins(const Graph& g, const TwinPartition& classes);

struct RandomEstimate {
    ConvexResult best;
    Rational mean = 0;
};

RandomEstimate estimate_random(const Graph& g, int samples, std::uint64_t seed);

/// Sequential insertion by conditional expectation; value >= M(G)/3.
ConvexResult greedy_derandomized(const Graph& g);

/// Color classes on three disjoint arcs, filled slot by slot by conditional
/// expectation of the within-class shuffle; value >= M(G)/2.
/// Throws std::invalid_argument on an improper coloring.
ConvexResult threecolor_lower_bound(const Graph& g, const std::vector<int>& coloring);

/// Concatenation of the given arcs.
CircularOrder arc_order(const std::vector<std::vector<int>>& arcs);

/// Vertices of each color, ascending, indexed by color.
std::vector<std::vector<int>> color_classes(const std::vector<int>& coloring, int colors);

}  // namespace crossmax

#endif  // CROSSMAX_CONVEX_HPP
