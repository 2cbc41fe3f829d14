#ifndef CROSSMAX_GRAPH_HPP
#define CROSSMAX_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crossmax/rational.hpp"

namespace crossmax {

/// Undirected edge with `u < v`.
struct Edge {
    int u;
    int v;

    bool touches(int x) const noexcept { return u == x || v == x; }
    int other(int x) const noexcept { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by brute-force oracles when the instance exceeds their configured bound.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1 with positive rational edge weights.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Returns the new edge id. Throws GraphError on self-loops, duplicates,
    /// out-of-range ids and non-positive weights.
    int add_edge(int u, int v, Rational weight = 1);

    int num_vertices() const noexcept { return n_; }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::vector<Rational>& weights() const noexcept { return weights_; }
    const Rational& weight(int e) const { return weights_.at(static_cast<std::size_t>(e)); }

    /// Sorted neighbor list.
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    /// Edge ids at `v`, in the order of `neighbors(v)`.
    const std::vector<int>& incident_edges(int v) const { return inc_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int find_edge(int u, int v) const;
    bool has_edge(int u, int v) const { return find_edge(u, v) >= 0; }
    bool independent(int e, int f) const;
    bool is_unit_weighted() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Rational> weights_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { malformed, duplicate_edge, self_loop, vertex_out_of_range, non_positive_weight, edge_count };

    ParseError(Kind kind, int line, const std::string& what);

    Kind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    Kind kind_;
    int line_;
};

/// Graph file: `n m` header, then `u v` or `u v p/q` per edge; `#` starts a comment line.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
/// Edges sorted lexicographically; weights are written only when not 1.
std::string write_graph(const Graph& g);

/// Total weight of independent edge pairs, sum of w(e) w(f).
///
/// Evaluates the degree formula and a direct scan over edge pairs and throws
/// std::logic_error if they disagree.
Rational independent_pair_weight(const Graph& g);
/// Unweighted count via binom(m,2) - sum_v binom(deg v, 2).
std::int64_t independent_pair_count(const Graph& g);

/// Maximal classes of vertices with identical neighborhoods.
struct TwinPartition {
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<int>> neighborhoods;

    std::size_t size() const noexcept { return classes.size(); }
    /// Only the classes with at least two members.
    TwinPartition non_singleton() const;
};

/// Classes sorted by smallest member; members sorted.
TwinPartition twin_classes(const Graph& g);

bool is_tree(const Graph& g);
/// Throws GraphError when `g` is not a tree.
bool is_caterpillar(const Graph& g);

/// Lexicographically first proper coloring with colors 0..k-1, or nullopt.
std::optional<std::vector<int>> proper_coloring(const Graph& g, int k, int max_vertices = 20);
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int k);

struct CutResult {
    std::vector<int> side;
    Rational value;
};

/// Exhaustive maximum cut with vertex 0 on side 0; ties go to the
/// lexicographically smallest side vector.
CutResult maxcut_exact(const Graph& g, int max_vertices = 24);
Rational cut_value(const Graph& g, const std::vector<int>& side);

bool is_connected(const Graph& g);
/// 2-coloring per connected component (component roots get color 0), or nullopt.
std::optional<std::vector<int>> bipartition(const Graph& g);
/// Connected component id per vertex, numbered by smallest member.
std::vector<int> connected_components(const Graph& g);

}  // namespace crossmax

#endif  // CROSSMAX_GRAPH_HPP
