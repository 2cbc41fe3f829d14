#ifndef CROSSMAX_RECTILINEAR_HPP
#define CROSSMAX_RECTILINEAR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "crossmax/convex.hpp"
#include "crossmax/graph.hpp"

namespace crossmax {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

/// One point per vertex.
using PointDrawing = std::vector<Point>;

/// Sign of the cross product (b - a) x (c - a).
int orientation(const Point& a, const Point& b, const Point& c);

/// Open segments ab and cd meet in a single interior point of both.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

struct Violation {
    enum class Kind { coincident_points, vertex_on_edge, overlapping_edges, triple_point };
    Kind kind;
    /// Vertices for coincident points, (vertex, edge) for vertex_on_edge, edge ids otherwise.
    std::vector<int> items;
    std::string describe() const;
};

class InvalidDrawing : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Empty when the drawing is valid. Throws InvalidDrawing only when the point
/// count does not match the graph.
std::vector<Violation> validate_drawing(const Graph& g, const PointDrawing& d);

/// Weighted number of independent pairs whose segments cross.
/// Throws InvalidDrawing if validate_drawing reports anything.
Rational count_straight_crossings(const Graph& g, const PointDrawing& d);

/// Rational points on the unit circle in the given circular order. When `g` is
/// given, the points are refined until no three of its edges meet in a point.
PointDrawing convex_order_to_drawing(const CircularOrder& order, const Graph* g = nullptr);

struct LocalSearchOptions {
    std::uint64_t seed = 1;
    /// Restart 0 starts from a convex drawing of the greedy order, the others from random grid points.
    int restarts = 4;
    /// Coordinates range over 0..grid-1; 0 picks max(16, 4n).
    int grid = 0;
    /// Candidate relocations tried per vertex and round.
    int candidates = 48;
    int max_rounds = 50;
    int threads = 1;
};

struct LocalSearchResult {
    PointDrawing drawing;
    Rational value;
    Rational start_value;
};

/// Heuristic lower bound for the maximum rectilinear crossing number.
LocalSearchResult local_search_mrcr(const Graph& g, const LocalSearchOptions& options = {});

/// Deterministic SVG with labeled vertices, straight edges and a caption "crossings: N".
std::string svg_document(const Graph& g, const PointDrawing& d);
void svg_export(const Graph& g, const PointDrawing& d, const std::string& path);

/// Lines `v x y`; every vertex exactly once.
PointDrawing parse_coordinates(std::string_view text, int n);
std::string write_coordinates(const PointDrawing& d);

}  // namespace crossmax

#endif  // CROSSMAX_RECTILINEAR_HPP
