#include "crossmax/rectilinear.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace crossmax {

int orientation(const Point& a, const Point& b, const Point& c) {
    const Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

namespace {

// p lies strictly between a and b on the segment ab.
bool in_open_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != 0) return false;
    const Rational along_a = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
    const Rational along_b = (p.x - b.x) * (a.x - b.x) + (p.y - b.y) * (a.y - b.y);
    return along_a > 0 && along_b > 0;
}

// Collinear segments sharing more than one point.
bool segments_overlap(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (orientation(a, b, c) != 0 || orientation(a, b, d) != 0) return false;
    const bool by_x = a.x != b.x;
    auto key = [&](const Point& p) { return by_x ? p.x : p.y; };
    const Rational lo1 = std::min(key(a), key(b));
    const Rational hi1 = std::max(key(a), key(b));
    const Rational lo2 = std::min(key(c), key(d));
    const Rational hi2 = std::max(key(c), key(d));
    return std::min(hi1, hi2) > std::max(lo1, lo2);
}

Point intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Rational rx = b.x - a.x;
    const Rational ry = b.y - a.y;
    const Rational sx = d.x - c.x;
    const Rational sy = d.y - c.y;
    const Rational t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / (rx * sy - ry * sx);
    return {a.x + t * rx, a.y + t * ry};
}

const char* kind_name(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::coincident_points: return "coincident points";
        case Violation::Kind::vertex_on_edge: return "vertex on edge";
        case Violation::Kind::overlapping_edges: return "overlapping edges";
        case Violation::Kind::triple_point: return "triple point";
    }
    return "?";
}

}  // namespace

std::string Violation::describe() const {
    std::ostringstream out;
    out << kind_name(kind) << ":";
    for (int i : items) out << ' ' << i;
    return out.str();
}

std::vector<Violation> validate_drawing(const Graph& g, const PointDrawing& d) {
    const int n = g.num_vertices();
    if (static_cast<int>(d.size()) != n) {
        throw InvalidDrawing("drawing has " + std::to_string(d.size()) + " points for " + std::to_string(n) + " vertices");
    }
    auto at = [&](int v) -> const Point& { return d[static_cast<std::size_t>(v)]; };
    std::vector<Violation> out;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (at(u) == at(v)) out.push_back({Violation::Kind::coincident_points, {u, v}});
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edge(e);
            if (!ed.touches(x) && in_open_segment(at(x), at(ed.u), at(ed.v))) {
                out.push_back({Violation::Kind::vertex_on_edge, {x, e}});
            }
        }
    }
    std::map<Point, std::set<int>> crossing_points;
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& a = g.edge(e);
        for (int f = e + 1; f < g.num_edges(); ++f) {
            const Edge& b = g.edge(f);
            if (segments_overlap(at(a.u), at(a.v), at(b.u), at(b.v))) {
                out.push_back({Violation::Kind::overlapping_edges, {e, f}});
            } else if (g.independent(e, f) && segments_cross(at(a.u), at(a.v), at(b.u), at(b.v))) {
                auto& s = crossing_points[intersection(at(a.u), at(a.v), at(b.u), at(b.v))];
                s.insert(e);
                s.insert(f);
            }
        }
    }
    for (const auto& [p, edges] : crossing_points) {
        if (edges.size() >= 3) out.push_back({Violation::Kind::triple_point, {edges.begin(), edges.end()}});
    }
    return out;
}

Rational count_straight_crossings(const Graph& g, const PointDrawing& d) {
    const auto violations = validate_drawing(g, d);
    if (!violations.empty()) throw InvalidDrawing("invalid drawing: " + violations.front().describe());
    Rational total = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& a = g.edge(e);
        for (int f = e + 1; f < g.num_edges(); ++f) {
            if (!g.independent(e, f)) continue;
            const Edge& b = g.edge(f);
            if (segments_cross(d[static_cast<std::size_t>(a.u)], d[static_cast<std::size_t>(a.v)],
                               d[static_cast<std::size_t>(b.u)], d[static_cast<std::size_t>(b.v)])) {
                total += g.weight(e) * g.weight(f);
            }
        }
    }
    return total;
}

PointDrawing convex_order_to_drawing(const CircularOrder& order, const Graph* g) {
    const int n = order.size();
    if (!order.is_permutation_of(n)) throw std::invalid_argument("convex_order_to_drawing: not a permutation");
    // t = tan(theta/2) rounded to a rational; ((1-t^2)/(1+t^2), 2t/(1+t^2)) is on the circle
    for (std::int64_t precision = 10000;; precision *= 10) {
        PointDrawing d(static_cast<std::size_t>(n));
        std::vector<Rational> ts;
        for (int i = 0; i < n; ++i) {
            const double theta = -std::numbers::pi + std::numbers::pi / n + 2 * std::numbers::pi * i / n;
            const Rational t(static_cast<std::int64_t>(std::llround(std::tan(theta / 2) * static_cast<double>(precision))), precision);
            ts.push_back(t);
            const Rational q = 1 + t * t;
            d[static_cast<std::size_t>(order[i])] = {(1 - t * t) / q, 2 * t / q};
        }
        const bool distinct = std::adjacent_find(ts.begin(), ts.end(), [](const Rational& a, const Rational& b) { return !(a < b); }) == ts.end();
        if (distinct && (g == nullptr || validate_drawing(*g, d).empty())) return d;
        if (precision > std::int64_t{1} << 50) throw std::runtime_error("convex_order_to_drawing: no valid placement found");
    }
}

// ---------------------------------------------------------------------------
// Local search

namespace {

class Relocator {
public:
    Relocator(const Graph& g, PointDrawing d) : g_(g), d_(std::move(d)) {}

    const PointDrawing& drawing() const { return d_; }

    Rational value_at(int v) const {
        Rational total = 0;
        const auto& inc = g_.incident_edges(v);
        for (int e : inc) {
            const Edge& a = g_.edge(e);
            for (int f = 0; f < g_.num_edges(); ++f) {
                if (!g_.independent(e, f)) continue;
                const Edge& b = g_.edge(f);
                if (segments_cross(p(a.u), p(a.v), p(b.u), p(b.v))) total += g_.weight(e) * g_.weight(f);
            }
        }
        return total;
    }

    /// Moves v to `to` when that strictly increases the crossing weight and keeps the drawing valid.
    bool try_move(int v, const Point& to) {
        const Point from = p(v);
        if (to == from) return false;
        const Rational before = value_at(v);
        d_[static_cast<std::size_t>(v)] = to;
        if (value_at(v) > before && validate_drawing(g_, d_).empty()) return true;
        d_[static_cast<std::size_t>(v)] = from;
        return false;
    }

    void set(int v, const Point& q) { d_[static_cast<std::size_t>(v)] = q; }

private:
    const Point& p(int v) const { return d_[static_cast<std::size_t>(v)]; }

    const Graph& g_;
    PointDrawing d_;
};

PointDrawing random_valid_start(const Graph& g, int grid, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coord(0, grid - 1);
    PointDrawing d(static_cast<std::size_t>(g.num_vertices()));
    for (auto& q : d) q = {coord(rng), coord(rng)};
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const auto violations = validate_drawing(g, d);
        if (violations.empty()) return d;
        // resample the largest vertex touched by the first violation
        const Violation& bad = violations.front();
        int v = -1;
        if (bad.kind == Violation::Kind::coincident_points) {
            v = bad.items[1];
        } else if (bad.kind == Violation::Kind::vertex_on_edge) {
            v = bad.items[0];
        } else {
            for (int e : bad.items) v = std::max({v, g.edge(e).u, g.edge(e).v});
        }
        d[static_cast<std::size_t>(v)] = {coord(rng), coord(rng)};
    }
    throw std::runtime_error("local_search_mrcr: could not sample a valid start");
}

LocalSearchResult run_restart(const Graph& g, const LocalSearchOptions& o, int grid, int restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32), static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    PointDrawing start;
    if (restart == 0) {
        // circle of radius grid/2 around the grid center
        const CircularOrder order = greedy_derandomized(g).order;
        start = convex_order_to_drawing(order, &g);
        for (auto& q : start) {
            q.x = q.x * Rational(grid - 1, 2) + Rational(grid - 1, 2);
            q.y = q.y * Rational(grid - 1, 2) + Rational(grid - 1, 2);
        }
    } else {
        start = random_valid_start(g, grid, rng);
    }
    LocalSearchResult r;
    r.start_value = count_straight_crossings(g, start);
    Relocator moves(g, std::move(start));
    std::uniform_int_distribution<int> coord(0, grid - 1);
    for (int round = 0; round < o.max_rounds; ++round) {
        bool improved = false;
        for (int v = 0; v < g.num_vertices(); ++v) {
            for (int c = 0; c < o.candidates; ++c) {
                const Point to{coord(rng), coord(rng)};
                improved |= moves.try_move(v, to);
            }
        }
        if (!improved) break;
    }
    r.drawing = moves.drawing();
    r.value = count_straight_crossings(g, r.drawing);
    return r;
}

}  // namespace

LocalSearchResult local_search_mrcr(const Graph& g, const LocalSearchOptions& options) {
    const int n = g.num_vertices();
    const int grid = options.grid > 0 ? options.grid : std::max(16, 4 * n);
    const int restarts = std::max(1, options.restarts);
    std::vector<LocalSearchResult> results(static_cast<std::size_t>(restarts));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int r = next.fetch_add(1); r < restarts; r = next.fetch_add(1)) {
            results[static_cast<std::size_t>(r)] = run_restart(g, options, grid, r);
        }
    };
    const int threads = std::clamp(options.threads, 1, restarts);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].value > results[best].value ||
            (results[i].value == results[best].value && results[i].drawing < results[best].drawing)) {
            best = i;
        }
    }
    LocalSearchResult out = results[best];
    out.start_value = results[0].start_value;
    return out;
}

// ---------------------------------------------------------------------------
// Files

std::string svg_document(const Graph& g, const PointDrawing& d) {
    const Rational crossings = count_straight_crossings(g, d);
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    std::vector<std::pair<double, double>> pts;
    for (const Point& q : d) pts.emplace_back(q.x.convert_to<double>(), q.y.convert_to<double>());
    if (!pts.empty()) {
        min_x = max_x = pts[0].first;
        min_y = max_y = pts[0].second;
        for (const auto& [x, y] : pts) {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    const double size = 400;
    const double margin = 30;
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    auto sx = [&](double x) { return margin + (x - min_x) / span * size; };
    auto sy = [&](double y) { return margin + (max_y - y) / span * size; };

    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    const double full = size + 2 * margin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << full << "\" height=\"" << full + 30 << "\">\n";
    for (const Edge& e : g.edges()) {
        const auto& a = pts[static_cast<std::size_t>(e.u)];
        const auto& b = pts[static_cast<std::size_t>(e.v)];
        out << "  <line x1=\"" << sx(a.first) << "\" y1=\"" << sy(a.second) << "\" x2=\"" << sx(b.first) << "\" y2=\""
            << sy(b.second) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t v = 0; v < pts.size(); ++v) {
        out << "  <circle cx=\"" << sx(pts[v].first) << "\" cy=\"" << sy(pts[v].second) << "\" r=\"8\" fill=\"white\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << sx(pts[v].first) << "\" y=\"" << sy(pts[v].second) + 4
            << "\" font-size=\"10\" text-anchor=\"middle\">" << v << "</text>\n";
    }
    out << "  <text id=\"caption\" x=\"" << margin << "\" y=\"" << full + 15 << "\" font-size=\"14\">crossings: "
        << to_string(crossings) << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

void svg_export(const Graph& g, const PointDrawing& d, const std::string& path) {
    const std::string doc = svg_document(g, d);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << doc;
    if (!f) throw std::runtime_error("write failed: " + path);
}

PointDrawing parse_coordinates(std::string_view text, int n) {
    PointDrawing d(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n));
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t\r")] == '#') continue;
        std::istringstream ls(line);
        std::string v_text, x_text, y_text, extra;
        if (!(ls >> v_text >> x_text >> y_text) || (ls >> extra)) {
            throw std::invalid_argument("coordinates line " + std::to_string(line_no) + ": expected 'v x y'");
        }
        int v = -1;
        try {
            std::size_t used = 0;
            v = std::stoi(v_text, &used);
            if (used != v_text.size()) v = -1;
        } catch (const std::exception&) {
            v = -1;
        }
        if (v < 0 || v >= n) throw std::invalid_argument("coordinates line " + std::to_string(line_no) + ": bad vertex");
        if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("coordinates line " + std::to_string(line_no) + ": vertex repeated");
        seen[static_cast<std::size_t>(v)] = true;
        d[static_cast<std::size_t>(v)] = {parse_rational(x_text), parse_rational(y_text)};
    }
    for (int v = 0; v < n; ++v) {
        if (!seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("coordinates: vertex " + std::to_string(v) + " missing");
    }
    return d;
}

std::string write_coordinates(const PointDrawing& d) {
    std::ostringstream out;
    for (std::size_t v = 0; v < d.size(); ++v) out << v << ' ' << to_string(d[v].x) << ' ' << to_string(d[v].y) << '\n';
    return out.str();
}

}  // namespace crossmax
