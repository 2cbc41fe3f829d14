#include "crossmax/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace crossmax {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    inc_.resize(static_cast<std::size_t>(n));
}

int Graph::add_edge(int u, int v, Rational weight) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw GraphError("vertex id out of range in edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (weight <= 0) throw GraphError("non-positive edge weight");
    if (has_edge(u, v)) {
        throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u > v) std::swap(u, v);
    const int id = num_edges();
    edges_.push_back({u, v});
    weights_.push_back(std::move(weight));
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        auto& nb = adj_[static_cast<std::size_t>(a)];
        auto& ie = inc_[static_cast<std::size_t>(a)];
        const auto pos = std::lower_bound(nb.begin(), nb.end(), b) - nb.begin();
        nb.insert(nb.begin() + pos, b);
        ie.insert(ie.begin() + pos, id);
    }
    return id;
}

int Graph::find_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    const auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return -1;
    return inc_[static_cast<std::size_t>(u)][static_cast<std::size_t>(it - nb.begin())];
}

bool Graph::independent(int e, int f) const {
    const Edge& a = edge(e);
    const Edge& b = edge(f);
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
}

bool Graph::is_unit_weighted() const {
    return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 1; });
}

ParseError::ParseError(Kind kind, int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int_token(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ParseError(ParseError::Kind::malformed, line, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    std::optional<Graph> g;
    int expected = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        const auto tok = split_ws(raw);
        if (!g) {
            if (tok.size() != 2) throw ParseError(ParseError::Kind::malformed, line_no, "header must be 'n m'");
            const int n = parse_int_token(tok[0], line_no);
            expected = parse_int_token(tok[1], line_no);
            if (n < 0 || expected < 0) throw ParseError(ParseError::Kind::malformed, line_no, "negative count");
            g.emplace(n);
            continue;
        }
        if (tok.size() != 2 && tok.size() != 3) {
            throw ParseError(ParseError::Kind::malformed, line_no, "edge line must be 'u v' or 'u v w'");
        }
        const int u = parse_int_token(tok[0], line_no);
        const int v = parse_int_token(tok[1], line_no);
        Rational w = 1;
        if (tok.size() == 3) {
            try {
                w = parse_rational(tok[2]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(ParseError::Kind::malformed, line_no, e.what());
            }
        }
        if (u < 0 || v < 0 || u >= g->num_vertices() || v >= g->num_vertices()) {
            throw ParseError(ParseError::Kind::vertex_out_of_range, line_no,
                             "vertex id out of range in edge " + tok[0] + " " + tok[1]);
        }
        if (u == v) throw ParseError(ParseError::Kind::self_loop, line_no, "self-loop at vertex " + tok[0]);
        if (g->has_edge(u, v)) {
            throw ParseError(ParseError::Kind::duplicate_edge, line_no, "duplicate edge " + tok[0] + " " + tok[1]);
        }
        if (w <= 0) throw ParseError(ParseError::Kind::non_positive_weight, line_no, "non-positive weight " + tok[2]);
        g->add_edge(u, v, w);
    }
    if (!g) throw ParseError(ParseError::Kind::malformed, line_no, "missing header");
    if (g->num_edges() != expected) {
        throw ParseError(ParseError::Kind::edge_count, line_no,
                         "header announces " + std::to_string(expected) + " edges, found " +
                             std::to_string(g->num_edges()));
    }
    return std::move(*g);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string write_graph(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.num_edges()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Edge& x = g.edge(a);
        const Edge& y = g.edge(b);
        return std::pair{x.u, x.v} < std::pair{y.u, y.v};
    });
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (int e : order) {
        out << g.edge(e).u << ' ' << g.edge(e).v;
        if (g.weight(e) != 1) out << ' ' << to_string(g.weight(e));
        out << '\n';
    }
    return out.str();
}

Rational independent_pair_weight(const Graph& g) {
    // degree formula: all pairs minus pairs meeting at a vertex
    Rational total = 0;
    Rational squares = 0;
    for (const auto& w : g.weights()) {
        total += w;
        squares += w * w;
    }
    Rational formula = (total * total - squares) / 2;
    for (int v = 0; v < g.num_vertices(); ++v) {
        Rational s = 0;
        Rational sq = 0;
        for (int e : g.incident_edges(v)) {
            s += g.weight(e);
            sq += g.weight(e) * g.weight(e);
        }
        formula -= (s * s - sq) / 2;
    }

    Rational scanned = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        for (int f = e + 1; f < g.num_edges(); ++f) {
            if (g.independent(e, f)) scanned += g.weight(e) * g.weight(f);
        }
    }
    if (formula != scanned) throw std::logic_error("independent pair weight: formula and scan disagree");
    return formula;
}

std::int64_t independent_pair_count(const Graph& g) {
    std::int64_t m = binom(g.num_edges(), 2);
    for (int v = 0; v < g.num_vertices(); ++v) m -= binom(g.degree(v), 2);
    return m;
}

TwinPartition TwinPartition::non_singleton() const {
    TwinPartition out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].size() >= 2) {
            out.classes.push_back(classes[i]);
            out.neighborhoods.push_back(neighborhoods[i]);
        }
    }
    return out;
}

TwinPartition twin_classes(const Graph& g) {
    std::map<std::vector<int>, std::vector<int>> by_neighborhood;
    for (int v = 0; v < g.num_vertices(); ++v) by_neighborhood[g.neighbors(v)].push_back(v);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
    for (auto& [nb, members] : by_neighborhood) groups.emplace_back(members, nb);
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.first[0] < b.first[0]; });
    TwinPartition out;
    for (auto& [members, nb] : groups) {
        out.classes.push_back(std::move(members));
        out.neighborhoods.push_back(std::move(nb));
    }
    return out;
}

std::vector<int> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()), -1);
    int next = 0;
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = next;
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (int y : g.neighbors(x)) {
                if (comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = next;
                    q.push(y);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    const auto comp = connected_components(g);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.num_vertices()), -1);
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (int y : g.neighbors(x)) {
                auto& cy = color[static_cast<std::size_t>(y)];
                if (cy < 0) {
                    cy = 1 - color[static_cast<std::size_t>(x)];
                    q.push(y);
                } else if (cy == color[static_cast<std::size_t>(x)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_tree(const Graph& g) {
    return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 && is_connected(g);
}

bool is_caterpillar(const Graph& g) {
    if (!is_tree(g)) throw GraphError("is_caterpillar: input is not a tree");
    // the spine (non-leaf vertices) must induce a path
    std::vector<bool> spine(static_cast<std::size_t>(g.num_vertices()));
    int spine_size = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) >= 2) {
            spine[static_cast<std::size_t>(v)] = true;
            ++spine_size;
        }
    }
    int spine_edges = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!spine[static_cast<std::size_t>(v)]) continue;
        int d = 0;
        for (int u : g.neighbors(v)) d += spine[static_cast<std::size_t>(u)] ? 1 : 0;
        if (d > 2) return false;
        spine_edges += d;
    }
    // a subtree of a tree is connected, so a path iff max spine degree <= 2
    return spine_size == 0 || spine_edges / 2 == spine_size - 1;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int k) {
    if (static_cast<int>(colors.size()) != g.num_vertices()) return false;
    for (int c : colors) {
        if (c < 0 || c >= k) return false;
    }
    for (const auto& e : g.edges()) {
        if (colors[static_cast<std::size_t>(e.u)] == colors[static_cast<std::size_t>(e.v)]) return false;
    }
    return true;
}

namespace {

bool color_from(const Graph& g, int v, int k, std::vector<int>& colors) {
    if (v == g.num_vertices()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v)) {
            if (u < v && colors[static_cast<std::size_t>(u)] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        colors[static_cast<std::size_t>(v)] = c;
        if (color_from(g, v + 1, k, colors)) return true;
    }
    colors[static_cast<std::size_t>(v)] = -1;
    return false;
}

}  // namespace

std::optional<std::vector<int>> proper_coloring(const Graph& g, int k, int max_vertices) {
    if (k < 2 || k > 3) throw std::invalid_argument("proper_coloring supports k in {2,3}");
    if (g.num_vertices() > max_vertices) {
        throw SizeLimitError("proper_coloring: " + std::to_string(g.num_vertices()) + " vertices exceed bound " +
                             std::to_string(max_vertices));
    }
    std::vector<int> colors(static_cast<std::size_t>(g.num_vertices()), -1);
    if (!color_from(g, 0, k, colors)) return std::nullopt;
    return colors;
}

Rational cut_value(const Graph& g, const std::vector<int>& side) {
    Rational v = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (side.at(static_cast<std::size_t>(g.edge(e).u)) != side.at(static_cast<std::size_t>(g.edge(e).v))) {
            v += g.weight(e);
        }
    }
    return v;
}

CutResult maxcut_exact(const Graph& g, int max_vertices) {
    const int n = g.num_vertices();
    if (n > max_vertices || n > 62) {
        throw SizeLimitError("maxcut_exact: " + std::to_string(n) + " vertices exceed bound " +
                             std::to_string(max_vertices));
    }
    CutResult out;
    out.side.assign(static_cast<std::size_t>(n), 0);
    out.value = 0;
    if (n <= 1) return out;

    Rational total = 0;
    for (const auto& w : g.weights()) total += w;
    const ScaledWeights sw = scale_to_integers(g.weights(), total);

    // vertex i lives at bit (n-1-i) so that smaller masks are lexicographically smaller
    auto bit = [n](int v) { return std::uint64_t{1} << (n - 1 - v); };
    std::uint64_t mask = 0;
    std::int64_t value = 0;
    std::int64_t best = 0;
    std::uint64_t best_mask = 0;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
        // Gray code step flips vertex (n-1-ctz(i)), never vertex 0
        const int v = n - 1 - std::countr_zero(i);
        const bool old_side = (mask & bit(v)) != 0;
        for (std::size_t j = 0; j < g.neighbors(v).size(); ++j) {
            const int u = g.neighbors(v)[j];
            const std::int64_t w = sw.values[static_cast<std::size_t>(g.incident_edges(v)[j])];
            const bool u_side = (mask & bit(u)) != 0;
            if (u_side == old_side) value += w;
            else value -= w;
        }
        mask ^= bit(v);
        if (value > best || (value == best && mask < best_mask)) {
            best = value;
            best_mask = mask;
        }
    }
    for (int v = 0; v < n; ++v) out.side[static_cast<std::size_t>(v)] = (best_mask & bit(v)) ? 1 : 0;
    out.value = sw.unscale_sum(best);
    return out;
}

}  // namespace crossmax
