#include "crossmax/reductions.hpp"

#include "crossmax/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace crossmax {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

bool planar_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    BoostGraph bg(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace

bool is_planar(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    return planar_edges(g.num_vertices(), edges);
}

// ---------------------------------------------------------------------------
// Schemes

void check_scheme(const CrossingScheme& s) {
    const Graph& g = s.graph;
    std::vector<std::vector<int>> crossing(static_cast<std::size_t>(g.num_edges()));
    std::set<std::pair<int, int>> seen;
    for (auto [e, f] : s.crossings) {
        if (e < 0 || f < 0 || e >= g.num_edges() || f >= g.num_edges()) throw SchemeError("crossing pair refers to a missing edge");
        if (e > f) std::swap(e, f);
        if (!g.independent(e, f)) throw SchemeError("crossing pair of adjacent edges");
        if (!seen.insert({e, f}).second) throw SchemeError("crossing pair listed twice");
        crossing[static_cast<std::size_t>(e)].push_back(f);
        crossing[static_cast<std::size_t>(f)].push_back(e);
    }
    if (s.edge_orders) {
        if (static_cast<int>(s.edge_orders->size()) != g.num_edges()) throw SchemeError("edge orders do not cover every edge");
        for (int e = 0; e < g.num_edges(); ++e) {
            auto a = (*s.edge_orders)[static_cast<std::size_t>(e)];
            auto b = crossing[static_cast<std::size_t>(e)];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) throw SchemeError("order along edge " + std::to_string(e) + " does not match its crossings");
        }
    }
    if (s.rotation) {
        if (static_cast<int>(s.rotation->size()) != g.num_vertices()) throw SchemeError("rotation does not cover every vertex");
        for (int v = 0; v < g.num_vertices(); ++v) {
            auto r = (*s.rotation)[static_cast<std::size_t>(v)];
            std::sort(r.begin(), r.end());
            if (r != g.neighbors(v)) throw SchemeError("rotation at vertex " + std::to_string(v) + " is not a cyclic order of its neighbors");
        }
    }
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Reads "(u v)" groups from a string.
std::vector<std::pair<int, int>> read_edge_groups(const std::string& text, int line) {
    std::vector<std::pair<int, int>> out;
    std::size_t p = 0;
    while ((p = text.find('(', p)) != std::string::npos) {
        const auto q = text.find(')', p);
        if (q == std::string::npos) throw SchemeError("scheme line " + std::to_string(line) + ": unbalanced parenthesis");
        std::istringstream in(text.substr(p + 1, q - p - 1));
        int u = 0, v = 0;
        std::string extra;
        if (!(in >> u >> v) || (in >> extra)) throw SchemeError("scheme line " + std::to_string(line) + ": expected '(u v)'");
        out.emplace_back(u, v);
        p = q + 1;
    }
    return out;
}

int edge_id(const Graph& g, std::pair<int, int> uv, int line) {
    const auto [u, v] = uv;
    if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices() || g.find_edge(u, v) < 0) {
        throw SchemeError("scheme line " + std::to_string(line) + ": (" + std::to_string(u) + " " + std::to_string(v) + ") is not an edge");
    }
    return g.find_edge(u, v);
}

}  // namespace

CrossingScheme parse_scheme(std::string_view text, const Graph& g) {
    CrossingScheme s;
    s.graph = g;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string l = trim(raw);
        if (l.empty() || l[0] == '#' || l.rfind("graph", 0) == 0) continue;
        if (l.rfind("rotation", 0) == 0) {
            const auto colon = l.find(':');
            if (colon == std::string::npos) throw SchemeError("scheme line " + std::to_string(line) + ": expected 'rotation v: ...'");
            int v = -1;
            try {
                v = std::stoi(l.substr(8, colon - 8));
            } catch (const std::exception&) {
                throw SchemeError("scheme line " + std::to_string(line) + ": bad vertex");
            }
            if (v < 0 || v >= g.num_vertices()) throw SchemeError("scheme line " + std::to_string(line) + ": bad vertex");
            if (!s.rotation) s.rotation.emplace(static_cast<std::size_t>(g.num_vertices()));
            std::istringstream rest(l.substr(colon + 1));
            std::string tok;
            while (rest >> tok) {
                try {
                    std::size_t used = 0;
                    (*s.rotation)[static_cast<std::size_t>(v)].push_back(std::stoi(tok, &used));
                    if (used != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    throw SchemeError("scheme line " + std::to_string(line) + ": bad vertex '" + tok + "'");
                }
            }
        } else if (l.rfind("order", 0) == 0) {
            const auto colon = l.find(':');
            if (colon == std::string::npos) throw SchemeError("scheme line " + std::to_string(line) + ": expected 'order (u v): ...'");
            const auto head = read_edge_groups(l.substr(0, colon), line);
            if (head.size() != 1) throw SchemeError("scheme line " + std::to_string(line) + ": expected one edge before ':'");
            const int e = edge_id(g, head[0], line);
            if (!s.edge_orders) s.edge_orders.emplace(static_cast<std::size_t>(g.num_edges()));
            for (const auto& uv : read_edge_groups(l.substr(colon + 1), line)) (*s.edge_orders)[static_cast<std::size_t>(e)].push_back(edge_id(g, uv, line));
        } else {
            const auto groups = read_edge_groups(l, line);
            if (groups.size() != 2 || l.find(")x(") == std::string::npos) {
                throw SchemeError("scheme line " + std::to_string(line) + ": expected '(u1 v1)x(u2 v2)'");
            }
            int e = edge_id(g, groups[0], line);
            int f = edge_id(g, groups[1], line);
            if (e > f) std::swap(e, f);
            s.crossings.emplace_back(e, f);
        }
    }
    // rotation lines are optional where the cyclic order is forced
    if (s.rotation) {
        for (int v = 0; v < g.num_vertices(); ++v) {
            auto& r = (*s.rotation)[static_cast<std::size_t>(v)];
            if (r.empty() && g.degree(v) <= 2) r = g.neighbors(v);
        }
    }
    // an order block only has to list edges crossed more than once
    if (s.edge_orders) {
        for (const auto& [e, f] : s.crossings) {
            for (auto [a, b] : {std::pair{e, f}, std::pair{f, e}}) {
                auto& o = (*s.edge_orders)[static_cast<std::size_t>(a)];
                if (std::find(o.begin(), o.end(), b) != o.end()) continue;
                const bool multiple = std::count_if(s.crossings.begin(), s.crossings.end(), [a = a](const auto& c) {
                    return c.first == a || c.second == a;
                }) > 1;
                if (!multiple) o.push_back(b);
            }
        }
    }
    check_scheme(s);
    return s;
}

CrossingScheme scheme_from_drawing(const Graph& g, const PointDrawing& d) {
    const auto violations = validate_drawing(g, d);
    if (!violations.empty()) throw InvalidDrawing("invalid drawing: " + violations.front().describe());
    CrossingScheme s;
    s.graph = g;
    auto at = [&](int v) -> const Point& { return d[static_cast<std::size_t>(v)]; };
    std::vector<std::vector<std::pair<Rational, int>>> along(static_cast<std::size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& a = g.edge(e);
        for (int f = e + 1; f < g.num_edges(); ++f) {
            const Edge& b = g.edge(f);
            if (!g.independent(e, f) || !segments_cross(at(a.u), at(a.v), at(b.u), at(b.v))) continue;
            s.crossings.emplace_back(e, f);
            // parameter of the crossing along each segment, from its smaller endpoint
            auto param = [&](const Edge& x, const Edge& y) -> Rational {
                const Point& p = at(x.u);
                const Point r{at(x.v).x - p.x, at(x.v).y - p.y};
                const Point q = at(y.u);
                const Point sv{at(y.v).x - q.x, at(y.v).y - q.y};
                return ((q.x - p.x) * sv.y - (q.y - p.y) * sv.x) / (r.x * sv.y - r.y * sv.x);
            };
            along[static_cast<std::size_t>(e)].emplace_back(param(a, b), f);
            along[static_cast<std::size_t>(f)].emplace_back(param(b, a), e);
        }
    }
    s.edge_orders.emplace();
    for (auto& list : along) {
        std::sort(list.begin(), list.end());
        std::vector<int> order;
        for (const auto& [t, f] : list) order.push_back(f);
        s.edge_orders->push_back(std::move(order));
    }
    s.rotation.emplace();
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> nb = g.neighbors(v);
        auto upper = [&](int x) {
            const Rational dx = at(x).x - at(v).x;
            const Rational dy = at(x).y - at(v).y;
            return dy > 0 || (dy == 0 && dx > 0);
        };
        std::sort(nb.begin(), nb.end(), [&](int a, int b) {
            const bool ua = upper(a);
            const bool ub = upper(b);
            if (ua != ub) return ua;
            return orientation(at(v), at(a), at(b)) > 0;
        });
        s.rotation->push_back(std::move(nb));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Feasibility

namespace {

struct Planarization {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;
    /// Per dummy: previous and next vertex along the first edge, then along the second.
    std::vector<std::array<int, 4>> strands;
    /// Per original vertex and incident edge slot: the first vertex along that edge.
    std::vector<std::vector<int>> first_hop;
};

Planarization planarize(const CrossingScheme& s, const std::vector<std::vector<int>>& orders) {
    const Graph& g = s.graph;
    const int n = g.num_vertices();
    std::map<std::pair<int, int>, int> dummy;
    for (std::size_t i = 0; i < s.crossings.size(); ++i) {
        auto [e, f] = s.crossings[i];
        dummy[{std::min(e, f), std::max(e, f)}] = n + static_cast<int>(i);
    }
    Planarization p;
    p.vertices = n + static_cast<int>(s.crossings.size());
    p.adj.assign(static_cast<std::size_t>(p.vertices), {});
    p.strands.assign(s.crossings.size(), {-1, -1, -1, -1});
    p.first_hop.assign(static_cast<std::size_t>(n), {});
    for (int v = 0; v < n; ++v) p.first_hop[static_cast<std::size_t>(v)].assign(g.neighbors(v).size(), -1);
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        std::vector<int> path{ed.u};
        for (int f : orders[static_cast<std::size_t>(e)]) path.push_back(dummy.at({std::min(e, f), std::max(e, f)}));
        path.push_back(ed.v);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            p.edges.emplace_back(path[i], path[i + 1]);
            p.adj[static_cast<std::size_t>(path[i])].push_back(path[i + 1]);
            p.adj[static_cast<std::size_t>(path[i + 1])].push_back(path[i]);
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            const int id = path[i] - n;
            const bool first = s.crossings[static_cast<std::size_t>(id)].first == e;
            auto& st = p.strands[static_cast<std::size_t>(id)];
            st[first ? 0 : 2] = path[i - 1];
            st[first ? 1 : 3] = path[i + 1];
        }
        const auto& nu = g.neighbors(ed.u);
        const auto& nv = g.neighbors(ed.v);
        p.first_hop[static_cast<std::size_t>(ed.u)][static_cast<std::size_t>(std::find(nu.begin(), nu.end(), ed.v) - nu.begin())] = path[1];
        p.first_hop[static_cast<std::size_t>(ed.v)][static_cast<std::size_t>(std::find(nv.begin(), nv.end(), ed.u) - nv.begin())] = path[path.size() - 2];
    }
    return p;
}

int count_components(const Planarization& p) {
    std::vector<int> comp(static_cast<std::size_t>(p.vertices), -1);
    int c = 0;
    for (int s = 0; s < p.vertices; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = c;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int x : p.adj[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(x)] < 0) {
                    comp[static_cast<std::size_t>(x)] = c;
                    stack.push_back(x);
                }
            }
        }
        ++c;
    }
    return c;
}

// Number of faces of the embedding given by the rotation system; isolated
// vertices count as one face each.
int count_faces(const std::vector<std::vector<int>>& rot) {
    const int n = static_cast<int>(rot.size());
    std::vector<std::vector<char>> used(static_cast<std::size_t>(n));
    int faces = 0;
    for (int v = 0; v < n; ++v) {
        used[static_cast<std::size_t>(v)].assign(rot[static_cast<std::size_t>(v)].size(), 0);
        if (rot[static_cast<std::size_t>(v)].empty()) ++faces;
    }
    auto index_of = [&](int at, int nb) {
        const auto& r = rot[static_cast<std::size_t>(at)];
        return static_cast<std::size_t>(std::find(r.begin(), r.end(), nb) - r.begin());
    };
    for (int v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < rot[static_cast<std::size_t>(v)].size(); ++i) {
            if (used[static_cast<std::size_t>(v)][i]) continue;
            ++faces;
            int a = v;
            std::size_t ai = i;
            while (!used[static_cast<std::size_t>(a)][ai]) {
                used[static_cast<std::size_t>(a)][ai] = 1;
                const int b = rot[static_cast<std::size_t>(a)][ai];
                const auto& rb = rot[static_cast<std::size_t>(b)];
                const std::size_t bi = (index_of(b, a) + 1) % rb.size();
                a = b;
                ai = bi;
            }
        }
    }
    return faces;
}

// Searches rotation systems with alternating strands at every dummy.
bool has_crossing_embedding(const CrossingScheme& s, const Planarization& p, std::uint64_t& tried) {
    const int n = s.graph.num_vertices();
    const int target = 2 * count_components(p) - p.vertices + static_cast<int>(p.edges.size());
    // per vertex the list of admissible cyclic orders
    std::vector<std::vector<std::vector<int>>> options(static_cast<std::size_t>(p.vertices));
    for (int v = 0; v < n; ++v) {
        auto& opt = options[static_cast<std::size_t>(v)];
        if (s.rotation) {
            std::vector<int> r;
            const auto& nb = s.graph.neighbors(v);
            for (int x : (*s.rotation)[static_cast<std::size_t>(v)]) {
                r.push_back(p.first_hop[static_cast<std::size_t>(v)][static_cast<std::size_t>(std::find(nb.begin(), nb.end(), x) - nb.begin())]);
            }
            opt.push_back(r);
            continue;
        }
        std::vector<int> r = p.first_hop[static_cast<std::size_t>(v)];
        if (r.size() <= 2) {
            opt.push_back(r);
            continue;
        }
        std::sort(r.begin() + 1, r.end());
        do {
            opt.push_back(r);
        } while (std::next_permutation(r.begin() + 1, r.end()));
    }
    for (std::size_t d = 0; d < p.strands.size(); ++d) {
        const auto& st = p.strands[d];
        auto& opt = options[static_cast<std::size_t>(n) + d];
        opt.push_back({st[0], st[2], st[1], st[3]});
        // mirror images give the same face count, so without a prescribed
        // rotation one dummy can keep a single orientation
        if (d > 0 || s.rotation) opt.push_back({st[0], st[3], st[1], st[2]});
    }
    std::vector<std::size_t> choice(options.size(), 0);
    std::vector<std::vector<int>> rot(options.size());
    for (;;) {
        for (std::size_t v = 0; v < options.size(); ++v) rot[v] = options[v][choice[v]];
        ++tried;
        if (count_faces(rot) == target) return true;
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == options[i].size()) choice[i++] = 0;
        if (i == choice.size()) return false;
    }
}

}  // namespace

SchemeVerdict scheme_feasible(const CrossingScheme& s, SchemeMode mode, int max_vertices) {
    check_scheme(s);
    const Graph& g = s.graph;
    SchemeVerdict verdict;
    verdict.planarized_vertices = g.num_vertices() + static_cast<int>(s.crossings.size());
    if (mode == SchemeMode::exact && verdict.planarized_vertices > max_vertices) {
        throw SizeLimitError("scheme_feasible: planarization has " + std::to_string(verdict.planarized_vertices) +
                             " vertices, bound is " + std::to_string(max_vertices));
    }
    std::vector<std::vector<int>> orders(static_cast<std::size_t>(g.num_edges()));
    if (s.edge_orders) {
        orders = *s.edge_orders;
    } else {
        for (auto [e, f] : s.crossings) {
            orders[static_cast<std::size_t>(e)].push_back(f);
            orders[static_cast<std::size_t>(f)].push_back(e);
        }
        for (auto& o : orders) std::sort(o.begin(), o.end());
    }
    for (;;) {
        ++verdict.orders_tried;
        const Planarization p = planarize(s, orders);
        if (planar_edges(p.vertices, p.edges) &&
            (mode == SchemeMode::necessary || has_crossing_embedding(s, p, verdict.embeddings_tried))) {
            verdict.feasible = true;
            verdict.witness_orders = orders;
            return verdict;
        }
        if (s.edge_orders) return verdict;
        std::size_t e = 0;
        while (e < orders.size() && !std::next_permutation(orders[e].begin(), orders[e].end())) ++e;
        if (e == orders.size()) return verdict;
    }
}

McrResult mcr_exact_tiny(const Graph& g, int max_pairs, int max_vertices) {
    if (!g.is_unit_weighted()) throw std::invalid_argument("mcr_exact_tiny: unit weights only");
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < g.num_edges(); ++e) {
        for (int f = e + 1; f < g.num_edges(); ++f) {
            if (g.independent(e, f)) pairs.emplace_back(e, f);
        }
    }
    const int m = static_cast<int>(pairs.size());
    if (m > max_pairs) throw SizeLimitError("mcr_exact_tiny: " + std::to_string(m) + " independent pairs exceed " + std::to_string(max_pairs));
    McrResult r;
    const ConvexResult convex = mccr_exact(g, {.unbounded = true});
    r.convex_lower_bound = static_cast<std::int64_t>(convex.value.convert_to<long long>());
    for (int size = m; size > r.convex_lower_bound; --size) {
        if (g.num_vertices() + size > max_vertices) throw SizeLimitError("mcr_exact_tiny: planarization too large");
        // subsets of the given size in lexicographic order of index vectors
        std::vector<int> idx(static_cast<std::size_t>(size));
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            CrossingScheme s;
            s.graph = g;
            for (int i : idx) s.crossings.push_back(pairs[static_cast<std::size_t>(i)]);
            ++r.schemes_tested;
            if (scheme_feasible(s, SchemeMode::exact, max_vertices).feasible) {
                r.value = size;
                r.crossings = s.crossings;
                return r;
            }
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    r.value = r.convex_lower_bound;
    const auto pos = convex.order.positions();
    for (const auto& [e, f] : pairs) {
        const Edge& a = g.edge(e);
        const Edge& b = g.edge(f);
        if (chords_alternate(pos[static_cast<std::size_t>(a.u)], pos[static_cast<std::size_t>(a.v)], pos[static_cast<std::size_t>(b.u)], pos[static_cast<std::size_t>(b.v)])) {
            r.crossings.emplace_back(e, f);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Gadgets

std::pair<Graph, Rational> build_star_augmented(const Graph& g) {
    const std::int64_t t = binom(g.num_edges(), 2) + 1;
    return {disjoint_union(g, star_graph(static_cast<int>(t))), Rational(t)};
}

ReductionReport verify_star_reduction(const Graph& g, int max_vertices, int threads) {
    if (g.num_vertices() > max_vertices) {
        throw SizeLimitError("verify_star_reduction: " + std::to_string(g.num_vertices()) + " vertices exceed " + std::to_string(max_vertices));
    }
    if (!g.is_unit_weighted()) throw std::invalid_argument("verify_star_reduction: unit weights only");
    ReductionReport r;
    auto [augmented, t] = build_star_augmented(g);
    r.t = t;
    r.construction = augmented;
    const int center = g.num_vertices();
    TwinPartition leaves;
    leaves.classes.emplace_back();
    for (int v = center + 1; v < augmented.num_vertices(); ++v) leaves.classes.back().push_back(v);
    leaves.neighborhoods.push_back({center});
    const ContractedInstance c = contract_twins(augmented, leaves);
    ConvexSearchOptions opt;
    opt.max_vertices = c.graph.num_vertices();
    opt.threads = threads;
    r.value = mccr_exact(c.graph, opt).value + c.constant;
    r.recovered_mcut = floor_of(r.value / t);
    r.reference_mcut = maxcut_exact(g).value;
    r.sandwich = t * r.reference_mcut <= r.value && r.value < t * (r.reference_mcut + 1);
    r.match = Rational(r.recovered_mcut) == r.reference_mcut;
    return r;
}

namespace {

void require_cubic(const Graph& g) {
    if (!g.is_unit_weighted()) throw std::invalid_argument("triangle augmentation: unit weights only");
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != 3) throw std::invalid_argument("triangle augmentation: graph is not 3-regular");
    }
}

}  // namespace

std::pair<Graph, Rational> build_triangle_augmented(const Graph& g) {
    require_cubic(g);
    const int n = g.num_vertices();
    const Rational t = Rational(9 * n * n, 8);
    Graph h(n + 3);
    for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
    h.add_edge(n, n + 1, t);
    h.add_edge(n, n + 2, t);
    h.add_edge(n + 1, n + 2, t);
    return {h, t};
}

TriangleBounds triangle_bounds(const Graph& g) {
    require_cubic(g);
    TriangleBounds b;
    const int n = g.num_vertices();
    const int m = g.num_edges();
    b.t = build_triangle_augmented(g).second;
    b.mcut = maxcut_exact(g).value;
    b.lower = b.t * (2 * m + b.mcut);
    b.upper = b.t * (2 * m + b.mcut + 1);
    auto recovers = [&](const Rational& w) { return Rational(floor_of(w / b.t)) - 2 * m == b.mcut; };
    b.recovery = recovers(b.lower);
    Integer w = floor_of(b.lower);
    if (Rational(w) < b.lower) ++w;
    for (; Rational(w) < b.upper && b.recovery; ++w) b.recovery = recovers(Rational(w));
    b.mcut_at_least_n = b.mcut >= n;
    return b;
}

Graph build_tripartite(int k) {
    if (k < 1) throw std::invalid_argument("build_tripartite: k must be positive");
    Graph g(3 * k);
    for (int u = 0; u < 3 * k; ++u) {
        for (int v = u + 1; v < 3 * k; ++v) {
            if (u / k != v / k) g.add_edge(u, v);
        }
    }
    return g;
}

Rational tripartite_block_value(int k) {
    std::vector<int> order(static_cast<std::size_t>(3 * k));
    std::iota(order.begin(), order.end(), 0);
    return convex_crossing_value(build_tripartite(k), CircularOrder(order));
}

std::int64_t harborth_formula(int k) {
    return binom(3 * k, 4) - 3 * binom(k, 4) - 6 * static_cast<std::int64_t>(k) * binom(k, 3);
}

bool verify_tripartite_4cycles(int k) {
    if (k > 3) throw SizeLimitError("verify_tripartite_4cycles: k must be at most 3");
    const Graph g = build_tripartite(k);
    const int n = g.num_vertices();
    // block order is the identity, so positions are vertex ids
    auto cross = [](int a, int b, int c, int d) { return chords_alternate(a, b, c, d); };
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int d = b + 1; d < n; ++d) {
                for (int c = a + 1; c < n; ++c) {
                    if (c == b || c == d) continue;
                    if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(c, d) || !g.has_edge(d, a)) continue;
                    if (!cross(a, b, c, d) && !cross(b, c, d, a)) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace crossmax
