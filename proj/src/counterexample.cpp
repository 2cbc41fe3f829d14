#include "crossmax/counterexample.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace crossmax {

LabeledH build_h() {
    LabeledH h;
    h.graph = Graph(10);
    auto is_b = [](int v) { return v % 3 == 0; };
    for (int i = 0; i < 9; ++i) {
        const int j = (i + 1) % 9;
        h.graph.add_edge(i, j);
        h.labels.push_back(is_b(i) || is_b(j) ? EdgeLabel::beta : EdgeLabel::gamma);
    }
    for (int b : LabeledH::b_vertices) {
        h.graph.add_edge(LabeledH::z, b);
        h.labels.push_back(EdgeLabel::alpha);
    }
    return h;
}

Graph build_hk(int k) {
    if (k < 1) throw std::invalid_argument("build_hk: k must be at least 1");
    Graph g(9 * k + 1);
    for (int i = 0; i < 9; ++i) {
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) g.add_edge(i * k + a, ((i + 1) % 9) * k + b);
        }
    }
    for (int b : LabeledH::b_vertices) {
        for (int a = 0; a < k; ++a) g.add_edge(9 * k, b * k + a);
    }
    return g;
}

int hk_base_vertex(int k, int v) { return v == 9 * k ? LabeledH::z : v / k; }

std::array<int, 2> h16_split_pair(int variant) {
    switch (variant) {
        case 1: return {1, 4};
        case 2: return {1, 5};
        case 3: return {2, 4};
        default: throw std::invalid_argument("H16 variant must be 1, 2 or 3");
    }
}

Graph build_h16(int variant) {
    const auto split = h16_split_pair(variant);
    const Graph h = build_h().graph;
    Graph g(12);
    for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
    for (int i = 0; i < 2; ++i) {
        for (int x : h.neighbors(split[static_cast<std::size_t>(i)])) g.add_edge(x, 10 + i);
    }
    return g;
}

Graph build_w(int variant, WeightedVariant which) {
    const auto split = h16_split_pair(variant);
    const LabeledH h = build_h();
    Graph g(10);
    for (int e = 0; e < h.graph.num_edges(); ++e) {
        const Edge& ed = h.graph.edge(e);
        const bool at_split = ed.touches(split[0]) || ed.touches(split[1]);
        const bool heavy = at_split && (h.labels[static_cast<std::size_t>(e)] == EdgeLabel::gamma || which == WeightedVariant::w16);
        g.add_edge(ed.u, ed.v, heavy ? 2 : 1);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Drawing of H(k)

namespace {

struct Cluster {
    std::array<int, 2> base;
    std::array<int, 2> tangent;
    std::array<int, 2> outward;
};

// Base points of v0..v8. A class sits on a tiny arc through its base point
// along `tangent`, bulging in direction `outward`, which points away from all
// neighbors of the base point. The per-class shift of the arc parameter keeps
// chords between equally indexed members from meeting in one point.
constexpr std::array<Cluster, 9> clusters{{
    {{12, -30}, {0, 10}, {10, 0}},
    {{-128, -92}, {5, -9}, {-9, -5}},
    {{36, 32}, {-7, 7}, {7, 7}},
    {{-99, -127}, {9, -4}, {-4, -9}},
    {{-67, 121}, {-10, 1}, {1, 10}},
    {{-98, -215}, {10, -1}, {-1, -10}},
    {{-75, 96}, {-10, -2}, {-2, 10}},
    {{-5, -45}, {7, 7}, {7, -7}},
    {{-145, 45}, {-5, -9}, {-9, 5}},
}};
constexpr std::array<int, 2> center_point{-52, -34};

std::int64_t cube(std::int64_t k) { return k * k * k; }

}  // namespace

PointDrawing hk_drawing(int k) {
    if (k < 1) throw std::invalid_argument("hk_drawing: k must be at least 1");
    const Rational eps(1, 1000);
    PointDrawing d(static_cast<std::size_t>(9 * k + 1));
    for (int i = 0; i < 9; ++i) {
        const Cluster& c = clusters[static_cast<std::size_t>(i)];
        for (int j = 0; j < k; ++j) {
            const Rational s = eps * (Rational(2 * j - (k - 1)) + Rational(i + 1, 13));
            d[static_cast<std::size_t>(i * k + j)] = {c.base[0] + s * c.tangent[0] - s * s * c.outward[0],
                                                      c.base[1] + s * c.tangent[1] - s * s * c.outward[1]};
        }
    }
    d.back() = {center_point[0], center_point[1]};
    return d;
}

bool is_weak_pair(int k, const Graph& hk, int e, int f) {
    const Edge& a = hk.edge(e);
    const Edge& b = hk.edge(f);
    const int a1 = hk_base_vertex(k, a.u), a2 = hk_base_vertex(k, a.v);
    const int b1 = hk_base_vertex(k, b.u), b2 = hk_base_vertex(k, b.v);
    return a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
}

PairClasses classify_pairs(int k) {
    const Graph g = build_hk(k);
    PairClasses out;
    for (int e = 0; e < g.num_edges(); ++e) {
        for (int f = e + 1; f < g.num_edges(); ++f) {
            if (!g.independent(e, f)) {
                ++out.adjacent;
            } else if (is_weak_pair(k, g, e, f)) {
                ++out.weak;
            } else {
                ++out.strong;
            }
        }
    }
    return out;
}

namespace {

bool in_convex_position(const std::vector<Point>& p) {
    const std::size_t n = p.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                if (orientation(p[a], p[b], p[c]) == 0) return false;
                for (std::size_t x = 0; x < n; ++x) {
                    if (x == a || x == b || x == c) continue;
                    const int o1 = orientation(p[a], p[b], p[x]);
                    const int o2 = orientation(p[b], p[c], p[x]);
                    const int o3 = orientation(p[c], p[a], p[x]);
                    if (o1 == o2 && o2 == o3) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

HkDrawingCheck check_hk_drawing(int k, const PointDrawing& d) {
    const Graph g = build_hk(k);
    HkDrawingCheck out;
    auto fail = [&](const std::string& why) {
        if (out.ok) out.failure = why;
        out.ok = false;
    };
    const auto violations = validate_drawing(g, d);
    if (!violations.empty()) {
        fail("invalid drawing: " + violations.front().describe());
        return out;
    }
    const int m = g.num_edges();
    std::vector<char> crosses(static_cast<std::size_t>(m * m), 0);
    for (int e = 0; e < m; ++e) {
        const Edge& a = g.edge(e);
        for (int f = e + 1; f < m; ++f) {
            if (!g.independent(e, f)) continue;
            const Edge& b = g.edge(f);
            const bool c = segments_cross(d[static_cast<std::size_t>(a.u)], d[static_cast<std::size_t>(a.v)],
                                          d[static_cast<std::size_t>(b.u)], d[static_cast<std::size_t>(b.v)]);
            crosses[static_cast<std::size_t>(e * m + f)] = crosses[static_cast<std::size_t>(f * m + e)] = c;
            if (c) {
                out.crossings += 1;
                if (is_weak_pair(k, g, e, f)) ++out.weak_crossings;
            } else if (!is_weak_pair(k, g, e, f)) {
                ++out.strong_misses;
            }
        }
    }
    // edges whose base edge joins class `a` to one of `others`
    auto edges_between = [&](int a, std::initializer_list<int> others) {
        std::vector<int> out_edges;
        for (int e = 0; e < m; ++e) {
            const int x = hk_base_vertex(k, g.edge(e).u);
            const int y = hk_base_vertex(k, g.edge(e).v);
            for (int o : others) {
                if ((x == a && y == o) || (y == a && x == o)) out_edges.push_back(e);
            }
        }
        return out_edges;
    };
    auto count = [&](const std::vector<int>& es, const std::vector<int>& fs, bool same) {
        std::int64_t c = 0;
        for (std::size_t i = 0; i < es.size(); ++i) {
            for (std::size_t j = same ? i + 1 : 0; j < fs.size(); ++j) c += crosses[static_cast<std::size_t>(es[i] * m + fs[j])];
        }
        return c;
    };
    auto within = [&](const std::vector<int>& es) { return count(es, es, true); };
    const std::int64_t pairs_k = binom(k, 2);
    const int z = LabeledH::z;
    for (int i = 0; i < 9; ++i) {
        const int next = (i + 1) % 9;
        const int prev = (i + 8) % 9;
        const std::string tag = "class " + std::to_string(i) + ": ";
        if (within(edges_between(i, {next})) != pairs_k * pairs_k) fail(tag + "cycle-edge bundle crossing count");
        std::vector<Point> cluster_points;
        for (int j = 0; j < k; ++j) {
            cluster_points.push_back(d[static_cast<std::size_t>(i * k + j)]);
            cluster_points.push_back(d[static_cast<std::size_t>(next * k + j)]);
        }
        if (!in_convex_position(cluster_points)) fail(tag + "neighbor classes not in convex position");
        if (within(edges_between(i, {prev, next})) != pairs_k * binom(2 * k, 2)) fail(tag + "both cycle neighbors crossing count");
        if (i % 3 == 0) {
            for (int j : {prev, next}) {
                if (within(edges_between(i, {j, z})) != pairs_k * binom(k + 1, 2)) fail(tag + "neighbor plus center crossing count");
            }
        }
    }
    const std::int64_t k3 = cube(k);
    for (int i = 0; i < 9; ++i) {
        const int i2 = (i + 1) % 9;
        const auto red = edges_between(i, {i2});
        for (int j = i + 1; j < 9; ++j) {
            const int j2 = (j + 1) % 9;
            if (j == i2 || j2 == i) continue;
            if (count(red, edges_between(j, {j2}), false) != k3 * k) fail("red bundles " + std::to_string(i) + " and " + std::to_string(j) + " do not fully cross");
        }
        int missed = 0;
        for (int b : LabeledH::b_vertices) {
            if (b == i || b == i2) continue;
            const std::int64_t c = count(red, edges_between(z, {b}), false);
            if (c == 0) {
                ++missed;
            } else if (c != k3) {
                fail("red bundle " + std::to_string(i) + " partially crosses green bundle " + std::to_string(b));
            }
        }
        if (missed != 1) fail("red bundle " + std::to_string(i) + " misses " + std::to_string(missed) + " green bundles");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Convex analysis of H

namespace {

struct HPairs {
    std::vector<std::pair<Edge, Edge>> red_red;
    std::vector<std::pair<Edge, Edge>> red_green;
};

HPairs h_pairs() {
    const LabeledH h = build_h();
    HPairs out;
    for (int e = 0; e < h.graph.num_edges(); ++e) {
        for (int f = e + 1; f < h.graph.num_edges(); ++f) {
            if (!h.graph.independent(e, f)) continue;
            const std::pair<Edge, Edge> p{h.graph.edge(e), h.graph.edge(f)};
            if (h.is_red(e) && h.is_red(f)) {
                out.red_red.push_back(p);
            } else if (h.is_red(e) || h.is_red(f)) {
                out.red_green.push_back(p);
            }
        }
    }
    return out;
}

int misses(const std::vector<std::pair<Edge, Edge>>& pairs, const std::array<int, 10>& pos) {
    int c = 0;
    for (const auto& [a, b] : pairs) {
        if (!chords_alternate(pos[static_cast<std::size_t>(a.u)], pos[static_cast<std::size_t>(a.v)],
                              pos[static_cast<std::size_t>(b.u)], pos[static_cast<std::size_t>(b.v)])) {
            ++c;
        }
    }
    return c;
}

StrongLossProfile compute_profile() {
    const HPairs pairs = h_pairs();
    StrongLossProfile p;
    p.min_green.fill(-1);
    std::array<int, 10> pos{};
    for_each_canonical_order(10, [&](std::span<const int> seq) {
        ++p.orders;
        for (int i = 0; i < 10; ++i) pos[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;
        const int r = misses(pairs.red_red, pos);
        const int g = misses(pairs.red_green, pos);
        auto& best = p.min_green[static_cast<std::size_t>(r)];
        if (best < 0 || g < best) {
            best = g;
            p.witness[static_cast<std::size_t>(r)] = CircularOrder({seq.begin(), seq.end()});
        }
        return true;
    });
    return p;
}

}  // namespace

const StrongLossProfile& strong_loss_profile() {
    static const StrongLossProfile profile = compute_profile();
    return profile;
}

LossReport min_convex_strong_loss(int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const StrongLossProfile& p = strong_loss_profile();
    LossReport r;
    r.k = k;
    bool found = false;
    for (std::size_t red = 0; red < p.min_green.size(); ++red) {
        if (p.min_green[red] < 0) continue;
        const std::int64_t loss = k * static_cast<std::int64_t>(red) + p.min_green[red];
        if (!found || loss < r.min_strong_loss) {
            found = true;
            r.min_strong_loss = loss;
            r.witness = p.witness[red];
            r.witness_red_misses = static_cast<std::int64_t>(red);
            r.witness_green_misses = p.min_green[red];
        }
    }
    r.zero_red_min = p.min_green[0];
    r.counterexample = r.min_strong_loss > r.drawing_strong_loss;
    return r;
}

LossReport verify_hk(int k, int max_drawing_k) {
    LossReport r = min_convex_strong_loss(k);
    for (int j = 1; j <= std::max(6, k); ++j) {
        if (min_convex_strong_loss(j).counterexample) {
            r.smallest_k = j;
            break;
        }
    }
    r.m = independent_pair_count(build_hk(k));
    r.pairs = classify_pairs(k);
    if (k <= max_drawing_k) {
        HkDrawingCheck check = check_hk_drawing(k, hk_drawing(k));
        if (check.ok && check.strong_misses % cube(k) == 0) {
            r.drawing_strong_loss = check.strong_misses / cube(k);
        } else {
            check.ok = false;
            if (check.failure.empty()) check.failure = "strong misses not a multiple of k^3";
        }
        r.drawing = check;
        r.counterexample = r.min_strong_loss > r.drawing_strong_loss;
    }
    return r;
}

// ---------------------------------------------------------------------------
// H16

PointDrawing h16_drawing(int variant) {
    const auto split = h16_split_pair(variant);
    const PointDrawing d2 = hk_drawing(2);
    PointDrawing d(12);
    for (int v = 0; v < 10; ++v) d[static_cast<std::size_t>(v)] = d2[static_cast<std::size_t>(v == LabeledH::z ? 18 : 2 * v)];
    d[10] = d2[static_cast<std::size_t>(2 * split[0] + 1)];
    d[11] = d2[static_cast<std::size_t>(2 * split[1] + 1)];
    return d;
}

H16Report verify_h16(int variant, bool full_search, int threads) {
    const auto split = h16_split_pair(variant);
    const Graph g = build_h16(variant);
    TwinPartition twins;
    twins.classes = {{split[0], 10}, {split[1], 11}};
    const ContractedInstance ci = contract_twins(g, twins);
    const Graph w = build_w(variant, WeightedVariant::w16);
    if (write_graph(ci.graph) != write_graph(w)) throw std::logic_error("contracted H16 differs from W16");

    H16Report r;
    r.variant = variant;
    r.m = independent_pair_count(g);
    r.weighted_m = independent_pair_weight(w);
    const ConvexResult opt = mccr_exact(w, {.threads = threads});
    r.nodes = opt.nodes_explored;
    r.weighted_convex_opt = opt.value;
    r.convex_opt = opt.value + ci.constant;
    r.convex_order = ci.expand(opt.order).canonical();
    if (convex_crossing_value(g, r.convex_order) != r.convex_opt) throw std::logic_error("expanded H16 order does not attain the optimum");
    r.convex_loss_raw = Rational(r.m) - r.convex_opt;
    // twins side by side leave one of the two pairs of each twin 4-cycle uncrossed
    r.convex_loss = r.weighted_m - r.weighted_convex_opt;

    const PointDrawing d = h16_drawing(variant);
    r.drawing_crossings = count_straight_crossings(g, d);
    r.drawing_loss_raw = Rational(r.m) - r.drawing_crossings;
    for (int i = 0; i < 2; ++i) {
        const int c = split[static_cast<std::size_t>(i)];
        const int copy = 10 + i;
        const int x = g.neighbors(copy)[0];
        const int y = g.neighbors(copy)[1];
        for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
            if (!segments_cross(d[static_cast<std::size_t>(c)], d[static_cast<std::size_t>(p)], d[static_cast<std::size_t>(copy)], d[static_cast<std::size_t>(q)])) {
                ++r.drawing_twin_avoidances;
            }
        }
    }
    r.drawing_loss = r.drawing_loss_raw - r.drawing_twin_avoidances;
    r.counterexample = r.drawing_crossings > r.convex_opt;
    if (full_search) r.full_search_opt = mccr_exact(g, {.threads = threads}).value;
    return r;
}

// ---------------------------------------------------------------------------
// Lemmas on convex drawings of H

LemmaReport check_avoidance_lemmas() {
    const LabeledH h = build_h();
    const Graph& g = h.graph;
    const int m = g.num_edges();
    LemmaReport r;
    r.min_alpha_slack = std::numeric_limits<std::int64_t>::max();
    std::array<int, 10> pos{};
    auto record = [&](std::span<const int> seq) {
        if (!r.first_failure) r.first_failure = CircularOrder({seq.begin(), seq.end()});
    };
    for_each_canonical_order(10, [&](std::span<const int> seq) {
        ++r.orders;
        for (int i = 0; i < 10; ++i) pos[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;
        auto avoids = [&](int e, int f) {
            const Edge& a = g.edge(e);
            const Edge& b = g.edge(f);
            return g.independent(e, f) &&
                   !chords_alternate(pos[static_cast<std::size_t>(a.u)], pos[static_cast<std::size_t>(a.v)],
                                     pos[static_cast<std::size_t>(b.u)], pos[static_cast<std::size_t>(b.v)]);
        };
        int alpha_avoidances = 0;
        for (int e = 0; e < m; ++e) {
            if (!h.is_red(e)) continue;
            int any = 0;
            int cycle = 0;
            for (int f = 0; f < m; ++f) {
                if (!avoids(e, f)) continue;
                ++any;
                if (h.is_red(f)) {
                    ++cycle;
                } else {
                    ++alpha_avoidances;
                }
            }
            if (any == 0) {
                r.every_cycle_edge_avoids = false;
                record(seq);
            }
            const Edge& ed = g.edge(e);
            const int lo = std::min(pos[static_cast<std::size_t>(ed.u)], pos[static_cast<std::size_t>(ed.v)]);
            const int hi = std::max(pos[static_cast<std::size_t>(ed.u)], pos[static_cast<std::size_t>(ed.v)]);
            int inside = 0;
            for (int v = 0; v < 9; ++v) {
                if (!ed.touches(v) && lo < pos[static_cast<std::size_t>(v)] && pos[static_cast<std::size_t>(v)] < hi) ++inside;
            }
            const int span = std::min(inside, 7 - inside);
            if (span <= 2 && cycle < 6 - 2 * span) {
                r.span_bound = false;
                record(seq);
            }
        }
        // label cycle vertices from the first B-vertex after the center, in both directions
        for (int dir : {1, -1}) {
            const int zpos = pos[LabeledH::z];
            int start = -1;
            for (int step = 1; step < 10 && start < 0; ++step) {
                const int v = seq[static_cast<std::size_t>(((zpos + dir * step) % 10 + 10) % 10)];
                if (v % 3 == 0) start = (zpos + dir * step + 10) % 10;
            }
            int label = 0;
            int last_b = 0;
            for (int step = 0; step < 10; ++step) {
                const int v = seq[static_cast<std::size_t>(((start + dir * step) % 10 + 10) % 10)];
                if (v == LabeledH::z) continue;
                ++label;
                if (v % 3 == 0) last_b = label;
            }
            const std::int64_t slack = alpha_avoidances - 2 * (last_b - 2);
            r.min_alpha_slack = std::min(r.min_alpha_slack, slack);
            if (slack < 0) {
                r.alpha_bound = false;
                record(seq);
            }
        }
        return true;
    });
    return r;
}

}  // namespace crossmax
