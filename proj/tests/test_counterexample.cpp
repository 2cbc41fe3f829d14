#include "doctest.h"

#include <algorithm>

#include "crossmax/counterexample.hpp"

using namespace crossmax;

namespace {

std::int64_t pow_int(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// k * red-red + red-green misses as a convex loss of H with red weight a and green weight k / a.
Rational weighted_h_loss(const Rational& red, const Rational& green) {
    const LabeledH h = build_h();
    Graph g(10);
    for (int e = 0; e < h.graph.num_edges(); ++e) g.add_edge(h.graph.edge(e).u, h.graph.edge(e).v, h.is_red(e) ? red : green);
    return mccr_exact(g).loss;
}

}  // namespace

TEST_CASE("the base graph") {
    const LabeledH h = build_h();
    CHECK(h.graph.num_vertices() == 10);
    CHECK(h.graph.num_edges() == 12);
    CHECK(h.graph.neighbors(LabeledH::z) == std::vector<int>{0, 3, 6});
    CHECK(std::ranges::count(h.labels, EdgeLabel::alpha) == 3);
    CHECK(std::ranges::count(h.labels, EdgeLabel::beta) == 6);
    CHECK(std::ranges::count(h.labels, EdgeLabel::gamma) == 3);
    CHECK(independent_pair_count(h.graph) == 48);
    for (int e = 0; e < 9; ++e) CHECK(h.is_red(e));
}

TEST_CASE("split graphs") {
    for (int k = 1; k <= 4; ++k) {
        const Graph g = build_hk(k);
        CHECK(g.num_vertices() == 9 * k + 1);
        CHECK(g.num_edges() == 9 * k * k + 3 * k);
        const PairClasses p = classify_pairs(k);
        CHECK(p.weak + p.strong == independent_pair_count(g));
        CHECK(p.adjacent + p.weak + p.strong == binom(g.num_edges(), 2));
        CHECK(p.strong == 27 * pow_int(k, 4) + 21 * pow_int(k, 3));
    }
    CHECK(build_hk(4).num_vertices() == 37);
    CHECK(build_hk(4).num_edges() == 156);
    CHECK_THROWS_AS(build_hk(0), std::invalid_argument);
}

TEST_CASE("twelve-vertex graphs") {
    for (int v = 1; v <= 3; ++v) {
        const Graph g = build_h16(v);
        CHECK(g.num_vertices() == 12);
        CHECK(g.num_edges() == 16);
        int max_degree = 0;
        for (int x = 0; x < 12; ++x) max_degree = std::max(max_degree, g.degree(x));
        CHECK(max_degree == (v == 3 ? 5 : 4));
        CHECK(twin_classes(g).non_singleton().size() == 2);
        CHECK(write_graph(build_w(v, WeightedVariant::w14)) == write_graph(build_w(1, WeightedVariant::w14)));
        CHECK(independent_pair_weight(build_w(v, WeightedVariant::w16)) > independent_pair_weight(build_w(v, WeightedVariant::w14)));
    }
    CHECK_THROWS_AS(build_h16(4), std::invalid_argument);
}

TEST_CASE("drawing of the split graphs") {
    for (int k = 1; k <= 4; ++k) {
        CAPTURE(k);
        const HkDrawingCheck c = check_hk_drawing(k, hk_drawing(k));
        CHECK(c.ok);
        CHECK(c.failure.empty());
        const Graph g = build_hk(k);
        const PairClasses p = classify_pairs(k);
        // every weak pair lies in a 4-cycle, so half of them is the most any drawing crosses
        CHECK(c.weak_crossings * 2 == p.weak);
        CHECK(c.strong_misses == 9 * pow_int(k, 3));
        CHECK(c.crossings == independent_pair_count(g) - p.weak / 2 - 9 * pow_int(k, 3));
        CHECK(count_straight_crossings(g, hk_drawing(k)) == c.crossings);
    }
    CHECK(independent_pair_count(build_h().graph) - count_straight_crossings(build_h().graph, hk_drawing(1)) == 9);
}

TEST_CASE("a broken drawing is reported") {
    PointDrawing d = hk_drawing(2);
    std::swap(d[0], d[5]);
    const HkDrawingCheck c = check_hk_drawing(2, d);
    CHECK_FALSE(c.ok);
    CHECK_FALSE(c.failure.empty());
}

TEST_CASE("convex strong loss table") {
    const std::vector<std::int64_t> expected{8, 10, 10, 10, 10, 10};
    std::int64_t previous = 0;
    for (int k = 1; k <= 6; ++k) {
        const LossReport r = min_convex_strong_loss(k);
        CHECK(r.min_strong_loss == expected[static_cast<std::size_t>(k - 1)]);
        CHECK(r.min_strong_loss >= previous);
        previous = r.min_strong_loss;
        CHECK(r.zero_red_min >= 10);
        CHECK(r.counterexample == (k >= 2));
        CHECK(r.min_strong_loss == k * r.witness_red_misses + r.witness_green_misses);
    }
    CHECK(strong_loss_profile().orders == 181440);
    // orders with red-red misses lose at least 3 of them
    for (std::size_t red = 1; red < 3; ++red) CHECK(strong_loss_profile().min_green[red] == -1);
}

TEST_CASE("strong loss agrees with a weighted convex search") {
    CHECK(min_convex_strong_loss(1).min_strong_loss == weighted_h_loss(1, 1));
    CHECK(min_convex_strong_loss(4).min_strong_loss == weighted_h_loss(2, Rational(1, 2)));
    CHECK(min_convex_strong_loss(9).min_strong_loss == weighted_h_loss(3, Rational(1, 3)));
}

TEST_CASE("verdicts for the split graphs") {
    const LossReport one = verify_hk(1);
    CHECK_FALSE(one.counterexample);
    CHECK(one.drawing_strong_loss == 9);
    const LossReport five = verify_hk(5, 0);
    CHECK(five.counterexample);
    CHECK(five.smallest_k == 2);
    const LossReport four = verify_hk(4);
    REQUIRE(four.drawing.has_value());
    CHECK(four.drawing->ok);
    CHECK(four.drawing_strong_loss == 9);
    CHECK(four.counterexample);
    CHECK(four.m == 10920);
}

TEST_CASE("twelve-vertex counterexamples") {
    const std::vector<std::int64_t> convex_opt{74, 74, 73};
    for (int v = 1; v <= 3; ++v) {
        CAPTURE(v);
        const H16Report r = verify_h16(v, v == 1, 2);
        CHECK(r.convex_loss >= 14);
        CHECK(r.convex_loss == 14);
        CHECK(r.convex_loss_raw == r.convex_loss + 2);
        CHECK(r.drawing_loss == 13);
        CHECK(r.drawing_twin_avoidances == 2);
        CHECK(r.counterexample);
        CHECK(r.convex_opt == convex_opt[static_cast<std::size_t>(v - 1)]);
        CHECK(convex_crossing_value(build_h16(v), r.convex_order) == r.convex_opt);
        CHECK(validate_drawing(build_h16(v), h16_drawing(v)).empty());
        if (v == 1) {
            REQUIRE(r.full_search_opt.has_value());
            CHECK(*r.full_search_opt == r.convex_opt);
        }
    }
}

TEST_CASE("avoidance lemmas over all convex orders of the base graph") {
    const LemmaReport r = check_avoidance_lemmas();
    CHECK(r.orders == 181440);
    CHECK(r.every_cycle_edge_avoids);
    CHECK(r.span_bound);
    CHECK(r.alpha_bound);
    CHECK(r.min_alpha_slack >= 0);
    CHECK_FALSE(r.first_failure.has_value());
}
