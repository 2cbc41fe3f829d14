#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "crossmax/convex.hpp"
#include "crossmax/generators.hpp"

using namespace crossmax;

namespace {

// Straight geometric definition: positions on a circle, a pair crosses when
// exactly one endpoint of one chord lies strictly inside the other's arc.
Rational crossing_oracle(const Graph& g, const std::vector<int>& seq) {
    std::vector<int> pos(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) pos[static_cast<std::size_t>(seq[i])] = static_cast<int>(i);
    Rational total = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        for (int f = e + 1; f < g.num_edges(); ++f) {
            if (!g.independent(e, f)) continue;
            int a = pos[static_cast<std::size_t>(g.edge(e).u)];
            int b = pos[static_cast<std::size_t>(g.edge(e).v)];
            if (a > b) std::swap(a, b);
            const int c = pos[static_cast<std::size_t>(g.edge(f).u)];
            const int d = pos[static_cast<std::size_t>(g.edge(f).v)];
            const int inside = (a < c && c < b) + (a < d && d < b);
            if (inside == 1) total += g.weight(e) * g.weight(f);
        }
    }
    return total;
}

struct Oracle {
    Rational best = -1;
    std::vector<int> order;
    Rational sum = 0;
    Integer count = 0;
};

// All n! sequences; the first maximum among canonical ones is the expected answer.
Oracle all_permutations(const Graph& g) {
    Oracle o;
    std::vector<int> seq(static_cast<std::size_t>(g.num_vertices()));
    std::iota(seq.begin(), seq.end(), 0);
    do {
        const Rational v = crossing_oracle(g, seq);
        o.sum += v;
        ++o.count;
        const bool canonical = seq.size() < 3 || (seq[0] == 0 && seq[1] < seq.back());
        if (canonical && v > o.best) {
            o.best = v;
            o.order = seq;
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    return o;
}

Graph weighted_copy(const Graph& r, std::uint64_t seed) {
    Graph g(r.num_vertices());
    for (int e = 0; e < r.num_edges(); ++e) {
        g.add_edge(r.edge(e).u, r.edge(e).v, Rational(1 + static_cast<int>((e * 5 + seed) % 4), 1 + static_cast<int>((e + seed) % 3)));
    }
    return g;
}

}  // namespace

TEST_CASE("known convex optima") {
    CHECK(mccr_exact(cycle_graph(4)).value == 1);
    CHECK(mccr_exact(cycle_graph(5)).value == 5);
    CHECK(mccr_exact(complete_graph(4)).value == 1);
    CHECK(mccr_exact(complete_graph(5)).value == 5);
    CHECK(mccr_exact(complete_graph(6)).value == 15);
    CHECK(mccr_exact(spider_graph()).value == 8);
    CHECK(mccr_exact(path_graph(6)).value == independent_pair_count(path_graph(6)));
    ConvexResult c5 = mccr_exact(cycle_graph(5));
    CHECK(c5.order.str() == "0 2 4 1 3");
    CHECK(c5.loss == 0);
    CHECK(c5.optimal);
}

TEST_CASE("branch and bound matches the permutation oracle") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const int n = 4 + static_cast<int>(seed % 5);
        Graph g = random_graph(n, 55, seed);
        if (seed % 2 == 0) g = weighted_copy(g, seed);
        Oracle o = all_permutations(g);
        ConvexResult r = mccr_exact(g);
        CAPTURE(seed);
        CHECK(r.value == o.best);
        CHECK(r.order.sequence() == o.order);
        CHECK(r.loss == independent_pair_weight(g) - r.value);
        ConvexResult e = mccr_enumerate(g);
        CHECK(e.value == o.best);
        CHECK(e.order == r.order);
        // uniform random order crosses each independent pair with probability 1/3
        CHECK(o.sum * 3 == independent_pair_weight(g) * Rational(o.count));
    }
}

TEST_CASE("thread count does not change the answer") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Graph g = random_graph(10, 50, seed);
        ConvexResult a = mccr_exact(g, {.threads = 1});
        ConvexResult b = mccr_exact(g, {.threads = 4});
        CHECK(a.value == b.value);
        CHECK(a.order == b.order);
    }
}

TEST_CASE("size limit and timeout") {
    CHECK_THROWS_AS(mccr_exact(cycle_graph(14)), SizeLimitError);
    Graph w = weighted_copy(cycle_graph(12), 1);
    CHECK_THROWS_AS(mccr_exact(w), SizeLimitError);
    ConvexResult r = mccr_exact(random_graph(16, 50, 3), {.unbounded = true, .timeout_ms = 50});
    CHECK_FALSE(r.optimal);
    CHECK(r.order.is_permutation_of(16));
    CHECK(r.value == convex_crossing_value(random_graph(16, 50, 3), r.order));
}

TEST_CASE("symmetric images have equal value") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_graph(7, 60, seed);
        std::vector<int> seq(7);
        std::iota(seq.begin(), seq.end(), 0);
        std::rotate(seq.begin(), seq.begin() + static_cast<long>(seed % 7), seq.end());
        std::swap(seq[1], seq[4]);
        CircularOrder o(seq);
        const Rational v = convex_crossing_value(g, o);
        CHECK(v == crossing_oracle(g, seq));
        for (int s = 0; s < 7; ++s) {
            CHECK(convex_crossing_value(g, o.rotated(s)) == v);
            CHECK(convex_crossing_value(g, o.rotated(s).reflected()) == v);
        }
        CHECK(o.canonical().is_canonical());
        CHECK(convex_crossing_value(g, o.canonical()) == v);
    }
}

TEST_CASE("canonical enumeration counts") {
    for (int n = 3; n <= 8; ++n) {
        std::uint64_t count = 0;
        for_each_canonical_order(n, [&](std::span<const int>) {
            ++count;
            return true;
        });
        std::uint64_t expected = 1;
        for (int i = 3; i < n; ++i) expected *= static_cast<std::uint64_t>(i);
        CHECK(count == expected);
    }
}

TEST_CASE("order validation") {
    CHECK_THROWS_AS(convex_crossing_value(cycle_graph(4), CircularOrder({0, 1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(convex_crossing_value(cycle_graph(4), CircularOrder({0, 1, 1, 2})), std::invalid_argument);
    CHECK(parse_order("0 2 4 1 3\n").str() == "0 2 4 1 3");
    CHECK_THROWS_AS(parse_order("0 a"), std::invalid_argument);
}

TEST_CASE("lower bound constructions") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = random_graph(9, 50, seed);
        if (seed % 3 == 0) g = weighted_copy(g, seed);
        const Rational m = independent_pair_weight(g);
        ConvexResult greedy = greedy_derandomized(g);
        ConvexResult exact = mccr_exact(g);
        CAPTURE(seed);
        CHECK(3 * greedy.value >= m);
        CHECK(greedy.value <= exact.value);
        CHECK(exact.value <= m);
        CHECK(greedy.value == convex_crossing_value(g, greedy.order));
        if (auto col = proper_coloring(g, 3)) {
            ConvexResult tc = threecolor_lower_bound(g, *col);
            CHECK(2 * tc.value >= m);
            CHECK(tc.value <= exact.value);
        }
        RandomEstimate est = estimate_random(g, 200, seed);
        CHECK(est.best.value <= exact.value);
        CHECK(est.mean <= Rational(est.best.value));
    }
}

TEST_CASE("arc placement averages half of the pairs") {
    // mean over every within-class arrangement of the three arcs
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = random_graph(7, 50, seed);
        auto col = proper_coloring(g, 3);
        if (!col) continue;
        auto classes = color_classes(*col, 3);
        Rational sum = 0;
        Integer count = 0;
        auto a = classes[0];
        do {
            auto b = classes[1];
            do {
                auto c = classes[2];
                do {
                    sum += convex_crossing_value(g, arc_order({a, b, c}));
                    ++count;
                } while (std::next_permutation(c.begin(), c.end()));
            } while (std::next_permutation(b.begin(), b.end()));
        } while (std::next_permutation(a.begin(), a.end()));
        CHECK(2 * sum == independent_pair_weight(g) * Rational(count));
    }
}

TEST_CASE("twin contraction is exact") {
    int tested = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = random_graph(5, 60, seed);
        // add twins of vertex 0 and vertex 1 when they are not adjacent
        std::vector<int> twins_of;
        for (int v : {0, 1}) {
            bool clash = false;
            for (int t : twins_of) clash |= g.has_edge(t, v) || g.neighbors(v).empty();
            for (int t : twins_of)
                for (int x : g.neighbors(v)) clash |= g.neighbors(t) == g.neighbors(x) || std::ranges::count(g.neighbors(t), x) || x == t;
            if (!clash && !g.neighbors(v).empty()) twins_of.push_back(v);
        }
        if (twins_of.empty()) continue;
        const int extra = static_cast<int>(twins_of.size());
        Graph h(g.num_vertices() + extra);
        for (int e = 0; e < g.num_edges(); ++e) h.add_edge(g.edge(e).u, g.edge(e).v);
        for (int i = 0; i < extra; ++i) {
            for (int x : g.neighbors(twins_of[static_cast<std::size_t>(i)])) h.add_edge(x, g.num_vertices() + i);
        }
        TwinPartition part;
        for (int i = 0; i < extra; ++i) part.classes.push_back({twins_of[static_cast<std::size_t>(i)], g.num_vertices() + i});
        ContractedInstance ci;
        try {
            ci = contract_twins(h, part);
        } catch (const ContractionError&) {
            continue;
        }
        CAPTURE(seed);
        ConvexResult small = mccr_exact(ci.graph);
        ConvexResult full = mccr_exact(h);
        CHECK(small.value + ci.constant == full.value);
        CHECK(convex_crossing_value(h, ci.expand(small.order)) == full.value);
        ++tested;
    }
    CHECK(tested >= 5);
}

TEST_CASE("contraction preconditions") {
    Graph k = complete_bipartite(2, 3);
    CHECK_THROWS_AS(contract_twins(k, twin_classes(k)), ContractionError);
    TwinPartition bad;
    bad.classes = {{0, 2}};
    CHECK_THROWS_AS(contract_twins(k, bad), ContractionError);
    TwinPartition one;
    one.classes = {{2, 3, 4}};
    ContractedInstance ci = contract_twins(k, one);
    CHECK(ci.graph.num_vertices() == 3);
    CHECK(ci.constant == 3);
    CHECK(ci.graph.weight(0) == 3);
    CHECK(mccr_exact(ci.graph).value + ci.constant == mccr_exact(k).value);
}
