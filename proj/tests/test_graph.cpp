#include "doctest.h"

#include <set>

#include "crossmax/generators.hpp"
#include "crossmax/graph.hpp"

using namespace crossmax;

namespace {

// Counts independent pairs straight from the edge list.
Rational pair_weight_oracle(const Graph& g) {
    Rational total = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        for (int f = e + 1; f < g.num_edges(); ++f) {
            const Edge a = g.edge(e);
            const Edge b = g.edge(f);
            std::set<int> ends{a.u, a.v, b.u, b.v};
            if (ends.size() == 4) total += g.weight(e) * g.weight(f);
        }
    }
    return total;
}

Rational cut_oracle(const Graph& g) {
    const int n = g.num_vertices();
    Rational best = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Rational v = 0;
        for (int e = 0; e < g.num_edges(); ++e) {
            if (((mask >> g.edge(e).u) & 1) != ((mask >> g.edge(e).v) & 1)) v += g.weight(e);
        }
        best = std::max(best, v);
    }
    return best;
}

ParseError::Kind parse_kind(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("no parse error for: " << text);
    return ParseError::Kind::malformed;
}

}  // namespace

TEST_CASE("independent pair counts of small families") {
    CHECK(independent_pair_count(cycle_graph(4)) == 2);
    CHECK(independent_pair_count(cycle_graph(5)) == 5);
    CHECK(independent_pair_count(complete_graph(4)) == 3);
    CHECK(independent_pair_count(complete_graph(5)) == 15);
    CHECK(independent_pair_count(spider_graph()) == 9);
    CHECK(independent_pair_count(star_graph(6)) == 0);
    CHECK(independent_pair_count(complete_bipartite(3, 3)) == 18);
}

TEST_CASE("weighted pair formula matches a direct scan") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph r = random_graph(9, 45, seed);
        Graph g(r.num_vertices());
        for (int e = 0; e < r.num_edges(); ++e) g.add_edge(r.edge(e).u, r.edge(e).v, Rational(1 + (e * 7 + static_cast<int>(seed)) % 5, 1 + e % 3));
        CHECK(independent_pair_weight(g) == pair_weight_oracle(g));
        CHECK(independent_pair_weight(r) == independent_pair_count(r));
    }
}

TEST_CASE("graph file round trip") {
    const std::string text = "# comment\n4 3\n0 1\n\n1 2 3/2\n2 3\n";
    Graph g = parse_graph(text);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    CHECK(g.weight(g.find_edge(1, 2)) == Rational(3, 2));
    Graph h = parse_graph(write_graph(g));
    CHECK(write_graph(h) == write_graph(g));
}

TEST_CASE("graph file errors") {
    CHECK(parse_kind("3 1\n0 0\n") == ParseError::Kind::self_loop);
    CHECK(parse_kind("3 2\n0 1\n1 0\n") == ParseError::Kind::duplicate_edge);
    CHECK(parse_kind("3 1\n0 3\n") == ParseError::Kind::vertex_out_of_range);
    CHECK(parse_kind("3 1\n0 1 -1\n") == ParseError::Kind::non_positive_weight);
    CHECK(parse_kind("3 1\n0 1 0\n") == ParseError::Kind::non_positive_weight);
    CHECK(parse_kind("3 2\n0 1\n") == ParseError::Kind::edge_count);
    CHECK(parse_kind("3 1\n0 x\n") == ParseError::Kind::malformed);
    CHECK(parse_kind("") == ParseError::Kind::malformed);
    try {
        parse_graph("3 1\n0 0\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("twin classes") {
    Graph k = complete_bipartite(2, 3);
    auto t = twin_classes(k);
    REQUIRE(t.size() == 2);
    CHECK(t.classes[0] == std::vector<int>{0, 1});
    CHECK(t.classes[1] == std::vector<int>{2, 3, 4});
    auto c = twin_classes(cycle_graph(4));
    REQUIRE(c.size() == 2);
    CHECK(c.classes[0] == std::vector<int>{0, 2});
    CHECK(twin_classes(cycle_graph(5)).non_singleton().size() == 0);
}

TEST_CASE("caterpillars") {
    CHECK(is_caterpillar(path_graph(6)));
    CHECK(is_caterpillar(star_graph(5)));
    CHECK_FALSE(is_caterpillar(spider_graph()));
    CHECK_THROWS_AS(is_caterpillar(cycle_graph(4)), GraphError);
    CHECK(is_tree(spider_graph()));
    CHECK_FALSE(is_tree(cycle_graph(3)));
}

TEST_CASE("colorings") {
    CHECK_FALSE(proper_coloring(cycle_graph(5), 2).has_value());
    auto c = proper_coloring(cycle_graph(5), 3);
    REQUIRE(c.has_value());
    CHECK(is_proper_coloring(cycle_graph(5), *c, 3));
    CHECK(*c == std::vector<int>{0, 1, 0, 1, 2});
    CHECK_FALSE(proper_coloring(complete_graph(4), 3).has_value());
    CHECK(bipartition(cycle_graph(6)).has_value());
    CHECK_FALSE(bipartition(cycle_graph(7)).has_value());
}

TEST_CASE("exact maxcut agrees with brute force") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_graph(10, 40, seed);
        CutResult r = maxcut_exact(g);
        CHECK(r.value == cut_oracle(g));
        CHECK(cut_value(g, r.side) == r.value);
        CHECK(r.side[0] == 0);
    }
    CHECK(maxcut_exact(cycle_graph(5)).value == 4);
    CHECK(maxcut_exact(complete_graph(4)).value == 4);
}

TEST_CASE("cubic graphs cut at least two thirds of the edges") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        for (int n : {4, 6, 8, 10, 12}) {
            Graph g = random_cubic(n, seed);
            for (int v = 0; v < n; ++v) REQUIRE(g.degree(v) == 3);
            CHECK(3 * maxcut_exact(g).value >= 2 * g.num_edges());
        }
    }
}

TEST_CASE("random trees are trees") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(is_tree(random_tree(9, seed)));
}

TEST_CASE("components") {
    Graph g = disjoint_union(cycle_graph(3), path_graph(2));
    CHECK_FALSE(is_connected(g));
    CHECK(connected_components(g) == std::vector<int>{0, 0, 0, 1, 1});
}
