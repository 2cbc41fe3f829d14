// Acceptance suite: one line per criterion with its wall-clock budget.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "crossmax/bipartite.hpp"
#include "crossmax/convex.hpp"
#include "crossmax/counterexample.hpp"
#include "crossmax/generators.hpp"
#include "crossmax/reductions.hpp"

using namespace crossmax;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = "FAILED: " + what;
        }
    }
};

std::string str(const Rational& r) { return to_string(r); }

// Every labelled graph on n vertices, by edge bitmask over pairs (i<j).
void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        Graph g(n);
        for (std::size_t b = 0; b < slots.size(); ++b) {
            if (mask >> b & 1u) g.add_edge(slots[b].first, slots[b].second);
        }
        visit(g);
    }
}

// Alternating independent pairs, with integer arithmetic only.
std::int64_t alternating_pairs(const Graph& g, const std::vector<int>& seq) {
    std::vector<int> pos(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) pos[static_cast<std::size_t>(seq[i])] = static_cast<int>(i);
    std::int64_t c = 0;
    const auto& es = g.edges();
    for (std::size_t a = 0; a < es.size(); ++a) {
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            const Edge& e = es[a];
            const Edge& f = es[b];
            if (e.touches(f.u) || e.touches(f.v)) continue;
            int x = pos[static_cast<std::size_t>(e.u)], y = pos[static_cast<std::size_t>(e.v)];
            if (x > y) std::swap(x, y);
            const int p = pos[static_cast<std::size_t>(f.u)], q = pos[static_cast<std::size_t>(f.v)];
            if ((x < p && p < y) != (x < q && q < y)) ++c;
        }
    }
    return c;
}

Outcome closed_forms() {
    Outcome o;
    auto odd_cycle = [](int n) { return n * (n - 3) / 2; };
    o.expect(mccr_exact(cycle_graph(4)).value == 1, "mccr(C4) = 1");
    o.expect(mccr_exact(cycle_graph(5)).value == odd_cycle(5), "mccr(C5) = 5");
    for (int n = 4; n <= 6; ++n) {
        o.expect(mccr_exact(complete_graph(n)).value == binom(n, 4), "mccr(K" + std::to_string(n) + ") = binom(n,4)");
    }
    o.expect(mcr_exact_tiny(cycle_graph(4)).value == 1, "mcr(C4) = 1");
    o.expect(mcr_exact_tiny(cycle_graph(5)).value == 5, "mcr(C5) = 5");
    if (o.ok) o.detail = "C4 1, C5 5, K4 1, K5 5, K6 15; mcr C4 1, C5 5";
    return o;
}

Outcome inequality_chain() {
    Outcome o;
    int bip = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const int n = 3 + static_cast<int>(seed % 5);
        const Graph g = random_graph(n, 25 + static_cast<int>(seed * 7 % 60), seed);
        const Rational m = independent_pair_weight(g);
        const Rational v = mccr_exact(g).value;
        o.expect(m / 3 <= v && v <= m, "M/3 <= mccr <= M on seed " + std::to_string(seed));
        if (bipartition(g)) {
            const Rational bcr = bcr_exact(g).value;
            o.expect(m / 2 <= m - bcr && m - bcr <= v, "M/2 <= M - bcr <= mccr on seed " + std::to_string(seed));
            ++bip;
        }
    }
    if (o.ok) o.detail = "200 graphs, " + std::to_string(bip) + " bipartite";
    return o;
}

Outcome reversal_bijection() {
    Outcome o;
    std::int64_t drawings = 0;
    int graphs = 0;
    for (int n = 2; n <= 6; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            const auto side = bipartition(g);
            if (!side || !o.ok) return;
            std::vector<int> top, bottom;
            for (int v = 0; v < n; ++v) ((*side)[static_cast<std::size_t>(v)] ? bottom : top).push_back(v);
            const Rational m = independent_pair_weight(g);
            Rational best = 0;
            do {
                do {
                    const TwoLayerDrawing d{top, bottom};
                    const Rational c = two_layer_crossings(g, d) + two_layer_crossings(g, reversed_bottom(d));
                    o.expect(c == m, "crossings(d) + crossings(reversed d) = M for " + write_graph(g));
                    best = std::max(best, convex_crossing_value(g, separated_order(d)));
                    ++drawings;
                } while (std::next_permutation(bottom.begin(), bottom.end()));
            } while (std::next_permutation(top.begin(), top.end()));
            o.expect(best == m - bcr_exact(g).value, "max separated convex = M - bcr for " + write_graph(g));
            o.expect(max_separated_convex(g).value == best, "max_separated_convex agrees for " + write_graph(g));
            ++graphs;
        });
    }
    if (o.ok) o.detail = std::to_string(graphs) + " bipartite graphs, " + std::to_string(drawings) + " drawings";
    return o;
}

Outcome exhaustive_means() {
    Outcome o;
    int graphs = 0, colored = 0;
    for (int n = 3; n <= 6; ++n) {
        std::vector<std::vector<int>> orders;
        for_each_canonical_order(n, [&](std::span<const int> s) {
            orders.emplace_back(s.begin(), s.end());
            return true;
        });
        for_each_graph(n, [&](const Graph& g) {
            if (!o.ok) return;
            const std::int64_t m = independent_pair_count(g);
            std::int64_t sum = 0;
            for (const auto& seq : orders) sum += alternating_pairs(g, seq);
            o.expect(3 * sum == m * static_cast<std::int64_t>(orders.size()), "mean = M/3 for " + write_graph(g));
            ++graphs;
            const auto coloring = proper_coloring(g, 3);
            if (!coloring) return;
            auto classes = color_classes(*coloring, 3);
            std::int64_t arc_sum = 0, combos = 0;
            for (auto& c : classes) std::sort(c.begin(), c.end());
            // odometer over the permutations of the three classes
            auto& a = classes[0];
            auto& b = classes[1];
            auto& c = classes[2];
            do {
                do {
                    do {
                        arc_sum += alternating_pairs(g, arc_order(classes).sequence());
                        ++combos;
                    } while (std::next_permutation(c.begin(), c.end()));
                } while (std::next_permutation(b.begin(), b.end()));
            } while (std::next_permutation(a.begin(), a.end()));
            o.expect(2 * arc_sum == m * combos, "arc mean = M/2 for " + write_graph(g));
            ++colored;
        });
    }
    if (o.ok) o.detail = std::to_string(graphs) + " graphs, " + std::to_string(colored) + " 3-colored";
    return o;
}

Outcome twin_contraction() {
    Outcome o;
    std::mt19937_64 rng(2024);
    int done = 0;
    std::uint64_t seed = 0;
    while (done < 100 && o.ok) {
        ++seed;
        const int n0 = 4 + static_cast<int>(seed % 3);
        const Graph base = random_graph(n0, 55, seed);
        // blow up an independent set of non-isolated vertices
        std::vector<int> chosen;
        std::vector<int> perm(static_cast<std::size_t>(n0));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        int size = n0;
        std::vector<int> extra;
        for (int v : perm) {
            if (base.degree(v) == 0) continue;
            bool ok = true;
            for (int u : chosen) ok = ok && !base.has_edge(u, v);
            const int add = 1 + static_cast<int>(rng() % 2);
            if (!ok || size + add > 9) continue;
            chosen.push_back(v);
            extra.push_back(add);
            size += add;
        }
        if (chosen.empty()) continue;
        Graph g(size);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        TwinPartition part;
        int next = n0;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            part.classes.push_back({chosen[i]});
            for (int j = 0; j < extra[i]; ++j, ++next) {
                for (int x : base.neighbors(chosen[i])) g.add_edge(x, next);
                part.classes.back().push_back(next);
            }
        }
        const ContractedInstance c = contract_twins(g, part);
        const Rational full = mccr_exact(g).value;
        const Rational small = mccr_exact(c.graph).value;
        o.expect(full == small + c.constant, "contraction identity on seed " + std::to_string(seed));
        ++done;
    }
    if (o.ok) o.detail = std::to_string(done) + " instances";
    return o;
}

Outcome h16() {
    Outcome o;
    const Rational fixture[] = {74, 74, 73};
    std::string detail;
    for (int v = 1; v <= 3; ++v) {
        const H16Report r = verify_h16(v, v == 1, 4);
        const std::string tag = "variant " + std::to_string(v);
        o.expect(r.convex_loss >= 14, tag + " convex loss >= 14");
        o.expect(r.drawing_loss == 13, tag + " drawing loss = 13");
        o.expect(r.counterexample, tag + " counterexample");
        o.expect(r.convex_opt == fixture[v - 1], tag + " convex optimum fixture");
        if (r.full_search_opt) o.expect(*r.full_search_opt == r.convex_opt, tag + " uncontracted search agrees");
        detail += (v > 1 ? "; " : "") + tag + ": opt " + str(r.convex_opt) + " loss " + str(r.convex_loss) + " vs " + str(r.drawing_loss);
    }
    if (o.ok) o.detail = detail;
    return o;
}

Outcome hk() {
    Outcome o;
    const std::int64_t expected[] = {8, 10, 10, 10, 10, 10};
    std::string losses;
    int smallest = 0;
    for (int k = 1; k <= 6; ++k) {
        const LossReport r = verify_hk(k, 4);
        losses += (k > 1 ? " " : "") + std::to_string(r.min_strong_loss);
        o.expect(r.min_strong_loss == expected[k - 1], "min strong loss for k=" + std::to_string(k));
        o.expect(r.zero_red_min >= 10, "zero-red minimum >= 10 for k=" + std::to_string(k));
        if (k <= 4) {
            o.expect(r.drawing && r.drawing->ok, "drawing properties for k=" + std::to_string(k) + (r.drawing ? ": " + r.drawing->failure : ""));
        }
        if (k == 5) o.expect(r.counterexample, "counterexample at k=5");
        smallest = r.smallest_k;
    }
    o.expect(smallest == 2, "smallest counterexample k = 2");
    if (o.ok) o.detail = "min strong loss " + losses + ", smallest k " + std::to_string(smallest);
    return o;
}

Outcome lemmas() {
    Outcome o;
    const LemmaReport r = check_avoidance_lemmas();
    o.expect(r.orders == 181440, "181440 canonical orders");
    o.expect(r.every_cycle_edge_avoids, "cycle edge avoidance");
    o.expect(r.span_bound, "span bound");
    o.expect(r.alpha_bound, "alpha bound");
    if (o.ok) o.detail = std::to_string(r.orders) + " orders, min alpha slack " + std::to_string(r.min_alpha_slack);
    return o;
}

Outcome star() {
    Outcome o;
    std::vector<std::pair<std::string, Graph>> cases = {
        {"K4", complete_graph(4)}, {"prism", triangular_prism()}, {"K3,3", complete_bipartite(3, 3)}};
    const int sizes[] = {4, 6, 6, 8, 8};
    for (int i = 0; i < 5; ++i) cases.emplace_back("cubic#" + std::to_string(i + 1), random_cubic(sizes[i], 100 + static_cast<std::uint64_t>(i)));
    std::string detail;
    for (const auto& [name, g] : cases) {
        const ReductionReport r = verify_star_reduction(g, 8, 4);
        o.expect(r.match && r.sandwich, name + " recovered " + r.recovered_mcut.str() + " vs " + str(r.reference_mcut));
        detail += (detail.empty() ? "" : ", ") + name + " " + r.recovered_mcut.str();
    }
    o.expect(verify_star_reduction(complete_graph(4)).recovered_mcut == 4, "K4 -> 4");
    o.expect(verify_star_reduction(triangular_prism()).recovered_mcut == 7, "prism -> 7");
    o.expect(verify_star_reduction(complete_bipartite(3, 3)).recovered_mcut == 9, "K3,3 -> 9");
    if (o.ok) o.detail = detail;
    return o;
}

Outcome triangle() {
    Outcome o;
    const TriangleBounds b = triangle_bounds(complete_graph(4));
    o.expect(b.t == 18, "t = 18");
    o.expect(b.lower == 288, "lower = 288");
    o.expect(b.upper == 306, "upper = 306");
    o.expect(b.recovery, "recovery over [288, 306)");
    for (int w = 288; w < 306; ++w) o.expect(w / 18 - 12 == 4, "floor(W/18) - 12 = 4 at " + std::to_string(w));
    if (o.ok) o.detail = "t 18, [288, 306), mcut 4";
    return o;
}

Outcome harborth() {
    Outcome o;
    std::string detail;
    for (int k = 1; k <= 4; ++k) {
        const Rational count = tripartite_block_value(k);
        o.expect(count == harborth_formula(k), "block count = closed form for k=" + std::to_string(k));
        detail += (k > 1 ? " " : "") + str(count);
    }
    // the closed form itself, term by term
    o.expect(binom(12, 4) - 3 * binom(4, 4) - 6 * 4 * binom(4, 3) == 396, "closed form at k=4 is 396");
    for (int k = 1; k <= 3; ++k) o.expect(verify_tripartite_4cycles(k), "4-cycles crossed for k=" + std::to_string(k));
    if (o.ok) o.detail = "counts " + detail + "; 4-cycles crossed for k <= 3";
    return o;
}

Outcome schemes() {
    Outcome o;
    const Graph c5 = cycle_graph(5);
    CrossingScheme full;
    full.graph = c5;
    for (int e = 0; e < 5; ++e)
        for (int f = e + 1; f < 5; ++f)
            if (c5.independent(e, f)) full.crossings.emplace_back(e, f);
    o.expect(full.crossings.size() == 5 && scheme_feasible(full, SchemeMode::exact).feasible, "C5 thrackle feasible");
    const Graph c4 = cycle_graph(4);
    CrossingScheme both;
    both.graph = c4;
    both.crossings = {{0, 2}, {1, 3}};
    const SchemeVerdict v = scheme_feasible(both, SchemeMode::exact);
    o.expect(!v.feasible, "C4 double crossing infeasible");
    if (o.ok) o.detail = "C5 feasible; C4 infeasible after " + std::to_string(v.orders_tried) + " order choices, " + std::to_string(v.embeddings_tried) + " rotation systems";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "closed-form sanity", 1, closed_forms},
        {2, "inequality chain", 60, inequality_chain},
        {3, "reversal bijection", 60, reversal_bijection},
        {4, "exhaustive means", 60, exhaustive_means},
        {5, "twin contraction", 120, twin_contraction},
        {6, "H16 counterexample", 300, h16},
        {7, "H(k) strong loss", 60, hk},
        {8, "avoidance lemmas", 60, lemmas},
        {9, "star reduction", 120, star},
        {10, "triangle bounds", 1, triangle},
        {11, "tripartite count", 1, harborth},
        {12, "scheme feasibility", 60, schemes},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = s <= c.limit_s;
        if (!in_time && o.ok) o.detail += " (over time budget)";
        const bool pass = o.ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s %2d %-20s %8.2fs / %4.0fs  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, s, c.limit_s, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures;
}
