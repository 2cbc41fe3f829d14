#include "crossmax/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace crossmax {

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    }
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph spider_graph() {
    Graph g(7);
    for (int leg = 0; leg < 3; ++leg) {
        g.add_edge(0, 2 * leg + 1);
        g.add_edge(2 * leg + 1, 2 * leg + 2);
    }
    return g;
}

Graph triangular_prism() {
    Graph g(6);
    for (int i = 0; i < 3; ++i) {
        g.add_edge(i, (i + 1) % 3);
        g.add_edge(3 + i, 3 + (i + 1) % 3);
        g.add_edge(i, i + 3);
    }
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int shift = a.num_vertices();
    Graph g(shift + b.num_vertices());
    for (int e = 0; e < a.num_edges(); ++e) g.add_edge(a.edge(e).u, a.edge(e).v, a.weight(e));
    for (int e = 0; e < b.num_edges(); ++e) g.add_edge(b.edge(e).u + shift, b.edge(e).v + shift, b.weight(e));
    return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> index(static_cast<std::size_t>(g.num_vertices()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index.at(static_cast<std::size_t>(keep[i])) = static_cast<int>(i);
    Graph h(static_cast<int>(keep.size()));
    for (int e = 0; e < g.num_edges(); ++e) {
        const int u = index[static_cast<std::size_t>(g.edge(e).u)];
        const int v = index[static_cast<std::size_t>(g.edge(e).v)];
        if (u >= 0 && v >= 0) h.add_edge(u, v, g.weight(e));
    }
    return h;
}

Graph random_graph(int n, int p_percent, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 99);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng) < p_percent) g.add_edge(i, j);
        }
    }
    return g;
}

Graph random_tree(int n, std::uint64_t seed) {
    Graph g(n);
    if (n <= 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> prufer(static_cast<std::size_t>(n - 2));
    for (auto& x : prufer) x = pick(rng);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : prufer) ++degree[static_cast<std::size_t>(x)];
    for (int x : prufer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                g.add_edge(leaf, x);
                --degree[static_cast<std::size_t>(leaf)];
                --degree[static_cast<std::size_t>(x)];
                break;
            }
        }
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (u < 0) {
                u = v;
            } else {
                g.add_edge(u, v);
                break;
            }
        }
    }
    return g;
}

Graph random_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw GraphError("random_cubic needs an even n >= 4");
    std::mt19937_64 rng(seed);
    std::vector<int> points(static_cast<std::size_t>(3 * n));
    for (;;) {
        for (int i = 0; i < 3 * n; ++i) points[static_cast<std::size_t>(i)] = i / 3;
        std::shuffle(points.begin(), points.end(), rng);
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; i < points.size() && ok; i += 2) {
            int a = points[i];
            int b = points[i + 1];
            if (a == b) ok = false;
            if (a > b) std::swap(a, b);
            if (!seen.insert({a, b}).second) ok = false;
        }
        if (!ok) continue;
        Graph g(n);
        for (const auto& [a, b] : seen) g.add_edge(a, b);
        return g;
    }
}

}  // namespace crossmax
