#include "crossmax/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace crossmax {

void check_two_layer(const Graph& g, const TwoLayerDrawing& d) {
    const int n = g.num_vertices();
    std::vector<int> line(static_cast<std::size_t>(n), -1);
    auto mark = [&](const std::vector<int>& seq, int id) {
        for (int v : seq) {
            if (v < 0 || v >= n) throw BipartiteError("two-layer drawing: vertex " + std::to_string(v) + " out of range");
            if (line[static_cast<std::size_t>(v)] >= 0) throw BipartiteError("two-layer drawing: vertex " + std::to_string(v) + " repeated");
            line[static_cast<std::size_t>(v)] = id;
        }
    };
    mark(d.top, 0);
    mark(d.bottom, 1);
    for (int v = 0; v < n; ++v) {
        if (line[static_cast<std::size_t>(v)] < 0) throw BipartiteError("two-layer drawing: vertex " + std::to_string(v) + " missing");
    }
    for (const Edge& e : g.edges()) {
        if (line[static_cast<std::size_t>(e.u)] == line[static_cast<std::size_t>(e.v)]) {
            throw BipartiteError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " does not join the two lines");
        }
    }
}

Rational two_layer_crossings(const Graph& g, const TwoLayerDrawing& d) {
    check_two_layer(g, d);
    std::vector<int> pos(static_cast<std::size_t>(g.num_vertices()));
    std::vector<bool> on_top(static_cast<std::size_t>(g.num_vertices()));
    for (std::size_t i = 0; i < d.top.size(); ++i) {
        pos[static_cast<std::size_t>(d.top[i])] = static_cast<int>(i);
        on_top[static_cast<std::size_t>(d.top[i])] = true;
    }
    for (std::size_t i = 0; i < d.bottom.size(); ++i) pos[static_cast<std::size_t>(d.bottom[i])] = static_cast<int>(i);
    auto ends = [&](const Edge& e) {
        return on_top[static_cast<std::size_t>(e.u)] ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
    };
    Rational total = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto [t1, b1] = ends(g.edge(e));
        for (int f = e + 1; f < g.num_edges(); ++f) {
            if (!g.independent(e, f)) continue;
            const auto [t2, b2] = ends(g.edge(f));
            const bool top_before = pos[static_cast<std::size_t>(t1)] < pos[static_cast<std::size_t>(t2)];
            const bool bottom_before = pos[static_cast<std::size_t>(b1)] < pos[static_cast<std::size_t>(b2)];
            if (top_before != bottom_before) total += g.weight(e) * g.weight(f);
        }
    }
    return total;
}

CircularOrder separated_order(const TwoLayerDrawing& d) {
    std::vector<int> seq = d.top;
    seq.insert(seq.end(), d.bottom.rbegin(), d.bottom.rend());
    return CircularOrder(std::move(seq));
}

TwoLayerDrawing reversed_bottom(const TwoLayerDrawing& d) {
    return {d.top, std::vector<int>(d.bottom.rbegin(), d.bottom.rend())};
}

namespace {

std::vector<int> require_bipartite(const Graph& g) {
    auto colors = bipartition(g);
    if (!colors) throw BipartiteError("graph is not bipartite");
    return *colors;
}

// Orders `free` optimally against the fixed positions of the other line.
// cost[i][j]: crossing weight contributed by free[i] placed before free[j].
class BottomDp {
public:
    BottomDp(const Graph& g, const std::vector<int>& free, const std::vector<int>& fixed_pos) : k_(static_cast<int>(free.size())) {
        cost_.assign(static_cast<std::size_t>(k_ * k_), 0);
        for (int i = 0; i < k_; ++i) {
            for (int j = 0; j < k_; ++j) {
                if (i == j) continue;
                Rational c = 0;
                const int a = free[static_cast<std::size_t>(i)];
                const int b = free[static_cast<std::size_t>(j)];
                for (std::size_t x = 0; x < g.neighbors(a).size(); ++x) {
                    const int na = g.neighbors(a)[x];
                    for (std::size_t y = 0; y < g.neighbors(b).size(); ++y) {
                        const int nb = g.neighbors(b)[y];
                        if (na == nb) continue;
                        if (fixed_pos[static_cast<std::size_t>(na)] > fixed_pos[static_cast<std::size_t>(nb)]) {
                            c += g.weight(g.incident_edges(a)[x]) * g.weight(g.incident_edges(b)[y]);
                        }
                    }
                }
                cost_[static_cast<std::size_t>(i * k_ + j)] = c;
            }
        }
    }

    /// Minimum cost and the lexicographically smallest order (as indices into free) achieving it.
    std::pair<Rational, std::vector<int>> solve() const {
        const std::size_t full = (std::size_t{1} << k_) - 1;
        // rest[S]: minimum cost of ordering the complement of S after the prefix S
        std::vector<Rational> rest(full + 1);
        for (std::size_t s = full; s-- > 0;) {
            bool first = true;
            for (int v = 0; v < k_; ++v) {
                if (s >> v & 1) continue;
                const Rational c = step(s, v) + rest[s | (std::size_t{1} << v)];
                if (first || c < rest[s]) rest[s] = c;
                first = false;
            }
        }
        std::vector<int> order;
        std::size_t s = 0;
        while (s != full) {
            for (int v = 0; v < k_; ++v) {
                if (s >> v & 1) continue;
                if (step(s, v) + rest[s | (std::size_t{1} << v)] == rest[s]) {
                    order.push_back(v);
                    s |= std::size_t{1} << v;
                    break;
                }
            }
        }
        return {rest[0], order};
    }

private:
    Rational step(std::size_t prefix, int v) const {
        Rational c = 0;
        for (int u = 0; u < k_; ++u) {
            if (prefix >> u & 1) c += cost_[static_cast<std::size_t>(u * k_ + v)];
        }
        return c;
    }

    int k_;
    std::vector<Rational> cost_;
};

}  // namespace

LayerResult bcr_exact(const Graph& g, int max_side) {
    const auto colors = require_bipartite(g);
    const auto comp = connected_components(g);
    const int n = g.num_vertices();
    int ncomp = 0;
    for (int c : comp) ncomp = std::max(ncomp, c + 1);
    // components with edges beyond the first can be flipped
    std::vector<int> flippable;
    std::vector<bool> has_edge(static_cast<std::size_t>(ncomp));
    for (const Edge& e : g.edges()) has_edge[static_cast<std::size_t>(comp[static_cast<std::size_t>(e.u)])] = true;
    for (int c = 0; c < ncomp; ++c) {
        if (has_edge[static_cast<std::size_t>(c)]) flippable.push_back(c);
    }
    if (!flippable.empty()) flippable.erase(flippable.begin());
    if (flippable.size() > 16) throw SizeLimitError("bcr_exact: too many components");

    bool found = false;
    LayerResult best;
    for (std::uint32_t mask = 0; mask < (1u << flippable.size()); ++mask) {
        std::vector<bool> flip(static_cast<std::size_t>(ncomp));
        for (std::size_t i = 0; i < flippable.size(); ++i) flip[static_cast<std::size_t>(flippable[i])] = (mask >> i) & 1;
        TwoLayerDrawing d;
        for (int v = 0; v < n; ++v) {
            const bool top = (colors[static_cast<std::size_t>(v)] == 0) != flip[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
            (top ? d.top : d.bottom).push_back(v);
        }
        if (static_cast<int>(d.top.size()) > max_side || static_cast<int>(d.bottom.size()) > max_side) {
            throw SizeLimitError("bcr_exact: a side exceeds " + std::to_string(max_side) + " vertices");
        }
        // enumerate the smaller line, optimize the other
        const bool enumerate_top = d.top.size() <= d.bottom.size();
        std::vector<int> perm = enumerate_top ? d.top : d.bottom;
        const std::vector<int>& free = enumerate_top ? d.bottom : d.top;
        std::vector<int> pos(static_cast<std::size_t>(n));
        do {
            for (std::size_t i = 0; i < perm.size(); ++i) pos[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
            auto [value, idx] = BottomDp(g, free, pos).solve();
            if (!found || value < best.value) {
                found = true;
                std::vector<int> other;
                for (int i : idx) other.push_back(free[static_cast<std::size_t>(i)]);
                best.value = value;
                best.drawing = enumerate_top ? TwoLayerDrawing{perm, other} : TwoLayerDrawing{other, perm};
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return best;
}

LayerResult max_separated_convex(const Graph& g, int max_side) {
    LayerResult b = bcr_exact(g, max_side);
    LayerResult out{independent_pair_weight(g) - b.value, reversed_bottom(b.drawing)};
    if (two_layer_crossings(g, out.drawing) != out.value) throw std::logic_error("max_separated_convex: reversal mismatch");
    return out;
}

LayerResult one_sided_exact(const Graph& g, const std::vector<int>& top, int max_side) {
    require_bipartite(g);
    std::vector<bool> is_top(static_cast<std::size_t>(g.num_vertices()));
    for (int v : top) is_top.at(static_cast<std::size_t>(v)) = true;
    std::vector<int> bottom;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!is_top[static_cast<std::size_t>(v)]) bottom.push_back(v);
    }
    if (static_cast<int>(bottom.size()) > max_side) throw SizeLimitError("one_sided_exact: free side too large");
    check_two_layer(g, {top, bottom});
    LayerResult best;
    bool found = false;
    do {
        TwoLayerDrawing d{top, bottom};
        Rational v = two_layer_crossings(g, d);
        if (!found || v < best.value) {
            found = true;
            best = {v, d};
        }
    } while (std::next_permutation(bottom.begin(), bottom.end()));
    return best;
}

TwoLayerDrawing median_heuristic(const Graph& g, const std::vector<int>& top) {
    require_bipartite(g);
    const int n = g.num_vertices();
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < top.size(); ++i) pos.at(static_cast<std::size_t>(top[i])) = static_cast<int>(i);
    struct Key {
        int median;
        int even;
        int id;
        auto operator<=>(const Key&) const = default;
    };
    std::vector<Key> keys;
    for (int v = 0; v < n; ++v) {
        if (pos[static_cast<std::size_t>(v)] >= 0) continue;
        std::vector<int> p;
        for (int x : g.neighbors(v)) p.push_back(pos[static_cast<std::size_t>(x)]);
        std::sort(p.begin(), p.end());
        const int median = p.empty() ? std::numeric_limits<int>::max() : p[(p.size() - 1) / 2];
        keys.push_back({median, static_cast<int>(p.size() % 2 == 0), v});
    }
    std::sort(keys.begin(), keys.end());
    TwoLayerDrawing d{top, {}};
    for (const Key& k : keys) d.bottom.push_back(k.id);
    check_two_layer(g, d);
    return d;
}

TwoLayerDrawing parse_two_layer(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string top_line;
    std::string bottom_line;
    std::getline(in, top_line);
    std::getline(in, bottom_line);
    return {parse_order(top_line).sequence(), parse_order(bottom_line).sequence()};
}

}  // namespace crossmax
