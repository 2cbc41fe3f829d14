#include "crossmax/convex.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace crossmax {

// ---------------------------------------------------------------------------
// CircularOrder

bool CircularOrder::is_permutation_of(int n) const {
    if (size() != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n));
    for (int v : seq_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

std::vector<int> CircularOrder::positions() const {
    std::vector<int> pos(seq_.size(), -1);
    for (std::size_t i = 0; i < seq_.size(); ++i) pos.at(static_cast<std::size_t>(seq_[i])) = static_cast<int>(i);
    return pos;
}

CircularOrder CircularOrder::rotated(int shift) const {
    if (seq_.empty()) return *this;
    const int n = size();
    shift = ((shift % n) + n) % n;
    std::vector<int> out(seq_.size());
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = seq_[static_cast<std::size_t>((i + shift) % n)];
    return CircularOrder(std::move(out));
}

CircularOrder CircularOrder::reflected() const {
    if (seq_.empty()) return *this;
    std::vector<int> out;
    out.reserve(seq_.size());
    out.push_back(seq_[0]);
    for (std::size_t i = seq_.size() - 1; i >= 1; --i) out.push_back(seq_[i]);
    return CircularOrder(std::move(out));
}

CircularOrder CircularOrder::canonical() const {
    if (seq_.empty()) return *this;
    const auto first = std::min_element(seq_.begin(), seq_.end()) - seq_.begin();
    CircularOrder r = rotated(static_cast<int>(first));
    if (r.size() >= 3 && r.seq_[1] > r.seq_.back()) r = r.reflected();
    return r;
}

std::string CircularOrder::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < seq_.size(); ++i) out << (i ? " " : "") << seq_[i];
    return out.str();
}

CircularOrder parse_order(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<int> seq;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw std::invalid_argument("order file: bad vertex id '" + tok + "'");
        seq.push_back(v);
    }
    return CircularOrder(std::move(seq));
}

CircularOrder arc_order(const std::vector<std::vector<int>>& arcs) {
    std::vector<int> seq;
    for (const auto& arc : arcs) seq.insert(seq.end(), arc.begin(), arc.end());
    return CircularOrder(std::move(seq));
}

std::vector<std::vector<int>> color_classes(const std::vector<int>& coloring, int colors) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(colors));
    for (std::size_t v = 0; v < coloring.size(); ++v) out.at(static_cast<std::size_t>(coloring[v])).push_back(static_cast<int>(v));
    return out;
}

// ---------------------------------------------------------------------------
// Counting

namespace {

void require_permutation(const Graph& g, const CircularOrder& order) {
    if (!order.is_permutation_of(g.num_vertices())) {
        throw std::invalid_argument("order is not a permutation of the graph's " + std::to_string(g.num_vertices()) +
                                    " vertices");
    }
}

struct IndependentPair {
    int e;
    int f;
    std::int64_t weight;
};

struct ScaledInstance {
    ScaledWeights sw;
    std::vector<IndependentPair> pairs;
    std::int64_t total = 0;
};

ScaledInstance scaled_instance(const Graph& g) {
    ScaledInstance out;
    out.sw = scale_to_integers(g.weights(), independent_pair_weight(g));
    for (int e = 0; e < g.num_edges(); ++e) {
        for (int f = e + 1; f < g.num_edges(); ++f) {
            if (!g.independent(e, f)) continue;
            const std::int64_t w = out.sw.values[static_cast<std::size_t>(e)] * out.sw.values[static_cast<std::size_t>(f)];
            out.pairs.push_back({e, f, w});
            out.total += w;
        }
    }
    return out;
}

std::int64_t scaled_value(const Graph& g, const ScaledInstance& inst, std::span<const int> pos) {
    std::int64_t value = 0;
    for (const auto& p : inst.pairs) {
        const Edge& a = g.edge(p.e);
        const Edge& b = g.edge(p.f);
        if (chords_alternate(pos[static_cast<std::size_t>(a.u)], pos[static_cast<std::size_t>(a.v)],
                             pos[static_cast<std::size_t>(b.u)], pos[static_cast<std::size_t>(b.v)])) {
            value += p.weight;
        }
    }
    return value;
}

ConvexResult make_result(const Graph& g, CircularOrder order) {
    ConvexResult r;
    r.order = order.canonical();
    r.value = convex_crossing_value(g, r.order);
    r.loss = independent_pair_weight(g) - r.value;
    return r;
}

}  // namespace

Rational convex_crossing_value(const Graph& g, const CircularOrder& order) {
    require_permutation(g, order);
    const auto pos = order.positions();
    Rational value = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& a = g.edge(e);
        for (int f = e + 1; f < g.num_edges(); ++f) {
            if (!g.independent(e, f)) continue;
            const Edge& b = g.edge(f);
            if (chords_alternate(pos[static_cast<std::size_t>(a.u)], pos[static_cast<std::size_t>(a.v)],
                                 pos[static_cast<std::size_t>(b.u)], pos[static_cast<std::size_t>(b.v)])) {
                value += g.weight(e) * g.weight(f);
            }
        }
    }
    return value;
}

void for_each_canonical_order(int n, const std::function<bool(std::span<const int>)>& visit) {
    std::vector<int> seq(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(seq.begin(), seq.end(), 0);
    if (n <= 2) {
        visit(seq);
        return;
    }
    do {
        if (seq[1] < seq.back() && !visit(seq)) return;
    } while (std::next_permutation(seq.begin() + 1, seq.end()));
}

ConvexResult mccr_enumerate(const Graph& g) {
    const ScaledInstance inst = scaled_instance(g);
    const int n = g.num_vertices();
    std::int64_t best = -1;
    std::vector<int> best_seq;
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::uint64_t count = 0;
    for_each_canonical_order(n, [&](std::span<const int> seq) {
        ++count;
        for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;
        const std::int64_t v = scaled_value(g, inst, pos);
        if (v > best) {
            best = v;
            best_seq.assign(seq.begin(), seq.end());
        }
        return true;
    });
    ConvexResult r = make_result(g, CircularOrder(best_seq));
    r.nodes_explored = count;
    return r;
}

// ---------------------------------------------------------------------------
// Branch and bound

namespace {

class BranchAndBound {
public:
    struct Shared {
        std::atomic<std::int64_t> best{-1};
        std::atomic<bool> stop{false};
        std::chrono::steady_clock::time_point deadline;
        bool has_deadline = false;
    };

    BranchAndBound(const Graph& g, const ScaledInstance& inst, Shared& shared)
        : g_(g), n_(g.num_vertices()), w_(inst.sw.values), total_(inst.total), shared_(shared) {
        pos_.assign(static_cast<std::size_t>(n_), -1);
        seq_.assign(static_cast<std::size_t>(n_), -1);
        done_.reserve(static_cast<std::size_t>(g.num_edges()));
    }

    /// Searches the subtree with vertex 0 first and `second` at position 1.
    void run(int second) {
        int big = 0;
        for (int v = second + 1; v < n_; ++v) ++big;
        if (n_ >= 3 && big == 0) return;
        place(0, 0);
        place(second, 1);
        big_ = big;
        dfs(2);
    }

    std::int64_t best() const noexcept { return best_; }
    const std::vector<int>& best_sequence() const noexcept { return best_seq_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    bool interrupted() const noexcept { return interrupted_; }

private:
    struct Undo {
        std::int64_t value;
        std::int64_t decided;
        std::size_t done;
    };

    Undo place(int v, int depth) {
        Undo u{value_, decided_, done_.size()};
        pos_[static_cast<std::size_t>(v)] = depth;
        seq_[static_cast<std::size_t>(depth)] = v;
        const auto& nbrs = g_.neighbors(v);
        const auto& inc = g_.incident_edges(v);
        for (std::size_t j = 0; j < nbrs.size(); ++j) {
            const int x = nbrs[j];
            const int px = pos_[static_cast<std::size_t>(x)];
            if (px < 0 || x == v) continue;
            const int e = inc[j];
            const std::int64_t we = w_[static_cast<std::size_t>(e)];
            // v sits at the largest position, so the chord (px, depth) separates
            // exactly the positions greater than px
            for (int f : done_) {
                const Edge& b = g_.edge(f);
                if (b.touches(x) || b.touches(v)) continue;
                const std::int64_t wf = we * w_[static_cast<std::size_t>(f)];
                decided_ += wf;
                if ((pos_[static_cast<std::size_t>(b.u)] > px) != (pos_[static_cast<std::size_t>(b.v)] > px)) value_ += wf;
            }
            done_.push_back(e);
        }
        return u;
    }

    void unplace(int v, int depth, const Undo& u) {
        pos_[static_cast<std::size_t>(v)] = -1;
        seq_[static_cast<std::size_t>(depth)] = -1;
        value_ = u.value;
        decided_ = u.decided;
        done_.resize(u.done);
    }

    bool pruned(std::int64_t bound) const {
        if (best_ >= 0 && bound <= best_) return true;
        return bound < shared_.best.load(std::memory_order_relaxed);
    }

    void dfs(int depth) {
        ++nodes_;
        if ((nodes_ & 0x3fff) == 0 && shared_.has_deadline &&
            std::chrono::steady_clock::now() >= shared_.deadline) {
            shared_.stop.store(true);
        }
        if (shared_.stop.load(std::memory_order_relaxed)) {
            interrupted_ = true;
            return;
        }
        if (depth == n_) {
            if (value_ > best_) {
                best_ = value_;
                best_seq_ = seq_;
                std::int64_t cur = shared_.best.load();
                while (cur < best_ && !shared_.best.compare_exchange_weak(cur, best_)) {
                }
            }
            return;
        }
        const int second = seq_[1];
        for (int v = 1; v < n_; ++v) {
            if (pos_[static_cast<std::size_t>(v)] >= 0) continue;
            const bool is_big = v > second;
            // the last vertex must exceed the second one
            if (depth == n_ - 1 && !is_big) continue;
            if (depth < n_ - 1 && is_big && big_ == 1) continue;
            const Undo u = place(v, depth);
            if (!pruned(value_ + (total_ - decided_))) {
                if (is_big) --big_;
                dfs(depth + 1);
                if (is_big) ++big_;
            }
            unplace(v, depth, u);
            if (interrupted_) return;
        }
    }

    const Graph& g_;
    int n_;
    const std::vector<std::int64_t>& w_;
    std::int64_t total_;
    Shared& shared_;

    std::vector<int> pos_;
    std::vector<int> seq_;
    std::vector<int> done_;
    std::int64_t value_ = 0;
    std::int64_t decided_ = 0;
    int big_ = 0;

    std::int64_t best_ = -1;
    std::vector<int> best_seq_;
    std::uint64_t nodes_ = 0;
    bool interrupted_ = false;
};

}  // namespace

ConvexResult mccr_exact(const Graph& g, const ConvexSearchOptions& options) {
    const int n = g.num_vertices();
    const int bound = options.max_vertices > 0 ? options.max_vertices : (g.is_unit_weighted() ? 13 : 11);
    if (!options.unbounded && n > bound) {
        throw SizeLimitError("mccr_exact: " + std::to_string(n) + " vertices exceed bound " + std::to_string(bound));
    }
    if (n <= 3) {
        std::vector<int> seq(static_cast<std::size_t>(n));
        std::iota(seq.begin(), seq.end(), 0);
        ConvexResult r = make_result(g, CircularOrder(seq));
        r.nodes_explored = 1;
        return r;
    }

    const ScaledInstance inst = scaled_instance(g);
    BranchAndBound::Shared shared;
    if (options.timeout_ms > 0) {
        shared.has_deadline = true;
        shared.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(options.timeout_ms);
    }

    // one task per choice of the vertex at position 1
    const int tasks = n - 1;
    std::vector<std::int64_t> task_best(static_cast<std::size_t>(tasks), -1);
    std::vector<std::vector<int>> task_seq(static_cast<std::size_t>(tasks));
    std::vector<std::uint64_t> task_nodes(static_cast<std::size_t>(tasks), 0);
    std::atomic<bool> interrupted{false};
    std::atomic<int> next{0};

    auto worker = [&] {
        for (;;) {
            const int t = next.fetch_add(1);
            if (t >= tasks) return;
            BranchAndBound bb(g, inst, shared);
            bb.run(t + 1);
            task_best[static_cast<std::size_t>(t)] = bb.best();
            task_seq[static_cast<std::size_t>(t)] = bb.best_sequence();
            task_nodes[static_cast<std::size_t>(t)] = bb.nodes();
            if (bb.interrupted()) interrupted.store(true);
        }
    };
    const int threads = std::clamp(options.threads, 1, tasks);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    int pick = -1;
    for (int t = 0; t < tasks; ++t) {
        if (task_best[static_cast<std::size_t>(t)] < 0) continue;
        if (pick < 0 || task_best[static_cast<std::size_t>(t)] > task_best[static_cast<std::size_t>(pick)]) pick = t;
    }
    std::vector<int> seq;
    if (pick >= 0) {
        seq = task_seq[static_cast<std::size_t>(pick)];
    } else {
        seq.resize(static_cast<std::size_t>(n));
        std::iota(seq.begin(), seq.end(), 0);
    }
    ConvexResult r = make_result(g, CircularOrder(seq));
    r.nodes_explored = std::accumulate(task_nodes.begin(), task_nodes.end(), std::uint64_t{0});
    r.optimal = !interrupted.load();
    return r;
}

// ---------------------------------------------------------------------------
// Twin contraction

CircularOrder ContractedInstance::expand(const CircularOrder& contracted_order) const {
    std::vector<int> seq;
    for (int v : contracted_order.sequence()) {
        const auto& m = members.at(static_cast<std::size_t>(v));
        seq.insert(seq.end(), m.begin(), m.end());
    }
    return CircularOrder(std::move(seq));
}

ContractedInstance contract_twins(const Graph& g, const TwinPartition& classes) {
    const int n = g.num_vertices();
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    std::vector<const std::vector<int>*> selected;
    for (const auto& cls : classes.classes) {
        if (cls.size() < 2) continue;
        const int id = static_cast<int>(selected.size());
        for (int v : cls) {
            if (v < 0 || v >= n) throw ContractionError("class member out of range");
            if (class_of[static_cast<std::size_t>(v)] >= 0) throw ContractionError("twin classes overlap");
            class_of[static_cast<std::size_t>(v)] = id;
        }
        selected.push_back(&cls);
    }
    for (const auto* cls : selected) {
        const auto& nb = g.neighbors(cls->front());
        for (int v : *cls) {
            if (g.neighbors(v) != nb) {
                throw ContractionError("vertices " + std::to_string(cls->front()) + " and " + std::to_string(v) +
                                       " are not twins");
            }
        }
        for (int x : nb) {
            if (class_of[static_cast<std::size_t>(x)] >= 0) {
                throw ContractionError("contraction unsound here: neighbor " + std::to_string(x) +
                                       " of a contracted class is itself contracted");
            }
            const Rational& w = g.weight(g.find_edge(cls->front(), x));
            for (int v : *cls) {
                if (g.weight(g.find_edge(v, x)) != w) {
                    throw ContractionError("contraction unsound here: twins have unequal edge weights");
                }
            }
        }
    }

    ContractedInstance out;
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int c = class_of[static_cast<std::size_t>(v)];
        if (c < 0) {
            image[static_cast<std::size_t>(v)] = static_cast<int>(out.members.size());
            out.members.push_back({v});
        } else if (selected[static_cast<std::size_t>(c)]->front() == v ||
                   *std::min_element(selected[static_cast<std::size_t>(c)]->begin(),
                                     selected[static_cast<std::size_t>(c)]->end()) == v) {
            const int id = static_cast<int>(out.members.size());
            auto members = *selected[static_cast<std::size_t>(c)];
            std::sort(members.begin(), members.end());
            for (int m : members) image[static_cast<std::size_t>(m)] = id;
            out.members.push_back(std::move(members));
        }
    }
    out.graph = Graph(static_cast<int>(out.members.size()));
    for (int e = 0; e < g.num_edges(); ++e) {
        const int a = image[static_cast<std::size_t>(g.edge(e).u)];
        const int b = image[static_cast<std::size_t>(g.edge(e).v)];
        if (out.graph.has_edge(a, b)) continue;
        const auto size_a = static_cast<std::int64_t>(out.members[static_cast<std::size_t>(a)].size());
        const auto size_b = static_cast<std::int64_t>(out.members[static_cast<std::size_t>(b)].size());
        out.graph.add_edge(a, b, g.weight(e) * size_a * size_b);
    }
    for (const auto* cls : selected) {
        const auto& nb = g.neighbors(cls->front());
        Rational pairs = 0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                pairs += g.weight(g.find_edge(cls->front(), nb[i])) * g.weight(g.find_edge(cls->front(), nb[j]));
            }
        }
        out.constant += pairs * binom(static_cast<std::int64_t>(cls->size()), 2);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lower-bound constructions

RandomEstimate estimate_random(const Graph& g, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("estimate_random needs at least one sample");
    const ScaledInstance inst = scaled_instance(g);
    const int n = g.num_vertices();
    std::mt19937_64 rng(seed);
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 0);
    std::int64_t best = -1;
    std::vector<int> best_seq = seq;
    Integer sum = 0;
    for (int s = 0; s < samples; ++s) {
        std::shuffle(seq.begin(), seq.end(), rng);
        for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;
        const std::int64_t v = scaled_value(g, inst, pos);
        sum += v;
        if (v > best) {
            best = v;
            best_seq = seq;
        }
    }
    RandomEstimate out;
    out.best = make_result(g, CircularOrder(best_seq));
    out.best.nodes_explored = static_cast<std::uint64_t>(samples);
    out.mean = Rational(sum, Integer(samples)) / (inst.sw.scale * inst.sw.scale);
    return out;
}

ConvexResult greedy_derandomized(const Graph& g) {
    const ScaledInstance inst = scaled_instance(g);
    const int n = g.num_vertices();
    std::vector<int> seq;
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<bool> placed(static_cast<std::size_t>(n));
    // Pairs not yet fully placed cross with probability 1/3 whatever the gap, so
    // the conditional expectation is maximized by the gap with the most newly
    // decided crossing weight.
    for (int v = 0; v < n; ++v) {
        const int gaps = std::max<int>(1, static_cast<int>(seq.size()));
        std::int64_t best = -1;
        int best_gap = 0;
        for (int gap = 0; gap < gaps; ++gap) {
            std::vector<int> trial = seq;
            trial.insert(trial.begin() + std::min<int>(gap + 1, static_cast<int>(trial.size())), v);
            for (std::size_t i = 0; i < trial.size(); ++i) pos[static_cast<std::size_t>(trial[i])] = static_cast<int>(i);
            std::int64_t gain = 0;
            for (std::size_t j = 0; j < g.neighbors(v).size(); ++j) {
                const int x = g.neighbors(v)[j];
                if (!placed[static_cast<std::size_t>(x)]) continue;
                const int e = g.incident_edges(v)[j];
                for (int f = 0; f < g.num_edges(); ++f) {
                    const Edge& b = g.edge(f);
                    if (b.touches(v) || b.touches(x)) continue;
                    if (!placed[static_cast<std::size_t>(b.u)] || !placed[static_cast<std::size_t>(b.v)]) continue;
                    if (chords_alternate(pos[static_cast<std::size_t>(x)], pos[static_cast<std::size_t>(v)],
                                         pos[static_cast<std::size_t>(b.u)], pos[static_cast<std::size_t>(b.v)])) {
                        gain += inst.sw.values[static_cast<std::size_t>(e)] * inst.sw.values[static_cast<std::size_t>(f)];
                    }
                }
            }
            if (gain > best) {
                best = gain;
                best_gap = gap;
            }
        }
        seq.insert(seq.begin() + std::min<int>(best_gap + 1, static_cast<int>(seq.size())), v);
        placed[static_cast<std::size_t>(v)] = true;
    }
    ConvexResult r = make_result(g, CircularOrder(seq));
    r.nodes_explored = static_cast<std::uint64_t>(n);
    return r;
}

namespace {

// Probability, in quarters, that a pair alternates when every class arc is
// filled left to right and the unplaced members of a class follow its placed
// ones in uniformly random order.
int alternation_quarters(const std::array<int, 4>& ends, const std::vector<int>& color,
                         const std::vector<int>& slot, const std::vector<int>& arc_start) {
    // unresolved same-class couples among the endpoints
    std::array<std::pair<int, int>, 2> open{};
    int open_count = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const int a = ends[static_cast<std::size_t>(i)];
            const int b = ends[static_cast<std::size_t>(j)];
            if (color[static_cast<std::size_t>(a)] == color[static_cast<std::size_t>(b)] &&
                slot[static_cast<std::size_t>(a)] < 0 && slot[static_cast<std::size_t>(b)] < 0) {
                open[static_cast<std::size_t>(open_count++)] = {i, j};
            }
        }
    }
    const int combos = 1 << open_count;
    int hits = 0;
    for (int mask = 0; mask < combos; ++mask) {
        std::array<long, 4> key{};
        for (int i = 0; i < 4; ++i) {
            const int v = ends[static_cast<std::size_t>(i)];
            const int c = color[static_cast<std::size_t>(v)];
            const int s = slot[static_cast<std::size_t>(v)];
            // unplaced members sit after every placed one of their class
            key[static_cast<std::size_t>(i)] = 4L * (s >= 0 ? arc_start[static_cast<std::size_t>(c)] + s : arc_start[static_cast<std::size_t>(c) + 1]);
        }
        for (int k = 0; k < open_count; ++k) {
            const auto [i, j] = open[static_cast<std::size_t>(k)];
            const bool swap = (mask >> k) & 1;
            key[static_cast<std::size_t>(swap ? j : i)] += 1;
            key[static_cast<std::size_t>(swap ? i : j)] += 2;
        }
        if (chords_alternate(static_cast<int>(key[0]), static_cast<int>(key[1]), static_cast<int>(key[2]),
                             static_cast<int>(key[3]))) {
            ++hits;
        }
    }
    return hits * 4 / combos;
}

}  // namespace

ConvexResult threecolor_lower_bound(const Graph& g, const std::vector<int>& coloring) {
    if (!is_proper_coloring(g, coloring, 3)) throw std::invalid_argument("threecolor_lower_bound: invalid 3-coloring");
    const ScaledInstance inst = scaled_instance(g);
    const int n = g.num_vertices();
    const auto classes = color_classes(coloring, 3);
    std::vector<int> arc_start(4, 0);
    for (int c = 0; c < 3; ++c) arc_start[static_cast<std::size_t>(c) + 1] = arc_start[static_cast<std::size_t>(c)] + static_cast<int>(classes[static_cast<std::size_t>(c)].size());

    std::vector<std::vector<int>> pairs_at(static_cast<std::size_t>(n));
    std::vector<std::array<int, 4>> ends(inst.pairs.size());
    for (std::size_t p = 0; p < inst.pairs.size(); ++p) {
        const Edge& a = g.edge(inst.pairs[p].e);
        const Edge& b = g.edge(inst.pairs[p].f);
        ends[p] = {a.u, a.v, b.u, b.v};
        for (int v : ends[p]) pairs_at[static_cast<std::size_t>(v)].push_back(static_cast<int>(p));
    }

    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> arcs(3);
    for (int c = 0; c < 3; ++c) {
        std::vector<int> pending = classes[static_cast<std::size_t>(c)];
        while (!pending.empty()) {
            const int next_slot = static_cast<int>(arcs[static_cast<std::size_t>(c)].size());
            std::int64_t best_gain = std::numeric_limits<std::int64_t>::min();
            std::size_t best_index = 0;
            for (std::size_t i = 0; i < pending.size(); ++i) {
                const int x = pending[i];
                std::int64_t gain = 0;
                for (int p : pairs_at[static_cast<std::size_t>(x)]) {
                    const int before = alternation_quarters(ends[static_cast<std::size_t>(p)], coloring, slot, arc_start);
                    slot[static_cast<std::size_t>(x)] = next_slot;
                    const int after = alternation_quarters(ends[static_cast<std::size_t>(p)], coloring, slot, arc_start);
                    slot[static_cast<std::size_t>(x)] = -1;
                    gain += (after - before) * inst.pairs[static_cast<std::size_t>(p)].weight;
                }
                if (gain > best_gain) {
                    best_gain = gain;
                    best_index = i;
                }
            }
            const int x = pending[best_index];
            slot[static_cast<std::size_t>(x)] = next_slot;
            arcs[static_cast<std::size_t>(c)].push_back(x);
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best_index));
        }
    }
    ConvexResult r = make_result(g, arc_order(arcs));
    r.nodes_explored = static_cast<std::uint64_t>(n);
    return r;
}

}  // namespace crossmax
