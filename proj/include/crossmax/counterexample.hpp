#ifndef CROSSMAX_COUNTEREXAMPLE_HPP
#define CROSSMAX_COUNTEREXAMPLE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossmax/convex.hpp"
#include "crossmax/rectilinear.hpp"

namespace crossmax {

enum class EdgeLabel { alpha, beta, gamma };

/// Nine-cycle 0..8 plus the center 9 joined to 0, 3 and 6.
///
/// Edge ids: cycle edges {i, i+1} for i = 0..8 first, then the center edges to 0, 3, 6.
/// Vertices 0, 3, 6 are the B-vertices, the other cycle vertices the C-vertices.
struct LabeledH {
    static constexpr int z = 9;
    static constexpr std::array<int, 3> b_vertices{0, 3, 6};
    static constexpr std::array<int, 6> c_vertices{1, 2, 4, 5, 7, 8};

    Graph graph;
    std::vector<EdgeLabel> labels;

    /// Cycle edges are red, center edges green.
    bool is_red(int e) const { return labels.at(static_cast<std::size_t>(e)) != EdgeLabel::alpha; }
};

LabeledH build_h();

/// Each cycle vertex i becomes the independent class i*k .. i*k+k-1, joined
/// completely to the classes of its cycle neighbors; the center is 9k.
Graph build_hk(int k);
/// Vertex of H that a vertex of H(k) was split from.
int hk_base_vertex(int k, int v);

/// The two C-vertices split in each H16 variant.
std::array<int, 2> h16_split_pair(int variant);
/// H plus twin copies 10 and 11 of the split pair.
Graph build_h16(int variant);

enum class WeightedVariant { w14, w16 };
/// H with weight 2 on the gamma edges at the split pair, and for W16 also on their beta edges.
Graph build_w(int variant, WeightedVariant which);

/// Fixed rational drawing of H(k): the cycle classes sit in tiny convex
/// clusters around nine base points.
PointDrawing hk_drawing(int k);

struct HkDrawingCheck {
    bool ok = true;
    std::string failure;
    Rational crossings;
    std::int64_t weak_crossings = 0;
    std::int64_t strong_misses = 0;
};

/// Checks the cluster properties of a drawing of H(k): bundles along a cycle
/// edge cross binom(k,2)^2 times, a class against both cycle neighbors
/// binom(k,2) binom(2k,2) times, a B-class against one cycle neighbor and the
/// center binom(k,2) binom(k+1,2) times; independent red bundles cross
/// completely and each red bundle misses exactly one independent green bundle.
HkDrawingCheck check_hk_drawing(int k, const PointDrawing& d);

struct PairClasses {
    std::int64_t adjacent = 0;
    std::int64_t weak = 0;
    std::int64_t strong = 0;
};

/// Independent pairs of H(k) are weak when their images in H are equal or adjacent edges.
PairClasses classify_pairs(int k);
bool is_weak_pair(int k, const Graph& hk, int e, int f);

/// Minimum red-green misses among convex orders of H with a given number of red-red misses.
struct StrongLossProfile {
    /// Indexed by red-red misses 0..27; -1 when no order has that many.
    std::array<std::int64_t, 28> min_green{};
    std::array<CircularOrder, 28> witness;
    std::uint64_t orders = 0;
};

/// One pass over all canonical orders of H.
const StrongLossProfile& strong_loss_profile();

struct LossReport {
    int k = 1;
    /// min over convex orders of k * (red-red misses) + (red-green misses)
    std::int64_t min_strong_loss = 0;
    CircularOrder witness;
    std::int64_t witness_red_misses = 0;
    std::int64_t witness_green_misses = 0;
    std::int64_t zero_red_min = 0;
    std::int64_t drawing_strong_loss = 9;
    bool counterexample = false;
    /// Smallest k in 1..search_limit with a counterexample, or 0.
    int smallest_k = 0;
    /// Filled when the drawing of H(k) was built and checked (k <= 4).
    std::optional<HkDrawingCheck> drawing;
    std::int64_t m = 0;
    PairClasses pairs;
};

LossReport min_convex_strong_loss(int k);
/// Adds the drawing check for k <= max_drawing_k and the smallest counterexample k up to 6.
LossReport verify_hk(int k, int max_drawing_k = 4);

struct H16Report {
    int variant = 1;
    std::int64_t m = 0;
    Rational weighted_m;
    Rational convex_opt;
    Rational weighted_convex_opt;
    /// In the units of the weighted contraction: twin 4-cycle avoidances are not counted.
    Rational convex_loss;
    Rational convex_loss_raw;
    Rational drawing_crossings;
    Rational drawing_loss;
    Rational drawing_loss_raw;
    std::int64_t drawing_twin_avoidances = 0;
    CircularOrder convex_order;
    bool counterexample = false;
    std::uint64_t nodes = 0;
    /// Set when the full 12-vertex search was also run.
    std::optional<Rational> full_search_opt;
};

/// The drawing of H16 obtained from hk_drawing(2) by dropping twin copies.
PointDrawing h16_drawing(int variant);
H16Report verify_h16(int variant, bool full_search = false, int threads = 1);

struct LemmaReport {
    std::uint64_t orders = 0;
    bool every_cycle_edge_avoids = true;
    bool span_bound = true;
    bool alpha_bound = true;
    std::optional<CircularOrder> first_failure;
    std::int64_t min_alpha_slack = 0;
};

LemmaReport check_avoidance_lemmas();

}  // namespace crossmax

#endif  // CROSSMAX_COUNTEREXAMPLE_HPP
