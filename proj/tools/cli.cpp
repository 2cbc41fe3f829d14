#include "crossmax/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "crossmax/bipartite.hpp"
#include "crossmax/convex.hpp"
#include "crossmax/counterexample.hpp"
#include "crossmax/rectilinear.hpp"
#include "crossmax/reductions.hpp"

namespace crossmax::cli {

namespace {

struct Options {
    std::string graph;
    std::string order;
    std::string coords;
    std::string scheme;
    std::string output;
    std::string mode = "exact";
    std::string method = "random";
    int threads = 1;
    std::int64_t timeout_ms = 0;
    std::uint64_t seed = 1;
    int samples = 1000;
    int restarts = 4;
    int grid = 0;
    int k = 1;
    int variant = 1;
    int max_vertices = 0;
    bool full = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
}

const char* flag(bool b) { return b ? "true" : "false"; }

// FNV-1a over the normalized graph text, so equal graphs get equal digests.
std::string digest(const Graph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : write_graph(g)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

class Command {
public:
    Command(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    template <typename T>
    void put(const std::string& key, const T& value) {
        out_ << key << '=' << value << '\n';
    }
    void put(const std::string& key, const Rational& value) { out_ << key << '=' << to_string(value) << '\n'; }

    Graph graph() {
        if (o_.graph.empty()) throw UsageError("missing -i <graph file>");
        Graph g = read_graph_file(o_.graph);
        put("digest", digest(g));
        return g;
    }
    CircularOrder order(const Graph& g) {
        CircularOrder ord = parse_order(read_text(o_.order));
        if (!ord.is_permutation_of(g.num_vertices())) throw UsageError("order is not a permutation of the vertices");
        return ord;
    }
    PointDrawing coords(const Graph& g) { return parse_coordinates(read_text(o_.coords), g.num_vertices()); }

    int mccr() {
        const Graph g = graph();
        const Rational m = independent_pair_weight(g);
        if (!o_.order.empty()) {
            const CircularOrder ord = order(g);
            const Rational v = convex_crossing_value(g, ord);
            put("value", v);
            put("loss", m - v);
            put("order", ord.str());
            return ok;
        }
        ConvexSearchOptions opt;
        opt.max_vertices = o_.max_vertices;
        opt.threads = o_.threads;
        opt.timeout_ms = o_.timeout_ms;
        const ConvexResult r = mccr_exact(g, opt);
        put("value", r.value);
        put("loss", m - r.value);
        put("order", r.order.str());
        put("optimal", flag(r.optimal));
        return r.optimal ? ok : limit;
    }

    int estimate() {
        const Graph g = graph();
        const Rational m = independent_pair_weight(g);
        ConvexResult r;
        if (o_.method == "random") {
            const RandomEstimate e = estimate_random(g, o_.samples, o_.seed);
            r = e.best;
            put("mean", e.mean);
        } else if (o_.method == "greedy") {
            r = greedy_derandomized(g);
            put("guarantee", m / 3);
        } else if (o_.method == "threecolor") {
            const auto coloring = proper_coloring(g, 3);
            if (!coloring) throw UsageError("graph is not 3-colorable");
            r = threecolor_lower_bound(g, *coloring);
            put("guarantee", m / 2);
        } else {
            throw UsageError("unknown method " + o_.method);
        }
        put("value", r.value);
        put("loss", m - r.value);
        put("order", r.order.str());
        return ok;
    }

    int bcr() {
        const Graph g = graph();
        const LayerResult r = bcr_exact(g);
        put("value", r.value);
        put("top", join(r.drawing.top));
        put("bottom", join(r.drawing.bottom));
        return ok;
    }

    int maxsep() {
        const Graph g = graph();
        const LayerResult r = max_separated_convex(g);
        put("value", r.value);
        put("top", join(r.drawing.top));
        put("bottom", join(r.drawing.bottom));
        put("order", separated_order(r.drawing).str());
        return ok;
    }

    PointDrawing drawing(const Graph& g) {
        if (!o_.coords.empty()) return coords(g);
        if (!o_.order.empty()) return convex_order_to_drawing(order(g), &g);
        throw UsageError("need --coords or --order");
    }

    int rect_count() {
        const Graph g = graph();
        const PointDrawing d = drawing(g);
        const auto violations = validate_drawing(g, d);
        put("valid", flag(violations.empty()));
        if (!violations.empty()) {
            for (const Violation& v : violations) put("violation", v.describe());
            return failed;
        }
        put("crossings", count_straight_crossings(g, d));
        return ok;
    }

    int rect_search() {
        const Graph g = graph();
        LocalSearchOptions opt;
        opt.seed = o_.seed;
        opt.restarts = o_.restarts;
        opt.grid = o_.grid;
        opt.threads = o_.threads;
        const LocalSearchResult r = local_search_mrcr(g, opt);
        put("value", r.value);
        put("start_value", r.start_value);
        put("upper_bound", independent_pair_weight(g));
        if (!o_.output.empty()) {
            std::ofstream f(o_.output);
            if (!f) throw UsageError("cannot write " + o_.output);
            f << write_coordinates(r.drawing);
            put("coords", o_.output);
        }
        return ok;
    }

    int draw() {
        const Graph g = graph();
        const PointDrawing d = drawing(g);
        if (o_.output.empty()) throw UsageError("missing -o <svg file>");
        svg_export(g, d, o_.output);
        put("crossings", count_straight_crossings(g, d));
        put("svg", o_.output);
        return ok;
    }

    int verify_hk() {
        const LossReport r = crossmax::verify_hk(o_.k);
        put("k", r.k);
        put("m", r.m);
        put("strong_pairs", r.pairs.strong);
        put("min_strong_loss", r.min_strong_loss);
        put("witness", r.witness.str());
        put("zero_red_min", r.zero_red_min);
        put("drawing_strong_loss", r.drawing_strong_loss);
        put("counterexample", flag(r.counterexample));
        put("smallest_k", r.smallest_k);
        bool pass = r.zero_red_min >= 10;
        if (r.drawing) {
            put("drawing_valid", flag(r.drawing->ok));
            put("drawing_crossings", r.drawing->crossings);
            if (!r.drawing->ok) put("drawing_failure", r.drawing->failure);
            pass = pass && r.drawing->ok;
        }
        put("pass", flag(pass));
        return pass ? ok : failed;
    }

    int verify_h16() {
        const H16Report r = crossmax::verify_h16(o_.variant, o_.full, o_.threads);
        put("variant", r.variant);
        put("m", r.m);
        put("convex_opt", r.convex_opt);
        put("convex_loss", r.convex_loss);
        put("convex_loss_raw", r.convex_loss_raw);
        put("order", r.convex_order.str());
        put("drawing_crossings", r.drawing_crossings);
        put("drawing_loss", r.drawing_loss);
        put("drawing_loss_raw", r.drawing_loss_raw);
        if (r.full_search_opt) put("full_search_opt", *r.full_search_opt);
        put("counterexample", flag(r.counterexample));
        return r.counterexample ? ok : failed;
    }

    int verify_lemmas() {
        const LemmaReport r = check_avoidance_lemmas();
        put("orders", r.orders);
        put("cycle_edge_avoids", flag(r.every_cycle_edge_avoids));
        put("span_bound", flag(r.span_bound));
        put("alpha_bound", flag(r.alpha_bound));
        put("min_alpha_slack", r.min_alpha_slack);
        if (r.first_failure) put("first_failure", r.first_failure->str());
        const bool pass = r.every_cycle_edge_avoids && r.span_bound && r.alpha_bound;
        put("pass", flag(pass));
        return pass ? ok : failed;
    }

    int verify_twin_contract() {
        const Graph g = graph();
        // keep classes that neither touch nor neighbor an already chosen class
        TwinPartition all = twin_classes(g).non_singleton();
        TwinPartition chosen;
        std::vector<char> blocked(static_cast<std::size_t>(g.num_vertices()), 0);
        for (std::size_t i = 0; i < all.size(); ++i) {
            bool free = true;
            for (int v : all.classes[i]) free = free && !blocked[static_cast<std::size_t>(v)];
            for (int v : all.neighborhoods[i]) free = free && !blocked[static_cast<std::size_t>(v)];
            if (!free) continue;
            for (int v : all.classes[i]) blocked[static_cast<std::size_t>(v)] = 1;
            for (int v : all.neighborhoods[i]) blocked[static_cast<std::size_t>(v)] = 1;
            chosen.classes.push_back(all.classes[i]);
            chosen.neighborhoods.push_back(all.neighborhoods[i]);
        }
        const ContractedInstance c = contract_twins(g, chosen);
        ConvexSearchOptions opt;
        opt.threads = o_.threads;
        opt.max_vertices = o_.max_vertices;
        const Rational full = mccr_exact(g, opt).value;
        const Rational small = mccr_exact(c.graph, opt).value;
        put("classes", chosen.size());
        put("contracted_vertices", c.graph.num_vertices());
        put("constant", c.constant);
        put("mccr", full);
        put("mccr_contracted", small);
        put("match", flag(full == small + c.constant));
        return full == small + c.constant ? ok : failed;
    }

    int reduce_star() {
        const Graph g = graph();
        const ReductionReport r = verify_star_reduction(g, o_.max_vertices > 0 ? o_.max_vertices : 8, o_.threads);
        put("t", r.t);
        put("value", r.value);
        put("recovered_mcut", r.recovered_mcut);
        put("reference_mcut", r.reference_mcut);
        put("sandwich", flag(r.sandwich));
        put("match", flag(r.match));
        return r.match && r.sandwich ? ok : failed;
    }

    int reduce_triangle() {
        const Graph g = graph();
        const TriangleBounds b = triangle_bounds(g);
        put("t", b.t);
        put("mcut", b.mcut);
        put("lower", b.lower);
        put("upper", b.upper);
        put("recovery", flag(b.recovery));
        put("mcut_at_least_n", flag(b.mcut_at_least_n));
        return b.recovery && b.mcut_at_least_n ? ok : failed;
    }

    int harborth() {
        const std::int64_t f = harborth_formula(o_.k);
        const Rational count = tripartite_block_value(o_.k);
        put("formula", f);
        put("convex_count", count);
        bool pass = count == f;
        put("match", flag(pass));
        if (o_.k <= 3) {
            const bool cycles = verify_tripartite_4cycles(o_.k);
            put("four_cycles_crossed", flag(cycles));
            pass = pass && cycles;
        }
        return pass ? ok : failed;
    }

    std::string pair_text(const Graph& g, std::pair<int, int> p) {
        const Edge& a = g.edge(p.first);
        const Edge& b = g.edge(p.second);
        return "(" + std::to_string(a.u) + " " + std::to_string(a.v) + ")x(" + std::to_string(b.u) + " " + std::to_string(b.v) + ")";
    }

    int mcr_tiny() {
        const Graph g = graph();
        const McrResult r = mcr_exact_tiny(g);
        put("value", r.value);
        put("convex_lower_bound", r.convex_lower_bound);
        put("schemes_tested", r.schemes_tested);
        for (const auto& p : r.crossings) put("crossing", pair_text(g, p));
        return ok;
    }

    int scheme_check() {
        const Graph g = graph();
        if (o_.scheme.empty()) throw UsageError("missing --scheme <file>");
        const CrossingScheme s = parse_scheme(read_text(o_.scheme), g);
        SchemeMode mode = SchemeMode::exact;
        if (o_.mode == "necessary") {
            mode = SchemeMode::necessary;
        } else if (o_.mode != "exact") {
            throw UsageError("unknown mode " + o_.mode);
        }
        const SchemeVerdict v = scheme_feasible(s, mode, o_.max_vertices > 0 ? o_.max_vertices : 20);
        put("mode", o_.mode);
        put("crossings", s.crossings.size());
        put("planarized_vertices", v.planarized_vertices);
        put("orders_tried", v.orders_tried);
        put("embeddings_tried", v.embeddings_tried);
        put("feasible", flag(v.feasible));
        return v.feasible ? ok : failed;
    }

private:
    const Options& o_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Maximum crossing numbers: exact convex search, drawings and verifiers"};
    app.name("crossmax");
    app.require_subcommand(1);

    std::function<int(Command&)> action;
    auto common = [&](CLI::App* sub, bool with_graph = true) {
        if (with_graph) sub->add_option("-i,--input", o.graph, "graph file")->check(CLI::ExistingFile);
        sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--timeout-ms", o.timeout_ms, "0 disables the timeout");
        sub->add_option("--seed", o.seed);
        sub->add_option("--max-vertices", o.max_vertices, "size bound of the exact solver");
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, int (Command::*fn)(), bool with_graph = true) {
        CLI::App* sub = parent->add_subcommand(name, help);
        common(sub, with_graph);
        sub->callback([&action, fn] { action = [fn](Command& c) { return (c.*fn)(); }; });
        return sub;
    };

    CLI::App* s = leaf(&app, "mccr", "exact maximum convex crossing number", &Command::mccr);
    s->add_option("--order", o.order, "evaluate this order instead of searching")->check(CLI::ExistingFile);
    s = leaf(&app, "estimate", "convex lower bounds", &Command::estimate);
    s->add_option("--method", o.method)->check(CLI::IsMember({"random", "greedy", "threecolor"}));
    s->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    leaf(&app, "bcr", "exact two-layer crossing minimum", &Command::bcr);
    leaf(&app, "maxsep", "best convex order with the sides on separate arcs", &Command::maxsep);
    for (auto [name, help, fn] : {std::tuple{"rect-count", "crossings of a straight-line drawing", &Command::rect_count},
                                  std::tuple{"draw", "write a drawing as SVG", &Command::draw}}) {
        s = leaf(&app, name, help, fn);
        s->add_option("--coords", o.coords, "coordinate file")->check(CLI::ExistingFile);
        s->add_option("--order", o.order, "convex order file")->check(CLI::ExistingFile);
        if (std::string(name) == "draw") s->add_option("-o,--output", o.output, "SVG file")->required();
    }
    s = leaf(&app, "rect-search", "local search for many straight-line crossings", &Command::rect_search);
    s->add_option("--restarts", o.restarts)->check(CLI::PositiveNumber);
    s->add_option("--grid", o.grid, "grid size, 0 picks one from n");
    s->add_option("-o,--output", o.output, "write the best coordinates here");

    CLI::App* verify = app.add_subcommand("verify", "fixed constructions and identities");
    verify->require_subcommand(1);
    leaf(verify, "hk", "strong-loss analysis of H(k)", &Command::verify_hk, false)->add_option("--k", o.k)->check(CLI::Range(1, 64));
    s = leaf(verify, "h16", "the 12-vertex counterexample family", &Command::verify_h16, false);
    s->add_option("--variant", o.variant)->check(CLI::Range(1, 3));
    s->add_flag("--full", o.full, "also run the uncontracted search");
    leaf(verify, "lemmas", "avoidance lemmas over every order of H", &Command::verify_lemmas, false);
    leaf(verify, "twin-contract", "contracted and direct optimum agree", &Command::verify_twin_contract);

    CLI::App* reduce = app.add_subcommand("reduce", "max-cut reduction gadgets");
    reduce->require_subcommand(1);
    leaf(reduce, "star", "disjoint star gadget", &Command::reduce_star);
    leaf(reduce, "triangle", "weighted triangle gadget bounds", &Command::reduce_triangle);

    leaf(&app, "harborth", "tripartite block order against the closed form", &Command::harborth, false)
        ->add_option("--k", o.k)
        ->check(CLI::Range(1, 64));
    leaf(&app, "mcr-tiny", "exact topological maximum for tiny graphs", &Command::mcr_tiny);
    s = leaf(&app, "scheme-check", "realizability of a crossing scheme", &Command::scheme_check);
    s->add_option("--scheme", o.scheme, "scheme file")->check(CLI::ExistingFile);
    s->add_option("--mode", o.mode)->check(CLI::IsMember({"necessary", "exact"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    Command cmd(o, out);
    try {
        return action(cmd);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << '\n';
        return limit;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

}  // namespace crossmax::cli
