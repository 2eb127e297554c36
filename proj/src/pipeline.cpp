#include "multilin/pipeline.hpp"

#include "multilin/error.hpp"
#include "multilin/extform.hpp"
#include "multilin/lp.hpp"
#include "multilin/relaxations.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

namespace multilin {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::Std: return "std";
        case Strategy::Flower: return "flower";
        case Strategy::Beta: return "beta";
        case Strategy::Alpha: return "alpha";
        case Strategy::Junction: return "junction";
        case Strategy::Brute: return "brute";
        case Strategy::Cuts: return "cuts";
    }
    return "?";
}

std::string to_string(Certificate c) {
    switch (c) {
        case Certificate::ExactLp: return "exact-lp";
        case Certificate::BruteForce: return "brute-force";
        case Certificate::UpperBoundOnly: return "upper-bound-only";
    }
    return "?";
}

Strategy parse_strategy(const std::string& name) {
    for (auto s : {Strategy::Auto, Strategy::Std, Strategy::Flower, Strategy::Beta, Strategy::Alpha, Strategy::Junction,
                   Strategy::Brute, Strategy::Cuts}) {
        if (to_string(s) == name) return s;
    }
    throw ArgumentError("unknown strategy '" + name + "'");
}

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Berge: return "berge";
        case GraphClass::Gamma: return "gamma";
        case GraphClass::Beta: return "beta";
        case GraphClass::Alpha: return "alpha";
        case GraphClass::General: return "general";
    }
    return "?";
}

GraphClass parse_graph_class(const std::string& name) {
    for (auto c : {GraphClass::Berge, GraphClass::Gamma, GraphClass::Beta, GraphClass::Alpha, GraphClass::General}) {
        if (to_string(c) == name) return c;
    }
    throw ArgumentError("unknown hypergraph class '" + name + "'");
}

namespace {

bool is_binary(const Point& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0 || v == 1; });
}

void record_census(SolveStats& stats, const PolyhedronH& p) {
    const auto c = p.census();
    stats.variables = c.variables;
    stats.inequalities = c.inequalities;
    stats.equations = c.equations;
    stats.max_row_nonzeros = c.max_row_nonzeros;
}

/// LP over a formulation whose first |V|+|E| variables are the lifted space.
void solve_lp(const Instance& instance, const PolyhedronH& p, bool exact, SolveResult& out) {
    auto c = lifted_objective(instance);
    c.resize(p.dimension());
    record_census(out.stats, p);
    auto lp = lp_max(p, c);
    out.stats.lp_pivots += lp.pivots;
    if (lp.status != LpStatus::Optimal) {
        throw InternalError("formulation LP is " + to_string(lp.status) + " for a bounded relaxation");
    }
    const auto lifted = lifted_space(instance.graph).size();
    Point z(lp.argmax.begin(), lp.argmax.begin() + static_cast<std::ptrdiff_t>(lifted));
    out.value = lp.value;
    if (!exact) {
        out.certificate = Certificate::UpperBoundOnly;
        out.lp_bound = lp.value;
        return;
    }
    if (!is_binary(z)) {
        throw InternalError("fractional optimum " + format_point(z) + " from the " + out.formulation +
                            " formulation, which is exact for this class");
    }
    out.certificate = Certificate::ExactLp;
    out.solution = std::move(z);
}

void solve_by_cuts(const Instance& instance, const Limits& limits, int max_rounds, SolveResult& out) {
    out.formulation = "cuts";
    const Hypergraph& g = instance.graph;
    const bool can_separate = g.edge_count() == 0 || rank(g) <= limits.flower_rank_cap;
    if (!can_separate) {
        out.warnings.push_back("rank exceeds the flower cap; bound from the standard linearization only");
    }
    auto loop = cutting_plane_loop(instance, can_separate ? max_rounds : 0, limits);
    out.stats.cut_rounds = loop.rounds;
    out.stats.cuts_added = loop.cuts_added;
    out.stats.lp_pivots += loop.lp_pivots;
    auto p = standard_linearization(g);
    record_census(out.stats, p);
    out.stats.inequalities += loop.cuts_added;
    out.lp_bound = loop.bound;
    if (g.node_count() <= static_cast<std::size_t>(limits.max_enumerate_nodes)) {
        auto bf = brute_force_opt(instance, limits);
        out.value = bf.value;
        out.solution = bf.argmax;
        out.certificate = Certificate::BruteForce;
    } else {
        out.value = loop.bound;
        out.certificate = Certificate::UpperBoundOnly;
        out.warnings.push_back("instance too large for brute force; reporting the cutting-plane upper bound");
    }
}

}  // namespace

SolveResult solve(const Instance& instance, Strategy strategy, const Limits& limits, int max_rounds) {
    const auto started = std::chrono::steady_clock::now();
    instance.validate();
    const Hypergraph& g = instance.graph;
    SolveResult out;
    out.classification = classify(g);
    const auto& cls = out.classification;

    if (strategy == Strategy::Auto) {
        const bool flower_ok = g.edge_count() == 0 || rank(g) <= limits.flower_rank_cap;
        if (cls.berge) {
            strategy = Strategy::Std;
        } else if (cls.gamma && flower_ok) {
            strategy = Strategy::Flower;
        } else if (cls.beta) {
            strategy = Strategy::Beta;
        } else if (min_fill_decomposition(g).width <= limits.junction_width_cap) {
            strategy = Strategy::Junction;
        } else {
            strategy = Strategy::Cuts;
        }
    }

    switch (strategy) {
        case Strategy::Std:
            out.formulation = "std";
            solve_lp(instance, standard_linearization(g), cls.berge, out);
            if (!cls.berge) out.warnings.push_back("not Berge-acyclic; the standard linearization only bounds the optimum");
            break;
        case Strategy::Flower:
            out.formulation = "flower";
            solve_lp(instance, flower_relaxation(g, limits), cls.gamma, out);
            if (!cls.gamma) out.warnings.push_back("not gamma-acyclic; the flower relaxation only bounds the optimum");
            break;
        case Strategy::Beta:
            out.formulation = "beta";
            if (!cls.beta) throw PreconditionError("strategy beta needs a beta-acyclic hypergraph");
            solve_lp(instance, beta_ef(g, limits).polyhedron, true, out);
            break;
        case Strategy::Alpha:
            out.formulation = "alpha";
            if (!cls.alpha) throw PreconditionError("strategy alpha needs an alpha-acyclic hypergraph");
            solve_lp(instance, alpha_ef(g, limits).polyhedron, true, out);
            break;
        case Strategy::Junction:
            out.formulation = "junction";
            solve_lp(instance, junction_ef(g, limits).polyhedron, true, out);
            break;
        case Strategy::Brute: {
            out.formulation = "brute";
            auto bf = brute_force_opt(instance, limits);
            out.value = bf.value;
            out.solution = bf.argmax;
            out.certificate = Certificate::BruteForce;
            break;
        }
        case Strategy::Cuts:
            solve_by_cuts(instance, limits, max_rounds, out);
            break;
        case Strategy::Auto:
            break;
    }
    out.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

CuttingPlaneResult cutting_plane_loop(const Instance& instance, int max_rounds, const Limits& limits) {
    instance.validate();
    const Hypergraph& g = instance.graph;
    auto p = standard_linearization(g);
    const auto c = lifted_objective(instance);
    CuttingPlaneResult out;
    for (;;) {
        auto lp = lp_max(p, c);
        out.lp_pivots += lp.pivots;
        if (lp.status != LpStatus::Optimal) throw InternalError("cutting-plane LP is " + to_string(lp.status));
        out.bound = lp.value;
        out.bounds.push_back(lp.value);
        out.final_point = lp.argmax;
        if (out.rounds >= static_cast<std::size_t>(std::max(max_rounds, 0))) break;
        auto cut = separate_flower(g, lp.argmax, limits);
        if (!cut) break;
        p.add(cut->inequality.constraint(g));
        ++out.cuts_added;
        ++out.rounds;
    }
    return out;
}

namespace {

/// Portable draws on top of mt19937_64 (the standard distributions are not
/// specified bit-for-bit, and generated files must be reproducible).
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi) {
        if (hi <= lo) return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<int>(x % span);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1))]);
        }
    }

    /// k distinct elements of `pool`, sorted.
    std::vector<int> sample(std::vector<int> pool, int k) {
        shuffle(pool);
        pool.resize(static_cast<std::size_t>(std::min<int>(k, static_cast<int>(pool.size()))));
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

using EdgeList = std::vector<std::vector<int>>;  // 0-based node labels

std::vector<int> range(int from, int to) {
    std::vector<int> out;
    for (int i = from; i < to; ++i) out.push_back(i);
    return out;
}

bool has_edge(const EdgeList& edges, const std::vector<int>& e) {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

Hypergraph to_hypergraph(int n, const EdgeList& edges, const std::vector<int>& relabel) {
    std::vector<std::vector<int>> labelled;
    for (const auto& e : edges) {
        std::vector<int> out;
        for (int v : e) out.push_back(relabel[static_cast<std::size_t>(v)] + 1);
        std::sort(out.begin(), out.end());
        labelled.push_back(out);
    }
    return Hypergraph::numbered(n, labelled);
}

/// Incidence-tree growth: every edge after the first shares exactly one node with the union so far.
std::optional<EdgeList> grow_berge(Draw& draw, int n, int m, int r) {
    EdgeList edges;
    std::vector<int> covered;
    int next_fresh = 0;
    for (int k = 0; k < m; ++k) {
        const int fresh_left = n - next_fresh;
        const int edges_left = m - k - 1;
        std::vector<int> e;
        if (k == 0) {
            if (r > n) return std::nullopt;
            for (int i = 0; i < r; ++i) e.push_back(next_fresh++);
        } else {
            const int most = std::min(r - 1, fresh_left - edges_left);
            if (most < 1) return std::nullopt;
            const int s = draw.uniform(1, most);
            e.push_back(covered[static_cast<std::size_t>(draw.uniform(0, static_cast<int>(covered.size()) - 1))]);
            for (int i = 0; i < s; ++i) e.push_back(next_fresh++);
        }
        std::sort(e.begin(), e.end());
        for (int v : e) {
            if (std::find(covered.begin(), covered.end(), v) == covered.end()) covered.push_back(v);
        }
        edges.push_back(e);
    }
    return edges;
}

/// Random edge of size s leaning on already covered nodes.
std::vector<int> propose_edge(Draw& draw, int n, int s, const std::vector<int>& covered) {
    std::vector<int> e;
    const int from_covered = covered.empty() ? 0 : draw.uniform(1, std::min<int>(s, static_cast<int>(covered.size())));
    e = draw.sample(covered, from_covered);
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
        if (!std::binary_search(e.begin(), e.end(), v)) rest.push_back(v);
    }
    auto more = draw.sample(rest, s - static_cast<int>(e.size()));
    e.insert(e.end(), more.begin(), more.end());
    std::sort(e.begin(), e.end());
    return e;
}

/// Adds class-checked random edges one at a time.
std::optional<EdgeList> grow_checked(Draw& draw, int n, int m, int r, bool (*in_class)(const Hypergraph&)) {
    EdgeList edges;
    std::vector<int> covered;
    const auto identity = range(0, n);
    for (int k = 0; k < m; ++k) {
        bool placed = false;
        for (int attempt = 0; attempt < 60 && !placed; ++attempt) {
            const int s = k == 0 ? r : draw.uniform(2, r);
            auto e = propose_edge(draw, n, s, covered);
            if (has_edge(edges, e)) continue;
            edges.push_back(e);
            if (in_class(to_hypergraph(n, edges, identity))) {
                placed = true;
                for (int v : e) {
                    if (std::find(covered.begin(), covered.end(), v) == covered.end()) covered.push_back(v);
                }
                std::sort(covered.begin(), covered.end());
            } else {
                edges.pop_back();
            }
        }
        if (!placed) return std::nullopt;
    }
    return edges;
}

bool beta_ok(const Hypergraph& g) { return is_beta_acyclic(g).acyclic; }

/// Nest-point insertion: each new node u joins a chain {u} + S_1 < {u} + S_2 < ...
/// over nested subsets of the nodes placed before it, redrawn until the result stays
/// beta-acyclic. Chain lengths are allocated up front within the capacity min(r-1, u).
std::optional<EdgeList> grow_beta(Draw& draw, int n, int m, int r) {
    if (m == 0) return EdgeList{};
    if (r < 2 || r > n) return std::nullopt;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    int capacity = 0;
    for (int u = 1; u < n; ++u) capacity += std::min(r - 1, u);
    if (capacity < m) return std::nullopt;
    // one node carries a chain reaching the full rank
    const int carrier = draw.uniform(r - 1, n - 1);
    count[static_cast<std::size_t>(carrier)] = 1;
    for (int k = 1; k < m; ++k) {
        std::vector<int> open;
        for (int u = 1; u < n; ++u) {
            if (count[static_cast<std::size_t>(u)] < std::min(r - 1, u)) open.push_back(u);
        }
        ++count[static_cast<std::size_t>(open[static_cast<std::size_t>(draw.uniform(0, static_cast<int>(open.size()) - 1))])];
    }
    const auto identity = range(0, n);
    EdgeList edges;
    for (int u = 1; u < n; ++u) {
        const int want = count[static_cast<std::size_t>(u)];
        if (want == 0) continue;
        bool placed = false;
        for (int attempt = 0; attempt < 30 && !placed; ++attempt) {
            std::vector<int> sizes;
            if (u == carrier) {
                sizes = draw.sample(range(1, r - 1), want - 1);
                sizes.push_back(r - 1);
            } else {
                sizes = draw.sample(range(1, std::min(r - 1, u) + 1), want);
            }
            auto order = range(0, u);
            draw.shuffle(order);
            EdgeList trial = edges;
            for (int s : sizes) {
                std::vector<int> e(order.begin(), order.begin() + s);
                e.push_back(u);
                std::sort(e.begin(), e.end());
                trial.push_back(e);
            }
            if (beta_ok(to_hypergraph(n, trial, identity))) {
                edges = std::move(trial);
                placed = true;
            }
        }
        if (!placed) return std::nullopt;
    }
    return edges;
}

/// RIP construction: maximal edges hang off earlier ones through their running
/// intersections; the remaining edges are subsets of maximal ones.
std::optional<EdgeList> grow_alpha(Draw& draw, int n, int m, int r) {
    const int maximal_target = draw.uniform(1, m);
    EdgeList maximal;
    int next_fresh = 0;
    for (int k = 0; k < maximal_target; ++k) {
        std::vector<int> e;
        if (k == 0) {
            if (r > n) return std::nullopt;
            for (int i = 0; i < r; ++i) e.push_back(next_fresh++);
        } else {
            const auto& parent = maximal[static_cast<std::size_t>(draw.uniform(0, k - 1))];
            const int fresh_left = n - next_fresh;
            if (fresh_left < 1) break;
            const int s = draw.uniform(2, r);
            const int shared = std::min<int>({s - 1, static_cast<int>(parent.size()) - 1, draw.uniform(0, s - 1)});
            const int fresh = std::min(fresh_left, s - shared);
            e = draw.sample(parent, shared);
            for (int i = 0; i < fresh; ++i) e.push_back(next_fresh++);
            if (e.size() < 2) continue;
        }
        std::sort(e.begin(), e.end());
        if (!has_edge(maximal, e)) maximal.push_back(e);
    }
    EdgeList edges = maximal;
    for (int attempt = 0; attempt < 50 * m && static_cast<int>(edges.size()) < m; ++attempt) {
        const auto& host = maximal[static_cast<std::size_t>(draw.uniform(0, static_cast<int>(maximal.size()) - 1))];
        if (host.size() < 3) continue;
        auto sub = draw.sample(host, draw.uniform(2, static_cast<int>(host.size()) - 1));
        if (!has_edge(edges, sub)) edges.push_back(sub);
    }
    if (static_cast<int>(edges.size()) != m) return std::nullopt;
    return edges;
}

std::optional<EdgeList> grow_general(Draw& draw, int n, int m, int r) {
    EdgeList edges;
    for (int attempt = 0; attempt < 50 * m && static_cast<int>(edges.size()) < m; ++attempt) {
        const int s = edges.empty() ? r : draw.uniform(2, r);
        auto e = draw.sample(range(0, n), s);
        if (!has_edge(edges, e)) edges.push_back(e);
    }
    if (static_cast<int>(edges.size()) != m) return std::nullopt;
    return edges;
}

bool gamma_ok(const Hypergraph& g) { return is_gamma_acyclic(g).acyclic; }

long long max_edges(int n, int r) {
    long long total = 0;
    long long binom = 1;  // C(n, k)
    for (int k = 1; k <= r; ++k) {
        binom = binom * (n - k + 1) / k;
        if (k >= 2) total += binom;
        if (total > 1000000) return total;
    }
    return total;
}

}  // namespace

Hypergraph generate(GraphClass cls, int n, int m, int r, std::uint64_t seed) {
    if (n < 0 || m < 0) throw GenerationError("node and edge counts must be nonnegative");
    if (m > 0 && (r < 2 || r > n)) throw GenerationError("rank must lie in [2, n] when there are edges");
    if (m > 0 && m > max_edges(n, r)) throw GenerationError("too many edges for the node count and rank");
    if (cls == GraphClass::Berge && m > 0 && m > n - r + 1) {
        throw GenerationError("a Berge-acyclic hypergraph of rank " + std::to_string(r) + " on " + std::to_string(n) +
                              " nodes has at most " + std::to_string(n - r + 1) + " edges");
    }
    // When the parameters allow a witness, require membership to be tight.
    bool (*strictly_outside)(const AcyclicityReport&) = nullptr;
    bool (*inside)(const AcyclicityReport&) = nullptr;
    switch (cls) {
        case GraphClass::Berge: inside = [](const AcyclicityReport& a) { return a.berge; }; break;
        case GraphClass::Gamma:
            inside = [](const AcyclicityReport& a) { return a.gamma; };
            if (m >= 2 && r >= 3) strictly_outside = [](const AcyclicityReport& a) { return !a.berge; };
            break;
        case GraphClass::Beta:
            inside = [](const AcyclicityReport& a) { return a.beta; };
            if (m >= 3 && r >= 3) strictly_outside = [](const AcyclicityReport& a) { return !a.gamma; };
            break;
        case GraphClass::Alpha:
            inside = [](const AcyclicityReport& a) { return a.alpha; };
            if (m >= 4 && r >= 3) strictly_outside = [](const AcyclicityReport& a) { return !a.beta; };
            break;
        case GraphClass::General:
            inside = [](const AcyclicityReport&) { return true; };
            if (m >= 3 && n >= 3) strictly_outside = [](const AcyclicityReport& a) { return !a.alpha; };
            break;
    }

    Draw draw(seed);
    for (int sample = 0; sample < 1000; ++sample) {
        std::optional<EdgeList> edges;
        if (m == 0) {
            edges = EdgeList{};
        } else {
            switch (cls) {
                case GraphClass::Berge: edges = grow_berge(draw, n, m, r); break;
                case GraphClass::Gamma: edges = grow_checked(draw, n, m, r, gamma_ok); break;
                case GraphClass::Beta: edges = grow_beta(draw, n, m, r); break;
                case GraphClass::Alpha: edges = grow_alpha(draw, n, m, r); break;
                case GraphClass::General: edges = grow_general(draw, n, m, r); break;
            }
        }
        if (!edges) continue;
        auto relabel = range(0, n);
        draw.shuffle(relabel);
        Hypergraph g = to_hypergraph(n, *edges, relabel);
        if (static_cast<int>(g.edge_count()) != m) continue;
        if (m > 0 && rank(g) != r) continue;
        const auto report = classify(g);
        if (!inside(report)) continue;
        if (strictly_outside && !strictly_outside(report)) continue;
        return g;
    }
    throw GenerationError("no " + to_string(cls) + " hypergraph with n=" + std::to_string(n) + " m=" + std::to_string(m) +
                          " r=" + std::to_string(r) + " after 1000 samples");
}

Hypergraph random_hypergraph(int n, int m, int r, std::uint64_t seed) {
    if (n < 0 || m < 0) throw ArgumentError("random hypergraph: counts must be nonnegative");
    Draw draw(seed);
    EdgeList edges;
    if (n >= 2 && r >= 2) {
        for (int attempt = 0; attempt < 50 * m + 50 && static_cast<int>(edges.size()) < m; ++attempt) {
            auto e = draw.sample(range(0, n), draw.uniform(2, std::min(r, n)));
            if (!has_edge(edges, e)) edges.push_back(e);
        }
    }
    return to_hypergraph(n, edges, range(0, n));
}

Instance random_costs(const Hypergraph& g, std::uint64_t seed) {
    Draw draw(seed ^ 0x9e3779b97f4a7c15ULL);
    Instance inst{g, std::vector<Rational>(g.universe()->size()), {}};
    for (Node v : g.nodes()) inst.node_costs[static_cast<std::size_t>(v)] = draw.uniform(-10, 10);
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        int c = draw.uniform(-10, 9);
        if (c >= 0) ++c;
        inst.edge_costs.emplace_back(c);
    }
    return inst;
}

Instance generate_instance(GraphClass cls, int n, int m, int r, std::uint64_t seed) {
    return random_costs(generate(cls, n, m, r, seed), seed);
}

}  // namespace multilin
