#include "multilin/verify.hpp"

#include "multilin/acyclicity.hpp"
#include "multilin/error.hpp"
#include "multilin/extform.hpp"
#include "multilin/oracle.hpp"
#include "multilin/pipeline.hpp"
#include "multilin/polyhedral.hpp"
#include "multilin/relaxations.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

namespace multilin {

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.passed; }));
}

std::string SuiteReport::summary() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.1f s)", seconds);
    return suite + ": " + std::to_string(cases.size() - failures()) + "/" + std::to_string(cases.size()) +
           " cases passed" + buf;
}

namespace {

class Runner {
public:
    Runner(std::string suite, const CaseObserver& observe)
        : observe_(observe), started_(std::chrono::steady_clock::now()) {
        report_.suite = std::move(suite);
    }

    /// fn returns an empty string on success and a reason otherwise.
    template <typename F>
    void run(const std::string& name, F&& fn) {
        CaseResult r{name, false, {}};
        try {
            r.detail = fn();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        report_.cases.push_back(r);
        if (observe_) observe_(r);
    }

    SuiteReport finish() {
        report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
        return std::move(report_);
    }

private:
    SuiteReport report_;
    const CaseObserver& observe_;
    std::chrono::steady_clock::time_point started_;
};

int pick(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string edges_text(const Hypergraph& g) {
    std::string out = "{";
    for (std::size_t k = 0; k < g.edge_count(); ++k) out += (k ? "," : "") + g.set_label(g.edges()[k]);
    return out + "}";
}

struct Sample {
    Hypergraph graph;
    std::string origin;
};

/// Mixes class-certified generators with unstructured random hypergraphs so both sides
/// of every class boundary show up.
Sample mixed_sample(std::uint64_t seed, int max_n, int max_m, int max_r) {
    std::mt19937_64 rng(seed);
    const int n = pick(rng, 4, max_n);
    const int r = std::min(pick(rng, 2, max_r), n);
    int m = pick(rng, 1, max_m);
    const int kind = static_cast<int>(seed % 6);
    if (kind < 5) {
        const auto cls = static_cast<GraphClass>(kind);
        if (cls == GraphClass::Berge) m = std::min(m, n - r + 1);
        try {
            return {generate(cls, n, m, r, seed), to_string(cls)};
        } catch (const GenerationError&) {
            // fall through to an unstructured sample
        }
    }
    return {random_hypergraph(n, m, r, seed), "random"};
}

std::string expect_equal(bool got, bool want, const std::string& what) {
    if (got == want) return {};
    return what + (got ? " holds but was expected not to" : " fails but was expected to hold");
}

/// All graphs (rank 2) on exactly n nodes, one per isomorphism class.
std::vector<Hypergraph> all_graphs(int n) {
    std::vector<std::vector<int>> pairs;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) pairs.push_back({a, b});
    }
    std::vector<Hypergraph> out;
    for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
        std::vector<std::vector<int>> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (mask >> k & 1) edges.push_back(pairs[k]);
        }
        auto g = Hypergraph::numbered(n, edges);
        std::vector<std::vector<int>> sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        if (canonical_form(g) == sorted) out.push_back(g);
    }
    return out;
}

std::string relaxation_case(const PolyhedronH& relaxation, const Hypergraph& g, bool expected, const Limits& limits) {
    return expect_equal(equals_multilinear_polytope(relaxation, g, limits), expected, "relaxation = MP(G)");
}

}  // namespace

SuiteReport verify_standard_linearization(const Limits& limits, const CaseObserver& observe) {
    Runner runner("berge", observe);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : all_graphs(n)) {
            runner.run("graph n=" + std::to_string(n) + " " + edges_text(g), [&] {
                const bool berge = is_berge_acyclic(g).acyclic;
                return expect_equal(polytope_equal(standard_linearization(g), multilinear_polytope(g, limits), limits), berge,
                                    "MP^LP = MP");
            });
        }
    }
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto s = mixed_sample(1000 + i, 8, 8, 4);
        runner.run("random #" + std::to_string(i) + " " + s.origin + " " + edges_text(s.graph), [&] {
            return relaxation_case(standard_linearization(s.graph), s.graph, is_berge_acyclic(s.graph).acyclic, limits);
        });
    }
    return runner.finish();
}

SuiteReport verify_flower_relaxation(const Limits& limits, const CaseObserver& observe) {
    Runner runner("gamma", observe);
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto s = mixed_sample(1000 + i, 8, 8, 4);
        runner.run("random #" + std::to_string(i) + " " + s.origin + " " + edges_text(s.graph), [&] {
            return relaxation_case(flower_relaxation(s.graph, limits), s.graph, is_gamma_acyclic(s.graph).acyclic, limits);
        });
    }
    return runner.finish();
}

SuiteReport verify_beta_formulation(const Limits& limits, const CaseObserver& observe) {
    Runner runner("beta", observe);
    std::uint64_t seed = 2000;
    for (int i = 0; i < 100; ++i) {
        std::optional<Instance> inst;
        std::string label;
        while (!inst) {
            std::mt19937_64 rng(seed);
            // every tenth instance sits at the top of the size range
            const int n = i % 10 == 9 ? 20 : pick(rng, 3, 12);
            const int r = std::min(pick(rng, 2, 5), n);
            const int m = pick(rng, 1, n + 3);
            try {
                inst = generate_instance(GraphClass::Beta, n, m, r, seed);
                label = "seed " + std::to_string(seed) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                        " r=" + std::to_string(r);
            } catch (const GenerationError&) {
            }
            ++seed;
        }
        runner.run(label, [&]() -> std::string {
            const Hypergraph& g = inst->graph;
            const auto ef = beta_ef(g, limits);
            const auto census = ef.polyhedron.census();
            const long long nv = static_cast<long long>(g.node_count());
            const long long ne = static_cast<long long>(g.edge_count());
            const long long r = ne ? rank(g) : 2;
            if (static_cast<long long>(census.inequalities) > (3 * r - 4) * nv + 4 * ne) {
                return "inequality count " + std::to_string(census.inequalities) + " above the bound";
            }
            if (static_cast<long long>(census.variables) > (r - 1) * nv + ne) {
                return "variable count " + std::to_string(census.variables) + " above the bound";
            }
            const auto lp = solve(*inst, Strategy::Beta, limits);
            const auto bf = brute_force_opt(*inst, limits);
            if (lp.value != bf.value) return "LP value " + to_string(lp.value) + " but brute force " + to_string(bf.value);
            if (g.node_count() <= 10) {
                const auto ex = ef_exactness_check(ef, g, limits);
                if (!ex.exact) return "projection differs from MP(G)";
            }
            return {};
        });
    }
    return runner.finish();
}

SuiteReport verify_chain_census(const Limits& limits, const CaseObserver& observe) {
    Runner runner("chain-census", observe);
    for (int f = 2; f <= 6; ++f) {
        // inner sizes: any subset of {2, ..., f-1}
        for (unsigned mask = 0; mask < (1u << std::max(0, f - 2)); ++mask) {
            std::vector<int> signature;
            for (int s = 2; s < f; ++s) {
                if (mask >> (s - 2) & 1) signature.push_back(s);
            }
            signature.push_back(f);
            std::string label = "signature";
            for (int s : signature) label += " " + std::to_string(s);
            runner.run(label, [&]() -> std::string {
                // apex is the last node and the chain grows downwards, so the relabelling is exercised
                const auto base = Hypergraph::numbered(f, {});
                ChainBlock block{f - 1, {}};
                for (int s : signature) {
                    NodeSet e;
                    for (int v = f - s; v < f; ++v) e.push_back(v);
                    block.chain.push_back(e);
                }
                const auto facets = chain_block_facets(base, block, limits);
                const auto census = facets.census();
                if (census.inequalities > static_cast<std::size_t>(5 * f + 2)) {
                    return std::to_string(census.inequalities) + " inequalities, above 5|f|+2";
                }
                const auto closure = block.closure(base);
                if (!polytope_equal(facets, multilinear_polytope(closure, limits), limits)) {
                    return "block differs from MP of its closure";
                }
                return {};
            });
        }
    }
    return runner.finish();
}

SuiteReport verify_alpha_formulation(const Limits& limits, const CaseObserver& observe) {
    Runner runner("alpha", observe);
    std::uint64_t seed = 3000;
    for (int i = 0; i < 50; ++i) {
        std::optional<Hypergraph> g;
        std::string label;
        while (!g) {
            std::mt19937_64 rng(seed);
            const int n = i % 10 == 9 ? 12 : pick(rng, 4, 11);
            const int r = std::min(pick(rng, 2, 4), n);
            const int m = pick(rng, 1, 8);
            try {
                g = generate(GraphClass::Alpha, n, m, r, seed);
                label = "seed " + std::to_string(seed) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                        " r=" + std::to_string(r);
            } catch (const GenerationError&) {
            }
            ++seed;
        }
        runner.run(label, [&]() -> std::string {
            const auto ef = alpha_ef(*g, limits);
            const int r = g->edge_count() ? rank(*g) : 1;
            const std::size_t maximal = reduction(*g).edge_count();
            const std::size_t bound = (std::size_t{1} << r) * std::min(g->node_count(), maximal);
            if (ef.lambda_count > bound) return "lambda count " + std::to_string(ef.lambda_count) + " above the bound";
            for (const auto& c : ef.polyhedron.constraints()) {
                if (!c.has_unit_coefficients() || (c.rhs != 0 && c.rhs != 1 && c.rhs != -1)) {
                    return "coefficient or right-hand side outside {0, 1, -1}";
                }
            }
            if (!ef_exactness_check(ef, *g, limits).exact) return "projection differs from MP(G)";
            return {};
        });
    }
    return runner.finish();
}

SuiteReport verify_junction_formulation(const Limits& limits, const CaseObserver& observe) {
    Runner runner("junction", observe);
    std::uint64_t seed = 4000;
    for (int i = 0; i < 50; ++i) {
        std::optional<Hypergraph> g;
        std::string label;
        while (!g) {
            std::mt19937_64 rng(seed);
            const int n = 5 + i % 6;
            const int r = std::min(pick(rng, 2, 4), n);
            const int m = pick(rng, 2, std::min(8, n));
            const auto cls = static_cast<GraphClass>(i % 5);
            try {
                auto candidate = cls == GraphClass::Berge ? generate(cls, n, std::min(m, n - r + 1), r, seed)
                                                          : generate(cls, n, m, r, seed);
                if (min_fill_decomposition(candidate).width <= 6) {
                    g = std::move(candidate);
                    label = "seed " + std::to_string(seed) + " " + to_string(cls) + " n=" + std::to_string(n) +
                            " m=" + std::to_string(g->edge_count()) + " r=" + std::to_string(r);
                }
            } catch (const GenerationError&) {
            }
            ++seed;
        }
        runner.run(label, [&]() -> std::string {
            const auto ef = junction_ef(*g, limits);
            if (!ef_exactness_check(ef, *g, limits).exact) return "projection differs from MP(G)";
            return {};
        });
    }
    return runner.finish();
}

SuiteReport verify_separation(const Limits& limits, const CaseObserver& observe) {
    Runner runner("separation", observe);
    int points = 0;
    for (std::uint64_t seed = 5000; points < 100; ++seed) {
        const auto s = mixed_sample(seed, 8, 12, 4);
        const Hypergraph& g = s.graph;
        if (g.edge_count() == 0) continue;
        // a few fractional vertices and one integral vertex per hypergraph
        std::vector<Point> chosen;
        int fractional = 0;
        int integral = 0;
        walk_vertices(
            standard_linearization(g),
            [&](const Point& x) {
                const bool binary = std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0 || v == 1; });
                if (binary ? integral < 1 : fractional < 3) {
                    chosen.push_back(x);
                    (binary ? integral : fractional)++;
                }
                return integral + fractional < 4;
            },
            limits);
        for (const auto& x : chosen) {
            if (points >= 100) break;
            ++points;
            runner.run("seed " + std::to_string(seed) + " " + edges_text(g) + " at " + format_point(x), [&]() -> std::string {
                std::optional<FlowerCut> best;
                for (const auto& center : g.edges()) {
                    for (auto& f : flower_inequalities(g, center)) {
                        auto v = f.violation(g, x);
                        if (v > 0 && (!best || v > best->violation)) best = FlowerCut{std::move(f), std::move(v)};
                    }
                }
                const auto cut = separate_flower(g, x, limits);
                if (cut.has_value() != best.has_value()) {
                    return cut ? "separation found " + cut->inequality.describe(g) + " but enumeration found none"
                               : "enumeration found " + best->inequality.describe(g) + " but separation found none";
                }
                if (!cut) return {};
                if (cut->violation != best->violation) {
                    return "violation " + to_string(cut->violation) + " below the maximum " + to_string(best->violation);
                }
                if (cut->inequality.center != best->inequality.center || cut->inequality.petals != best->inequality.petals) {
                    return "tie-break picked " + cut->inequality.describe(g) + " instead of " + best->inequality.describe(g);
                }
                if (cut->inequality.violation(g, x) != cut->violation) return "reported violation is inconsistent";
                return {};
            });
        }
    }
    return runner.finish();
}

SuiteReport verify_classifier(const Limits&, const CaseObserver& observe) {
    Runner runner("exhaustive", observe);
    auto check = [](const Hypergraph& g, const AcyclicityFlags& truth) -> std::string {
        const auto got = classifier_flags(g);
        if (!truth.respects_hierarchy()) return "oracle flags break the hierarchy: " + truth.describe();
        if (!got.respects_hierarchy()) return "classifier flags break the hierarchy: " + got.describe();
        if (got != truth) return "classifier " + got.describe() + " vs oracle " + truth.describe();
        return {};
    };
    for (int n = 0; n <= 4; ++n) {
        for (const auto& entry : exhaustive_small_corpus(n).entries) {
            runner.run("exhaustive n=" + std::to_string(n) + " " + edges_text(entry.graph),
                       [&] { return check(entry.graph, entry.flags); });
        }
    }
    for (std::uint64_t i = 0; i < 500; ++i) {
        const auto s = mixed_sample(6000 + i, 8, 8, 4);
        runner.run("random #" + std::to_string(i) + " " + s.origin + " " + edges_text(s.graph),
                   [&] { return check(s.graph, oracle_flags(s.graph)); });
    }
    return runner.finish();
}

SuiteReport verify_padberg(const Limits& limits, const CaseObserver& observe) {
    Runner runner("padberg", observe);
    const auto triangle = Hypergraph::numbered(3, {{1, 2}, {1, 3}, {2, 3}});
    const Point half{Rational(1, 2), Rational(1, 2), Rational(1, 2), 0, 0, 0};
    runner.run("triangle has the half vertex", [&]() -> std::string {
        const auto vs = vertices(standard_linearization(triangle), limits);
        if (std::find(vs.begin(), vs.end(), half) == vs.end()) return "(1/2,1/2,1/2,0,0,0) is not a vertex";
        return {};
    });
    runner.run("half vertex lies outside MP(triangle)", [&]() -> std::string {
        if (membership(half, enumerate_S(triangle, limits))) return "(1/2,1/2,1/2,0,0,0) is a convex combination of S";
        return {};
    });
    runner.run("triangle MP^LP differs from MP", [&] {
        return expect_equal(polytope_equal(standard_linearization(triangle), multilinear_polytope(triangle, limits), limits),
                            false, "MP^LP = MP");
    });
    const std::vector<std::pair<std::string, Hypergraph>> forests{
        {"single edge", Hypergraph::numbered(2, {{1, 2}})},
        {"path on 4 nodes", Hypergraph::numbered(4, {{1, 2}, {2, 3}, {3, 4}})},
        {"star on 5 nodes", Hypergraph::numbered(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})},
        {"two components", Hypergraph::numbered(5, {{1, 2}, {3, 4}, {4, 5}})},
        {"isolated node", Hypergraph::numbered(3, {{1, 2}})},
    };
    for (const auto& [name, g] : forests) {
        runner.run(name + ": MP^LP = MP", [&] {
            return expect_equal(polytope_equal(standard_linearization(g), multilinear_polytope(g, limits), limits), true,
                                "MP^LP = MP");
        });
    }
    return runner.finish();
}

namespace {

/// The hypergraph on `universe` obtained by sending node i of g to map[i].
Hypergraph embed(const Hypergraph& universe, const Hypergraph& g, const std::vector<Node>& map) {
    NodeSet nodes;
    for (Node v : g.nodes()) nodes.push_back(map[static_cast<std::size_t>(v)]);
    std::vector<NodeSet> edges;
    for (const auto& e : g.edges()) {
        NodeSet f;
        for (Node v : e) f.push_back(map[static_cast<std::size_t>(v)]);
        edges.push_back(make_node_set(f));
    }
    return universe.derive(make_node_set(nodes), edges);
}

std::vector<NodeSet> subsets_at_least_two(const NodeSet& s) {
    std::vector<NodeSet> out;
    for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
        if (std::popcount(mask) < 2) continue;
        NodeSet e;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (mask >> i & 1) e.push_back(s[i]);
        }
        out.push_back(e);
    }
    return out;
}

}  // namespace

SuiteReport verify_decomposition(const Limits& limits, const CaseObserver& observe) {
    Runner runner("decomposition", observe);
    for (std::uint64_t seed = 7000; seed < 7020; ++seed) {
        std::mt19937_64 rng(seed);
        const int k = pick(rng, 2, 3);
        const int a = pick(rng, 1, 3);
        const int b = pick(rng, 1, 3);
        const auto universe = Hypergraph::numbered(k + a + b, {});
        NodeSet shared, left, right;
        for (int v = 0; v < k; ++v) shared.push_back(v);
        for (int v = k; v < k + a; ++v) left.push_back(v);
        for (int v = k + a; v < k + a + b; ++v) right.push_back(v);
        auto part = [&](const NodeSet& own) {
            const NodeSet nodes = set_union(shared, own);
            std::set<NodeSet> edges;
            for (auto& e : subsets_at_least_two(shared)) edges.insert(e);
            const int extra = pick(rng, 1, 3);
            for (int t = 0; t < extra; ++t) {
                NodeSet e{own[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(own.size()) - 1))]};
                const int size = pick(rng, 2, std::min<int>(3, static_cast<int>(nodes.size())));
                while (static_cast<int>(e.size()) < size) {
                    const Node v = nodes[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(nodes.size()) - 1))];
                    if (!contains(e, v)) e = make_node_set([&] { auto c = e; c.push_back(v); return c; }());
                }
                edges.insert(e);
            }
            return universe.derive(nodes, {edges.begin(), edges.end()});
        };
        const auto g1 = part(left);
        const auto g2 = part(right);
        runner.run("complete intersection seed " + std::to_string(seed) + " " + edges_text(g1) + " + " + edges_text(g2),
                   [&] { return expect_equal(decomposability_check(g1, g2, limits), true, "gluing"); });
    }

    std::vector<Hypergraph> pieces;
    for (int n = 2; n <= 3; ++n) {
        for (const auto& entry : exhaustive_small_corpus(n).entries) {
            if (entry.graph.edge_count() > 0) pieces.push_back(entry.graph);
        }
    }
    for (const auto& p : pieces) {
        for (const auto& q : pieces) {
            const int np = static_cast<int>(p.node_count());
            const int nq = static_cast<int>(q.node_count());
            const auto universe = Hypergraph::numbered(np + nq - 1, {});
            for (int sp = 0; sp < np; ++sp) {
                for (int sq = 0; sq < nq; ++sq) {
                    // shared node is np-1 in the union; p fills 0..np-1, q fills np-1..np+nq-2
                    std::vector<Node> mp(static_cast<std::size_t>(np)), mq(static_cast<std::size_t>(nq));
                    for (int v = 0, next = 0; v < np; ++v) mp[static_cast<std::size_t>(v)] = v == sp ? np - 1 : next++;
                    for (int v = 0, next = np; v < nq; ++v) mq[static_cast<std::size_t>(v)] = v == sq ? np - 1 : next++;
                    const auto g1 = embed(universe, p, mp);
                    const auto g2 = embed(universe, q, mq);
                    runner.run("one shared node " + edges_text(g1) + " + " + edges_text(g2),
                               [&] { return expect_equal(decomposability_check(g1, g2, limits), true, "gluing"); });
                }
            }
        }
    }
    return runner.finish();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"padberg", "berge",      "gamma",         "beta",
                                                "alpha",   "separation", "decomposition", "exhaustive"};
    return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const Limits& limits, const CaseObserver& observe) {
    if (name == "padberg") return {verify_padberg(limits, observe)};
    if (name == "berge") return {verify_standard_linearization(limits, observe)};
    if (name == "gamma") return {verify_flower_relaxation(limits, observe)};
    if (name == "beta") return {verify_beta_formulation(limits, observe), verify_chain_census(limits, observe)};
    if (name == "alpha") return {verify_alpha_formulation(limits, observe), verify_junction_formulation(limits, observe)};
    if (name == "separation") return {verify_separation(limits, observe)};
    if (name == "decomposition") return {verify_decomposition(limits, observe)};
    if (name == "exhaustive") return {verify_classifier(limits, observe)};
    throw ArgumentError("unknown suite '" + name + "'");
}

}  // namespace multilin
