#include "multilin/error.hpp"
#include "multilin/lp.hpp"
#include "multilin/polyhedral.hpp"
#include "multilin/relaxations.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace multilin;

namespace {

Hypergraph H(int n, std::vector<std::vector<int>> edges) { return Hypergraph::numbered(n, edges); }

NodeSet S(std::vector<int> labels) {
    NodeSet s;
    for (int v : labels) s.push_back(v - 1);
    return make_node_set(s);
}

struct NaiveCut {
    int center = -1;
    std::vector<int> petals;
    Rational violation;
};

/// Every subset of edges meeting the center, filtered by the private-node rule, scored directly.
std::optional<NaiveCut> naive_most_violated(const Hypergraph& g, const Point& x) {
    const auto& E = g.edges();
    const std::size_t n = g.node_count();
    std::optional<NaiveCut> best;
    for (std::size_t c = 0; c < E.size(); ++c) {
        std::vector<int> nb;
        for (std::size_t k = 0; k < E.size(); ++k) {
            if (k != c && intersects(E[c], E[k])) nb.push_back(static_cast<int>(k));
        }
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nb.size()); ++mask) {
            std::vector<int> T;
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if ((mask >> i) & 1U) T.push_back(nb[i]);
            }
            bool ok = true;
            for (int i : T) {
                int own = 0;
                for (Node v : E[c]) {
                    if (!support::member(E[static_cast<std::size_t>(i)], v)) continue;
                    bool shared = false;
                    for (int j : T) shared = shared || (j != i && support::member(E[static_cast<std::size_t>(j)], v));
                    own += !shared;
                }
                ok = ok && own >= 2;
            }
            if (!ok) continue;
            Rational lhs = -x[n + c];
            int free_nodes = 0;
            for (Node v : E[c]) {
                bool covered = false;
                for (int j : T) covered = covered || support::member(E[static_cast<std::size_t>(j)], v);
                if (!covered) {
                    ++free_nodes;
                    lhs += x[static_cast<std::size_t>(std::lower_bound(g.nodes().begin(), g.nodes().end(), v) - g.nodes().begin())];
                }
            }
            for (int j : T) lhs += x[n + static_cast<std::size_t>(j)];
            Rational viol = lhs - (free_nodes + static_cast<int>(T.size()) - 1);
            if (viol <= 0) continue;
            if (!best || viol > best->violation) best = NaiveCut{static_cast<int>(c), T, viol};
        }
    }
    return best;
}

}  // namespace

TEST_CASE("lifted space naming") {
    auto g = H(3, {{1, 2}, {1, 2, 3}});
    auto space = lifted_space(g);
    CHECK(space.variables == std::vector<std::string>{"z(1)", "z(2)", "z(3)", "z(1,2)", "z(1,2,3)"});
}

TEST_CASE("enumerate_S") {
    auto g = H(2, {{1, 2}});
    std::vector<Point> expected = {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}};
    CHECK(enumerate_S(g) == expected);
    CHECK(enumerate_S(H(2, {})).size() == 4);
    auto t = enumerate_S(H(3, {{1, 2, 3}}));
    CHECK(t.size() == 8);
    for (const auto& p : t) CHECK((p[3] == 1) == (p[0] == 1 && p[1] == 1 && p[2] == 1));
    Limits tight;
    tight.max_enumerate_nodes = 3;
    CHECK_THROWS_AS(enumerate_S(H(4, {}), tight), ResourceError);
}

TEST_CASE("standard linearization sizes") {
    CHECK(standard_linearization(H(3, {{1, 2, 3}})).census().inequalities == 8);
    auto mc = standard_linearization(H(2, {{1, 2}}));
    CHECK(mc.census().inequalities == 2 + 4);
    auto box = standard_linearization(H(2, {}));
    CHECK(box.census().inequalities == 4);
    CHECK(vertices(box).size() == 4);
}

TEST_CASE("flower inequalities") {
    auto g = H(8, {{1, 2, 3, 4}, {1, 2, 5}, {3, 4, 6}, {7, 8}});
    auto fl = flower_inequalities(g, S({1, 2, 3, 4}));
    REQUIRE(fl.size() == 3);
    CHECK(fl[0].petals == std::vector<NodeSet>{S({1, 2, 5})});
    CHECK(fl[1].petals == std::vector<NodeSet>{S({1, 2, 5}), S({3, 4, 6})});
    CHECK(fl[2].petals == std::vector<NodeSet>{S({3, 4, 6})});
    auto both = fl[1].constraint(g);
    auto space = lifted_space(g);
    // z(1,2,5) + z(3,4,6) - z(1,2,3,4) <= 1
    CHECK(both.rhs == 1);
    CHECK(both.terms.size() == 3);

    CHECK(flower_inequalities(H(4, {{1, 2, 3}, {3, 4}}), S({1, 2, 3})).empty());

    auto h = H(4, {{1, 2, 3}, {1, 2, 4}});
    auto one = flower_inequalities(h, S({1, 2, 3}));
    REQUIRE(one.size() == 1);
    auto c = one[0].constraint(h);
    CHECK(c.rhs == 1);
    PolyhedronH probe(lifted_space(h).variables);
    probe.add_leq({{"z(3)", 1}, {"z(1,2,4)", 1}, {"z(1,2,3)", -1}}, 1);
    CHECK(probe.constraints()[0] == c);
}

TEST_CASE("flower relaxation") {
    auto berge = H(5, {{1, 2, 3}, {3, 4, 5}});
    CHECK(flower_relaxation(berge).census().inequalities == standard_linearization(berge).census().inequalities);
    auto two = H(4, {{1, 2, 3}, {1, 2, 4}});
    CHECK(flower_relaxation(two).census().inequalities == standard_linearization(two).census().inequalities + 2);
    CHECK(flower_relaxation(H(3, {})).census().inequalities == 6);
    Limits low;
    low.flower_rank_cap = 2;
    CHECK_THROWS_AS(flower_relaxation(H(3, {{1, 2, 3}}), low), ResourceError);
}

TEST_CASE("flower separation") {
    // gamma-acyclic but not Berge: MP^LP has fractional vertices cut by flowers
    auto g = H(4, {{1, 2, 3}, {1, 2, 4}});
    auto vs = vertices(standard_linearization(g));
    auto S_g = enumerate_S(g);
    bool found = false;
    for (const auto& v : vs) {
        if (std::find(S_g.begin(), S_g.end(), v) != S_g.end()) {
            CHECK_FALSE(separate_flower(g, v));
            continue;
        }
        auto cut = separate_flower(g, v);
        if (cut) {
            found = true;
            CHECK(cut->violation > 0);
            CHECK(cut->inequality.violation(g, v) == cut->violation);
        }
    }
    CHECK(found);
    CHECK_FALSE(separate_flower(g, Point(6, 0)));
}

TEST_CASE("flower separation agrees with exhaustive scoring") {
    std::mt19937_64 rng(17);
    int violated = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto g = support::random_hypergraph(rng, 6, 6, 4);
        auto vs = vertices(standard_linearization(g));
        for (const auto& v : vs) {
            auto fast = separate_flower(g, v);
            auto slow = naive_most_violated(g, v);
            REQUIRE(fast.has_value() == slow.has_value());
            if (!fast) continue;
            ++violated;
            CHECK(fast->violation == slow->violation);
            CHECK(fast->inequality.violation(g, v) == fast->violation);
        }
    }
    CHECK(violated > 0);
}

TEST_CASE("flowers and McCormick rows are valid on S") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = support::random_hypergraph(rng, 6, 5, 4);
        auto p = flower_relaxation(g);
        for (const auto& x : enumerate_S(g)) CHECK(p.contains(x));
        auto space = lifted_space(g);
        for (const auto& e0 : g.edges()) {
            for (const auto& f : flower_inequalities(g, e0)) {
                CHECK(satisfies_petal_condition(e0, f.petals));
                const int r = rank(g);
                CHECK(f.constraint(g).terms.size() <= static_cast<std::size_t>(r / 2 + r + 1));
            }
        }
    }
}

TEST_CASE("brute force") {
    Instance mc{H(2, {{1, 2}}), {1, 1}, {-3}};
    auto r = brute_force_opt(mc);
    CHECK(r.value == 1);
    CHECK(r.argmax == Point{0, 1, 0});

    Instance pos{H(3, {{1, 2}, {2, 3}}), {1, 2, 3}, {1, 1}};
    auto p = brute_force_opt(pos);
    CHECK(p.argmax == Point{1, 1, 1, 1, 1});
    CHECK(p.value == 8);

    Instance free_nodes{H(3, {}), {2, -1, Rational(1, 2)}, {}};
    CHECK(brute_force_opt(free_nodes).value == Rational(5, 2));

    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> cost(-10, 10);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = support::random_hypergraph(rng, 7, 6, 4);
        Instance inst{g, {}, {}};
        for (std::size_t i = 0; i < g.node_count(); ++i) {
            Rational q(cost(rng), 1 + trial % 3);
            q.canonicalize();
            inst.node_costs.push_back(q);
        }
        for (std::size_t k = 0; k < g.edge_count(); ++k) {
            int c = 0;
            while (c == 0) c = cost(rng);
            inst.edge_costs.emplace_back(c);
        }
        Rational best = support::evaluate_polynomial(g, inst.node_costs, inst.edge_costs, 0);
        for (std::uint64_t m = 1; m < (1U << g.node_count()); ++m) {
            best = std::max(best, support::evaluate_polynomial(g, inst.node_costs, inst.edge_costs, m));
        }
        auto bf = brute_force_opt(inst);
        CHECK(bf.value == best);
        auto c = lifted_objective(inst);
        Rational at = 0;
        for (std::size_t j = 0; j < c.size(); ++j) at += c[j] * bf.argmax[j];
        CHECK(at == best);
    }
}
