#include "multilin/error.hpp"
#include "multilin/oracle.hpp"
#include "multilin/polyhedral.hpp"
#include "multilin/relaxations.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace multilin;

namespace {

std::size_t inequality_count(const PolyhedronH& p) {
    std::size_t k = 0;
    for (const auto& c : p.constraints()) k += c.sense == Sense::LessEqual;
    return k;
}

Hypergraph sub(const Hypergraph& whole, std::vector<int> nodes, std::vector<std::vector<int>> edges) {
    NodeSet vs;
    for (int v : nodes) vs.push_back(static_cast<Node>(v - 1));
    std::vector<NodeSet> es;
    for (const auto& e : edges) {
        NodeSet s;
        for (int v : e) s.push_back(static_cast<Node>(v - 1));
        es.push_back(s);
    }
    return whole.derive(vs, es);
}

}  // namespace

TEST_CASE("multilinear polytope: small cases") {
    SUBCASE("one edge gives the McCormick inequalities") {
        const auto mp = multilinear_polytope(Hypergraph::numbered(2, {{1, 2}}));
        CHECK(mp.variables() == std::vector<std::string>{"z(1)", "z(2)", "z(1,2)"});
        CHECK(inequality_count(mp) == 4);
        CHECK(polytope_equal(mp, standard_linearization(Hypergraph::numbered(2, {{1, 2}}))));
        CHECK(vertices(mp).size() == 4);
    }
    SUBCASE("no edges gives the unit cube") {
        const auto mp = multilinear_polytope(Hypergraph::numbered(3, {}));
        CHECK(inequality_count(mp) == 6);
        CHECK(vertices(mp).size() == 8);
    }
    SUBCASE("every S point is a vertex") {
        const auto g = Hypergraph::numbered(4, {{1, 2, 3}, {2, 3, 4}, {1, 4}});
        const auto mp = multilinear_polytope(g);
        for (const auto& x : enumerate_S(g)) CHECK(support::is_vertex(mp, x));
        CHECK(equals_multilinear_polytope(mp, g));
    }
    SUBCASE("size guard") {
        Limits limits = Limits::unscaled();
        limits.max_hull_nodes = 3;
        CHECK_THROWS_AS(multilinear_polytope(Hypergraph::numbered(4, {{1, 2}}), limits), ResourceError);
    }
}

TEST_CASE("polytope equality") {
    const auto path = Hypergraph::numbered(3, {{1, 2}, {2, 3}});
    CHECK(polytope_equal(multilinear_polytope(path), standard_linearization(path)));
    const auto triangle = Hypergraph::numbered(3, {{1, 2}, {1, 3}, {2, 3}});
    const auto mp = multilinear_polytope(triangle);
    const auto lp = standard_linearization(triangle);
    CHECK_FALSE(polytope_equal(mp, lp));
    CHECK_FALSE(polytope_equal(lp, mp));
    CHECK(polytope_equal(mp, mp));
    CHECK(polytope_equal(lp, lp));
    CHECK_FALSE(equals_multilinear_polytope(lp, triangle));

    SUBCASE("variables matched by name") {
        auto names = mp.variables();
        std::reverse(names.begin(), names.end());
        CHECK(polytope_equal(mp, mp.reordered(names)));
    }
    SUBCASE("different variable sets") {
        CHECK_THROWS_AS(polytope_equal(mp, standard_linearization(path)), ArgumentError);
    }
    SUBCASE("vertex sets") {
        auto pts = enumerate_S(triangle);
        CHECK(vertex_set_equals(mp, pts));
        CHECK_FALSE(vertex_set_equals(lp, pts));
        pts.pop_back();
        CHECK_FALSE(vertex_set_equals(mp, pts));
        const Point half{Rational(1, 2), Rational(1, 2), Rational(1, 2), 0, 0, 0};
        CHECK(support::is_vertex(lp, half));
    }
}

TEST_CASE("decomposability") {
    const auto whole = Hypergraph::numbered(5, {});
    SUBCASE("one shared node") {
        CHECK(decomposability_check(sub(whole, {1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}),
                                    sub(whole, {3, 4, 5}, {{3, 4}, {4, 5}, {3, 5}})));
    }
    SUBCASE("shared edge present in both") {
        CHECK(decomposability_check(sub(whole, {1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}}),
                                    sub(whole, {1, 2, 4}, {{1, 2}, {1, 4}, {2, 4}})));
    }
    SUBCASE("two shared nodes without their edge") {
        // the union contains the 4-cycle 1-3-2-4; its multilinear polytope is not the gluing
        CHECK_FALSE(decomposability_check(sub(whole, {1, 2, 3}, {{1, 3}, {2, 3}}),
                                          sub(whole, {1, 2, 4}, {{1, 4}, {2, 4}})));
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(decomposability_check(sub(whole, {1, 2}, {{1, 2}}), sub(whole, {3, 4}, {{3, 4}})),
                        ArgumentError);
    }
}

TEST_CASE("alpha oracle") {
    CHECK(oracle_alpha_acyclic(Hypergraph::numbered(3, {{1, 2}, {2, 3}, {1, 3}, {1, 2, 3}})));
    CHECK_FALSE(oracle_alpha_acyclic(Hypergraph::numbered(3, {{1, 2}, {2, 3}, {1, 3}})));
    CHECK_FALSE(oracle_alpha_acyclic(Hypergraph::numbered(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
    CHECK(oracle_alpha_acyclic(Hypergraph::numbered(4, {{1, 2, 3}, {1, 3, 4}, {1, 4}})));
    CHECK(oracle_alpha_acyclic(Hypergraph::numbered(0, {})));
}

TEST_CASE("flags") {
    const auto f = oracle_flags(Hypergraph::numbered(3, {{1, 2}, {2, 3}, {1, 2, 3}}));
    CHECK(f == AcyclicityFlags{false, false, true, true});
    CHECK(f.respects_hierarchy());
    CHECK_FALSE(AcyclicityFlags{true, false, true, true}.respects_hierarchy());
    CHECK(classifier_flags(Hypergraph::numbered(3, {{1, 2}, {2, 3}})) == AcyclicityFlags{true, true, true, true});
}

TEST_CASE("exhaustive corpus") {
    CHECK(exhaustive_small_corpus(0).entries.size() == 1);
    CHECK(exhaustive_small_corpus(1).entries.size() == 1);
    // two nodes: no edge, or the edge {1,2}
    CHECK(exhaustive_small_corpus(2).entries.size() == 2);

    const auto corpus = exhaustive_small_corpus(3);
    auto find = [&](std::vector<std::vector<int>> edges) {
        const auto g = Hypergraph::numbered(3, edges);
        for (const auto& e : corpus.entries)
            if (e.graph.node_count() == 3 && canonical_form(e.graph) == canonical_form(g)) return &e;
        return static_cast<const CorpusEntry*>(nullptr);
    };
    const auto* triangle = find({{1, 2}, {1, 3}, {2, 3}});
    REQUIRE(triangle != nullptr);
    CHECK(triangle->flags == AcyclicityFlags{});
    const auto* beta = find({{1, 2}, {2, 3}, {1, 2, 3}});
    REQUIRE(beta != nullptr);
    CHECK(beta->flags == AcyclicityFlags{false, false, true, true});

    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& e : corpus.entries) {
        CHECK(e.flags.respects_hierarchy());
        CHECK(e.provenance == "exhaustive");
        CHECK(seen.insert(canonical_form(e.graph)).second);
    }
    CHECK_THROWS_AS(exhaustive_small_corpus(5), ArgumentError);
}

TEST_CASE("canonical form") {
    const auto a = Hypergraph::numbered(4, {{1, 2}, {2, 3, 4}});
    const auto b = Hypergraph::numbered(4, {{3, 4}, {1, 2, 3}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(Hypergraph::numbered(4, {{1, 2}, {1, 2, 3}})));
}

TEST_CASE("corpus files") {
    const auto corpus = exhaustive_small_corpus(3);
    std::stringstream buf;
    write_corpus(buf, corpus);
    const auto back = read_corpus(buf);
    REQUIRE(back.entries.size() == corpus.entries.size());
    for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
        CHECK(back.entries[i].flags == corpus.entries[i].flags);
        CHECK(canonical_form(back.entries[i].graph) == canonical_form(corpus.entries[i].graph));
        CHECK(back.entries[i].graph.node_count() == corpus.entries[i].graph.node_count());
    }

    SUBCASE("tampered flags") {
        Corpus bad = corpus;
        for (auto& e : bad.entries)
            if (!e.flags.berge) {
                e.flags.berge = true;
                e.flags.gamma = e.flags.beta = e.flags.alpha = true;
                break;
            }
        std::stringstream out;
        write_corpus(out, bad);
        CHECK_THROWS_AS(read_corpus(out), ParseError);
    }
    SUBCASE("malformed") {
        std::stringstream junk("{\"entries\": 3}");
        CHECK_THROWS_AS(read_corpus(junk), ParseError);
        std::stringstream not_json("[[[");
        CHECK_THROWS_AS(read_corpus(not_json), ParseError);
    }
}

TEST_CASE("facet counts on a nested gamma-acyclic family") {
    // edges {1,2} < {1,2,3} < ... < {1..k}
    std::vector<std::size_t> counts;
    for (int k = 2; k <= 6; ++k) {
        std::vector<std::vector<int>> edges;
        for (int j = 2; j <= k; ++j) {
            std::vector<int> e;
            for (int v = 1; v <= j; ++v) e.push_back(v);
            edges.push_back(e);
        }
        const auto g = Hypergraph::numbered(k, edges);
        REQUIRE(oracle_flags(g).gamma);
        counts.push_back(inequality_count(multilinear_polytope(g)));
        MESSAGE("k=" << k << " facets=" << counts.back());
    }
    for (std::size_t i = 1; i < counts.size(); ++i) CHECK(counts[i] > counts[i - 1]);
}
