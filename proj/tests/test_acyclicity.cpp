#include "multilin/acyclicity.hpp"
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

}  // namespace

TEST_CASE("berge acyclicity") {
    CHECK(is_berge_acyclic(H(5, {{1, 2, 3}, {3, 4, 5}})).acyclic);
    CHECK(is_berge_acyclic(H(2, {{1, 2}})).acyclic);

    auto g = H(4, {{1, 2, 3}, {2, 3, 4}});
    auto r = is_berge_acyclic(g);
    REQUIRE_FALSE(r.acyclic);
    REQUIRE(r.cycle);
    CHECK(is_valid_cycle(g, *r.cycle));
    CHECK(r.cycle->nodes == std::vector<Node>{S({2})[0], S({3})[0]});
    CHECK(r.cycle->edges == std::vector<NodeSet>{S({1, 2, 3}), S({2, 3, 4})});
    CHECK(r.cycle->describe(g) == "2,{1,2,3},3,{2,3,4}");
}

TEST_CASE("gamma acyclicity") {
    CHECK(is_gamma_acyclic(H(4, {{1, 2, 3}, {2, 3, 4}})).acyclic);
    CHECK(is_gamma_acyclic(H(5, {{1, 2, 3}, {3, 4, 5}})).acyclic);
    auto g = H(3, {{1, 2}, {2, 3}, {1, 2, 3}});
    auto r = is_gamma_acyclic(g);
    REQUIRE_FALSE(r.acyclic);
    REQUIRE(r.cycle);
    CHECK(is_valid_cycle(g, *r.cycle));
    CHECK(r.cycle->describe(g) == "2,{1,2},1,{1,2,3},3,{2,3}");
}

TEST_CASE("beta acyclicity") {
    auto g = H(3, {{1, 2}, {2, 3}, {1, 2, 3}});
    auto r = is_beta_acyclic(g);
    REQUIRE(r.acyclic);
    CHECK(r.order.size() == 3);
    CHECK(r.order.front() == 0);
    CHECK(is_nest_point_elimination_order(g, r.order));

    auto tri = H(3, {{1, 2}, {2, 3}, {1, 3}});
    auto t = is_beta_acyclic(tri);
    CHECK_FALSE(t.acyclic);
    REQUIRE(t.cycle);
    CHECK(t.cycle->kind == CycleKind::Beta);
    CHECK(t.cycle->length() == 3);
    CHECK(is_valid_cycle(tri, *t.cycle));

    auto empty = H(4, {});
    auto e = is_beta_acyclic(empty);
    CHECK(e.acyclic);
    CHECK(e.order.size() == 4);
}

TEST_CASE("alpha acyclicity") {
    auto g = H(3, {{1, 2}, {2, 3}, {1, 3}, {1, 2, 3}});
    auto r = is_alpha_acyclic(g);
    REQUIRE(r.acyclic);
    REQUIRE(r.ordering);
    CHECK(r.ordering->edges == std::vector<NodeSet>{S({1, 2, 3})});
    CHECK_FALSE(is_alpha_acyclic(H(3, {{1, 2}, {2, 3}, {1, 3}})).acyclic);
    CHECK(is_alpha_acyclic(H(3, {{1, 2, 3}})).acyclic);
    auto chain = H(6, {{1, 2, 3}, {3, 4}, {4, 5, 6}, {2, 3, 4}});
    auto c = is_alpha_acyclic(chain);
    REQUIRE(c.acyclic);
    CHECK(is_rip_ordering(*c.ordering));
}

TEST_CASE("classify") {
    auto a = classify(H(5, {{1, 2, 3}, {3, 4, 5}}));
    CHECK((a.berge && a.gamma && a.beta && a.alpha));
    CHECK(a.strongest_class() == "berge-acyclic");

    auto b = classify(H(3, {{1, 2}, {2, 3}, {1, 2, 3}}));
    CHECK_FALSE(b.berge);
    CHECK_FALSE(b.gamma);
    CHECK(b.beta);
    CHECK(b.alpha);
    CHECK(b.summary() == "beta-acyclic (not gamma)");
    REQUIRE(b.gamma_cycle);

    auto c = classify(H(3, {{1, 2}, {2, 3}, {1, 3}, {1, 2, 3}}));
    CHECK_FALSE(c.beta);
    CHECK(c.alpha);

    auto empty = classify(H(3, {}));
    CHECK((empty.berge && empty.gamma && empty.beta && empty.alpha));
}

TEST_CASE("oracle cycle search") {
    auto tri = H(3, {{1, 2}, {2, 3}, {1, 3}});
    auto w = oracle_find_cycle(tri, CycleKind::Beta);
    REQUIRE(w);
    CHECK(w->length() == 3);
    CHECK_FALSE(oracle_find_cycle(H(4, {{1, 2, 3}, {2, 3, 4}}), CycleKind::Gamma));
    auto g = H(3, {{1, 2}, {2, 3}, {1, 2, 3}});
    auto gw = oracle_find_cycle(g, CycleKind::Gamma);
    REQUIRE(gw);
    CHECK(is_valid_cycle(g, *gw));
}

TEST_CASE("classifier agrees with a literal cycle search") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = support::random_hypergraph(rng, 6, 1 + trial % 5, 4);
        auto rep = classify(g);
        CHECK(rep.berge == !support::has_cycle(g, 0));
        CHECK(rep.gamma == !support::has_cycle(g, 1));
        CHECK(rep.beta == !support::has_cycle(g, 2));
        CHECK((!rep.berge || rep.gamma));
        CHECK((!rep.gamma || rep.beta));
        CHECK((!rep.beta || rep.alpha));
        CHECK(is_alpha_acyclic(g).acyclic == is_alpha_acyclic(reduction(g)).acyclic);
        if (rep.beta) CHECK(is_nest_point_elimination_order(g, rep.nest_point_order));
        if (rep.alpha) CHECK(is_rip_ordering(*rep.rip_ordering));
        for (const auto* c : {&rep.berge_cycle, &rep.gamma_cycle, &rep.beta_cycle}) {
            if (*c) CHECK(is_valid_cycle(g, **c));
        }
    }
}
