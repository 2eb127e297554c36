#include "multilin/error.hpp"
#include "multilin/lp.hpp"
#include "multilin/polyhedral.hpp"
#include "multilin/rational.hpp"
#include "multilin/relaxations.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace multilin;

namespace {

PolyhedronH unit_box(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    PolyhedronH p(names);
    for (const auto& v : names) {
        p.add_leq({{v, 1}}, 1);
        p.add_leq({{v, -1}}, 0);
    }
    return p;
}

Point Q(std::vector<std::string> values) {
    Point x;
    for (auto& s : values) x.push_back(parse_rational(s));
    return x;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK(to_string(Rational(-2, 4)) == "-1/2");
    CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
    CHECK(to_decimal(Rational(-5, 2), 3) == "-2.5");
}

TEST_CASE("lp basics") {
    PolyhedronH p({"z"});
    p.add_leq({{"z", 1}}, 1);
    p.add_leq({{"z", -1}}, 0);
    auto r = lp_max(p, {1});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.value == 1);

    PolyhedronH bad({"z"});
    bad.add_leq({{"z", 1}}, 0);
    bad.add_leq({{"z", -1}}, -1);
    CHECK(lp_max(bad, {1}).status == LpStatus::Infeasible);

    PolyhedronH open({"z"});
    open.add_leq({{"z", -1}}, 0);
    CHECK(lp_max(open, {1}).status == LpStatus::Unbounded);

    PolyhedronH eq({"a", "b"});
    eq.add_eq({{"a", 1}, {"b", 1}}, 1);
    eq.add_leq({{"a", -1}}, 0);
    eq.add_leq({{"b", -1}}, 0);
    auto e = lp_max(eq, {2, 1});
    CHECK(e.value == 2);
    CHECK(e.argmax == Q({"1", "0"}));
}

TEST_CASE("lp over the McCormick system") {
    auto g = Hypergraph::numbered(2, {{1, 2}});
    auto r = lp_max(standard_linearization(g), {1, 1, -3});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 1);
    CHECK((r.argmax == Q({"1", "0", "0"}) || r.argmax == Q({"0", "1", "0"})));
}

TEST_CASE("vertices") {
    CHECK(vertices(unit_box(2)).size() == 4);

    auto tri = Hypergraph::numbered(3, {{1, 2}, {1, 3}, {2, 3}});
    auto vs = vertices(standard_linearization(tri));
    auto half = Q({"1/2", "1/2", "1/2", "0", "0", "0"});
    CHECK(std::find(vs.begin(), vs.end(), half) != vs.end());

    auto g = Hypergraph::numbered(2, {{1, 2}});
    CHECK(vertices(standard_linearization(g)) == enumerate_S(g));

    PolyhedronH ray({"z"});
    ray.add_leq({{"z", -1}}, 0);
    CHECK_THROWS_AS(vertices(ray), PreconditionError);

    PolyhedronH empty({"z"});
    empty.add_leq({{"z", 1}}, -1);
    empty.add_leq({{"z", -1}}, 0);
    CHECK(vertices(empty).empty());
}

TEST_CASE("hull facets") {
    auto sq = hull_facets({Q({"0", "0"}), Q({"0", "1"}), Q({"1", "0"}), Q({"1", "1"})});
    CHECK(sq.census().inequalities == 4);
    CHECK(sq.census().equations == 0);

    auto g = Hypergraph::numbered(2, {{1, 2}});
    auto mc = hull_facets(lifted_space(g).variables, enumerate_S(g));
    CHECK(mc.census().inequalities == 4);
    CHECK(vertices(mc) == enumerate_S(g));

    auto pt = hull_facets({Q({"1", "2", "3"})});
    CHECK(pt.census().inequalities == 0);
    CHECK(pt.census().equations == 3);
}

TEST_CASE("membership") {
    std::vector<Point> gens = {Q({"0", "0"}), Q({"2", "2"})};
    CHECK(membership(Q({"1", "1"}), gens));
    CHECK(membership(gens[1], gens));
    CHECK_FALSE(membership(Q({"1", "0"}), gens));

    auto tri = Hypergraph::numbered(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(membership(Q({"1/2", "1/2", "1/2", "0", "0", "0"}), enumerate_S(tri)));
}

TEST_CASE("project vertices") {
    auto sq = unit_box(2);
    auto proj = project_vertices(sq, {"x1"});
    CHECK(proj == std::vector<Point>{Q({"0"}), Q({"1"})});
    CHECK(project_vertices(sq, sq.variables()) == vertices(sq));
}

TEST_CASE("vertex enumeration matches independent checks on random relaxations") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = support::random_hypergraph(rng, 5, 4, 3);
        auto p = standard_linearization(g);
        auto vs = vertices(p);
        for (const auto& v : vs) CHECK(support::is_vertex(p, v));
        // every LP optimum over random costs is attained at an enumerated vertex
        std::uniform_int_distribution<int> cost(-5, 5);
        for (int k = 0; k < 5; ++k) {
            std::vector<Rational> c(p.dimension());
            for (auto& ci : c) ci = cost(rng);
            auto r = lp_max(p, c);
            REQUIRE(r.status == LpStatus::Optimal);
            Rational best = -1000000;
            for (const auto& v : vs) {
                Rational val = 0;
                for (std::size_t j = 0; j < v.size(); ++j) val += c[j] * v[j];
                if (val > best) best = val;
            }
            CHECK(best == r.value);
            CHECK(std::find(vs.begin(), vs.end(), r.argmax) != vs.end());
        }
        // hull of the vertices gives back the same vertices
        auto h = hull_facets(p.variables(), vs);
        CHECK(vertices(h) == vs);
    }
}
