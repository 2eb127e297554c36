#include "multilin/error.hpp"
#include "multilin/instance_io.hpp"
#include "multilin/relaxations.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace multilin;

namespace {

const char* const kSample = R"({
  "nodes": ["a", "b", "c"],
  "edges": [["b", "a"], ["a", "b", "c"]],
  "node_costs": {"a": 3, "c": "-1/2"},
  "edge_costs": {"a,b": -2, "c,b,a": "0.25"},
  "meta": {"class": "beta", "seed": 4}
})";

}  // namespace

TEST_CASE("instance parsing") {
    const auto doc = parse_instance_text(kSample);
    const auto& g = doc.instance.graph;
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(doc.instance.node_cost(g.universe()->find("a")) == 3);
    CHECK(doc.instance.node_cost(g.universe()->find("b")) == 0);
    CHECK(doc.instance.node_cost(g.universe()->find("c")) == Rational(-1, 2));
    const NodeSet ab{g.universe()->find("a"), g.universe()->find("b")};
    CHECK(doc.instance.edge_costs[static_cast<std::size_t>(g.edge_index(ab))] == -2);
    CHECK(doc.meta.at("class") == "beta");
    CHECK(doc.meta.at("seed") == "4");
}

TEST_CASE("instance round trip") {
    const auto doc = parse_instance_text(kSample);
    const auto text = instance_to_string(doc);
    const auto again = parse_instance_text(text);
    CHECK(again.instance == doc.instance);
    CHECK(again.meta == doc.meta);
    CHECK(instance_to_string(again) == text);
    CHECK(text.find("\"1/4\"") != std::string::npos);
    CHECK(text.find("\"a,b\": -2") != std::string::npos);

    SUBCASE("files") {
        const auto path = (std::filesystem::temp_directory_path() / "multilin_io_roundtrip.json").string();
        write_instance_file(path, doc);
        CHECK(read_instance_file(path).instance == doc.instance);
        std::filesystem::remove(path);
        CHECK_THROWS_AS(read_instance_file(path), IoError);
        CHECK_THROWS_AS(write_instance_file("/nonexistent-dir/x.json", doc), IoError);
    }
}

TEST_CASE("instance parse errors") {
    const std::vector<std::string> bad{
        "not json",
        "[]",
        R"({"nodes": ["a"], "edges": []})" "x",
        R"({"nodes": ["a","b"], "edges": [["a","b"]], "edge_costs": {"a,b": 1}, "extra": 1})",
        R"({"nodes": ["a b"], "edges": []})",
        R"({"nodes": ["a","a"], "edges": []})",
        R"({"nodes": ["a","b"], "edges": [["a","a"]], "edge_costs": {"a,b": 1}})",
        R"({"nodes": ["a","b"], "edges": [["a","b"],["b","a"]], "edge_costs": {"a,b": 1}})",
        R"({"nodes": ["a","b"], "edges": [["a","b"]]})",
        R"({"nodes": ["a","b"], "edges": [["a","b"]], "edge_costs": {"a,b": 0}})",
        R"({"nodes": ["a","b"], "edges": [["a","b"]], "edge_costs": {"a,c": 1}})",
        R"({"nodes": ["a","b"], "edges": [["a","b"]], "edge_costs": {"a,b": 1, "b,a": 2}})",
        R"({"nodes": ["a","b"], "edges": [["a","b"]], "edge_costs": {"a,b": 1.5}})",
        R"({"nodes": ["a","b"], "edges": [["a","z"]], "edge_costs": {"a,b": 1}})",
        R"({"nodes": ["a","b"], "edges": [["a"]], "edge_costs": {"a": 1}})",
        R"({"nodes": ["a","b"], "edges": [["a","b"]], "edge_costs": {"a,b": "1/0"}})",
        R"({"nodes": ["a","b"], "edges": [["a","b"]], "node_costs": {"q": 1}, "edge_costs": {"a,b": 1}})",
    };
    for (const auto& text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_instance_text(text), ParseError);
    }
}

TEST_CASE("lp export") {
    const auto g = Hypergraph::numbered(2, {{1, 2}});
    const auto p = standard_linearization(g);
    const Instance inst{g, {Rational(1), Rational(1, 3)}, {Rational(-3)}};

    SUBCASE("exact") {
        std::ostringstream out;
        write_lp(out, p, lifted_objective(inst), {false, 12, "single edge"});
        const auto text = out.str();
        CHECK(text.rfind("\\ single edge\n\\ exact rational coefficients\nMaximize\n obj: z(1) + 1/3 z(2) - 3 z(1,2)\n",
                         0) == 0);
        CHECK(text.find("Subject To\n c1: ") != std::string::npos);
        CHECK(text.find(" z(1) + z(2) - z(1,2) <= 1\n") != std::string::npos);
        CHECK(text.find("Bounds\n z(1) free\n z(2) free\n z(1,2) free\nEnd\n") != std::string::npos);
        std::size_t rows = 0;
        for (std::size_t pos = text.find("\n c"); pos != std::string::npos; pos = text.find("\n c", pos + 1)) ++rows;
        CHECK(rows == p.constraints().size());
    }
    SUBCASE("decimal") {
        std::ostringstream out;
        write_lp(out, p, lifted_objective(inst), {true, 4, ""});
        const auto text = out.str();
        CHECK(text.rfind("\\ coefficients rounded to 4 decimals (lossy)\n", 0) == 0);
        CHECK(text.find("0.3333 z(2)") != std::string::npos);
        CHECK(text.find("1/3") == std::string::npos);
    }
    SUBCASE("empty objective") {
        std::ostringstream out;
        write_lp(out, p, {});
        CHECK(out.str().find("obj: 0 z(1)\n") != std::string::npos);
    }
}

TEST_CASE("census text") {
    CHECK(census_text(Census{3, 7, 1, 3}) == "variables 3\ninequalities 7\nequations 1\nmax_row_nonzeros 3\n");
}
