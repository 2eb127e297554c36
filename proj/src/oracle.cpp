#include "multilin/oracle.hpp"

#include "multilin/acyclicity.hpp"
#include "multilin/error.hpp"
#include "multilin/polyhedral.hpp"
#include "multilin/relaxations.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>

namespace multilin {

PolyhedronH multilinear_polytope(const Hypergraph& g, const Limits& limits) {
    if (static_cast<int>(g.node_count()) > limits.max_hull_nodes) {
        throw ResourceError("multilinear polytope: " + std::to_string(g.node_count()) + " nodes exceed the hull guard of " +
                            std::to_string(limits.max_hull_nodes));
    }
    return hull_facets(lifted_space(g).variables, enumerate_S(g, limits), limits);
}

bool vertex_set_equals(const PolyhedronH& p, const std::vector<Point>& points, const Limits& limits) {
    for (const auto& x : points) {
        if (!is_vertex(p, x, limits)) return false;
    }
    return !vertex_outside(p, points, limits).has_value();
}

bool polytope_equal(const PolyhedronH& p, const PolyhedronH& q, const Limits& limits) {
    auto names_p = p.variables();
    auto names_q = q.variables();
    std::sort(names_p.begin(), names_p.end());
    std::sort(names_q.begin(), names_q.end());
    if (names_p != names_q) throw ArgumentError("polytope_equal: the polyhedra have different variables");
    // enumerate the side with fewer rows, then walk the other one
    const PolyhedronH q_aligned = q.reordered(p.variables());
    const bool p_first = p.constraints().size() <= q_aligned.constraints().size();
    const PolyhedronH& listed = p_first ? p : q_aligned;
    const PolyhedronH& walked = p_first ? q_aligned : p;
    return vertex_set_equals(walked, vertices(listed, limits), limits);
}

bool equals_multilinear_polytope(const PolyhedronH& p, const Hypergraph& g, const Limits& limits) {
    if (p.variables() != lifted_space(g).variables) {
        throw ArgumentError("equals_multilinear_polytope: variables must be the lifted space of the hypergraph");
    }
    return vertex_set_equals(p, enumerate_S(g, limits), limits);
}

bool decomposability_check(const Hypergraph& g1, const Hypergraph& g2, const Limits& limits) {
    if (g1.universe() != g2.universe() && g1.universe()->names() != g2.universe()->names()) {
        throw ArgumentError("decomposability_check: the hypergraphs must share a universe");
    }
    if (!intersects(g1.nodes(), g2.nodes())) throw ArgumentError("decomposability_check: the node sets are disjoint");
    const Hypergraph g = hypergraph_union(g1, g2);
    PolyhedronH stacked = multilinear_polytope(g1, limits);
    stacked.append(multilinear_polytope(g2, limits));
    return equals_multilinear_polytope(stacked.reordered(lifted_space(g).variables), g, limits);
}

bool oracle_alpha_acyclic(const Hypergraph& g) {
    const auto& nodes = g.nodes();
    const std::size_t n = nodes.size();
    if (n > 20) throw ResourceError("alpha oracle: too many nodes");
    auto position = [&](Node v) {
        return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
    };
    std::vector<std::uint32_t> adjacent(n, 0);
    std::vector<std::uint32_t> edge_masks;
    for (const auto& e : g.edges()) {
        std::uint32_t mask = 0;
        for (Node v : e) mask |= 1u << position(v);
        edge_masks.push_back(mask);
        for (Node v : e) adjacent[position(v)] |= mask & ~(1u << position(v));
    }
    // chordal: repeatedly remove a simplicial vertex
    std::uint32_t alive = n == 32 ? ~0u : (1u << n) - 1;
    while (alive) {
        bool removed = false;
        for (std::size_t v = 0; v < n && !removed; ++v) {
            if (!(alive >> v & 1)) continue;
            const std::uint32_t nb = adjacent[v] & alive;
            bool clique = true;
            for (std::size_t u = 0; u < n && clique; ++u) {
                if (nb >> u & 1) clique = (nb & ~(1u << u) & ~adjacent[u]) == 0;
            }
            if (clique) {
                alive &= ~(1u << v);
                removed = true;
            }
        }
        if (!removed) return false;
    }
    // conformal: every maximal clique of size >= 2 inside an edge
    const std::uint32_t full = (1u << n) - 1;
    auto is_clique = [&](std::uint32_t s) {
        for (std::size_t v = 0; v < n; ++v) {
            if ((s >> v & 1) && (s & ~(1u << v) & ~adjacent[v]) != 0) return false;
        }
        return true;
    };
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (std::popcount(s) < 2 || !is_clique(s)) continue;
        bool maximal = true;
        for (std::size_t v = 0; v < n && maximal; ++v) {
            if (!(s >> v & 1) && (adjacent[v] & s) == s) maximal = false;
        }
        if (!maximal) continue;
        if (std::none_of(edge_masks.begin(), edge_masks.end(), [&](std::uint32_t e) { return (e & s) == s; })) return false;
    }
    return true;
}

std::string AcyclicityFlags::describe() const {
    auto bit = [](bool b) { return b ? "1" : "0"; };
    return std::string("berge=") + bit(berge) + " gamma=" + bit(gamma) + " beta=" + bit(beta) + " alpha=" + bit(alpha);
}

AcyclicityFlags oracle_flags(const Hypergraph& g) {
    AcyclicityFlags f;
    f.berge = !oracle_find_cycle(g, CycleKind::Berge).has_value();
    f.gamma = !oracle_find_cycle(g, CycleKind::Gamma).has_value();
    f.beta = !oracle_find_cycle(g, CycleKind::Beta).has_value();
    f.alpha = oracle_alpha_acyclic(g);
    return f;
}

AcyclicityFlags classifier_flags(const Hypergraph& g) {
    const auto r = classify(g);
    return {r.berge, r.gamma, r.beta, r.alpha};
}

namespace {

using Form = std::vector<std::vector<int>>;

Form relabelled(const std::vector<std::vector<int>>& edges, const std::vector<int>& perm) {
    Form out;
    for (const auto& e : edges) {
        std::vector<int> f;
        for (int v : e) f.push_back(perm[static_cast<std::size_t>(v)]);
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> positional_edges(const Hypergraph& g) {
    const auto& nodes = g.nodes();
    std::vector<std::vector<int>> edges;
    for (const auto& e : g.edges()) {
        std::vector<int> f;
        for (Node v : e) f.push_back(static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin()));
        edges.push_back(std::move(f));
    }
    return edges;
}

}  // namespace

std::vector<std::vector<int>> canonical_form(const Hypergraph& g) {
    const auto n = static_cast<int>(g.node_count());
    if (n > 8) throw ResourceError("canonical form: too many nodes for permutation search");
    const auto edges = positional_edges(g);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Form best = relabelled(edges, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        auto f = relabelled(edges, perm);
        if (f < best) best = std::move(f);
    }
    for (auto& e : best) {
        for (auto& v : e) ++v;
    }
    return best;
}

Corpus exhaustive_small_corpus(int max_nodes) {
    if (max_nodes < 0 || max_nodes > 4) throw ArgumentError("exhaustive corpus: max_nodes must lie in [0, 4]");
    const int n = max_nodes;
    std::vector<std::vector<int>> candidates;  // 1-based
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<int> e;
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1) e.push_back(v + 1);
        }
        candidates.push_back(e);
    }
    std::sort(candidates.begin(), candidates.end());
    Corpus corpus;
    for (unsigned long pick = 0; pick < (1ul << candidates.size()); ++pick) {
        std::vector<std::vector<int>> edges;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            if (pick >> k & 1) edges.push_back(candidates[k]);
        }
        Hypergraph g = Hypergraph::numbered(n, edges);
        auto form = canonical_form(g);
        if (form != edges) continue;  // keep only the canonical representative
        corpus.entries.push_back({g, oracle_flags(g), 0, "exhaustive"});
    }
    return corpus;
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& entry : corpus.entries) {
        const auto& g = entry.graph;
        nlohmann::ordered_json j;
        nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
        for (Node v : g.nodes()) nodes.push_back(g.name(v));
        j["nodes"] = nodes;
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const auto& e : g.edges()) {
            nlohmann::ordered_json names = nlohmann::ordered_json::array();
            for (Node v : e) names.push_back(g.name(v));
            edges.push_back(names);
        }
        j["edges"] = edges;
        j["flags"] = {{"berge", entry.flags.berge},
                      {"gamma", entry.flags.gamma},
                      {"beta", entry.flags.beta},
                      {"alpha", entry.flags.alpha}};
        j["seed"] = entry.seed;
        j["provenance"] = entry.provenance;
        entries.push_back(j);
    }
    out << nlohmann::ordered_json{{"entries", entries}}.dump(1) << '\n';
}

Corpus read_corpus(std::istream& in) {
    Corpus corpus;
    try {
        const auto doc = nlohmann::json::parse(in);
        for (const auto& j : doc.at("entries")) {
            auto nodes = j.at("nodes").get<std::vector<std::string>>();
            auto edges = j.at("edges").get<std::vector<std::vector<std::string>>>();
            CorpusEntry entry{Hypergraph::named(nodes, edges), {}, j.at("seed").get<std::uint64_t>(),
                              j.at("provenance").get<std::string>()};
            const auto& f = j.at("flags");
            entry.flags = {f.at("berge").get<bool>(), f.at("gamma").get<bool>(), f.at("beta").get<bool>(),
                           f.at("alpha").get<bool>()};
            const auto truth = oracle_flags(entry.graph);
            if (truth != entry.flags) {
                throw ParseError("corpus entry " + std::to_string(corpus.entries.size()) + " has flags " +
                                 entry.flags.describe() + " but the oracle gives " + truth.describe());
            }
            corpus.entries.push_back(std::move(entry));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("corpus manifest: ") + e.what());
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("corpus manifest: ") + e.what());
    }
    return corpus;
}

}  // namespace multilin
