#include "multilin/extform.hpp"

#include "multilin/acyclicity.hpp"
#include "multilin/error.hpp"
#include "multilin/polyhedral.hpp"
#include "multilin/relaxations.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>

namespace multilin {

std::string to_string(Construction c) {
    switch (c) {
        case Construction::Block: return "block";
        case Construction::Alpha: return "alpha";
        case Construction::Junction: return "junction";
        case Construction::Beta: return "beta";
    }
    return "?";
}

std::vector<std::string> ExtendedFormulation::ordered_variables() const {
    std::vector<std::string> out = original_vars;
    out.insert(out.end(), aux_vars.begin(), aux_vars.end());
    return out;
}

namespace {

std::vector<NodeSet> subsets_of_size_at_least(const NodeSet& s, std::size_t k) {
    std::vector<NodeSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.size()); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) < k) continue;
        NodeSet sub;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if ((mask >> i) & 1U) sub.push_back(s[i]);
        }
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string lambda_variable(const Hypergraph& g, const NodeSet& f, const NodeSet& s) {
    return "lam(" + g.set_key(f) + "|" + g.set_key(s) + ")";
}

void add_box(PolyhedronH& p, const std::string& z) {
    p.add_leq({{z, 1}}, 1);
    p.add_leq({{z, -1}}, 0);
}

/// Drops repeated constraints, keeping first occurrences.
void remove_duplicates(PolyhedronH& p) {
    std::set<std::pair<std::vector<std::pair<int, std::string>>, std::pair<int, std::string>>> seen;
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < p.constraints().size(); ++i) {
        const auto& c = p.constraints()[i];
        std::vector<std::pair<int, std::string>> key;
        for (const auto& [j, a] : c.terms) key.emplace_back(j, a.get_str());
        if (!seen.insert({key, {static_cast<int>(c.sense), c.rhs.get_str()}}).second) drop.push_back(i);
    }
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) p.erase_constraint(*it);
}

/// Puts original variables first, fills in any that never appeared, and splits the rest off as aux.
ExtendedFormulation finish(const Hypergraph& g, PolyhedronH p, Construction tag) {
    ExtendedFormulation ef;
    ef.provenance = tag;
    ef.original_vars = lifted_space(g).variables;
    for (const auto& v : ef.original_vars) p.add_variable(v);
    std::set<std::string> original(ef.original_vars.begin(), ef.original_vars.end());
    for (const auto& v : p.variables()) {
        if (!original.count(v)) ef.aux_vars.push_back(v);
    }
    remove_duplicates(p);
    ef.polyhedron = p.reordered(ef.ordered_variables());
    return ef;
}

void check_block_size(const NodeSet& f, const Limits& limits) {
    if (f.size() > static_cast<std::size_t>(limits.max_block_nodes)) {
        throw ResourceError("complete block on " + std::to_string(f.size()) + " nodes exceeds the guard of " +
                            std::to_string(limits.max_block_nodes));
    }
}

}  // namespace

ExtendedFormulation complete_block(const Hypergraph& g, const NodeSet& f, const std::vector<NodeSet>& linked,
                                   const Limits& limits) {
    check_block_size(f, limits);
    if (f.empty()) throw ArgumentError("complete block over an empty node set");
    for (const auto& p : linked) {
        if (p.size() < 2 || !is_subset(p, f)) throw ArgumentError("linked set " + g.set_label(p) + " is not a subset of the block");
    }
    PolyhedronH p;
    for (Node v : f) p.add_variable(monomial_variable(g, {v}));
    for (const auto& s : linked) p.add_variable(monomial_variable(g, s));
    const auto all = subsets_of_size_at_least(f, 0);
    std::vector<int> lambda;
    for (const auto& s : all) lambda.push_back(p.add_variable(lambda_variable(g, f, s)));

    for (int l : lambda) p.add(LinearConstraint{{{l, -1}}, Sense::LessEqual, 0});
    LinearConstraint total{{}, Sense::Equal, 1};
    for (int l : lambda) total.terms.emplace_back(l, 1);
    p.add(std::move(total));

    auto link = [&](const NodeSet& q) {
        LinearConstraint row{{{p.require(monomial_variable(g, q)), 1}}, Sense::Equal, 0};
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (is_subset(q, all[i])) row.terms.emplace_back(lambda[i], -1);
        }
        p.add(std::move(row));
    };
    for (Node v : f) link({v});
    for (const auto& s : linked) link(s);

    ExtendedFormulation ef;
    ef.provenance = Construction::Block;
    for (Node v : f) ef.original_vars.push_back(monomial_variable(g, {v}));
    for (const auto& s : linked) ef.original_vars.push_back(monomial_variable(g, s));
    for (const auto& s : all) ef.aux_vars.push_back(lambda_variable(g, f, s));
    ef.polyhedron = std::move(p);
    ef.lambda_count = all.size();
    ef.blocks = {f};
    return ef;
}

namespace {

/// Glues blocks given by (node set, linked sets) into one formulation.
ExtendedFormulation glue_blocks(const Hypergraph& g, const std::vector<NodeSet>& blocks,
                                const std::vector<std::set<NodeSet>>& linked, Construction tag, const Limits& limits) {
    PolyhedronH p(lifted_space(g).variables);
    std::size_t lambda = 0;
    std::vector<bool> covered(g.universe()->size(), false);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto block = complete_block(g, blocks[b], {linked[b].begin(), linked[b].end()}, limits);
        lambda += block.lambda_count;
        for (Node v : blocks[b]) covered[static_cast<std::size_t>(v)] = true;
        p.append(block.polyhedron);
    }
    for (Node v : g.nodes()) {
        if (!covered[static_cast<std::size_t>(v)]) add_box(p, monomial_variable(g, {v}));
    }
    auto ef = finish(g, std::move(p), tag);
    ef.lambda_count = lambda;
    ef.blocks = blocks;
    return ef;
}

}  // namespace

ExtendedFormulation alpha_ef(const Hypergraph& g, const Limits& limits) {
    auto alpha = is_alpha_acyclic(g);
    if (!alpha.acyclic) throw PreconditionError("alpha_ef: hypergraph is not alpha-acyclic");
    const auto& order = *alpha.ordering;
    const std::size_t m = order.edges.size();
    std::vector<std::set<NodeSet>> linked(m);
    for (std::size_t k = 0; k < m; ++k) {
        for (const auto& e : g.edges()) {
            if (is_subset(e, order.edges[k])) linked[k].insert(e);
        }
    }
    for (std::size_t k = 1; k < m; ++k) {
        const auto j = static_cast<std::size_t>(order.parent[k]);
        for (auto& s : subsets_of_size_at_least(set_intersection(order.edges[k], order.edges[j]), 2)) {
            linked[k].insert(s);
            linked[j].insert(s);
        }
    }
    return glue_blocks(g, order.edges, linked, Construction::Alpha, limits);
}

TreeDecomposition min_fill_decomposition(const Hypergraph& g) {
    const auto ig = intersection_graph(g);
    const std::size_t n = ig.graph.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (std::size_t i = 0; i < n; ++i) adj[i].insert(ig.graph.adjacency[i].begin(), ig.graph.adjacency[i].end());
    std::vector<bool> gone(n, false);
    std::vector<int> position(n, -1);
    std::vector<NodeSet> raw_bags;
    std::vector<std::vector<int>> later;  // vertex indices of the bag other than the eliminated one

    for (std::size_t step = 0; step < n; ++step) {
        int best = -1;
        std::size_t best_fill = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (gone[v]) continue;
            std::size_t fill = 0;
            for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
                for (auto b = std::next(a); b != adj[v].end(); ++b) {
                    if (!adj[static_cast<std::size_t>(*a)].count(*b)) ++fill;
                }
            }
            if (best < 0 || fill < best_fill) {
                best = static_cast<int>(v);
                best_fill = fill;
            }
        }
        const auto v = static_cast<std::size_t>(best);
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        for (int a : nb) {
            for (int b : nb) {
                if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
            }
            adj[static_cast<std::size_t>(a)].erase(best);
        }
        gone[v] = true;
        position[v] = static_cast<int>(step);
        NodeSet bag{ig.labels[v]};
        for (int a : nb) bag.push_back(ig.labels[static_cast<std::size_t>(a)]);
        raw_bags.push_back(make_node_set(bag));
        later.push_back(nb);
    }

    // Bag of each eliminated vertex hangs below the bag of its earliest-eliminated later neighbour.
    const std::size_t b = raw_bags.size();
    std::vector<std::set<int>> tree(b);
    for (std::size_t i = 0; i < b; ++i) {
        int parent = -1;
        for (int a : later[i]) {
            const int pa = position[static_cast<std::size_t>(a)];
            if (parent < 0 || pa < parent) parent = pa;
        }
        if (parent >= 0) {
            tree[i].insert(parent);
            tree[static_cast<std::size_t>(parent)].insert(static_cast<int>(i));
        }
    }
    std::vector<bool> alive(b, true);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < b && !changed; ++i) {
            if (!alive[i]) continue;
            for (int j : tree[i]) {
                if (!is_subset(raw_bags[i], raw_bags[static_cast<std::size_t>(j)])) continue;
                for (int k : tree[i]) {
                    if (k == j) continue;
                    tree[static_cast<std::size_t>(k)].erase(static_cast<int>(i));
                    tree[static_cast<std::size_t>(k)].insert(j);
                    tree[static_cast<std::size_t>(j)].insert(k);
                }
                tree[static_cast<std::size_t>(j)].erase(static_cast<int>(i));
                tree[i].clear();
                alive[i] = false;
                changed = true;
                break;
            }
        }
    }
    TreeDecomposition out;
    std::vector<int> index(b, -1);
    for (std::size_t i = 0; i < b; ++i) {
        if (!alive[i]) continue;
        index[i] = static_cast<int>(out.bags.size());
        out.bags.push_back(raw_bags[i]);
        out.width = std::max(out.width, static_cast<int>(raw_bags[i].size()) - 1);
    }
    for (std::size_t i = 0; i < b; ++i) {
        for (int j : tree[i]) {
            if (static_cast<int>(i) < j) out.tree_edges.emplace_back(index[i], index[static_cast<std::size_t>(j)]);
        }
    }
    std::sort(out.tree_edges.begin(), out.tree_edges.end());
    return out;
}

ExtendedFormulation junction_ef(const Hypergraph& g, const Limits& limits) {
    auto td = min_fill_decomposition(g);
    if (td.width > limits.junction_width_cap) {
        throw ResourceError("junction_ef: min-fill width " + std::to_string(td.width) + " exceeds the cap of " +
                            std::to_string(limits.junction_width_cap));
    }
    std::vector<std::set<NodeSet>> linked(td.bags.size());
    for (const auto& e : g.edges()) {
        for (std::size_t b = 0; b < td.bags.size(); ++b) {
            if (is_subset(e, td.bags[b])) {
                linked[b].insert(e);
                break;
            }
        }
    }
    for (const auto& [a, b] : td.tree_edges) {
        for (auto& s : subsets_of_size_at_least(set_intersection(td.bags[static_cast<std::size_t>(a)],
                                                                 td.bags[static_cast<std::size_t>(b)]),
                                                2)) {
            linked[static_cast<std::size_t>(a)].insert(s);
            linked[static_cast<std::size_t>(b)].insert(s);
        }
    }
    auto ef = glue_blocks(g, td.bags, linked, Construction::Junction, limits);
    ef.width = td.width;
    return ef;
}

std::vector<NodeSet> ChainBlock::derived() const {
    std::vector<NodeSet> out;
    for (const auto& e : chain) {
        if (e.size() >= 3) out.push_back(set_difference(e, {apex}));
    }
    return out;
}

Hypergraph ChainBlock::closure(const Hypergraph& g) const {
    std::set<NodeSet> edges(chain.begin(), chain.end());
    for (auto& p : derived()) edges.insert(p);
    return g.derive(top(), {edges.begin(), edges.end()});
}

std::vector<int> ChainBlock::signature() const {
    std::vector<int> out;
    for (const auto& e : chain) out.push_back(static_cast<int>(e.size()));
    return out;
}

namespace {

void check_chain(const ChainBlock& block) {
    if (block.chain.empty()) throw ArgumentError("chain block: empty chain");
    for (std::size_t i = 0; i < block.chain.size(); ++i) {
        const auto& e = block.chain[i];
        if (e.size() < 2 || !contains(e, block.apex)) throw ArgumentError("chain block: edge misses the apex");
        if (i > 0 && (e.size() <= block.chain[i - 1].size() || !is_subset(block.chain[i - 1], e))) {
            throw ArgumentError("chain block: edges are not a strictly increasing chain");
        }
    }
}

/// Hulls of canonical chain closures, keyed by size signature. Canonical node labels
/// are "1".."|f|" with the apex first and the chain's nodes in order of appearance.
class ChainMemo {
public:
    PolyhedronH get(const std::vector<int>& signature, const Limits& limits) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_.find(signature);
            if (it != cache_.end()) return it->second;
        }
        PolyhedronH facets = compute(signature, limits);
        std::lock_guard<std::mutex> lock(mutex_);
        return cache_.emplace(signature, std::move(facets)).first->second;
    }

    static Hypergraph canonical(const std::vector<int>& signature) {
        std::vector<std::vector<int>> chain;
        for (int s : signature) {
            std::vector<int> e;
            for (int v = 1; v <= s; ++v) e.push_back(v);
            chain.push_back(e);
        }
        auto base = Hypergraph::numbered(signature.back(), chain);
        std::vector<NodeSet> sets(base.edges().begin(), base.edges().end());
        ChainBlock cb{0, sets};
        return cb.closure(base);
    }

private:
    static PolyhedronH compute(const std::vector<int>& signature, const Limits& limits) {
        auto closure = canonical(signature);
        return hull_facets(lifted_space(closure).variables, enumerate_S(closure, limits), limits);
    }

    std::mutex mutex_;
    std::map<std::vector<int>, PolyhedronH> cache_;
};

ChainMemo& chain_memo() {
    static ChainMemo memo;
    return memo;
}

}  // namespace

PolyhedronH chain_block_facets(const Hypergraph& g, const ChainBlock& block, const Limits& limits) {
    check_chain(block);
    const NodeSet f = block.top();
    if (f.size() > static_cast<std::size_t>(limits.max_chain_nodes)) {
        throw ResourceError("chain block on " + std::to_string(f.size()) + " nodes exceeds the guard of " +
                            std::to_string(limits.max_chain_nodes));
    }
    const auto signature = block.signature();
    PolyhedronH canonical_facets = chain_memo().get(signature, limits);

    // canonical node i+1 <-> actual[i]
    std::vector<Node> actual{block.apex};
    for (const auto& e : block.chain) {
        for (Node v : e) {
            if (std::find(actual.begin(), actual.end(), v) == actual.end()) actual.push_back(v);
        }
    }
    auto closure = ChainMemo::canonical(signature);
    std::vector<std::string> names;
    auto relabel = [&](const NodeSet& s) {
        NodeSet out;
        for (Node c : s) out.push_back(actual[static_cast<std::size_t>(c)]);
        return make_node_set(out);
    };
    for (Node c : closure.nodes()) names.push_back(monomial_variable(g, relabel({c})));
    for (const auto& e : closure.edges()) names.push_back(monomial_variable(g, relabel(e)));
    PolyhedronH out(names);
    for (const auto& c : canonical_facets.constraints()) out.add(c);
    return out;
}

ExtendedFormulation beta_ef(const Hypergraph& g, const Limits& limits) {
    auto beta = is_beta_acyclic(g);
    if (!beta.acyclic) throw PreconditionError("beta_ef: hypergraph is not beta-acyclic");
    PolyhedronH p(lifted_space(g).variables);
    std::vector<bool> seen(g.universe()->size(), false);
    Hypergraph current = g;
    std::vector<NodeSet> tops;
    for (Node u : beta.order) {
        std::vector<NodeSet> chain;
        for (const auto& e : current.edges()) {
            if (contains(e, u)) chain.push_back(e);
        }
        if (chain.empty()) {
            if (!seen[static_cast<std::size_t>(u)]) add_box(p, monomial_variable(g, {u}));
        } else {
            std::sort(chain.begin(), chain.end(), [](const NodeSet& a, const NodeSet& b) { return a.size() < b.size(); });
            ChainBlock block{u, chain};
            p.append(chain_block_facets(g, block, limits));
            for (Node v : block.top()) seen[static_cast<std::size_t>(v)] = true;
            tops.push_back(block.top());
        }
        seen[static_cast<std::size_t>(u)] = true;
        current = remove_node(current, u);
    }
    auto ef = finish(g, std::move(p), Construction::Beta);
    ef.blocks = std::move(tops);
    return ef;
}

ExactnessReport ef_exactness_check(const ExtendedFormulation& ef, const Hypergraph& g, const Limits& limits) {
    const auto points = enumerate_S(g, limits);
    const std::set<Point> binary(points.begin(), points.end());
    std::vector<int> coords;
    for (const auto& name : lifted_space(g).variables) coords.push_back(ef.polyhedron.require(name));

    ExactnessReport report;
    std::set<Point> reached;
    walk_vertices(
        ef.polyhedron,
        [&](const Point& x) {
            ++report.vertices_visited;
            Point y = restrict_point(x, coords);
            const bool is_binary = std::all_of(y.begin(), y.end(), [](const Rational& v) { return v == 0 || v == 1; });
            if (is_binary ? !binary.count(y) : !membership(y, points)) {
                report.outside = std::move(y);
                return false;
            }
            if (is_binary) reached.insert(std::move(y));
            return true;
        },
        limits);
    if (!report.outside) {
        for (const auto& s : points) {
            if (!reached.count(s)) {
                report.missing = s;
                break;
            }
        }
    }
    report.exact = !report.outside && !report.missing;
    return report;
}

}  // namespace multilin
