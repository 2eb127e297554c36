#include "multilin/relaxations.hpp"

#include "multilin/error.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>

namespace multilin {

std::string monomial_variable(const Hypergraph& g, const NodeSet& s) { return "z(" + g.set_key(s) + ")"; }

LiftedSpace lifted_space(const Hypergraph& g) {
    LiftedSpace space;
    space.node_count = g.node_count();
    space.edge_count = g.edge_count();
    space.variables.reserve(space.node_count + space.edge_count);
    for (Node v : g.nodes()) space.variables.push_back(monomial_variable(g, {v}));
    for (const auto& e : g.edges()) space.variables.push_back(monomial_variable(g, e));
    return space;
}

namespace {

int node_position(const Hypergraph& g, Node v) {
    auto it = std::lower_bound(g.nodes().begin(), g.nodes().end(), v);
    if (it == g.nodes().end() || *it != v) throw ArgumentError("node is not in the hypergraph");
    return static_cast<int>(it - g.nodes().begin());
}

int edge_position(const Hypergraph& g, const NodeSet& e) {
    int k = g.edge_index(e);
    if (k < 0) throw ArgumentError("set " + g.set_label(e) + " is not an edge");
    return static_cast<int>(g.node_count()) + k;
}

void check_enumeration(const Hypergraph& g, const Limits& limits) {
    if (g.node_count() > static_cast<std::size_t>(limits.max_enumerate_nodes)) {
        throw ResourceError("enumeration over " + std::to_string(g.node_count()) + " nodes exceeds the guard of " +
                            std::to_string(limits.max_enumerate_nodes));
    }
}

/// Edge memberships by node position.
std::vector<std::vector<int>> incident_edges(const Hypergraph& g) {
    std::vector<std::vector<int>> out(g.node_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        for (Node v : g.edges()[k]) out[static_cast<std::size_t>(node_position(g, v))].push_back(static_cast<int>(k));
    }
    return out;
}

}  // namespace

Point lift_assignment(const Hypergraph& g, const std::vector<bool>& node_values) {
    if (node_values.size() != g.node_count()) throw ArgumentError("assignment size does not match the node count");
    Point x;
    x.reserve(g.node_count() + g.edge_count());
    for (bool b : node_values) x.emplace_back(b ? 1 : 0);
    for (const auto& e : g.edges()) {
        bool all = std::all_of(e.begin(), e.end(),
                               [&](Node v) { return node_values[static_cast<std::size_t>(node_position(g, v))]; });
        x.emplace_back(all ? 1 : 0);
    }
    return x;
}

std::vector<Rational> lifted_objective(const Instance& instance) {
    instance.validate();
    std::vector<Rational> c;
    for (Node v : instance.graph.nodes()) c.push_back(instance.node_cost(v));
    for (const auto& ce : instance.edge_costs) c.push_back(ce);
    return c;
}

std::vector<Point> enumerate_S(const Hypergraph& g, const Limits& limits) {
    check_enumeration(g, limits);
    const std::size_t n = g.node_count();
    std::vector<Point> out;
    out.reserve(std::size_t{1} << n);
    std::vector<bool> values(n);
    // Position 0 is the most significant bit, so counting order is lexicographic.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) values[i] = (mask >> (n - 1 - i)) & 1U;
        out.push_back(lift_assignment(g, values));
    }
    return out;
}

PolyhedronH standard_linearization(const Hypergraph& g) {
    PolyhedronH p(lifted_space(g).variables);
    const int n = static_cast<int>(g.node_count());
    for (int i = 0; i < n; ++i) p.add(LinearConstraint{{{i, 1}}, Sense::LessEqual, 1});
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const auto& e = g.edges()[k];
        const int ze = n + static_cast<int>(k);
        p.add(LinearConstraint{{{ze, -1}}, Sense::LessEqual, 0});
        LinearConstraint upper{{{ze, -1}}, Sense::LessEqual, static_cast<long>(e.size()) - 1};
        for (Node v : e) upper.terms.emplace_back(node_position(g, v), 1);
        p.add(std::move(upper));
        for (Node v : e) p.add(LinearConstraint{{{ze, 1}, {node_position(g, v), -1}}, Sense::LessEqual, 0});
    }
    std::vector<bool> covered(g.node_count());
    for (const auto& e : g.edges()) {
        for (Node v : e) covered[static_cast<std::size_t>(node_position(g, v))] = true;
    }
    for (int i = 0; i < n; ++i) {
        if (!covered[static_cast<std::size_t>(i)]) p.add(LinearConstraint{{{i, -1}}, Sense::LessEqual, 0});
    }
    return p;
}

NodeSet FlowerInequality::uncovered() const {
    NodeSet rest = center;
    for (const auto& petal : petals) rest = set_difference(rest, petal);
    return rest;
}

LinearConstraint FlowerInequality::constraint(const Hypergraph& g) const {
    const NodeSet rest = uncovered();
    LinearConstraint c;
    for (Node v : rest) c.terms.emplace_back(node_position(g, v), 1);
    for (const auto& petal : petals) c.terms.emplace_back(edge_position(g, petal), 1);
    c.terms.emplace_back(edge_position(g, center), -1);
    c.rhs = static_cast<long>(rest.size() + petals.size()) - 1;
    c.normalize();
    return c;
}

Rational FlowerInequality::violation(const Hypergraph& g, const Point& x) const {
    auto c = constraint(g);
    return c.evaluate(x) - c.rhs;
}

std::string FlowerInequality::describe(const Hypergraph& g) const {
    std::ostringstream out;
    out << "center " << g.set_label(center) << " petals";
    for (const auto& petal : petals) out << ' ' << g.set_label(petal);
    return out.str();
}

bool satisfies_petal_condition(const NodeSet& center, const std::vector<NodeSet>& petals) {
    if (petals.empty()) return false;
    for (std::size_t i = 0; i < petals.size(); ++i) {
        NodeSet own = set_intersection(center, petals[i]);
        for (std::size_t j = 0; j < petals.size() && own.size() >= 2; ++j) {
            if (j != i) own = set_difference(own, petals[j]);
        }
        if (own.size() < 2) return false;
    }
    return true;
}

namespace {

/// Depth-first walk over petal families of one center. `overlaps` holds e0 ∩ e_k per
/// candidate. Because removing a petal only enlarges the others' private parts, every
/// subfamily of a valid family is valid, so the walk prunes at the first failure.
class PetalWalker {
public:
    PetalWalker(const NodeSet& center, std::vector<NodeSet> overlaps)
        : center_(center), overlaps_(std::move(overlaps)), cover_(center.size(), 0) {}

    template <typename Visit>
    void run(Visit&& visit) {
        chosen_.clear();
        descend(0, visit);
    }

private:
    std::size_t slot(Node v) const {
        return static_cast<std::size_t>(std::lower_bound(center_.begin(), center_.end(), v) - center_.begin());
    }

    bool valid_after_adding(std::size_t k) {
        for (Node v : overlaps_[k]) ++cover_[slot(v)];
        bool ok = true;
        auto private_count = [&](std::size_t i) {
            std::size_t count = 0;
            for (Node v : overlaps_[i]) count += cover_[slot(v)] == 1;
            return count;
        };
        if (private_count(k) < 2) ok = false;
        for (std::size_t i = 0; ok && i < chosen_.size(); ++i) {
            if (private_count(chosen_[i]) < 2) ok = false;
        }
        if (!ok) {
            for (Node v : overlaps_[k]) --cover_[slot(v)];
        }
        return ok;
    }

    template <typename Visit>
    void descend(std::size_t from, Visit& visit) {
        for (std::size_t k = from; k < overlaps_.size(); ++k) {
            if (overlaps_[k].size() < 2 || !valid_after_adding(k)) continue;
            chosen_.push_back(k);
            visit(chosen_, cover_);
            descend(k + 1, visit);
            chosen_.pop_back();
            for (Node v : overlaps_[k]) --cover_[slot(v)];
        }
    }

    const NodeSet& center_;
    std::vector<NodeSet> overlaps_;
    std::vector<int> cover_;
    std::vector<std::size_t> chosen_;
};

void check_rank_cap(const Hypergraph& g, const Limits& limits) {
    if (g.edge_count() > 0 && rank(g) > limits.flower_rank_cap) {
        throw ResourceError("rank " + std::to_string(rank(g)) + " exceeds the flower rank cap of " +
                            std::to_string(limits.flower_rank_cap));
    }
}

}  // namespace

std::vector<FlowerInequality> flower_inequalities(const Hypergraph& g, const NodeSet& center) {
    const auto neighbors = adjacent_edges(g, center);
    std::vector<NodeSet> overlaps;
    overlaps.reserve(neighbors.size());
    for (const auto& e : neighbors) overlaps.push_back(set_intersection(center, e));
    std::vector<FlowerInequality> out;
    PetalWalker walker(center, std::move(overlaps));
    walker.run([&](const std::vector<std::size_t>& chosen, const std::vector<int>&) {
        FlowerInequality f{center, {}};
        for (std::size_t k : chosen) f.petals.push_back(neighbors[k]);
        out.push_back(std::move(f));
    });
    return out;
}

PolyhedronH flower_relaxation(const Hypergraph& g, const Limits& limits) {
    check_rank_cap(g, limits);
    PolyhedronH p = standard_linearization(g);
    for (const auto& e0 : g.edges()) {
        for (const auto& f : flower_inequalities(g, e0)) p.add(f.constraint(g));
    }
    return p;
}

std::optional<FlowerCut> separate_flower(const Hypergraph& g, const Point& x, const Limits& limits) {
    check_rank_cap(g, limits);
    if (x.size() != g.node_count() + g.edge_count()) throw ArgumentError("point is not in the lifted space");
    const int n = static_cast<int>(g.node_count());

    std::optional<FlowerCut> best;
    std::vector<int> best_petals;
    int best_center = -1;

    for (std::size_t c = 0; c < g.edge_count(); ++c) {
        const NodeSet& e0 = g.edges()[c];
        // One representative per intersection pattern: largest x_e, then lowest index.
        std::map<NodeSet, int> representative;
        for (std::size_t k = 0; k < g.edge_count(); ++k) {
            if (k == c) continue;
            NodeSet overlap = set_intersection(e0, g.edges()[k]);
            if (overlap.size() < 2) continue;
            auto [it, inserted] = representative.emplace(std::move(overlap), static_cast<int>(k));
            if (!inserted && x[static_cast<std::size_t>(n + k)] > x[static_cast<std::size_t>(n + it->second)]) {
                it->second = static_cast<int>(k);
            }
        }
        if (representative.empty()) continue;
        std::vector<NodeSet> overlaps;
        std::vector<int> reps;
        for (const auto& [overlap, k] : representative) {
            overlaps.push_back(overlap);
            reps.push_back(k);
        }
        // deficit of the uncovered part: sum over uncovered v of (1 - x_v)
        std::vector<Rational> slack(e0.size());
        for (std::size_t i = 0; i < e0.size(); ++i) slack[i] = 1 - x[static_cast<std::size_t>(node_position(g, e0[i]))];
        const Rational& x0 = x[static_cast<std::size_t>(n) + c];

        PetalWalker walker(e0, overlaps);
        walker.run([&](const std::vector<std::size_t>& chosen, const std::vector<int>& cover) {
            Rational v = 1 - x0;
            for (std::size_t i = 0; i < e0.size(); ++i) {
                if (cover[i] == 0) v -= slack[i];
            }
            for (std::size_t k : chosen) v += x[static_cast<std::size_t>(n + reps[k])] - 1;
            if (v <= 0) return;
            std::vector<int> petals;
            for (std::size_t k : chosen) petals.push_back(reps[k]);
            std::sort(petals.begin(), petals.end());
            bool better = !best || v > best->violation ||
                          (v == best->violation &&
                           (static_cast<int>(c) < best_center || (static_cast<int>(c) == best_center && petals < best_petals)));
            if (!better) return;
            FlowerInequality f{e0, {}};
            for (int k : petals) f.petals.push_back(g.edges()[static_cast<std::size_t>(k)]);
            best = FlowerCut{std::move(f), v};
            best_petals = std::move(petals);
            best_center = static_cast<int>(c);
        });
    }
    return best;
}

namespace {

template <typename Value>
BruteForceResult gray_code_search(const Instance& instance, const std::vector<Value>& node_cost,
                                  const std::vector<Value>& edge_cost, const Rational& scale) {
    const Hypergraph& g = instance.graph;
    const std::size_t n = g.node_count();
    const auto incident = incident_edges(g);
    std::vector<int> missing(g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) missing[k] = static_cast<int>(g.edges()[k].size());

    // Gray bit b drives node position n-1-b, so the code word orders like the lifted point.
    Value value = 0;
    Value best = 0;
    std::uint64_t best_mask = 0;
    std::uint64_t word = 0;
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
        const int bit = __builtin_ctzll(step);
        const std::size_t i = n - 1 - static_cast<std::size_t>(bit);
        word ^= std::uint64_t{1} << bit;
        if ((word >> bit) & 1U) {
            value += node_cost[i];
            for (int k : incident[i]) {
                if (--missing[static_cast<std::size_t>(k)] == 0) value += edge_cost[static_cast<std::size_t>(k)];
            }
        } else {
            value -= node_cost[i];
            for (int k : incident[i]) {
                if (missing[static_cast<std::size_t>(k)]++ == 0) value -= edge_cost[static_cast<std::size_t>(k)];
            }
        }
        if (value > best || (value == best && word < best_mask)) {
            best = value;
            best_mask = word;
        }
    }
    std::vector<bool> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = (best_mask >> (n - 1 - i)) & 1U;
    BruteForceResult result;
    result.value = Rational(Integer(best)) / scale;
    result.argmax = lift_assignment(g, values);
    return result;
}

}  // namespace

BruteForceResult brute_force_opt(const Instance& instance, const Limits& limits) {
    instance.validate();
    check_enumeration(instance.graph, limits);
    const auto c = lifted_objective(instance);
    const std::size_t n = instance.graph.node_count();

    Integer scale = 1;
    for (const auto& v : c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> scaled;
    Integer total = 0;
    for (const auto& v : c) {
        scaled.push_back(v.get_num() * (scale / v.get_den()));
        total += abs(scaled.back());
    }
    const Rational scale_q(scale);
    auto split = [&](auto convert) {
        using V = decltype(convert(scaled[0]));
        std::vector<V> nodes;
        std::vector<V> edges;
        for (std::size_t j = 0; j < scaled.size(); ++j) (j < n ? nodes : edges).push_back(convert(scaled[j]));
        return gray_code_search<V>(instance, nodes, edges, scale_q);
    };
    if (total < Integer(std::numeric_limits<long>::max() / 2)) {
        return split([](const Integer& v) { return v.get_si(); });
    }
    return split([](const Integer& v) { return v; });
}

}  // namespace multilin
