#pragma once

#include "multilin/hypergraph.hpp"
#include "multilin/limits.hpp"
#include "multilin/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace multilin {

/// Variable name of the monomial prod_{v in s} z_v, e.g. "z(1,2)"; "z(3)" for a node.
std::string monomial_variable(const Hypergraph& g, const NodeSet& s);

/// One variable per node (in node order) followed by one per edge (canonical edge order).
struct LiftedSpace {
    std::vector<std::string> variables;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;

    std::size_t size() const { return variables.size(); }
};

LiftedSpace lifted_space(const Hypergraph& g);

/// Lifted 0/1 point for a node assignment given by position in g.nodes().
Point lift_assignment(const Hypergraph& g, const std::vector<bool>& node_values);

/// Objective coefficients in the lifted space.
std::vector<Rational> lifted_objective(const Instance& instance);

/// All 2^|V| points of the multilinear set, sorted lexicographically.
std::vector<Point> enumerate_S(const Hypergraph& g, const Limits& limits = Limits::defaults());

/// The standard linearization over lifted_space(g). Rows, in order: z_v <= 1 per node,
/// then per edge: -z_e <= 0, sum z_v - z_e <= |e| - 1, z_e - z_v <= 0 for v in e.
/// Isolated nodes additionally get -z_v <= 0 so the polytope stays bounded.
PolyhedronH standard_linearization(const Hypergraph& g);

/// Flower inequality centered at `center` with petal edges `petals` (canonical order).
struct FlowerInequality {
    NodeSet center;
    std::vector<NodeSet> petals;

    /// Nodes of the center covered by no petal.
    NodeSet uncovered() const;
    /// Over lifted_space(g).
    LinearConstraint constraint(const Hypergraph& g) const;
    /// lhs - rhs at x (positive means violated).
    Rational violation(const Hypergraph& g, const Point& x) const;
    std::string describe(const Hypergraph& g) const;

    friend bool operator==(const FlowerInequality&, const FlowerInequality&) = default;
};

/// True when every petal keeps at least two nodes of the center that no other petal covers.
bool satisfies_petal_condition(const NodeSet& center, const std::vector<NodeSet>& petals);

/// All nonempty petal sets satisfying the two-private-node condition, in lexicographic
/// order of their edge index lists.
std::vector<FlowerInequality> flower_inequalities(const Hypergraph& g, const NodeSet& center);

/// Standard linearization plus every flower inequality (centers in canonical order).
/// Throws ResourceError when rank(g) exceeds limits.flower_rank_cap.
PolyhedronH flower_relaxation(const Hypergraph& g, const Limits& limits = Limits::defaults());

struct FlowerCut {
    FlowerInequality inequality;
    Rational violation;
};

/// A most violated flower inequality at x, or nullopt if none is violated. Ties break
/// by (center, petal index list) lexicographically.
std::optional<FlowerCut> separate_flower(const Hypergraph& g, const Point& x, const Limits& limits = Limits::defaults());

struct BruteForceResult {
    Rational value;
    /// Lifted optimal point; among ties the lexicographically smallest.
    Point argmax;
};

BruteForceResult brute_force_opt(const Instance& instance, const Limits& limits = Limits::defaults());

}  // namespace multilin
