#pragma once

#include "multilin/acyclicity.hpp"
#include "multilin/hypergraph.hpp"
#include "multilin/limits.hpp"
#include "multilin/polyhedron.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace multilin {

enum class Strategy { Auto, Std, Flower, Beta, Alpha, Junction, Brute, Cuts };
enum class Certificate { ExactLp, BruteForce, UpperBoundOnly };

std::string to_string(Strategy s);
std::string to_string(Certificate c);
/// ArgumentError on an unknown name.
Strategy parse_strategy(const std::string& name);

struct SolveStats {
    std::size_t variables = 0;
    std::size_t inequalities = 0;
    std::size_t equations = 0;
    std::size_t max_row_nonzeros = 0;
    std::size_t lp_pivots = 0;
    std::size_t cut_rounds = 0;
    std::size_t cuts_added = 0;
    double wall_seconds = 0;
};

struct SolveResult {
    Rational value;
    /// Lifted binary point attaining value (absent for upper-bound-only).
    std::optional<Point> solution;
    Certificate certificate = Certificate::UpperBoundOnly;
    /// "std", "flower", "beta", "alpha", "junction", "brute" or "cuts".
    std::string formulation;
    AcyclicityReport classification;
    /// Relaxation bound reported next to a brute-force value.
    std::optional<Rational> lp_bound;
    SolveStats stats;
    std::vector<std::string> warnings;
};

/// Maximizes the instance. A fractional LP optimum under an exactness guarantee raises
/// InternalError; an explicit strategy outside its class raises PreconditionError
/// (std and flower instead degrade to an upper bound).
SolveResult solve(const Instance& instance, Strategy strategy, const Limits& limits = Limits::defaults(),
                  int max_rounds = 100);

struct CuttingPlaneResult {
    Rational bound;
    std::size_t cuts_added = 0;
    std::size_t rounds = 0;
    Point final_point;
    /// LP value after each solve, starting with the standard linearization.
    std::vector<Rational> bounds;
    std::size_t lp_pivots = 0;
};

/// Standard linearization, then repeatedly adds a most violated flower at the LP optimum.
/// All cuts are kept.
CuttingPlaneResult cutting_plane_loop(const Instance& instance, int max_rounds,
                                      const Limits& limits = Limits::defaults());

enum class GraphClass { Berge, Gamma, Beta, Alpha, General };

std::string to_string(GraphClass c);
GraphClass parse_graph_class(const std::string& name);

/// Random hypergraph on nodes "1".."n" with exactly m edges and rank r (r is ignored
/// when m = 0), certified by the classifier to lie in `cls` and, when m and r allow
/// it, outside the next stricter class. Deterministic per seed.
/// GenerationError on infeasible parameters or after 1000 rejected samples.
Hypergraph generate(GraphClass cls, int n, int m, int r, std::uint64_t seed);

/// Up to m distinct edges with sizes drawn from [2, r] on nodes "1".."n", with no class
/// certification. Deterministic per seed.
Hypergraph random_hypergraph(int n, int m, int r, std::uint64_t seed);

/// generate() plus integer costs in [-10, 10] with nonzero edge costs.
Instance generate_instance(GraphClass cls, int n, int m, int r, std::uint64_t seed);

/// Costs in [-10, 10], edge costs nonzero, drawn from `seed`.
Instance random_costs(const Hypergraph& g, std::uint64_t seed);

}  // namespace multilin
