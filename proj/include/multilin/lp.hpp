#pragma once

#include "multilin/polyhedron.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace multilin {

enum class LpStatus { Optimal, Unbounded, Infeasible };

std::string to_string(LpStatus status);

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    /// A vertex of P when optimal (P pointed); empty otherwise.
    Point argmax;
    std::size_t pivots = 0;
};

/// Exact rational simplex: maximize objective . x over P.
///
/// Free variables are pivoted into the basis first and never leave it, equality
/// rows are pivoted out, and a single artificial column gives a feasible start.
/// Pricing is Dantzig's rule; after a run of degenerate pivots the phase switches
/// to Bland's rule for good, which rules out cycling.
LpResult lp_max(const PolyhedronH& polyhedron, const std::vector<Rational>& objective);

/// Feasibility only (zero objective).
LpResult lp_feasible_point(const PolyhedronH& polyhedron);

}  // namespace multilin
