#pragma once

#include "multilin/limits.hpp"
#include "multilin/polyhedron.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace multilin {

/// Exact vertex set of a bounded polyhedron, sorted lexicographically.
/// Empty when P is empty. Throws PreconditionError if P is unbounded and
/// ResourceError when the double description exceeds its guards.
std::vector<Point> vertices(const PolyhedronH& p, const Limits& limits = Limits::defaults());

/// Irredundant H-description of conv(points): affine-hull equations followed by
/// facet inequalities (each a primitive integer row). Facets are minimal with
/// respect to the affine hull.
PolyhedronH hull_facets(const std::vector<std::string>& variables, const std::vector<Point>& points,
                        const Limits& limits = Limits::defaults());
/// Variables named x1..xn.
PolyhedronH hull_facets(const std::vector<Point>& points, const Limits& limits = Limits::defaults());

/// True iff x is a convex combination of the generators (exact LP feasibility).
bool membership(const Point& x, const std::vector<Point>& generators);

/// The points that are not convex combinations of the others, deduplicated and sorted.
std::vector<Point> extreme_points(const std::vector<Point>& points);

/// Vertices of P restricted to `keep` (by name), deduplicated and sorted.
std::vector<Point> project_vertices(const PolyhedronH& p, const std::vector<std::string>& keep,
                                    const Limits& limits = Limits::defaults());

/// Depth-first walk over the vertex-edge graph of a bounded polyhedron, starting from
/// an LP vertex. Calls visit once per vertex; stops early when visit returns false.
/// Returns false iff stopped early.
bool walk_vertices(const PolyhedronH& p, const std::function<bool(const Point&)>& visit,
                   const Limits& limits = Limits::defaults());

/// A vertex of P outside `candidates`, or nullopt when every vertex of P is a candidate.
/// The vertex graph of a polytope is connected, so this stops at the first vertex
/// found outside the set.
std::optional<Point> vertex_outside(const PolyhedronH& p, const std::vector<Point>& candidates,
                                    const Limits& limits = Limits::defaults());

/// True iff x lies in P and its tight constraints have full rank.
bool is_vertex(const PolyhedronH& p, const Point& x, const Limits& limits = Limits::defaults());

/// Sorts and deduplicates a point list.
void canonicalize_points(std::vector<Point>& points);

}  // namespace multilin
