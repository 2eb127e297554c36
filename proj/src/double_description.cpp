// Double description method over exact integers, used for vertex enumeration of
// bounded polyhedra and for facet enumeration of point sets (via the polar cone).

#include "multilin/error.hpp"
#include "multilin/lp.hpp"
#include "multilin/polyhedral.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace multilin {

namespace {

using IntVector = std::vector<Integer>;
using RationalMatrix = std::vector<std::vector<Rational>>;

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

    void resize(std::size_t n) { words_.resize((n + 63) / 64, 0); }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    static Bits intersect(const Bits& a, const Bits& b) {
        Bits out;
        out.words_.resize(a.words_.size());
        for (std::size_t i = 0; i < a.words_.size(); ++i) out.words_[i] = a.words_[i] & b.words_[i];
        return out;
    }

    bool subset_of(const Bits& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~other.words_[i]) return false;
        }
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    }
    return s;
}

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::optional<std::size_t> p;
        for (std::size_t i = row; i < m.size(); ++i) {
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        }
        if (!p) continue;
        std::swap(m[row], m[*p]);
        Rational inv = 1 / m[row][c];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < m[i].size(); ++j) {
                if (m[row][j] != 0) m[i][j] -= f * m[row][j];
            }
        }
        pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    return pivots;
}

struct Ray {
    IntVector w;
    Bits zero;
};

/// Extreme rays of the pointed cone {w : r . w >= 0 for every row r}.
/// Returns nullopt when the cone has a nontrivial lineality space.
std::optional<std::vector<IntVector>> cone_extreme_rays(const std::vector<IntVector>& rows, std::size_t d,
                                                        const Limits& limits) {
    if (d == 0) return std::vector<IntVector>{};
    if (static_cast<int>(d) > limits.max_dimension) {
        throw ResourceError("double description: dimension " + std::to_string(d) + " exceeds the guard");
    }
    const std::size_t m = rows.size();

    // Greedy independent rows for the initial simplicial cone.
    std::vector<std::size_t> basis;
    {
        RationalMatrix echelon;  // rows kept in echelon form with their pivot columns
        std::vector<std::size_t> pivot_cols;
        for (std::size_t i = 0; i < m && basis.size() < d; ++i) {
            std::vector<Rational> v(rows[i].begin(), rows[i].end());
            for (std::size_t k = 0; k < echelon.size(); ++k) {
                const std::size_t c = pivot_cols[k];
                if (v[c] == 0) continue;
                Rational f = v[c] / echelon[k][c];
                for (std::size_t j = 0; j < d; ++j) {
                    if (echelon[k][j] != 0) v[j] -= f * echelon[k][j];
                }
            }
            auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
            if (nz == v.end()) continue;
            pivot_cols.push_back(static_cast<std::size_t>(nz - v.begin()));
            echelon.push_back(std::move(v));
            basis.push_back(i);
        }
    }
    if (basis.size() < d) return std::nullopt;

    // Rays of {w : B w >= 0} are the columns of B^{-1}.
    RationalMatrix aug(d, std::vector<Rational>(2 * d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug[i][j] = rows[basis[i]][j];
        aug[i][d + i] = 1;
    }
    rref(aug, d);
    std::vector<Ray> rays;
    for (std::size_t col = 0; col < d; ++col) {
        std::vector<Rational> w(d);
        for (std::size_t i = 0; i < d; ++i) w[i] = aug[i][d + col];
        Ray ray{primitive_integer_vector(w), Bits(m)};
        for (std::size_t k = 0; k < d; ++k) {
            if (k != col) ray.zero.set(basis[k]);
        }
        rays.push_back(std::move(ray));
    }

    std::vector<bool> in_basis(m, false);
    for (auto b : basis) in_basis[b] = true;

    std::vector<Integer> slack;
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t i = 0; i < m; ++i) {
        if (in_basis[i]) continue;
        const auto& row = rows[i];
        slack.resize(rays.size());
        pos.clear();
        neg.clear();
        zer.clear();
        for (std::size_t r = 0; r < rays.size(); ++r) {
            slack[r] = dot(row, rays[r].w);
            const int s = sgn(slack[r]);
            if (s > 0) {
                pos.push_back(r);
            } else if (s < 0) {
                neg.push_back(r);
            } else {
                zer.push_back(r);
            }
        }
        if (neg.empty()) {
            for (auto r : zer) rays[r].zero.set(i);
            continue;
        }
        std::vector<Ray> next;
        next.reserve(pos.size() + zer.size());
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                Bits common = Bits::intersect(rays[p].zero, rays[q].zero);
                if (common.count() + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r != p && r != q && common.subset_of(rays[r].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector w(d);
                const Integer& sp = slack[p];
                const Integer& sq = slack[q];
                for (std::size_t j = 0; j < d; ++j) w[j] = sp * rays[q].w[j] - sq * rays[p].w[j];
                make_primitive(w);
                common.set(i);
                next.push_back(Ray{std::move(w), std::move(common)});
                if (next.size() + pos.size() + zer.size() > limits.max_dd_rays) {
                    throw ResourceError("double description: ray count exceeds the guard");
                }
            }
        }
        for (std::size_t r : pos) next.push_back(std::move(rays[r]));
        for (std::size_t r : zer) {
            rays[r].zero.set(i);
            next.push_back(std::move(rays[r]));
        }
        rays = std::move(next);
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.w));
    return out;
}

/// x = origin + basis * y parametrizes {x : equations}.
struct AffineParametrization {
    Point origin;
    RationalMatrix basis;  // n rows, k columns
    std::size_t free_dims = 0;
};

std::optional<AffineParametrization> parametrize(const std::vector<const LinearConstraint*>& equations, std::size_t n) {
    RationalMatrix m;
    for (const auto* c : equations) {
        std::vector<Rational> row(n + 1);
        for (const auto& [j, coef] : c->terms) row[static_cast<std::size_t>(j)] = coef;
        row[n] = c->rhs;
        m.push_back(std::move(row));
    }
    auto pivots = rref(m, n + 1);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = 1
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j) {
        if (!is_pivot[j]) free_cols.push_back(j);
    }
    AffineParametrization out;
    out.free_dims = free_cols.size();
    out.origin.assign(n, Rational(0));
    out.basis.assign(n, std::vector<Rational>(free_cols.size()));
    for (std::size_t r = 0; r < pivots.size(); ++r) out.origin[pivots[r]] = m[r][n];
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        out.basis[f][k] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) out.basis[pivots[r]][k] = -m[r][f];
    }
    return out;
}

bool lex_less(const Point& a, const Point& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

void canonicalize_points(std::vector<Point>& points) {
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

std::vector<Point> vertices(const PolyhedronH& p, const Limits& limits) {
    const std::size_t n = p.dimension();
    if (static_cast<int>(n) > limits.max_dimension) {
        throw ResourceError("vertices: dimension " + std::to_string(n) + " exceeds the guard");
    }
    if (lp_feasible_point(p).status == LpStatus::Infeasible) return {};

    std::vector<const LinearConstraint*> equations;
    std::vector<const LinearConstraint*> inequalities;
    for (const auto& c : p.constraints()) {
        (c.sense == Sense::Equal ? equations : inequalities).push_back(&c);
    }
    auto param = parametrize(equations, n);
    if (!param) return {};
    const std::size_t k = param->free_dims;
    if (k == 0) return {param->origin};

    // Homogenized cone over (t, y): (b - a.x0) t - (a N) y >= 0, t >= 0.
    const std::size_t d = k + 1;
    std::set<IntVector> unique_rows;
    std::vector<IntVector> rows;
    auto push = [&](const std::vector<Rational>& row) {
        if (std::all_of(row.begin(), row.end(), [](const Rational& v) { return v == 0; })) return;
        auto ints = primitive_integer_vector(row);
        if (unique_rows.insert(ints).second) rows.push_back(std::move(ints));
    };
    {
        std::vector<Rational> t_row(d);
        t_row[0] = 1;
        push(t_row);
    }
    for (const auto* c : inequalities) {
        std::vector<Rational> row(d);
        row[0] = c->rhs - c->evaluate(param->origin);
        for (const auto& [j, coef] : c->terms) {
            const auto& nrow = param->basis[static_cast<std::size_t>(j)];
            for (std::size_t q = 0; q < k; ++q) {
                if (nrow[q] != 0) row[q + 1] -= coef * nrow[q];
            }
        }
        push(row);
    }
    auto rays = cone_extreme_rays(rows, d, limits);
    if (!rays) throw PreconditionError("vertices: polyhedron is unbounded (nontrivial lineality)");

    std::vector<Point> out;
    out.reserve(rays->size());
    for (const auto& w : *rays) {
        if (w[0] == 0) throw PreconditionError("vertices: polyhedron is unbounded");
        Point x = param->origin;
        for (std::size_t q = 0; q < k; ++q) {
            if (w[q + 1] == 0) continue;
            Rational yq(w[q + 1], w[0]);
            yq.canonicalize();
            for (std::size_t j = 0; j < n; ++j) {
                if (param->basis[j][q] != 0) x[j] += param->basis[j][q] * yq;
            }
        }
        out.push_back(std::move(x));
    }
    canonicalize_points(out);
    return out;
}

PolyhedronH hull_facets(const std::vector<std::string>& variables, const std::vector<Point>& input,
                        const Limits& limits) {
    if (input.empty()) throw ArgumentError("hull_facets: empty point list");
    if (input.size() > limits.max_hull_points) {
        throw ResourceError("hull_facets: " + std::to_string(input.size()) + " points exceed the guard");
    }
    const std::size_t n = variables.size();
    if (static_cast<int>(n) > limits.max_dimension) throw ResourceError("hull_facets: dimension exceeds the guard");
    std::vector<Point> points = input;
    for (const auto& x : points) {
        if (x.size() != n) throw ArgumentError("hull_facets: point dimension mismatch");
    }
    canonicalize_points(points);

    PolyhedronH out(variables);

    // Affine hull: the row space of the differences x_i - x_0.
    RationalMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(row));
    }
    auto pivots = rref(diffs, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> normal(n);
        normal[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) normal[pivots[r]] = -diffs[r][f];
        auto ints = primitive_integer_vector(normal);
        LinearConstraint eq;
        eq.sense = Sense::Equal;
        for (std::size_t j = 0; j < n; ++j) {
            if (ints[j] != 0) eq.terms.emplace_back(static_cast<int>(j), Rational(ints[j]));
        }
        eq.rhs = eq.evaluate(points[0]);
        out.add(std::move(eq));
    }
    const std::size_t k = pivots.size();
    if (k == 0) return out;

    // Polar cone over (beta, a): beta - a . y_i >= 0 for every point projected to the pivot coordinates.
    std::vector<IntVector> rows;
    rows.reserve(points.size());
    for (const auto& x : points) {
        std::vector<Rational> row(k + 1);
        row[0] = 1;
        for (std::size_t q = 0; q < k; ++q) row[q + 1] = -x[pivots[q]];
        rows.push_back(primitive_integer_vector(row));
    }
    auto rays = cone_extreme_rays(rows, k + 1, limits);
    if (!rays) throw InternalError("hull_facets: polar cone is not pointed");

    std::vector<LinearConstraint> facets;
    for (const auto& w : *rays) {
        bool trivial = true;
        for (std::size_t q = 1; q <= k && trivial; ++q) trivial = w[q] == 0;
        if (trivial) continue;
        LinearConstraint c;
        c.sense = Sense::LessEqual;
        for (std::size_t q = 0; q < k; ++q) {
            if (w[q + 1] != 0) c.terms.emplace_back(static_cast<int>(pivots[q]), Rational(w[q + 1]));
        }
        c.rhs = Rational(w[0]);
        facets.push_back(std::move(c));
    }
    std::sort(facets.begin(), facets.end(), [](const LinearConstraint& a, const LinearConstraint& b) {
        if (a.terms != b.terms) {
            return std::lexicographical_compare(a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end());
        }
        return a.rhs < b.rhs;
    });
    for (auto& f : facets) out.add(std::move(f));
    return out;
}

PolyhedronH hull_facets(const std::vector<Point>& points, const Limits& limits) {
    if (points.empty()) throw ArgumentError("hull_facets: empty point list");
    std::vector<std::string> names;
    for (std::size_t j = 0; j < points.front().size(); ++j) names.push_back("x" + std::to_string(j + 1));
    return hull_facets(names, points, limits);
}

bool membership(const Point& x, const std::vector<Point>& generators) {
    if (generators.empty()) return false;
    for (const auto& g : generators) {
        if (g.size() != x.size()) throw ArgumentError("membership: dimension mismatch");
        if (g == x) return true;
    }
    // lambda >= 0, sum lambda = 1, sum lambda_i g_i = x.
    PolyhedronH lp;
    std::vector<int> lambda;
    for (std::size_t i = 0; i < generators.size(); ++i) lambda.push_back(lp.add_variable("l" + std::to_string(i)));
    for (int l : lambda) lp.add(LinearConstraint{{{l, Rational(-1)}}, Sense::LessEqual, Rational(0)});
    {
        LinearConstraint sum;
        sum.sense = Sense::Equal;
        sum.rhs = 1;
        for (int l : lambda) sum.terms.emplace_back(l, Rational(1));
        lp.add(std::move(sum));
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        LinearConstraint row;
        row.sense = Sense::Equal;
        row.rhs = x[j];
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (generators[i][j] != 0) row.terms.emplace_back(lambda[i], generators[i][j]);
        }
        if (row.terms.empty() && row.rhs != 0) return false;
        if (!row.terms.empty()) lp.add(std::move(row));
    }
    return lp_feasible_point(lp).status != LpStatus::Infeasible;
}

std::vector<Point> extreme_points(const std::vector<Point>& points) {
    std::vector<Point> unique = points;
    canonicalize_points(unique);
    // Distinct 0/1 points are vertices of the cube, hence of their own hull.
    const bool binary = std::all_of(unique.begin(), unique.end(), [](const Point& x) {
        return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0 || v == 1; });
    });
    if (binary) return unique;
    std::vector<Point> out;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        std::vector<Point> others;
        for (std::size_t j = 0; j < unique.size(); ++j) {
            if (j != i) others.push_back(unique[j]);
        }
        if (!membership(unique[i], others)) out.push_back(unique[i]);
    }
    return out;
}

std::vector<Point> project_vertices(const PolyhedronH& p, const std::vector<std::string>& keep, const Limits& limits) {
    std::vector<int> coords;
    for (const auto& name : keep) coords.push_back(p.require(name));
    std::vector<Point> out;
    for (const auto& v : vertices(p, limits)) out.push_back(restrict_point(v, coords));
    canonicalize_points(out);
    return out;
}

namespace {

/// Moves along the edges of a bounded polyhedron. The edge directions at a vertex are
/// the extreme rays of its tangent cone, computed in the null space of the equations.
class EdgeWalker {
public:
    EdgeWalker(const PolyhedronH& p, const Limits& limits) : p_(p), limits_(limits), n_(p.dimension()) {
        std::vector<const LinearConstraint*> equations;
        for (const auto& c : p.constraints()) {
            (c.sense == Sense::Equal ? equations : inequalities_).push_back(&c);
        }
        auto param = parametrize(equations, n_);
        if (!param) throw PreconditionError("vertex walk: equations are inconsistent");
        basis_ = std::move(param->basis);
        k_ = param->free_dims;
        columns_.resize(k_);
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t q = 0; q < k_; ++q) {
                if (basis_[j][q] != 0) columns_[q].emplace_back(j, basis_[j][q]);
            }
        }
        projected_.reserve(inequalities_.size());
        for (const auto* c : inequalities_) {
            std::vector<Rational> g(k_);
            for (const auto& [j, coef] : c->terms) {
                const auto& nrow = basis_[static_cast<std::size_t>(j)];
                for (std::size_t q = 0; q < k_; ++q) {
                    if (nrow[q] != 0) g[q] += coef * nrow[q];
                }
            }
            std::vector<Rational> negated = g;
            for (auto& v : negated) v = -v;
            auto ints = primitive_integer_vector(negated);
            auto [it, inserted] = row_ids_.emplace(ints, row_ids_.size());
            cone_row_id_.push_back(it->second);
            cone_rows_.push_back(std::move(ints));
            projected_.push_back(std::move(g));
        }
    }

    std::size_t free_dims() const { return k_; }

    /// Tight inequality indices at x, or nullopt when x is not a vertex.
    std::optional<std::vector<std::size_t>> tight_rows(const Point& x) const {
        if (!p_.contains(x)) return std::nullopt;
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < inequalities_.size(); ++i) {
            if (inequalities_[i]->evaluate(x) == inequalities_[i]->rhs) tight.push_back(i);
        }
        RationalMatrix m;
        for (auto i : tight) m.push_back(projected_[i]);
        if (rref(m, k_).size() != k_) return std::nullopt;
        return tight;
    }

    /// Tight inequality indices at x (x assumed feasible).
    std::vector<std::size_t> tight_at(const Point& x) const {
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < inequalities_.size(); ++i) {
            if (inequalities_[i]->evaluate(x) == inequalities_[i]->rhs) tight.push_back(i);
        }
        return tight;
    }

    std::vector<Point> neighbors(const Point& x, const std::vector<std::size_t>& tight) const {
        std::set<std::size_t> used;
        std::vector<IntVector> rows;
        for (auto i : tight) {
            if (std::all_of(cone_rows_[i].begin(), cone_rows_[i].end(), [](const Integer& v) { return v == 0; })) continue;
            if (used.insert(cone_row_id_[i]).second) rows.push_back(cone_rows_[i]);
        }
        auto rays = cone_extreme_rays(rows, k_, limits_);
        if (!rays) throw InternalError("vertex walk: tangent cone at a vertex is not pointed");
        std::vector<bool> is_tight(inequalities_.size(), false);
        for (auto i : tight) is_tight[i] = true;
        std::vector<Rational> slack(inequalities_.size());
        for (std::size_t i = 0; i < inequalities_.size(); ++i) {
            if (!is_tight[i]) slack[i] = inequalities_[i]->rhs - inequalities_[i]->evaluate(x);
        }
        std::vector<Point> out;
        out.reserve(rays->size());
        Point d(n_);
        for (const auto& y : *rays) {
            // direction in the original space
            std::fill(d.begin(), d.end(), Rational(0));
            for (std::size_t q = 0; q < k_; ++q) {
                if (y[q] == 0) continue;
                for (const auto& [j, v] : columns_[q]) d[j] += v * y[q];
            }
            std::optional<Rational> step;
            for (std::size_t i = 0; i < inequalities_.size(); ++i) {
                if (is_tight[i]) continue;
                Rational rate = 0;
                for (const auto& [j, a] : inequalities_[i]->terms) {
                    const auto& dj = d[static_cast<std::size_t>(j)];
                    if (dj != 0) rate += a * dj;
                }
                if (rate <= 0) continue;
                Rational t = slack[i] / rate;
                if (!step || t < *step) step = std::move(t);
            }
            if (!step) throw PreconditionError("vertex walk: polyhedron is unbounded");
            Point next = x;
            for (std::size_t j = 0; j < n_; ++j) {
                if (d[j] != 0) next[j] += *step * d[j];
            }
            out.push_back(std::move(next));
        }
        return out;
    }

private:
    const PolyhedronH& p_;
    const Limits& limits_;
    std::size_t n_;
    std::vector<const LinearConstraint*> inequalities_;
    RationalMatrix basis_;
    std::size_t k_ = 0;
    std::vector<std::vector<Rational>> projected_;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns_;
    std::vector<IntVector> cone_rows_;
    std::vector<std::size_t> cone_row_id_;
    std::map<IntVector, std::size_t> row_ids_;
};

}  // namespace

bool walk_vertices(const PolyhedronH& p, const std::function<bool(const Point&)>& visit, const Limits& limits) {
    if (static_cast<int>(p.dimension()) > limits.max_dimension) {
        throw ResourceError("vertex walk: dimension " + std::to_string(p.dimension()) + " exceeds the guard");
    }
    auto start = lp_max(p, std::vector<Rational>(p.dimension()));
    if (start.status == LpStatus::Infeasible) return true;
    EdgeWalker walker(p, limits);
    std::set<Point, bool (*)(const Point&, const Point&)> seen(lex_less);
    std::vector<Point> stack{start.argmax};
    seen.insert(start.argmax);
    if (!walker.tight_rows(start.argmax)) throw PreconditionError("vertex walk: polyhedron has no vertex");
    // Every point reached along an edge is a vertex, so only the start needs the rank test.
    while (!stack.empty()) {
        Point x = std::move(stack.back());
        stack.pop_back();
        if (!visit(x)) return false;
        if (walker.free_dims() == 0) continue;
        for (auto& y : walker.neighbors(x, walker.tight_at(x))) {
            if (seen.insert(y).second) {
                if (seen.size() > limits.max_dd_rays) throw ResourceError("vertex walk: vertex count exceeds the guard");
                stack.push_back(std::move(y));
            }
        }
    }
    return true;
}

std::optional<Point> vertex_outside(const PolyhedronH& p, const std::vector<Point>& candidates, const Limits& limits) {
    std::set<Point, bool (*)(const Point&, const Point&)> known(lex_less);
    for (const auto& x : candidates) known.insert(x);
    std::optional<Point> witness;
    walk_vertices(
        p,
        [&](const Point& x) {
            if (known.count(x)) return true;
            witness = x;
            return false;
        },
        limits);
    return witness;
}

}  // namespace multilin

namespace multilin {

bool is_vertex(const PolyhedronH& p, const Point& x, const Limits& limits) {
    if (x.size() != p.dimension()) throw ArgumentError("is_vertex: point has the wrong dimension");
    EdgeWalker walker(p, limits);
    return walker.tight_rows(x).has_value();
}

}  // namespace multilin
