#pragma once

#include "multilin/rational.hpp"

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace multilin {

enum class Sense { LessEqual, Equal };

/// sum coef_j x_j (<= | =) rhs, over variable indices of the owning polyhedron.
/// Terms are sorted by index and never hold a zero coefficient.
struct LinearConstraint {
    std::vector<std::pair<int, Rational>> terms;
    Sense sense = Sense::LessEqual;
    Rational rhs;

    /// Sorts, merges duplicate indices and drops zeros.
    void normalize();
    Rational evaluate(const std::vector<Rational>& x) const;
    bool satisfied_by(const std::vector<Rational>& x) const;
    bool has_unit_coefficients() const;

    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// A point in the variable space of some polyhedron (dense, same order as its variables).
using Point = std::vector<Rational>;

struct Census {
    std::size_t variables = 0;
    std::size_t inequalities = 0;
    std::size_t equations = 0;
    std::size_t max_row_nonzeros = 0;
};

/// H-described polyhedron over named variables. Variables are free unless a
/// constraint says otherwise.
class PolyhedronH {
public:
    PolyhedronH() = default;
    explicit PolyhedronH(std::vector<std::string> variables);

    /// Index of `name`, adding it at the end if absent.
    int add_variable(const std::string& name);
    /// -1 when absent.
    int index(const std::string& name) const;
    int require(const std::string& name) const;
    bool has_variable(const std::string& name) const { return index(name) >= 0; }

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t dimension() const { return variables_.size(); }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

    /// Adds a constraint over variable indices. Throws ArgumentError on a bad index.
    void add(LinearConstraint c);
    /// Convenience: terms by variable name (names must already exist).
    void add(const std::vector<std::pair<std::string, Rational>>& terms, Sense sense, const Rational& rhs);
    void add_leq(const std::vector<std::pair<std::string, Rational>>& terms, const Rational& rhs) {
        add(terms, Sense::LessEqual, rhs);
    }
    void add_eq(const std::vector<std::pair<std::string, Rational>>& terms, const Rational& rhs) {
        add(terms, Sense::Equal, rhs);
    }
    /// Adds all constraints of `other`, mapping its variables by name (created if missing).
    void append(const PolyhedronH& other);
    void erase_constraint(std::size_t i);

    bool contains(const Point& x) const;
    Census census() const;

    /// Same solution set description with variables permuted into `order`
    /// (which must be a permutation of variables()).
    PolyhedronH reordered(const std::vector<std::string>& order) const;

    /// Dense objective from name -> coefficient pairs.
    std::vector<Rational> objective(const std::vector<std::pair<std::string, Rational>>& terms) const;

private:
    std::vector<std::string> variables_;
    std::unordered_map<std::string, int> index_;
    std::vector<LinearConstraint> constraints_;
};

/// Restricts each point to the listed coordinates.
Point restrict_point(const Point& x, const std::vector<int>& coordinates);

std::string format_point(const Point& x);

}  // namespace multilin
