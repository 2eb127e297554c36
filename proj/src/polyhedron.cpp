#include "multilin/polyhedron.hpp"

#include "multilin/error.hpp"

#include <algorithm>
#include <sstream>

namespace multilin {

void LinearConstraint::normalize() {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Rational>> merged;
    for (auto& [j, c] : terms) {
        if (!merged.empty() && merged.back().first == j) {
            merged.back().second += c;
        } else {
            merged.emplace_back(j, c);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& t) { return t.second == 0; }),
                 merged.end());
    terms = std::move(merged);
}

Rational LinearConstraint::evaluate(const std::vector<Rational>& x) const {
    Rational total = 0;
    for (const auto& [j, c] : terms) total += c * x.at(static_cast<std::size_t>(j));
    return total;
}

bool LinearConstraint::satisfied_by(const std::vector<Rational>& x) const {
    Rational lhs = evaluate(x);
    return sense == Sense::Equal ? lhs == rhs : lhs <= rhs;
}

bool LinearConstraint::has_unit_coefficients() const {
    auto unit = [](const Rational& v) { return v == 0 || v == 1 || v == -1; };
    if (!unit(rhs)) return false;
    return std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return unit(t.second); });
}

PolyhedronH::PolyhedronH(std::vector<std::string> variables) {
    for (auto& v : variables) add_variable(v);
}

int PolyhedronH::add_variable(const std::string& name) {
    auto [it, inserted] = index_.emplace(name, static_cast<int>(variables_.size()));
    if (inserted) variables_.push_back(name);
    return it->second;
}

int PolyhedronH::index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int PolyhedronH::require(const std::string& name) const {
    int j = index(name);
    if (j < 0) throw ArgumentError("unknown variable '" + name + "'");
    return j;
}

void PolyhedronH::add(LinearConstraint c) {
    for (const auto& t : c.terms) {
        if (t.first < 0 || static_cast<std::size_t>(t.first) >= variables_.size()) {
            throw ArgumentError("constraint references an undeclared variable");
        }
    }
    c.normalize();
    constraints_.push_back(std::move(c));
}

void PolyhedronH::add(const std::vector<std::pair<std::string, Rational>>& terms, Sense sense, const Rational& rhs) {
    LinearConstraint c;
    c.sense = sense;
    c.rhs = rhs;
    for (const auto& [name, coef] : terms) c.terms.emplace_back(require(name), coef);
    add(std::move(c));
}

void PolyhedronH::append(const PolyhedronH& other) {
    std::vector<int> map(other.dimension());
    for (std::size_t j = 0; j < other.dimension(); ++j) map[j] = add_variable(other.variables()[j]);
    for (const auto& c : other.constraints()) {
        LinearConstraint d = c;
        for (auto& t : d.terms) t.first = map[static_cast<std::size_t>(t.first)];
        add(std::move(d));
    }
}

void PolyhedronH::erase_constraint(std::size_t i) {
    constraints_.erase(constraints_.begin() + static_cast<std::ptrdiff_t>(i));
}

bool PolyhedronH::contains(const Point& x) const {
    if (x.size() != dimension()) throw ArgumentError("point dimension does not match the polyhedron");
    return std::all_of(constraints_.begin(), constraints_.end(), [&](const auto& c) { return c.satisfied_by(x); });
}

Census PolyhedronH::census() const {
    Census out;
    out.variables = dimension();
    for (const auto& c : constraints_) {
        if (c.sense == Sense::Equal) {
            ++out.equations;
        } else {
            ++out.inequalities;
        }
        out.max_row_nonzeros = std::max(out.max_row_nonzeros, c.terms.size());
    }
    return out;
}

PolyhedronH PolyhedronH::reordered(const std::vector<std::string>& order) const {
    if (order.size() != dimension()) throw ArgumentError("reordered: not a permutation of the variables");
    PolyhedronH out(order);
    if (out.dimension() != dimension()) throw ArgumentError("reordered: duplicate variable names");
    std::vector<int> map(dimension());
    for (std::size_t j = 0; j < dimension(); ++j) map[j] = out.require(variables_[j]);
    for (const auto& c : constraints_) {
        LinearConstraint d = c;
        for (auto& t : d.terms) t.first = map[static_cast<std::size_t>(t.first)];
        out.add(std::move(d));
    }
    return out;
}

std::vector<Rational> PolyhedronH::objective(const std::vector<std::pair<std::string, Rational>>& terms) const {
    std::vector<Rational> c(dimension());
    for (const auto& [name, coef] : terms) c[static_cast<std::size_t>(require(name))] += coef;
    return c;
}

Point restrict_point(const Point& x, const std::vector<int>& coordinates) {
    Point out;
    out.reserve(coordinates.size());
    for (int j : coordinates) out.push_back(x.at(static_cast<std::size_t>(j)));
    return out;
}

std::string format_point(const Point& x) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out << ',';
        out << x[i].get_str();
    }
    out << ')';
    return out.str();
}

}  // namespace multilin
