#include "multilin/lp.hpp"

#include "multilin/error.hpp"

#include <algorithm>
#include <optional>

namespace multilin {

std::string to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Unbounded: return "unbounded";
        case LpStatus::Infeasible: return "infeasible";
    }
    return "?";
}

namespace {

enum class ColumnKind { Free, NonNegative, FixedZero, Artificial };

constexpr int kDegenerateStreakBeforeBland = 50;

/// Dense simplex tableau: x_B(i) + sum_j T[i][j] x_j = rhs[i].
class Tableau {
public:
    Tableau(const PolyhedronH& p) : n_(p.dimension()), m_(p.constraints().size()) {
        cols_ = n_ + m_ + 1;
        kind_.assign(cols_, ColumnKind::NonNegative);
        for (std::size_t j = 0; j < n_; ++j) kind_[j] = ColumnKind::Free;
        kind_[cols_ - 1] = ColumnKind::Artificial;
        col_dead_.assign(cols_, false);
        col_dead_[cols_ - 1] = true;
        row_dead_.assign(m_, false);
        basic_row_.assign(cols_, -1);
        rows_.assign(m_, std::vector<Rational>(cols_));
        rhs_.resize(m_);
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& c = p.constraints()[i];
            for (const auto& [j, coef] : c.terms) rows_[i][static_cast<std::size_t>(j)] = coef;
            const std::size_t slack = n_ + i;
            rows_[i][slack] = 1;
            if (c.sense == Sense::Equal) kind_[slack] = ColumnKind::FixedZero;
            rhs_[i] = c.rhs;
            basis_[i] = slack;
            basic_row_[slack] = static_cast<int>(i);
        }
        obj_.assign(cols_, Rational(0));
    }

    /// Returns false when the system is infeasible.
    bool initialize() {
        // Equality rows: pivot their fixed slack out of the basis.
        for (std::size_t i = 0; i < m_; ++i) {
            if (kind_[basis_[i]] != ColumnKind::FixedZero) continue;
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < n_ + m_ && !enter; ++j) {
                if (kind_[j] == ColumnKind::Free && basic_row_[j] < 0 && rows_[i][j] != 0) enter = j;
            }
            for (std::size_t j = n_; j < n_ + m_ && !enter; ++j) {
                if (kind_[j] == ColumnKind::NonNegative && basic_row_[j] < 0 && rows_[i][j] != 0) enter = j;
            }
            const std::size_t slack = basis_[i];
            if (!enter) {
                if (rhs_[i] != 0) return false;
                row_dead_[i] = true;
            } else {
                pivot(i, *enter);
            }
            col_dead_[slack] = true;
        }
        // Free structural variables enter the basis and stay there.
        for (std::size_t j = 0; j < n_; ++j) {
            if (basic_row_[j] >= 0) continue;
            std::optional<std::size_t> row;
            for (std::size_t i = 0; i < m_; ++i) {
                if (row_dead_[i] || !restricted(i) || rows_[i][j] == 0) continue;
                if (!row || (abs(rows_[i][j]) == 1 && abs(rows_[*row][j]) != 1)) row = i;
                if (abs(rows_[*row][j]) == 1) break;
            }
            if (row) {
                pivot(*row, j);
            } else {
                lineality_.push_back(j);
            }
        }
        return phase_one();
    }

    /// Maximizes c . x (structural part). Returns Optimal or Unbounded.
    LpStatus optimize(const std::vector<Rational>& c) {
        set_objective(c);
        for (std::size_t j : lineality_) {
            if (obj_[j] != 0) return LpStatus::Unbounded;
        }
        return run_simplex() ? LpStatus::Optimal : LpStatus::Unbounded;
    }

    Rational value() const { return obj_rhs_; }

    Point solution() const {
        Point x(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            if (basic_row_[j] >= 0) x[j] = rhs_[static_cast<std::size_t>(basic_row_[j])];
        }
        return x;
    }

    std::size_t pivots() const { return pivots_; }

private:
    bool restricted(std::size_t i) const {
        auto k = kind_[basis_[i]];
        return k == ColumnKind::NonNegative || k == ColumnKind::Artificial;
    }

    bool can_enter(std::size_t j) const {
        return !col_dead_[j] && basic_row_[j] < 0 &&
               (kind_[j] == ColumnKind::NonNegative || kind_[j] == ColumnKind::Artificial);
    }

    void pivot(std::size_t r, std::size_t c) {
        ++pivots_;
        auto& pr = rows_[r];
        const Rational piv = pr[c];
        nz_.clear();
        for (std::size_t j = 0; j < cols_; ++j) {
            if (pr[j] != 0) nz_.push_back(j);
        }
        if (piv != 1) {
            for (std::size_t j : nz_) pr[j] /= piv;
            rhs_[r] /= piv;
        }
        Rational f;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            auto& row = rows_[i];
            if (row[c] == 0) continue;
            f = row[c];
            for (std::size_t j : nz_) row[j] -= f * pr[j];
            rhs_[i] -= f * rhs_[r];
        }
        if (obj_[c] != 0) {
            f = obj_[c];
            for (std::size_t j : nz_) obj_[j] -= f * pr[j];
            obj_rhs_ -= f * rhs_[r];
        }
        basic_row_[basis_[r]] = -1;
        basis_[r] = c;
        basic_row_[c] = static_cast<int>(r);
    }

    void set_objective(const std::vector<Rational>& c) {
        std::fill(obj_.begin(), obj_.end(), Rational(0));
        obj_rhs_ = 0;
        for (std::size_t j = 0; j < c.size(); ++j) obj_[j] = -c[j];
        for (std::size_t i = 0; i < m_; ++i) {
            if (row_dead_[i] || obj_[basis_[i]] == 0) continue;
            Rational f = obj_[basis_[i]];
            for (std::size_t j = 0; j < cols_; ++j) {
                if (rows_[i][j] != 0) obj_[j] -= f * rows_[i][j];
            }
            obj_rhs_ -= f * rhs_[i];
        }
    }

    /// Returns false when unbounded.
    bool run_simplex() {
        bool bland = false;
        int degenerate_streak = 0;
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!can_enter(j) || obj_[j] >= 0) continue;
                if (!enter) {
                    enter = j;
                    if (bland) break;
                } else if (obj_[j] < obj_[*enter]) {
                    enter = j;
                }
            }
            if (!enter) return true;
            const std::size_t c = *enter;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (row_dead_[i] || !restricted(i) || rows_[i][c] <= 0) continue;
                Rational ratio = rhs_[i] / rows_[i][c];
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            if (best == 0) {
                if (++degenerate_streak >= kDegenerateStreakBeforeBland) bland = true;
            } else {
                degenerate_streak = 0;
            }
            pivot(*leave, c);
        }
    }

    bool phase_one() {
        std::optional<std::size_t> worst;
        for (std::size_t i = 0; i < m_; ++i) {
            if (row_dead_[i] || !restricted(i)) continue;
            if (rhs_[i] < 0 && (!worst || rhs_[i] < rhs_[*worst])) worst = i;
        }
        if (!worst) return true;
        const std::size_t a = cols_ - 1;
        col_dead_[a] = false;
        for (std::size_t i = 0; i < m_; ++i) {
            if (!row_dead_[i] && restricted(i)) rows_[i][a] = -1;
        }
        pivot(*worst, a);
        std::vector<Rational> c(cols_);
        c[a] = -1;
        set_objective(c);
        run_simplex();
        if (obj_rhs_ < 0) return false;
        if (basic_row_[a] >= 0) {
            const auto r = static_cast<std::size_t>(basic_row_[a]);
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < cols_ && !enter; ++j) {
                if (j != a && !col_dead_[j] && basic_row_[j] < 0 && rows_[r][j] != 0) enter = j;
            }
            if (enter) {
                pivot(r, *enter);
            } else {
                row_dead_[r] = true;
            }
        }
        col_dead_[a] = true;
        for (std::size_t i = 0; i < m_; ++i) rows_[i][a] = 0;
        return true;
    }

    std::size_t n_;
    std::size_t m_;
    std::size_t cols_;
    std::vector<ColumnKind> kind_;
    std::vector<bool> col_dead_;
    std::vector<bool> row_dead_;
    std::vector<int> basic_row_;
    std::vector<std::size_t> basis_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<Rational> obj_;
    Rational obj_rhs_;
    std::vector<std::size_t> lineality_;
    std::vector<std::size_t> nz_;
    std::size_t pivots_ = 0;
};

}  // namespace

LpResult lp_max(const PolyhedronH& polyhedron, const std::vector<Rational>& objective) {
    if (objective.size() != polyhedron.dimension()) {
        throw ArgumentError("objective dimension does not match the polyhedron");
    }
    LpResult result;
    Tableau tableau(polyhedron);
    if (!tableau.initialize()) {
        result.status = LpStatus::Infeasible;
        result.pivots = tableau.pivots();
        return result;
    }
    result.status = tableau.optimize(objective);
    result.pivots = tableau.pivots();
    if (result.status == LpStatus::Optimal) {
        result.value = tableau.value();
        result.argmax = tableau.solution();
    }
    return result;
}

LpResult lp_feasible_point(const PolyhedronH& polyhedron) {
    return lp_max(polyhedron, std::vector<Rational>(polyhedron.dimension()));
}

}  // namespace multilin
