#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "madlec/rational.hpp"

namespace madlec {

/// Equality-form linear program: minimize c.x subject to A x = b, x >= 0.
struct LinearProgram {
    std::vector<std::vector<Rational>> A;  // rows x cols
    std::vector<Rational> b;
    std::vector<Rational> c;

    size_t rows() const { return A.size(); }
    size_t cols() const { return c.size(); }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct SimplexResult {
    LpStatus status = LpStatus::infeasible;
    Rational objective;
    std::vector<Rational> x;  // primal values, one per column
    std::vector<Rational> y;  // row duals; b.y == objective at an optimum
};

// Two-phase primal simplex with exact rational pivots.  Bland's rule (lowest
// eligible index entering, lowest basic index on ratio ties) rules out
// cycling, and every arithmetic step is an mpq operation, so the solver
// cannot fail numerically.  The problems this project feeds it stay tiny
// (tens of rows), which makes the dense tableau the right tool.

namespace detail {

class SimplexTableau {
public:
    explicit SimplexTableau(const LinearProgram& lp)
        : n_(lp.cols()), m_(lp.rows()), orig_(lp) {
        row_sign_.assign(m_, 1);
        orig_row_.resize(m_);
        tableau_.assign(m_, std::vector<Rational>(n_ + m_ + 1, rat(0)));
        basis_.resize(m_);
        for (size_t i = 0; i < m_; ++i) {
            orig_row_[i] = i;
            const int sign = lp.b[i] < 0 ? -1 : 1;
            row_sign_[i] = sign;
            for (size_t j = 0; j < n_; ++j) tableau_[i][j] = sign * lp.A[i][j];
            tableau_[i][n_ + i] = rat(1);  // artificial
            tableau_[i].back() = sign * lp.b[i];
            basis_[i] = n_ + i;
        }
    }

    LpStatus solve() {
        // Phase 1: minimize the artificial total.
        std::vector<Rational> phase1_cost(n_ + m_, rat(0));
        for (size_t j = n_; j < n_ + m_; ++j) phase1_cost[j] = rat(1);
        load_cost(phase1_cost);
        if (!iterate(n_ + m_)) throw std::logic_error("phase 1 cannot be unbounded");
        if (objective_value() != 0) return LpStatus::infeasible;
        purge_artificials();

        // Phase 2: the real objective over original columns only.
        std::vector<Rational> phase2_cost(n_ + m_, rat(0));
        for (size_t j = 0; j < n_; ++j) phase2_cost[j] = orig_.c[j];
        load_cost(phase2_cost);
        if (!iterate(n_)) return LpStatus::unbounded;
        return LpStatus::optimal;
    }

    std::vector<Rational> primal() const {
        std::vector<Rational> x(n_, rat(0));
        for (size_t i = 0; i < rows(); ++i)
            if (basis_[i] < n_) x[basis_[i]] = tableau_[i].back();
        return x;
    }

    Rational objective_value() const {
        Rational v = cost_.back();
        return Rational(-v);
    }

    /// Duals for the ORIGINAL rows, from B^T y = c_B over the final basis.
    /// Rows dropped as redundant get dual 0; sign flips undo b-normalization.
    std::vector<Rational> duals() const {
        const size_t k = rows();
        std::vector<std::vector<Rational>> mat(k, std::vector<Rational>(k + 1, rat(0)));
        for (size_t col = 0; col < k; ++col) {
            const size_t var = basis_[col];
            if (var >= n_) throw std::logic_error("artificial variable left in final basis");
            for (size_t i = 0; i < k; ++i)
                mat[col][i] = row_sign_[i] * orig_.A[orig_row_[i]][var];  // (B^T)[col][i]
            mat[col][k] = orig_.c[var];
        }
        gaussian_solve(mat);
        std::vector<Rational> y(m_, rat(0));
        for (size_t i = 0; i < k; ++i) y[orig_row_[i]] = row_sign_[i] * mat[i][k];
        return y;
    }

private:
    size_t rows() const { return basis_.size(); }

    void load_cost(const std::vector<Rational>& cost) {
        full_cost_ = cost;
        cost_.assign(n_ + m_ + 1, rat(0));
        for (size_t j = 0; j < n_ + m_; ++j) cost_[j] = cost[j];
        for (size_t i = 0; i < rows(); ++i) reduce_cost_row(i);
    }

    void reduce_cost_row(size_t i) {
        // Basis columns are unit columns, so each basic cost is eliminated
        // independently of the others.
        const Rational factor = full_cost_[basis_[i]];
        if (factor == 0) return;
        for (size_t j = 0; j <= n_ + m_; ++j) cost_[j] -= factor * tableau_[i][j];
    }

    /// Bland iterations over columns [0, allowed).  Returns false on
    /// unboundedness.
    bool iterate(size_t allowed) {
        for (;;) {
            size_t entering = allowed;
            for (size_t j = 0; j < allowed; ++j) {
                if (cost_[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == allowed) return true;

            size_t leaving = rows();
            Rational best_ratio;
            for (size_t i = 0; i < rows(); ++i) {
                if (tableau_[i][entering] > 0) {
                    Rational ratio = tableau_[i].back() / tableau_[i][entering];
                    if (leaving == rows() || ratio < best_ratio ||
                        (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                        leaving = i;
                        best_ratio = ratio;
                    }
                }
            }
            if (leaving == rows()) return false;
            pivot(leaving, entering);
        }
    }

    void pivot(size_t row, size_t col) {
        const Rational inv = rat(1) / tableau_[row][col];
        for (auto& cell : tableau_[row]) cell *= inv;
        for (size_t i = 0; i < rows(); ++i) {
            if (i == row) continue;
            const Rational factor = tableau_[i][col];
            if (factor == 0) continue;
            for (size_t j = 0; j <= n_ + m_; ++j) tableau_[i][j] -= factor * tableau_[row][j];
        }
        const Rational cfac = cost_[col];
        if (cfac != 0)
            for (size_t j = 0; j <= n_ + m_; ++j) cost_[j] -= cfac * tableau_[row][j];
        basis_[row] = col;
    }

    /// After phase 1 at objective 0: pivot leftover artificials out of the
    /// basis, dropping rows that turn out redundant.
    void purge_artificials() {
        for (size_t i = 0; i < rows();) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            size_t col = n_;
            for (size_t j = 0; j < n_; ++j) {
                if (tableau_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col < n_) {
                pivot(i, col);
                ++i;
            } else {
                tableau_.erase(tableau_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                orig_row_.erase(orig_row_.begin() + static_cast<std::ptrdiff_t>(i));
                row_sign_.erase(row_sign_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    static void gaussian_solve(std::vector<std::vector<Rational>>& mat) {
        const size_t k = mat.size();
        for (size_t col = 0; col < k; ++col) {
            size_t pivot_row = col;
            while (pivot_row < k && mat[pivot_row][col] == 0) ++pivot_row;
            if (pivot_row == k) throw std::logic_error("singular basis matrix");
            std::swap(mat[col], mat[pivot_row]);
            const Rational inv = rat(1) / mat[col][col];
            for (size_t j = col; j <= k; ++j) mat[col][j] *= inv;
            for (size_t i = 0; i < k; ++i) {
                if (i == col || mat[i][col] == 0) continue;
                const Rational factor = mat[i][col];
                for (size_t j = col; j <= k; ++j) mat[i][j] -= factor * mat[col][j];
            }
        }
    }

    size_t n_ = 0;  // original columns
    size_t m_ = 0;  // original rows
    LinearProgram orig_;
    std::vector<std::vector<Rational>> tableau_;  // rows() x (n_ + m_ + 1)
    std::vector<Rational> cost_;                  // reduced costs + negated objective
    std::vector<Rational> full_cost_;
    std::vector<size_t> basis_;
    std::vector<size_t> orig_row_;
    std::vector<int> row_sign_;
};

}  // namespace detail

inline SimplexResult solve_simplex(const LinearProgram& lp) {
    if (lp.b.size() != lp.rows()) throw std::invalid_argument("b size mismatch");
    for (const auto& row : lp.A)
        if (row.size() != lp.cols()) throw std::invalid_argument("A row width mismatch");

    SimplexResult result;
    if (lp.rows() == 0) {
        for (const Rational& cj : lp.c) {
            if (cj < 0) {
                result.status = LpStatus::unbounded;
                return result;
            }
        }
        result.status = LpStatus::optimal;
        result.objective = rat(0);
        result.x.assign(lp.cols(), rat(0));
        return result;
    }

    detail::SimplexTableau tableau(lp);
    result.status = tableau.solve();
    if (result.status != LpStatus::optimal) return result;
    result.x = tableau.primal();
    result.objective = rat(0);
    for (size_t j = 0; j < lp.cols(); ++j) result.objective += lp.c[j] * result.x[j];
    result.y = tableau.duals();
    return result;
}

}  // namespace madlec
