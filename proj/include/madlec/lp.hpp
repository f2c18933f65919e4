#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "madlec/discharging.hpp"
#include "madlec/rational.hpp"
#include "madlec/simplex.hpp"

namespace madlec {

// The discharging argument in LP form.  Over degree profiles normalized to
// total 1 (variables n_j, j in [3, delta]; lower degrees are impossible in a
// critical graph once every edge carries degree sum >= delta + 3):
//
//   minimize   sum j * n_j
//   subject to sum n_j = 1,
//              (RHS_a - LHS_a) . n >= 0   for every inequality row a,
//              n >= 0.
//
// The optimum m*(delta) is the best threshold obtainable from this row
// family.  The rows here relax the strict source inequalities to weak ones,
// so m* is an infimum over weakly feasible profiles and the sound claim is
// m*(delta) >= m(delta); any strict gap is reported, not asserted away.

struct LpProblem {
    int delta = 0;
    InequalitySystem system;
    LinearProgram program;  // columns: n_3..n_delta, then one slack per row
    size_t profile_vars = 0;
};

inline LpProblem make_lp_problem(int delta) {
    LpProblem problem;
    problem.delta = delta;
    problem.system = build_inequalities(delta);
    const size_t nv = static_cast<size_t>(delta - 2);       // n_3..n_delta
    const size_t ns = problem.system.rows.size();           // slacks
    problem.profile_vars = nv;

    LinearProgram& lp = problem.program;
    lp.c.assign(nv + ns, rat(0));
    for (int j = 3; j <= delta; ++j) lp.c[static_cast<size_t>(j - 3)] = rat(j);

    lp.A.assign(1 + ns, std::vector<Rational>(nv + ns, rat(0)));
    lp.b.assign(1 + ns, rat(0));
    for (size_t col = 0; col < nv; ++col) lp.A[0][col] = rat(1);
    lp.b[0] = rat(1);
    for (size_t r = 0; r < ns; ++r) {
        const InequalityRow& row = problem.system.rows[r];
        for (int j = 3; j <= delta; ++j)
            lp.A[1 + r][static_cast<size_t>(j - 3)] = rat(row.net_coeff(j));
        lp.A[1 + r][nv + r] = rat(-1);  // surplus: (RHS-LHS).n - s = 0, s >= 0
    }
    return problem;
}

struct LpSolution {
    int delta = 0;
    LpStatus status = LpStatus::infeasible;
    Rational value;                    // m*(delta)
    std::map<int, Rational> primal;    // degree class -> n_j of a worst-case profile
    MultiplierVector dual;             // row multipliers lambda_a >= 0
    Rational dual_mu;                  // bound certified by the dual
};

/// True iff for every degree class j in [3, delta]:
///   j - sum_a lambda_a * net_coeff_a(j) >= m.
/// A passing certificate proves every profile weakly satisfying all rows has
/// average degree >= m.  This j-wise value IS the final charge alpha'(j) of
/// the discharging ledger when lambda is the discharging multiplier vector.
inline bool verify_certificate(int delta, const MultiplierVector& lambdas, const Rational& m) {
    const InequalitySystem system = build_inequalities(delta);
    if (lambdas.size() != system.rows.size())
        throw std::invalid_argument("multiplier count does not match row count");
    for (const Rational& lambda : lambdas.values)
        if (lambda < 0) throw std::invalid_argument("negative multiplier");
    for (int j = 3; j <= delta; ++j) {
        Rational reduced = rat(j);
        for (const InequalityRow& row : system.rows) {
            const long long coeff = row.net_coeff(j);
            if (coeff != 0) reduced -= lambdas.for_a(row.a) * rat(coeff, 1L);
        }
        if (reduced < m) return false;
    }
    return true;
}

inline LpSolution optimal_threshold(int delta) {
    const LpProblem problem = make_lp_problem(delta);
    const SimplexResult result = solve_simplex(problem.program);

    LpSolution solution;
    solution.delta = delta;
    solution.status = result.status;
    if (result.status != LpStatus::optimal) return solution;

    solution.value = result.objective;
    for (int j = 3; j <= delta; ++j)
        solution.primal[j] = result.x[static_cast<size_t>(j - 3)];
    solution.dual_mu = result.y[0];
    solution.dual.delta = delta;
    solution.dual.c = problem.system.c;
    for (size_t r = 0; r < problem.system.rows.size(); ++r)
        solution.dual.values.push_back(result.y[1 + r]);

    // Strong duality, checked exactly before anything is returned.
    if (solution.dual_mu != solution.value)
        throw std::logic_error("dual bound does not match the primal optimum");
    Rational total = rat(0), objective = rat(0);
    for (const auto& [j, nj] : solution.primal) {
        if (nj < 0) throw std::logic_error("negative primal value");
        total += nj;
        objective += j * nj;
    }
    if (total != 1 || objective != solution.value)
        throw std::logic_error("primal witness infeasible");
    for (const InequalityRow& row : problem.system.rows) {
        Rational slack = rat(0);
        for (const auto& [j, nj] : solution.primal) slack += rat(row.net_coeff(j), 1L) * nj;
        if (slack < 0) throw std::logic_error("primal witness violates a row");
    }
    if (!verify_certificate(delta, solution.dual, solution.dual_mu))
        throw std::logic_error("dual witness infeasible");
    return solution;
}

/// The multiplier vector the discharging scheme induces, together with the
/// threshold it certifies.  Passes verify_certificate for every delta >= 5.
inline std::pair<MultiplierVector, Rational> discharging_certificate(int delta) {
    const Threshold t = threshold(delta);
    return {discharging_multipliers(delta, t.m), t.m};
}

}  // namespace madlec
