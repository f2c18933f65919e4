#include <catch2/catch.hpp>

#include <functional>
#include <optional>
#include <vector>

#include "madlec/lp.hpp"

using namespace madlec;

namespace {

// Independent oracle: enumerate candidate vertices of
//   { n >= 0, sum n = 1, (RHS-LHS).n >= 0 }
// by solving every square subsystem of tight constraints, keep the feasible
// ones, and take the minimum objective.  Entirely separate from the simplex
// path; only the row coefficients are shared.
std::optional<Rational> lp_minimum_by_vertex_enumeration(int delta) {
    const InequalitySystem system = build_inequalities(delta);
    const int nv = delta - 2;

    // candidate tight constraints: each inequality row, each n_j = 0
    std::vector<std::vector<Rational>> candidates;
    for (const InequalityRow& row : system.rows) {
        std::vector<Rational> coeffs;
        for (int j = 3; j <= delta; ++j) coeffs.push_back(rat(row.net_coeff(j), 1L));
        candidates.push_back(coeffs);
    }
    for (int j = 3; j <= delta; ++j) {
        std::vector<Rational> coeffs(static_cast<size_t>(nv), rat(0));
        coeffs[static_cast<size_t>(j - 3)] = rat(1);
        candidates.push_back(coeffs);
    }

    auto solve_square = [&](const std::vector<size_t>& chosen) -> std::optional<std::vector<Rational>> {
        // rows: sum = 1 plus the chosen tight constraints (= 0)
        std::vector<std::vector<Rational>> mat(static_cast<size_t>(nv),
                                               std::vector<Rational>(static_cast<size_t>(nv) + 1, rat(0)));
        for (int col = 0; col < nv; ++col) mat[0][static_cast<size_t>(col)] = rat(1);
        mat[0][static_cast<size_t>(nv)] = rat(1);
        for (size_t r = 0; r + 1 < static_cast<size_t>(nv); ++r)
            for (int col = 0; col < nv; ++col)
                mat[r + 1][static_cast<size_t>(col)] = candidates[chosen[r]][static_cast<size_t>(col)];
        // gaussian elimination; nullopt on singularity
        for (size_t col = 0; col < static_cast<size_t>(nv); ++col) {
            size_t pivot = col;
            while (pivot < static_cast<size_t>(nv) && mat[pivot][col] == 0) ++pivot;
            if (pivot == static_cast<size_t>(nv)) return std::nullopt;
            std::swap(mat[col], mat[pivot]);
            const Rational inv = rat(1) / mat[col][col];
            for (size_t j = col; j <= static_cast<size_t>(nv); ++j) mat[col][j] *= inv;
            for (size_t i = 0; i < static_cast<size_t>(nv); ++i) {
                if (i == col || mat[i][col] == 0) continue;
                const Rational factor = mat[i][col];
                for (size_t j = col; j <= static_cast<size_t>(nv); ++j) mat[i][j] -= factor * mat[col][j];
            }
        }
        std::vector<Rational> x;
        for (size_t i = 0; i < static_cast<size_t>(nv); ++i) x.push_back(mat[i][static_cast<size_t>(nv)]);
        return x;
    };

    std::optional<Rational> best;
    std::vector<size_t> chosen(static_cast<size_t>(nv - 1));
    std::function<void(size_t, size_t)> pick = [&](size_t start, size_t depth) {
        if (depth == chosen.size()) {
            const auto x = solve_square(chosen);
            if (!x) return;
            for (const Rational& v : *x)
                if (v < 0) return;
            for (const InequalityRow& row : system.rows) {
                Rational slack = rat(0);
                for (int j = 3; j <= delta; ++j)
                    slack += rat(row.net_coeff(j), 1L) * (*x)[static_cast<size_t>(j - 3)];
                if (slack < 0) return;
            }
            Rational objective = rat(0);
            for (int j = 3; j <= delta; ++j) objective += j * (*x)[static_cast<size_t>(j - 3)];
            if (!best || objective < *best) best = objective;
            return;
        }
        for (size_t i = start; i < candidates.size(); ++i) {
            chosen[depth] = i;
            pick(i + 1, depth + 1);
        }
    };
    pick(0, 0);
    return best;
}

}  // namespace

TEST_CASE("optimal thresholds for small delta, frozen from hand derivations") {
    CHECK(optimal_threshold(5).value == rat(4));
    CHECK(optimal_threshold(6).value == rat(14, 3));
    CHECK(optimal_threshold(7).value == rat(5));
    CHECK(optimal_threshold(8).value == rat(28, 5));
    CHECK_THROWS_AS(optimal_threshold(4), std::invalid_argument);
}

TEST_CASE("simplex optimum agrees with vertex enumeration for delta in [5, 14]") {
    // 14 is deliberately included: it is the first delta where the optimum
    // drops below the closed form, so the crossover is confirmed by a second
    // solver
    for (int delta = 5; delta <= 14; ++delta) {
        const auto oracle = lp_minimum_by_vertex_enumeration(delta);
        REQUIRE(oracle.has_value());
        const LpSolution solution = optimal_threshold(delta);
        REQUIRE(solution.status == LpStatus::optimal);
        CHECK(solution.value == *oracle);
    }
}

TEST_CASE("LP optimum vs the closed-form threshold: equality through 13, below after") {
    for (int delta = 5; delta <= 64; ++delta) {
        const LpSolution solution = optimal_threshold(delta);
        REQUIRE(solution.status == LpStatus::optimal);
        // dual data doubles as a certificate for its own bound
        CHECK(verify_certificate(delta, solution.dual, solution.dual_mu));
        CHECK(solution.dual_mu == solution.value);
        if (delta <= 13) {
            CHECK(solution.value == threshold(delta).m);
        } else {
            // once m < c the row family certifies strictly less than the
            // closed form: the optimum switches to a smaller row prefix
            CHECK(solution.value < threshold(delta).m);
        }
    }
    // frozen crossover values, proven optimal by the exact primal/dual pair
    CHECK(optimal_threshold(13).value == rat(51, 7));
    CHECK(optimal_threshold(14).value == rat(53, 7));
    CHECK(optimal_threshold(16).value == rat(65, 8));
    CHECK(optimal_threshold(20).value == rat(82, 9));
}

TEST_CASE("an explicit integer profile beats the closed form at delta = 14") {
    // n_3 = ... = n_7 = 120, n_14 = 247 satisfies every row strictly:
    // rows a in [3,7] read 240(a-2) < 247(a-2), row a = 8 reads 1200 < 1482.
    // Its average degree is 6458/847, and 6458*8 = 51664 < 51667 = 61*847,
    // so it sits strictly below m(14) = 61/8.  No multiplier argument over
    // these rows alone can certify the closed-form threshold here.
    const int delta = 14;
    const InequalitySystem system = build_inequalities(delta);
    std::vector<long long> profile(static_cast<size_t>(delta) + 1, 0);
    for (int j = 3; j <= 7; ++j) profile[static_cast<size_t>(j)] = 120;
    profile[14] = 247;
    for (const InequalityRow& row : system.rows) {
        long long lhs = 0, rhs = 0;
        for (int j = 3; j <= delta; ++j) {
            lhs += row.lhs_coeff(j) * profile[static_cast<size_t>(j)];
            rhs += row.rhs_coeff(j) * profile[static_cast<size_t>(j)];
        }
        CHECK(lhs < rhs);
    }
    long long degree_sum = 0, vertex_count = 0;
    for (int j = 3; j <= delta; ++j) {
        degree_sum += j * profile[static_cast<size_t>(j)];
        vertex_count += profile[static_cast<size_t>(j)];
    }
    const Rational average = rat(degree_sum, vertex_count);
    CHECK(average == rat(6458, 847));
    CHECK(average < threshold(delta).m);
    CHECK(average > optimal_threshold(delta).value);  // and m* is a true lower bound for it
}

TEST_CASE("certificate verification") {
    SECTION("the discharging certificate passes while its multipliers stay non-negative") {
        for (int delta = 5; delta <= 13; ++delta) {
            const auto [lambdas, m] = discharging_certificate(delta);
            CHECK(verify_certificate(delta, lambdas, m));
        }
        // beyond the crossover the scheme's last multiplier is negative and
        // the certificate cannot be formed
        CHECK_THROWS_AS(discharging_certificate(14), std::invalid_argument);
        CHECK_THROWS_AS(discharging_certificate(200), std::invalid_argument);
    }
    SECTION("j-wise reduced values equal the ledger's final charges for all delta") {
        // pure algebra, valid on both sides of the crossover; computed with
        // the raw row weights rather than the checked multiplier type
        for (int delta = 5; delta <= 100; ++delta) {
            const Rational m = threshold(delta).m;
            const int c = delta / 2 + 1;
            const ChargeLedger ledger = transfer_coefficients(delta, m);
            const InequalitySystem system = build_inequalities(delta);
            for (int j = 3; j <= delta; ++j) {
                Rational reduced = rat(j);
                for (const InequalityRow& row : system.rows) {
                    const Rational weight = row.a < c ? rat(1, 2) : Rational((m - c) / 2);
                    reduced -= weight * rat(row.net_coeff(j), 1L);
                }
                CHECK(reduced == ledger.alpha(j));
            }
        }
    }
    SECTION("delta = 6 multipliers are (1/2, 1/3)") {
        const auto [lambdas, m] = discharging_certificate(6);
        CHECK(m == rat(14, 3));
        CHECK(lambdas.for_a(3) == rat(1, 2));
        CHECK(lambdas.for_a(4) == rat(1, 3));
        CHECK(verify_certificate(6, lambdas, m));
    }
    SECTION("zero multipliers certify only the trivial bound") {
        MultiplierVector zeros{8, 5, {rat(0), rat(0), rat(0)}};
        CHECK(verify_certificate(8, zeros, rat(3)));
        CHECK_FALSE(verify_certificate(8, zeros, rat(4)));
    }
    SECTION("negative multipliers are rejected") {
        MultiplierVector bad{8, 5, {rat(-1, 2), rat(0), rat(0)}};
        CHECK_THROWS_AS(verify_certificate(8, bad, rat(3)), std::invalid_argument);
    }
    SECTION("wrong multiplier count is rejected") {
        MultiplierVector bad{8, 5, {rat(1, 2)}};
        CHECK_THROWS_AS(verify_certificate(8, bad, rat(3)), std::invalid_argument);
    }
}

TEST_CASE("certificate scaling and monotonicity") {
    // recomputing the certified bound after scaling lambda never changes
    // acceptance, and acceptance is monotone decreasing in m
    const int delta = 10;
    const InequalitySystem system = build_inequalities(delta);
    auto certified_bound = [&](const MultiplierVector& lambdas) {
        std::optional<Rational> bound;
        for (int j = 3; j <= delta; ++j) {
            Rational reduced = rat(j);
            for (const InequalityRow& row : system.rows)
                reduced -= lambdas.for_a(row.a) * rat(row.net_coeff(j), 1L);
            if (!bound || reduced < *bound) bound = reduced;
        }
        return *bound;
    };
    const auto [lambdas, m] = discharging_certificate(delta);
    for (const Rational& t : {rat(1, 3), rat(1), rat(7, 2), rat(12)}) {
        MultiplierVector scaled = lambdas;
        for (Rational& v : scaled.values) v *= t;
        const Rational bound = certified_bound(scaled);
        CHECK(verify_certificate(delta, scaled, bound));
        CHECK_FALSE(verify_certificate(delta, scaled, bound + rat(1, 1000)));
        CHECK(verify_certificate(delta, scaled, bound - rat(5)));
    }
}

TEST_CASE("primal witness of the LP is a worst-case profile") {
    const LpSolution solution = optimal_threshold(9);
    Rational total = rat(0), objective = rat(0);
    for (const auto& [j, nj] : solution.primal) {
        CHECK(nj >= 0);
        total += nj;
        objective += j * nj;
    }
    CHECK(total == rat(1));
    CHECK(objective == solution.value);
}
