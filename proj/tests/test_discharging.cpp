#include <catch2/catch.hpp>

#include <random>

#include "madlec/discharging.hpp"

using namespace madlec;

TEST_CASE("threshold values") {
    const Threshold t5 = threshold(5);
    CHECK(t5.c == 3);
    CHECK(t5.m == rat(4));
    const Threshold t6 = threshold(6);
    CHECK(t6.c == 4);
    CHECK(t6.m == rat(14, 3));
    const Threshold t7 = threshold(7);
    CHECK(t7.c == 4);
    CHECK(t7.m == rat(5));
    const Threshold t8 = threshold(8);
    CHECK(t8.c == 5);
    CHECK(t8.m == rat(28, 5));
    const Threshold t9 = threshold(9);
    CHECK(t9.c == 5);
    CHECK(t9.m == rat(6));
    CHECK_THROWS_AS(threshold(4), std::invalid_argument);
}

TEST_CASE("threshold structural facts over a wide sweep") {
    for (int delta = 5; delta <= 200; ++delta) {
        const Threshold t = threshold(delta);
        CHECK(t.c == delta / 2 + 1);
        if (delta % 2 == 0) CHECK(delta == 2 * t.c - 2);
        if (delta % 2 == 1) CHECK(delta == 2 * t.c - 1);
        CHECK(t.m >= rat(4));
        if (delta != 5) CHECK(t.m > rat(4));
        if (delta >= 8) CHECK(threshold(delta + 2).m > t.m);  // grows within parity class
    }
}

TEST_CASE("inequality system rows") {
    SECTION("delta = 5: single row 2n3 < n5") {
        const InequalitySystem s = build_inequalities(5);
        REQUIRE(s.rows.size() == 1);
        CHECK(s.rows[0].a == 3);
        CHECK(s.rows[0].b0 == 5);
        CHECK(s.rows[0].lhs_coeff(3) == 2);
        CHECK(s.rows[0].lhs_coeff(4) == 0);
        CHECK(s.rows[0].rhs_coeff(5) == 1);
    }
    SECTION("delta = 7, a = 4: 2n3 + 2n4 < n6 + 2n7") {
        const InequalitySystem s = build_inequalities(7);
        const InequalityRow& row = s.row_for_a(4);
        CHECK(row.b0 == 6);
        CHECK(row.lhs_coeff(3) == 2);
        CHECK(row.lhs_coeff(4) == 2);
        CHECK(row.lhs_coeff(5) == 0);
        CHECK(row.rhs_coeff(6) == 1);
        CHECK(row.rhs_coeff(7) == 2);
        CHECK(row.rhs_coeff(5) == 0);
    }
    SECTION("delta = 8: three rows, last RHS is (1,2,3) on degrees (6,7,8)") {
        const InequalitySystem s = build_inequalities(8);
        REQUIRE(s.rows.size() == 3);
        const InequalityRow& last = s.row_for_a(5);
        CHECK(last.b0 == 6);
        CHECK(last.rhs_coeff(6) == 1);
        CHECK(last.rhs_coeff(7) == 2);
        CHECK(last.rhs_coeff(8) == 3);
    }
    SECTION("row count and hypotheses for a sweep") {
        for (int delta = 5; delta <= 120; ++delta) {
            const InequalitySystem s = build_inequalities(delta);
            CHECK(static_cast<int>(s.rows.size()) == s.c - 2);
            for (const InequalityRow& row : s.rows) {
                CHECK(row.b0 > row.a);
                CHECK(row.a + row.b0 == delta + 3);
                CHECK(row.a >= 3);
            }
        }
    }
    CHECK_THROWS_AS(build_inequalities(4), std::invalid_argument);
}

TEST_CASE("discharging multipliers") {
    SECTION("delta = 8, m = 28/5: (1/2, 1/2, 3/10)") {
        const MultiplierVector mult = discharging_multipliers(8, rat(28, 5));
        REQUIRE(mult.size() == 3);
        CHECK(mult.for_a(3) == rat(1, 2));
        CHECK(mult.for_a(4) == rat(1, 2));
        CHECK(mult.for_a(5) == rat(3, 10));
    }
    SECTION("delta = 5: the single row carries (m-c)/2") {
        const MultiplierVector mult = discharging_multipliers(5, rat(4));
        REQUIRE(mult.size() == 1);
        CHECK(mult.for_a(3) == rat(1, 2));
    }
    SECTION("delta = 9, m = 6: all halves") {
        const MultiplierVector mult = discharging_multipliers(9, rat(6));
        REQUIRE(mult.size() == 3);
        for (int a = 3; a <= 5; ++a) CHECK(mult.for_a(a) == rat(1, 2));
    }
    CHECK_THROWS_AS(discharging_multipliers(8, rat(4)), std::invalid_argument);  // m < c
    // the closed-form threshold itself drops below c at delta = 14
    CHECK_THROWS_AS(discharging_multipliers(14, threshold(14).m), std::invalid_argument);
    CHECK_NOTHROW(discharging_multipliers(13, threshold(13).m));
}

TEST_CASE("charge ledger") {
    SECTION("delta = 8: x3 = m - 3 and the top class lands on m") {
        const ChargeLedger ledger = transfer_coefficients(8, rat(28, 5));
        CHECK(ledger.x.at(3) == rat(13, 5));
        CHECK(ledger.alpha(3) == rat(28, 5));
        CHECK(ledger.alpha(8) == rat(28, 5));
        CHECK(ledger.pot_sign == ChargeLedger::PotSign::positive_guaranteed);
    }
    SECTION("alpha'(c) = m for every delta; transfer signs flip at delta = 14") {
        for (int delta = 5; delta <= 60; ++delta) {
            const Threshold t = threshold(delta);
            const ChargeLedger ledger = transfer_coefficients(delta, t.m);
            CHECK(ledger.alpha(t.c) == t.m);
            for (int j = 3; j <= t.c; ++j) CHECK(ledger.alpha(j) == t.m);
            if (delta <= 13) {
                // m >= c: every transfer keeps its intended direction
                CHECK(t.m >= t.c);
                for (const auto& [j, xj] : ledger.x) CHECK(xj >= 0);
                CHECK(ledger.pot_sign == ChargeLedger::PotSign::positive_guaranteed);
            } else {
                // m < c from delta = 14 on: x_c = m - c < 0 and the pot
                // argument is no longer available
                CHECK(t.m < t.c);
                CHECK(ledger.x.at(t.c) < 0);
                CHECK(ledger.pot_sign == ChargeLedger::PotSign::indeterminate);
            }
        }
    }
    SECTION("middle classes transfer nothing") {
        // the middle interval [c+1, delta-c+2] is {c+1} for odd delta and
        // empty for even delta
        const ChargeLedger odd = transfer_coefficients(21, threshold(21).m);
        CHECK(!odd.x.count(12));  // c = 11
        CHECK(odd.alpha(12) == rat(12));
        const ChargeLedger even = transfer_coefficients(20, threshold(20).m);
        for (int j = 3; j <= 20; ++j) CHECK(even.x.count(j));  // no middle classes at all
    }
}

TEST_CASE("discharging verification reproduces the known exact charges") {
    SECTION("delta = 5") {
        const VerificationReport report = verify_discharging(5);
        CHECK(report.all_pass());
        CHECK(report.ledger.alpha(5) == rat(9, 2));
        CHECK(report.m == rat(4));
    }
    SECTION("delta = 6") {
        const VerificationReport report = verify_discharging(6);
        CHECK(report.all_pass());
        CHECK(report.ledger.alpha(5) == rat(14, 3));
        CHECK(report.ledger.alpha(6) == rat(29, 6));
    }
    SECTION("delta = 7") {
        const VerificationReport report = verify_discharging(7);
        CHECK(report.all_pass());
        CHECK(report.ledger.alpha(6) == rat(11, 2));
        CHECK(report.ledger.alpha(7) == rat(11, 2));
    }
    SECTION("delta = 20 and a sweep") {
        CHECK(verify_discharging(20).all_pass());
        for (int delta = 5; delta <= 100; ++delta) {
            const VerificationReport report = verify_discharging(delta);
            CHECK(report.all_pass());
            // minimum final charge is m, met by every class in [3, c]
            Rational min_alpha = report.ledger.alpha(3);
            for (const auto& [j, alpha] : report.ledger.alpha_final)
                if (alpha < min_alpha) min_alpha = alpha;
            CHECK(min_alpha == report.m);
            if (delta >= 8) CHECK(report.ledger.alpha(delta) == report.m);
        }
    }
}

TEST_CASE("closed form identities") {
    SECTION("delta = 8") {
        const IdentityReport report = closed_form_identities(8);
        CHECK(report.closed_form_m == rat(28, 5));
        CHECK(report.closed_form_matches);
        CHECK(!report.quoted_constant_differs);
    }
    SECTION("delta = 9") {
        const IdentityReport report = closed_form_identities(9);
        CHECK(report.closed_form_m == rat(6));
        CHECK(report.closed_form_matches);
        CHECK(report.quoted_constant_differs);
        CHECK(report.constant == rat(19, 4));
        CHECK(report.quoted_constant == rat(21, 4));
    }
    SECTION("delta = 1000: gap is 5 - 7/501") {
        const IdentityReport report = closed_form_identities(1000);
        CHECK(report.gap == rat(5) - rat(7, 501));
        CHECK(report.closed_form_matches);
    }
    SECTION("sweep") {
        for (int delta = 8; delta <= 200; ++delta) CHECK(closed_form_identities(delta).closed_form_matches);
    }
    CHECK_THROWS_AS(closed_form_identities(7), std::invalid_argument);
}

TEST_CASE("strictly satisfied profiles have positive weighted slack") {
    // 100 random non-negative integer profiles at delta = 9 that satisfy all
    // rows strictly; the multiplier-weighted sum of (RHS - LHS) must be > 0.
    const int delta = 9;
    const InequalitySystem system = build_inequalities(delta);
    const Threshold t = threshold(delta);
    const MultiplierVector mult = discharging_multipliers(delta, t.m);
    std::mt19937 rng(271828);
    std::uniform_int_distribution<long long> low(0, 10);
    std::uniform_int_distribution<long long> high(1, 60);
    int accepted = 0;
    while (accepted < 100) {
        std::vector<long long> profile(static_cast<size_t>(delta) + 1, 0);
        for (int j = 3; j < delta; ++j) profile[static_cast<size_t>(j)] = low(rng);
        profile[static_cast<size_t>(delta)] = high(rng);
        bool strict = true;
        for (const InequalityRow& row : system.rows) {
            long long lhs = 0, rhs = 0;
            for (int j = 3; j <= delta; ++j) {
                lhs += row.lhs_coeff(j) * profile[static_cast<size_t>(j)];
                rhs += row.rhs_coeff(j) * profile[static_cast<size_t>(j)];
            }
            if (!(lhs < rhs)) {
                strict = false;
                break;
            }
        }
        if (!strict) continue;
        ++accepted;
        Rational weighted = rat(0);
        for (const InequalityRow& row : system.rows) {
            long long slack = 0;
            for (int j = 3; j <= delta; ++j)
                slack += row.net_coeff(j) * profile[static_cast<size_t>(j)];
            weighted += mult.for_a(row.a) * rat(slack, 1L);
        }
        CHECK(weighted > 0);
    }
}

TEST_CASE("report text serialization is key: value lines") {
    const VerificationReport report = verify_discharging(6);
    const std::string text = report.to_text();
    CHECK(text.find("delta: 6") != std::string::npos);
    CHECK(text.find("m: 14/3 (4.666667)") != std::string::npos);
    CHECK(text.find("result: pass") != std::string::npos);
}
