#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace madlec {

// Exact arithmetic everywhere.  Thresholds, densities, charges and LP pivots
// are non-dyadic rationals (14/3, 28/5, ...), so every comparison that decides
// an outcome must be exact; no floating point is allowed on those paths.
// GMP keeps mpq_class canonical (lowest terms, positive denominator) through
// arithmetic.  Raw numerator/denominator construction does not canonicalize,
// so it is funneled through rat().
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q", or plain "p" for integral values.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Fixed-point decimal rendering, round half away from zero.  Display only;
/// never feed the result back into a comparison.
inline std::string to_decimal_string(const Rational& r, int places = 6) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    BigInt num = r.get_num();
    const bool negative = num < 0;
    if (negative) num = -num;
    const BigInt& den = r.get_den();
    BigInt scaled = num * scale;
    BigInt q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den) ++q;
    const BigInt integer_part = q / scale;
    std::string out = integer_part.get_str();
    if (places > 0) {
        const BigInt frac_part = q % scale;
        std::string frac = frac_part.get_str();
        frac.insert(0, static_cast<size_t>(places) - frac.size(), '0');
        out += "." + frac;
    }
    if (negative && q != 0) out.insert(0, "-");
    return out;
}

}  // namespace madlec
