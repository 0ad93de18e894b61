#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chromap {

// Exact rational scalar. mpq_class keeps the value canonical (lowest terms,
// positive denominator) as long as every entry point canonicalizes.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat_from_mpz(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "p/q" or a decimal literal like "1.25" (exact).
Rational rat_parse(const std::string& text);

std::string rat_str(const Rational& q);

inline double rat_double(const Rational& q) { return q.get_d(); }

// Nearest rational with denominator 2^bits. Used where an approximate value
// must live on a declared exact grid.
inline Rational rat_snap(double x, unsigned bits = 32) {
    mpz_class den = mpz_class(1) << bits;
    mpq_class scaled(x);
    mpz_class num;
    mpz_class prod_num = scaled.get_num() * den;
    // round to nearest
    mpz_class r;
    mpz_fdiv_qr(num.get_mpz_t(), r.get_mpz_t(), prod_num.get_mpz_t(), scaled.get_den().get_mpz_t());
    if (2 * r >= scaled.get_den()) num += 1;
    return rat_from_mpz(num, den);
}

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace chromap
