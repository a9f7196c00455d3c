// Exact integer/rational scalars used throughout. Thin layer over GMP.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ellipt {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// base^exp for rational base, integer exponent of either sign. base must be
// nonzero when exp < 0.
inline Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    Rat b = base;
    if (exp < 0) {
        if (b == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        b = 1 / b;
        exp = -exp;
    }
    Rat num(int_pow(b.get_num(), static_cast<unsigned long>(exp)),
            int_pow(b.get_den(), static_cast<unsigned long>(exp)));
    num.canonicalize();
    return num;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Parses "u", "u/v" or "-u/v"; canonicalizes and rejects zero denominators.
inline Rat parse_rational(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("cannot parse rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace ellipt
