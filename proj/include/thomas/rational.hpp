#pragma once

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace thomas {

using Rational = mpq_class;

// mpq_class(num, den) keeps the fraction as given; canonicalize before use.
inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline double to_double(const Rational& r) {
    return r.get_d();
}

} // namespace thomas
