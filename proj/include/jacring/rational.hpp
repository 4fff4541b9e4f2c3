#pragma once

#include <string>

#include <gmpxx.h>

#include "jacring/errors.hpp"

namespace jacring {

inline bool is_integer(const mpq_class& x) {
    return x.get_den() == 1;
}

inline mpz_class to_integer(const mpq_class& x) {
    if (!is_integer(x))
        throw NonIntegralInput("expected an integer, got " + x.get_str());
    return x.get_num();
}

// Canonical "p" / "p/q" form, q > 0, gcd(p,q) = 1.
inline std::string rat_str(const mpq_class& x) {
    return x.get_str();
}

inline mpq_class parse_rat(const std::string& s) {
    mpq_class x;
    if (s.empty() || x.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: '" + s + "'");
    if (x.get_den() == 0)
        throw ParseError("zero denominator in rational literal: '" + s + "'");
    x.canonicalize();
    return x;
}

// Floor division for possibly negative numerators (C++ '/' truncates).
inline long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

} // namespace jacring
