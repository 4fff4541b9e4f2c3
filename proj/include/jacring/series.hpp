#pragma once

#include <map>
#include <optional>

#include <gmpxx.h>

#include "jacring/errors.hpp"

namespace jacring {

// Truncated Fourier development in two variables q, z ("zeta" below stands
// for e(z)).  Exponents are kept integral by scaling: a monomial
// q^(n24/24) * zeta^(l2/2) is stored under the key pair (n24, l2).
//
// A series knows its own precision horizon prec24: coefficients at
// n24 < prec24 are exact, everything above is unknown.  Stored coefficients
// are never zero and every stored row sits strictly below the horizon; the
// zero series is an empty map (its order is then undefined).
class ScaledSeries {
public:
    using Row = std::map<long, mpq_class>; // l2 -> coefficient, no zeros

    explicit ScaledSeries(long prec24) : prec24_(prec24) {}

    static ScaledSeries monomial(long n24, long l2, const mpq_class& c, long prec24);
    static ScaledSeries one(long prec24) { return monomial(0, 0, 1, prec24); }

    long prec24() const { return prec24_; }
    bool is_zero() const { return rows_.empty(); }

    // Lowest exponent with a nonzero coefficient; nullopt for the zero series.
    std::optional<long> ord24() const;

    const std::map<long, Row>& rows() const { return rows_; }

    // Exact coefficient lookup.  Throws PrecisionExceeded at or above the
    // horizon: absence of a stored term only means zero below it.
    mpq_class coeff(long n24, long l2) const;

    // Row at a given q-level (empty if none); same horizon rule as coeff().
    Row row(long n24) const;

    void set(long n24, long l2, const mpq_class& c);
    void add_to(long n24, long l2, const mpq_class& c);

    // Copy restricted to a lower horizon.  Never invents precision.
    ScaledSeries truncated(long new_prec24) const;

    // True when both agree on every coefficient below min(horizons, prec24).
    friend bool agree_to(const ScaledSeries& a, const ScaledSeries& b, long prec24);

    bool operator==(const ScaledSeries& o) const {
        return prec24_ == o.prec24_ && rows_ == o.rows_;
    }

    ScaledSeries operator-() const;
    ScaledSeries& operator+=(const ScaledSeries& o);
    ScaledSeries& operator-=(const ScaledSeries& o);
    ScaledSeries& operator*=(const mpq_class& c);

private:
    std::map<long, Row> rows_;
    long prec24_;
};

// Sum/difference carry min(precisions).
ScaledSeries operator+(const ScaledSeries& a, const ScaledSeries& b);
ScaledSeries operator-(const ScaledSeries& a, const ScaledSeries& b);
ScaledSeries operator*(const mpq_class& c, const ScaledSeries& a);

// Product horizon: min(a.prec24 + ord(b), b.prec24 + ord(a)), where a zero
// operand contributes its own horizon in place of the (undefined) order.
ScaledSeries operator*(const ScaledSeries& a, const ScaledSeries& b);

// Exact quotient a/b.  Works level by level in q: each successive Laurent
// residue must be exactly divisible by b's leading row, else NotDivisible.
// Horizon: min(a.prec24, b.prec24 + ord(c)) - ord(b).
ScaledSeries exact_div(const ScaledSeries& a, const ScaledSeries& b);

ScaledSeries pow(const ScaledSeries& a, unsigned long e);

// Substitute z -> d*z, i.e. l2 -> d*l2 on keys.  d >= 1.
ScaledSeries dilate_z(const ScaledSeries& a, long d);

// Reduce all coefficients into [0, n).  Requires integral input, n >= 2.
ScaledSeries reduce_mod(const ScaledSeries& a, const mpz_class& n);

bool agree_to(const ScaledSeries& a, const ScaledSeries& b, long prec24);

// True if every stored coefficient is an integer.
bool is_integral(const ScaledSeries& a);

// First stored term with fractional coefficient, as (n24, l2), if any.
std::optional<std::pair<long, long>> first_fractional(const ScaledSeries& a);

} // namespace jacring
