#pragma once

#include <string>

#include "jacring/series.hpp"

namespace jacring {

// One of the classical building blocks, tagged with the name it was built
// under.  These are raw expansions; the Jacobi-form bookkeeping (weight,
// index, character) lives one layer up.
struct BasicForm {
    ScaledSeries series;
    std::string label;
};

// All constructors return the expansion exactly up to (not including)
// q^(prec24/24).  Results are memoized per (label, prec24).

// The odd Jacobi theta function, as its alternating sum
//   q^(1/8) zeta^(1/2) sum_n (-1)^n q^(n(n+1)/2) zeta^n.
BasicForm theta(long prec24);

// Same function through the triple product
//   q^(1/8)(zeta^(1/2)-zeta^(-1/2)) prod_n (1-q^n)(1-q^n zeta)(1-q^n zeta^-1),
// kept as an independent code path so the two can be played against each
// other in tests.
BasicForm theta_triple_product(long prec24);

// Level-two theta functions; ab is one of 00, 01, 10.
BasicForm theta_ab(int a, int b, long prec24);

// Their z = 0 specializations (theta constants).
BasicForm theta_constant(int a, int b, long prec24);

// xi_ab = theta_ab / theta constant; xi_00 and xi_01 are integral, while
// xi_10 picks up denominator 2 (its double is integral).
BasicForm xi_ab(int a, int b, long prec24);

// Dedekind eta via the pentagonal-number expansion of q^(1/24) prod(1-q^n).
BasicForm eta(long prec24);

// Discriminant eta^24.
BasicForm delta(long prec24);

// Eisenstein series, k = 4 or 6, normalized to constant term 1 with the
// integral expansions 1 + 240 sum sigma_3 q^n and 1 - 504 sum sigma_5 q^n.
BasicForm eisenstein_e(int k, long prec24);

// Klein's j = E4^3 / Delta.
BasicForm j_invariant(long prec24);

mpz_class divisor_sigma(unsigned k, long n);

// Shared memoization used by all expansion constructors.  Safe to call
// concurrently; compute must be a pure function of (label, prec24).
ScaledSeries cached_series(const std::string& label, long prec24,
                           ScaledSeries (*compute)(long));

} // namespace jacring
