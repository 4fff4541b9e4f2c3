#pragma once

#include <string>

#include "jacring/jacobi_form.hpp"

namespace jacring {

// Named weak Jacobi forms of the standard graded rings.  Accepted names:
//   phi_0_1 phi_0_2 phi_0_3 phi_0_4   (weight 0, index 1..4)
//   phi_m2_1                          (weight -2, index 1)
//   xi_0_6                            (weight 0, index 6, the cusp one)
//   phi_m1_2                          (weight -1, index 2)
//   phi_0_3half phi_m1_half           (half-integral index, binary character)
// All expansions are integral; a failed integrality check is a bug and
// raises IntegralityViolation.
JacobiForm phi(const std::string& name, long prec24);

// One-variable forms wrapped as index-0 Jacobi forms (plus theta itself):
//   E4 E6 Delta j eta theta
JacobiForm basic_jacobi(const std::string& name, long prec24);

// Jacobi-Eisenstein series E_{k,m} for (k,m) in {4,6} x {1,2,3}, normalized
// to q^0-term 1; the (6,3) slot returns the integral stand-in F_{6,3}
// (= E_{6,3} + 144/61 Delta phi_m2_1^3, which itself is not integral).
JacobiForm jacobi_eisenstein(int k, int m, long prec24);

// The weight-6 index-3 theta-constant combination
//   t01^6 T01^6 + 3/2 t01^4 t10^2 T01^4 T10^2
//                - 3/2 t01^2 t10^4 T01^2 T10^4 - t10^6 T10^6
// (t = theta constant, T = two-variable theta).  The half-integral q-powers
// of the middle terms cancel in the sum; the result is integral and differs
// from F_{6,3} by -2 Delta phi_m2_1^3.
JacobiForm e63_prime(long prec24);

// A basis-completion family F_{k,m} (even k >= 4, m >= 0) with q^0-term 1:
//   F_{k,0}   = E4^a E6^b           (4a + 6b = k, b <= 1)
//   F_{k,m}   = F_{k-4,0} E_{4,m}   (1 <= m <= 3; at k = 4,6 the E_{k,m})
//   F_{k,m}   = F_{k,m-3} phi_0_3 - F_{k,m-4} phi_0_4   (m >= 4)
// Only the q^0-term, weight, index and integrality are contractual; the
// family itself is one choice among many.
JacobiForm f_family(int k, int m, long prec24);

// Pullback of the E8 theta series along z -> (v_m, z), v_m a fixed norm-2m
// lattice vector: sum over E8 of q^((v,v)/2) zeta^((v,v_m)).  Equals the
// Jacobi-Eisenstein series of weight 4 and index m.
JacobiForm theta_e8_specialize(int m, long prec24);

// Hecke operators, wired for trivial character and integral weight/index
// only (UnsupportedCharacter otherwise).
//
// U_d: z -> d z, index scales by d^2, expansion precision unchanged.
JacobiForm hecke_u(const JacobiForm& f, long d);

// V_d: c_out(n,l) = sum over a | gcd(n,l,d) of a^(weight-1) c(nd/a^2, l/a),
// with gcd(0,0,d) = d.  Output has floor(P/d) of the input's P q-orders.
JacobiForm hecke_v(const JacobiForm& f, long d);

} // namespace jacring
