#pragma once

#include <map>
#include <string>
#include <utility>

#include "jacring/gen_poly.hpp"
#include "jacring/jacobi_form.hpp"

namespace jacring {

// The coefficients f(n,l) with 4nm - l^2 < 0 of a weakly holomorphic
// weight-0 form of index m, together with its whole q^0-row.  Keys are
// the integer pairs (n, l).
struct SingularData {
    long index = 0;
    std::map<std::pair<long, long>, mpz_class> entries;
};

SingularData singular_part(const JacobiForm& f);

// Left side of the q^0-identity
//   sum_l f(0,l) - (6/m) sum_l f(0,l) l^2 - 24 sum_{n<0,l} f(n,l) sigma_1(-n);
// zero whenever f is a genuine weakly holomorphic weight-0 form.
mpq_class q0_identity_residual(const JacobiForm& f);

// f(0,0)/2: the weight of the Borcherds product attached to f.
mpq_class borcherds_weight(const JacobiForm& f);

// The singular generators beyond the weak ones: psi_0_1, psi_0_2,
// psi_0_3, each with a simple q-pole.
JacobiForm psi_named(const std::string& name, long prec24);

// Integer combination of index-m generator monomials whose rows at
// n <= 0 match the prescribed data exactly (positions absent from
// `target` are required to vanish).  Supported for 1 <= m <= 4; raises
// NotRealizable (with the unmatched residual) when no combination exists.
GeneratorPolynomial realize_singular(const SingularData& target);

} // namespace jacring
