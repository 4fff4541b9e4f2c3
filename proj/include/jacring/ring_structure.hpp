#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "jacring/gen_poly.hpp"
#include "jacring/jacobi_form.hpp"

namespace jacring {

// Triangular basis of the space of q^0 polynomials of weight 0, index m
// forms.  psi(n) has its leading zeta-coefficient at zeta^n; for n >= 2
// that coefficient is 1, psi(1) = (m zeta + (12-2m) + m/zeta)/gcd(12,m),
// and psi(2) is normalized to zeta^2 - 4 zeta + 6 - ...  q0 rows are
// stored as integer vectors (c_0 .. c_m) indexed by zeta exponent.
struct PsiBasis {
    int index = 0;
    std::vector<JacobiForm> forms;            // forms[n-1] is psi(n)
    std::vector<GeneratorPolynomial> polys;   // same combinations, WEAK0_4
    std::vector<std::vector<mpz_class>> q0;   // m rows of length m+1
    std::vector<int> pivots;                  // pivot column of row n-1 (= n)

    const JacobiForm& psi(int n) const { return forms.at(n - 1); }
    const GeneratorPolynomial& psi_poly(int n) const { return polys.at(n - 1); }
};

PsiBasis psi_basis(int m, long prec24);

// Finite certificate for integrality of the full Fourier expansion of a
// weak form presented as a generator polynomial.  checked lists the
// (n24, l2) positions actually inspected; on failure witness holds the
// first fractional coefficient found.
struct IntegralityCertificate {
    bool integral = true;
    mpq_class weight;
    mpq_class index;
    long order_bound = -1; // coefficients with n <= order_bound decide
    std::vector<std::pair<long, long>> checked;
    std::optional<std::tuple<long, long, mpq_class>> witness;
    std::string assumption;
};

IntegralityCertificate certify_integral(const GeneratorPolynomial& p, long prec24);

// Rewrite a form as a polynomial in the ring generators.  The result
// expands back to the input at the input's stored precision; all
// coefficients are integers.  Throws NotInRing (with the unexplained q^0
// residual as obstruction where applicable) when the input does not lie
// in the ring, NotWeak / PrecisionExceeded per their contracts.
GeneratorPolynomial decompose_weak0(const JacobiForm& f);     // weight 0 -> WEAK0_4
GeneratorPolynomial decompose_weak_even(const JacobiForm& f); // even weight -> WEAK_EVEN_14
GeneratorPolynomial decompose_wh0(const JacobiForm& f);       // weight 0, Delta-poles -> WH0_8

struct RelationResult {
    std::string name;
    bool holds = false;
    std::string detail; // first mismatch when it fails
};

// Named series identities between the generators, each checked to the
// given precision.  The second form evaluates against substitute series
// for the named generators (for fault injection); unlisted names fall
// back to the built-in expansions.
std::vector<RelationResult> verify_relations(long prec24);
std::vector<RelationResult> verify_relations(long prec24,
                                             const std::map<std::string, ScaledSeries>& override_table);

} // namespace jacring
