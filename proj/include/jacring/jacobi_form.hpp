#pragma once

#include <gmpxx.h>

#include "jacring/series.hpp"

namespace jacring {

// A truncated Jacobi form: expansion plus the data that makes it one.
// weight and index are half-integers, the character splits into a power of
// the eta multiplier (char_D, mod 24) and a binary Heisenberg part (char_H).
//
// Support lattice invariants, enforced at construction:
//   - every stored n24 is congruent to char_D mod 24;
//   - l2 is even exactly when the index is integral and char_H = 0
//     (half-integral index forces char_H = 1 and odd l2).
struct JacobiForm {
    ScaledSeries series;
    mpq_class weight;
    mpq_class index;
    int char_D = 0;
    int char_H = 0;
};

// Validating constructor; throws StructureViolation when the stored support
// does not live on the lattice the character prescribes.
JacobiForm make_jacobi(ScaledSeries s, mpq_class weight, mpq_class index,
                       int char_D, int char_H);

void validate_support(const JacobiForm& f);

// n >= 0 on the whole support.
bool is_weak(const JacobiForm& f);
// 4nt - l^2 >= 0 on the whole support (t = index).
bool is_holomorphic(const JacobiForm& f);
// 4nt - l^2 > 0 on the whole support.
bool is_cusp(const JacobiForm& f);

bool has_trivial_character(const JacobiForm& f);

// f(n,l) = f(n,-l) on every stored term.
bool z_symmetric(const JacobiForm& f);

// For integral index m >= 1, trivial character: f(n,l) may only depend on
// (4nm - l^2, l mod 2m).  Checked on the stored support.
bool discriminant_dependent(const JacobiForm& f);

JacobiForm operator+(const JacobiForm& a, const JacobiForm& b);
JacobiForm operator-(const JacobiForm& a, const JacobiForm& b);
JacobiForm operator-(const JacobiForm& a);
JacobiForm operator*(const JacobiForm& a, const JacobiForm& b);
JacobiForm operator*(const mpq_class& c, const JacobiForm& a);
JacobiForm exact_div(const JacobiForm& a, const JacobiForm& b);
JacobiForm pow(const JacobiForm& a, unsigned long e);

} // namespace jacring
