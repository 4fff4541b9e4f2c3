#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace jacring {

// Base class for everything this library throws on bad mathematical input.
// Program bugs (broken invariants) use assert/logic_error instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact_div: divisor's leading row left a nonzero residue at some q-level.
struct NotDivisible : Error {
    using Error::Error;
};

// A coefficient beyond the stored precision horizon was requested.
struct PrecisionExceeded : Error {
    using Error::Error;
};

// An operation that needs integer coefficients saw a proper fraction.
struct NonIntegralInput : Error {
    using Error::Error;
};

// A constructor promised an integral expansion but the division produced
// a fractional coefficient.
struct IntegralityViolation : Error {
    using Error::Error;
};

// Eisenstein-type constructors expect the q^0 coefficient to normalize to 1.
struct NonUnitConstantTerm : Error {
    using Error::Error;
};

// Hecke operators are only wired up for trivial character and integral
// weight/index.
struct UnsupportedCharacter : Error {
    using Error::Error;
};

struct NotHomogeneous : Error {
    using Error::Error;
};

struct NotWeak : Error {
    using Error::Error;
};

struct NotHolomorphic : Error {
    using Error::Error;
};

// Decomposition failed: the input is not in the claimed ring.  The
// obstruction vector (when present) is the residual of the failed linear
// solve.
struct NotInRing : Error {
    explicit NotInRing(const std::string& what, std::vector<mpq_class> obs = {})
        : Error(what), obstruction(std::move(obs)) {}
    std::vector<mpq_class> obstruction;
};

// A computed basis or matrix does not have the shape the theory predicts.
struct StructureViolation : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

// No form with the prescribed singular coefficients exists in the ring.
struct NotRealizable : Error {
    explicit NotRealizable(const std::string& what, std::vector<mpq_class> obs = {})
        : Error(what), obstruction(std::move(obs)) {}
    std::vector<mpq_class> obstruction;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace jacring
