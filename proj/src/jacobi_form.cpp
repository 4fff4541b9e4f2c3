#include "jacring/jacobi_form.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "jacring/errors.hpp"
#include "jacring/rational.hpp"

namespace jacring {

namespace {

int norm24(long d) {
    return static_cast<int>(((d % 24) + 24) % 24);
}

// 12*(4nt - l^2) as an exact integer: n24*(2t) - 3*l2^2.
mpz_class disc12(const JacobiForm& f, long n24, long l2) {
    mpz_class index2 = to_integer(2 * f.index);
    return n24 * index2 - 3 * mpz_class(l2) * l2;
}

} // namespace

void validate_support(const JacobiForm& f) {
    if (!is_integer(2 * f.weight) || !is_integer(2 * f.index))
        throw StructureViolation("weight and index must be half-integers");
    if (f.index < 0)
        throw StructureViolation("negative index");
    bool integral_index = is_integer(f.index);
    if (!integral_index && f.char_H != 1)
        throw StructureViolation("half-integral index requires the binary character");
    int d = norm24(f.char_D);
    int want_l2_odd = integral_index ? f.char_H : 1;
    for (const auto& [n24, row] : f.series.rows()) {
        if (norm24(n24) != d)
            throw StructureViolation("support at q^(" + std::to_string(n24) +
                                     "/24) is off the character lattice (char_D = " +
                                     std::to_string(d) + ")");
        for (const auto& [l2, c] : row) {
            (void)c;
            if ((std::labs(l2) % 2) != want_l2_odd)
                throw StructureViolation("zeta exponent " + std::to_string(l2) +
                                         "/2 at q^(" + std::to_string(n24) +
                                         "/24) has the wrong parity");
        }
    }
}

JacobiForm make_jacobi(ScaledSeries s, mpq_class weight, mpq_class index,
                       int char_D, int char_H) {
    JacobiForm f{std::move(s), std::move(weight), std::move(index),
                 norm24(char_D), char_H & 1};
    validate_support(f);
    return f;
}

bool is_weak(const JacobiForm& f) {
    return f.series.is_zero() || *f.series.ord24() >= 0;
}

bool is_holomorphic(const JacobiForm& f) {
    for (const auto& [n24, row] : f.series.rows())
        for (const auto& [l2, c] : row) {
            (void)c;
            if (disc12(f, n24, l2) < 0)
                return false;
        }
    return true;
}

bool is_cusp(const JacobiForm& f) {
    for (const auto& [n24, row] : f.series.rows())
        for (const auto& [l2, c] : row) {
            (void)c;
            if (disc12(f, n24, l2) <= 0)
                return false;
        }
    return true;
}

bool has_trivial_character(const JacobiForm& f) {
    return norm24(f.char_D) == 0 && f.char_H == 0;
}

bool z_symmetric(const JacobiForm& f) {
    for (const auto& [n24, row] : f.series.rows())
        for (const auto& [l2, c] : row)
            if (f.series.coeff(n24, -l2) != c)
                return false;
    return true;
}

bool discriminant_dependent(const JacobiForm& f) {
    if (!has_trivial_character(f) || !is_integer(f.index) || f.index < 1)
        return false;
    long m2 = to_integer(2 * f.index).get_si(); // 2m
    std::map<std::pair<mpz_class, long>, mpq_class> seen;
    for (const auto& [n24, row] : f.series.rows())
        for (const auto& [l2, c] : row) {
            long l_mod = ((l2 / 2) % m2 + m2) % m2;
            auto key = std::make_pair(disc12(f, n24, l2), l_mod);
            auto [it, fresh] = seen.emplace(key, c);
            if (!fresh && it->second != c)
                return false;
        }
    return true;
}

namespace {

void require_same_type(const JacobiForm& a, const JacobiForm& b, const char* op) {
    if (a.weight != b.weight || a.index != b.index || a.char_D != b.char_D ||
        a.char_H != b.char_H)
        throw std::invalid_argument(std::string(op) +
                                    ": operands have different weight/index/character");
}

} // namespace

JacobiForm operator+(const JacobiForm& a, const JacobiForm& b) {
    require_same_type(a, b, "add");
    return {a.series + b.series, a.weight, a.index, a.char_D, a.char_H};
}

JacobiForm operator-(const JacobiForm& a, const JacobiForm& b) {
    require_same_type(a, b, "sub");
    return {a.series - b.series, a.weight, a.index, a.char_D, a.char_H};
}

JacobiForm operator-(const JacobiForm& a) {
    return {-a.series, a.weight, a.index, a.char_D, a.char_H};
}

JacobiForm operator*(const JacobiForm& a, const JacobiForm& b) {
    return {a.series * b.series, a.weight + b.weight, a.index + b.index,
            norm24(a.char_D + b.char_D), a.char_H ^ b.char_H};
}

JacobiForm operator*(const mpq_class& c, const JacobiForm& a) {
    return {c * a.series, a.weight, a.index, a.char_D, a.char_H};
}

JacobiForm exact_div(const JacobiForm& a, const JacobiForm& b) {
    return {exact_div(a.series, b.series), a.weight - b.weight, a.index - b.index,
            norm24(a.char_D - b.char_D), a.char_H ^ b.char_H};
}

JacobiForm pow(const JacobiForm& a, unsigned long e) {
    return {pow(a.series, e), mpq_class(static_cast<long>(e)) * a.weight,
            mpq_class(static_cast<long>(e)) * a.index,
            norm24(static_cast<long>(e) * a.char_D),
            static_cast<int>(e & 1) * a.char_H};
}

} // namespace jacring
