#pragma once

#include <map>
#include <string>
#include <vector>

#include "jacring/jacobi_form.hpp"

namespace jacring {

// The four generating systems polynomials can be written in.
enum class RingTag {
    weak_even_14, // E4 E6 Delta E4_1 E4_2 E4_3 E6_1 E6_2 F6_3 phi_0_1..4 phi_m2_1
    weak0_4,      // phi_0_1 phi_0_2 phi_0_3 phi_0_4
    wh0_8,        // j phi_0_1..4 G4_1 G4_2 G4_3   (G4_i = E4^2 E_{4,i} / Delta)
    half_index_14 // weak_even_14 with phi_0_3 -> phi_0_3half, phi_m2_1 -> phi_m1_half
};

std::string ring_tag_name(RingTag tag);
RingTag ring_tag_from_name(const std::string& name);

struct GeneratorInfo {
    std::string name;
    mpq_class weight;
    mpq_class index;
    int pole; // q-pole depth of the expansion (1 for j and the G4_i)
};

const std::vector<GeneratorInfo>& ring_generators(RingTag tag);

// Expansion of any registered generator name, memoized across calls.
JacobiForm generator_expansion(const std::string& name, long prec24);

// Polynomial with rational coefficients in the generators of one ring.
// Terms are kept on exponent vectors aligned with ring_generators(tag).
class GeneratorPolynomial {
public:
    using Exps = std::vector<int>;

    explicit GeneratorPolynomial(RingTag tag) : tag_(tag) {}

    static GeneratorPolynomial atom(RingTag tag, const std::string& gen, int e = 1,
                                    const mpq_class& c = 1);
    static GeneratorPolynomial constant(RingTag tag, const mpq_class& c);

    RingTag tag() const { return tag_; }
    const std::map<Exps, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;

    void add_term(const Exps& e, const mpq_class& c);

    // (weight, index) shared by every term; NotHomogeneous otherwise.
    std::pair<mpq_class, mpq_class> weight_index() const;

    // max over terms of the total q-pole depth
    int pole_depth() const;

    ScaledSeries expand_series(long prec24) const;
    JacobiForm expand(long prec24) const; // homogeneous polynomials only

    bool operator==(const GeneratorPolynomial& o) const {
        return tag_ == o.tag_ && terms_ == o.terms_;
    }

private:
    RingTag tag_;
    std::map<Exps, mpq_class> terms_;
};

// Re-tag a polynomial onto another ring sharing the used generators by
// name (e.g. WEAK0_4 terms into WEAK_EVEN_14 or WH0_8).
GeneratorPolynomial embed(const GeneratorPolynomial& p, RingTag dst);

GeneratorPolynomial operator+(const GeneratorPolynomial& a, const GeneratorPolynomial& b);
GeneratorPolynomial operator-(const GeneratorPolynomial& a, const GeneratorPolynomial& b);
GeneratorPolynomial operator*(const GeneratorPolynomial& a, const GeneratorPolynomial& b);
GeneratorPolynomial operator*(const mpq_class& c, const GeneratorPolynomial& a);
GeneratorPolynomial pow(const GeneratorPolynomial& a, unsigned e);

} // namespace jacring
