#include "jacring/gen_poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "jacring/errors.hpp"
#include "jacring/generators.hpp"
#include "jacring/rational.hpp"
#include "jacring/theta_eta.hpp"

namespace jacring {

namespace {

mpq_class mq(int num, int den = 1) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::vector<GeneratorInfo> make_registry(RingTag tag) {
    auto g = [](const char* n, mpq_class w, mpq_class m, int pole = 0) {
        return GeneratorInfo{n, std::move(w), std::move(m), pole};
    };
    switch (tag) {
    case RingTag::weak_even_14:
        return {g("E4", 4, 0),      g("E6", 6, 0),      g("Delta", 12, 0),
                g("E4_1", 4, 1),    g("E4_2", 4, 2),    g("E4_3", 4, 3),
                g("E6_1", 6, 1),    g("E6_2", 6, 2),    g("F6_3", 6, 3),
                g("phi_0_1", 0, 1), g("phi_0_2", 0, 2), g("phi_0_3", 0, 3),
                g("phi_0_4", 0, 4), g("phi_m2_1", -2, 1)};
    case RingTag::weak0_4:
        return {g("phi_0_1", 0, 1), g("phi_0_2", 0, 2), g("phi_0_3", 0, 3),
                g("phi_0_4", 0, 4)};
    case RingTag::wh0_8:
        return {g("j", 0, 0, 1),    g("phi_0_1", 0, 1), g("phi_0_2", 0, 2),
                g("phi_0_3", 0, 3), g("phi_0_4", 0, 4), g("G4_1", 0, 1, 1),
                g("G4_2", 0, 2, 1), g("G4_3", 0, 3, 1)};
    case RingTag::half_index_14:
        return {g("E4", 4, 0),
                g("E6", 6, 0),
                g("Delta", 12, 0),
                g("E4_1", 4, 1),
                g("E4_2", 4, 2),
                g("E4_3", 4, 3),
                g("E6_1", 6, 1),
                g("E6_2", 6, 2),
                g("F6_3", 6, 3),
                g("phi_0_1", 0, 1),
                g("phi_0_2", 0, 2),
                g("phi_0_3half", 0, mq(3, 2)),
                g("phi_0_4", 0, 4),
                g("phi_m1_half", -1, mq(1, 2))};
    }
    throw std::logic_error("unknown ring tag");
}

ScaledSeries g4_raw(int i, long prec24) {
    long pp = prec24 + 48;
    ScaledSeries num =
        pow(eisenstein_e(4, pp).series, 2) * jacobi_eisenstein(4, i, pp).series;
    return exact_div(num, delta(pp).series).truncated(prec24);
}

ScaledSeries g41_raw(long p) { return g4_raw(1, p); }
ScaledSeries g42_raw(long p) { return g4_raw(2, p); }
ScaledSeries g43_raw(long p) { return g4_raw(3, p); }

} // namespace

std::string ring_tag_name(RingTag tag) {
    switch (tag) {
    case RingTag::weak_even_14:
        return "WEAK_EVEN_14";
    case RingTag::weak0_4:
        return "WEAK0_4";
    case RingTag::wh0_8:
        return "WH0_8";
    case RingTag::half_index_14:
        return "HALF_INDEX_14";
    }
    throw std::logic_error("unknown ring tag");
}

RingTag ring_tag_from_name(const std::string& name) {
    if (name == "WEAK_EVEN_14")
        return RingTag::weak_even_14;
    if (name == "WEAK0_4")
        return RingTag::weak0_4;
    if (name == "WH0_8")
        return RingTag::wh0_8;
    if (name == "HALF_INDEX_14")
        return RingTag::half_index_14;
    throw ParseError("unknown ring tag '" + name + "'");
}

const std::vector<GeneratorInfo>& ring_generators(RingTag tag) {
    static const std::vector<GeneratorInfo> tables[4] = {
        make_registry(RingTag::weak_even_14), make_registry(RingTag::weak0_4),
        make_registry(RingTag::wh0_8), make_registry(RingTag::half_index_14)};
    return tables[static_cast<int>(tag)];
}

JacobiForm generator_expansion(const std::string& name, long prec24) {
    if (name == "E4" || name == "E6" || name == "Delta" || name == "j")
        return basic_jacobi(name, prec24);
    if (name == "E4_1")
        return jacobi_eisenstein(4, 1, prec24);
    if (name == "E4_2")
        return jacobi_eisenstein(4, 2, prec24);
    if (name == "E4_3")
        return jacobi_eisenstein(4, 3, prec24);
    if (name == "E6_1")
        return jacobi_eisenstein(6, 1, prec24);
    if (name == "E6_2")
        return jacobi_eisenstein(6, 2, prec24);
    if (name == "F6_3")
        return jacobi_eisenstein(6, 3, prec24);
    if (name == "G4_1")
        return make_jacobi(cached_series("G4_1", prec24, &g41_raw), 0, 1, 0, 0);
    if (name == "G4_2")
        return make_jacobi(cached_series("G4_2", prec24, &g42_raw), 0, 2, 0, 0);
    if (name == "G4_3")
        return make_jacobi(cached_series("G4_3", prec24, &g43_raw), 0, 3, 0, 0);
    return phi(name, prec24); // throws for unknown names
}

GeneratorPolynomial GeneratorPolynomial::atom(RingTag tag, const std::string& gen, int e,
                                              const mpq_class& c) {
    const auto& gens = ring_generators(tag);
    GeneratorPolynomial p(tag);
    Exps exps(gens.size(), 0);
    auto it = std::find_if(gens.begin(), gens.end(),
                           [&](const GeneratorInfo& g) { return g.name == gen; });
    if (it == gens.end())
        throw std::invalid_argument("'" + gen + "' is not a generator of " +
                                    ring_tag_name(tag));
    exps[static_cast<size_t>(it - gens.begin())] = e;
    p.add_term(exps, c);
    return p;
}

GeneratorPolynomial GeneratorPolynomial::constant(RingTag tag, const mpq_class& c) {
    GeneratorPolynomial p(tag);
    p.add_term(Exps(ring_generators(tag).size(), 0), c);
    return p;
}

bool GeneratorPolynomial::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (!is_integer(c))
            return false;
    return true;
}

void GeneratorPolynomial::add_term(const Exps& e, const mpq_class& c) {
    assert(e.size() == ring_generators(tag_).size());
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::pair<mpq_class, mpq_class> GeneratorPolynomial::weight_index() const {
    const auto& gens = ring_generators(tag_);
    std::pair<mpq_class, mpq_class> wi{0, 0};
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpq_class w = 0, m = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            w += e[i] * gens[i].weight;
            m += e[i] * gens[i].index;
        }
        if (first) {
            wi = {w, m};
            first = false;
        } else if (wi != std::make_pair(w, m)) {
            throw NotHomogeneous("terms of mixed weight/index: (" + rat_str(wi.first) +
                                 "," + rat_str(wi.second) + ") vs (" + rat_str(w) + "," +
                                 rat_str(m) + ")");
        }
    }
    return wi;
}

int GeneratorPolynomial::pole_depth() const {
    const auto& gens = ring_generators(tag_);
    int depth = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (size_t i = 0; i < e.size(); ++i)
            d += e[i] * gens[i].pole;
        depth = std::max(depth, d);
    }
    return depth;
}

ScaledSeries GeneratorPolynomial::expand_series(long prec24) const {
    const auto& gens = ring_generators(tag_);
    ScaledSeries acc(prec24);
    for (const auto& [e, c] : terms_) {
        int poles = 0;
        for (size_t i = 0; i < e.size(); ++i)
            poles += e[i] * gens[i].pole;
        long pp = prec24 + 24 * poles;
        ScaledSeries term = ScaledSeries::one(pp);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term = term * pow(generator_expansion(gens[i].name, pp).series,
                                  static_cast<unsigned long>(e[i]));
        acc = acc + c * term.truncated(prec24);
    }
    return acc.truncated(prec24);
}

JacobiForm GeneratorPolynomial::expand(long prec24) const {
    auto [w, m] = weight_index();
    ScaledSeries s = expand_series(prec24);
    // half-integral index polynomials are validated against their own lattice
    int char_h = is_integer(m) ? 0 : 1;
    return make_jacobi(std::move(s), w, m, 0, char_h);
}

GeneratorPolynomial embed(const GeneratorPolynomial& p, RingTag dst) {
    if (p.tag() == dst)
        return p;
    const auto& src = ring_generators(p.tag());
    const auto& out_gens = ring_generators(dst);
    std::vector<size_t> where(src.size());
    for (size_t i = 0; i < src.size(); ++i) {
        auto it = std::find_if(out_gens.begin(), out_gens.end(),
                               [&](const GeneratorInfo& g) { return g.name == src[i].name; });
        where[i] = it == out_gens.end() ? out_gens.size() : static_cast<size_t>(it - out_gens.begin());
    }
    GeneratorPolynomial out(dst);
    for (const auto& [e, c] : p.terms()) {
        GeneratorPolynomial::Exps e2(out_gens.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (where[i] == out_gens.size())
                throw std::invalid_argument("'" + src[i].name + "' is not a generator of " +
                                            ring_tag_name(dst));
            e2[where[i]] = e[i];
        }
        out.add_term(e2, c);
    }
    return out;
}

namespace {

void require_same_ring(const GeneratorPolynomial& a, const GeneratorPolynomial& b) {
    if (a.tag() != b.tag())
        throw std::invalid_argument("polynomials over different rings");
}

} // namespace

GeneratorPolynomial operator+(const GeneratorPolynomial& a, const GeneratorPolynomial& b) {
    require_same_ring(a, b);
    GeneratorPolynomial out = a;
    for (const auto& [e, c] : b.terms())
        out.add_term(e, c);
    return out;
}

GeneratorPolynomial operator-(const GeneratorPolynomial& a, const GeneratorPolynomial& b) {
    require_same_ring(a, b);
    GeneratorPolynomial out = a;
    for (const auto& [e, c] : b.terms())
        out.add_term(e, -c);
    return out;
}

GeneratorPolynomial operator*(const GeneratorPolynomial& a, const GeneratorPolynomial& b) {
    require_same_ring(a, b);
    GeneratorPolynomial out(a.tag());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            GeneratorPolynomial::Exps e(ea.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

GeneratorPolynomial operator*(const mpq_class& c, const GeneratorPolynomial& a) {
    GeneratorPolynomial out(a.tag());
    if (c == 0)
        return out;
    for (const auto& [e, v] : a.terms())
        out.add_term(e, c * v);
    return out;
}

GeneratorPolynomial pow(const GeneratorPolynomial& a, unsigned e) {
    GeneratorPolynomial out = GeneratorPolynomial::constant(a.tag(), 1);
    for (unsigned i = 0; i < e; ++i)
        out = out * a;
    return out;
}

} // namespace jacring
