#include "jacring/ring_structure.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <mutex>
#include <sstream>
#include <utility>

#include "jacring/errors.hpp"
#include "jacring/generators.hpp"
#include "jacring/rational.hpp"
#include "jacring/theta_eta.hpp"
#include "jacring/zlinalg.hpp"

namespace jacring {

namespace {

std::vector<mpq_class> to_rational(const std::vector<mpz_class>& v) {
    return {v.begin(), v.end()};
}

// q^0-row of a trivial-character expansion as the integer vector
// (c_0 .. c_m), c_i the coefficient of zeta^i.  Rejects rows that no
// index-m form can have.
std::vector<mpz_class> q0_lattice_vector(const ScaledSeries& s, long m) {
    ScaledSeries::Row row = s.row(0);
    std::vector<mpq_class> c(static_cast<size_t>(m) + 1, 0);
    for (const auto& [l2, v] : row) {
        if (l2 % 2 != 0)
            throw NotInRing("odd zeta-exponent in q^0-term");
        long l = std::abs(l2) / 2;
        if (l > m)
            throw NotInRing("q^0-term wider than index " + std::to_string(m) + " allows");
        auto mirror = row.find(-l2);
        if (mirror == row.end() || mirror->second != v)
            throw NotInRing("q^0-term not symmetric under l -> -l");
        c[static_cast<size_t>(l)] = v;
    }
    for (const auto& v : c)
        if (!is_integer(v))
            throw NotInRing("fractional q^0-term", c);
    std::vector<mpz_class> out(c.size());
    for (size_t i = 0; i < c.size(); ++i)
        out[i] = c[i].get_num();
    return out;
}

PsiBasis build_psi_basis(int m, long prec24) {
    // monomials phi_0_1^a phi_0_2^b phi_0_3^c phi_0_4^d of index m
    std::vector<std::array<int, 4>> mons;
    for (int a = m; a >= 0; --a)
        for (int b = (m - a) / 2; b >= 0; --b)
            for (int c = (m - a - 2 * b) / 3; c >= 0; --c) {
                int rem = m - a - 2 * b - 3 * c;
                if (rem % 4 == 0)
                    mons.push_back({a, b, c, rem / 4});
            }

    std::array<ScaledSeries, 4> gen = {
        phi("phi_0_1", prec24).series, phi("phi_0_2", prec24).series,
        phi("phi_0_3", prec24).series, phi("phi_0_4", prec24).series};
    std::vector<ScaledSeries> expansion;
    expansion.reserve(mons.size());
    for (const auto& e : mons) {
        ScaledSeries s = ScaledSeries::one(prec24);
        for (size_t i = 0; i < 4; ++i)
            if (e[i] > 0)
                s = s * pow(gen[i], static_cast<unsigned long>(e[i]));
        expansion.push_back(std::move(s));
    }

    std::vector<std::vector<mpz_class>> a;
    a.reserve(mons.size());
    try {
        for (const auto& s : expansion)
            a.push_back(q0_lattice_vector(s, m));
    } catch (const NotInRing& e) {
        throw StructureViolation(std::string("monomial q^0-row malformed: ") + e.what());
    }

    std::vector<int> order;
    for (int col = m; col >= 0; --col)
        order.push_back(col);
    Hnf hnf = hnf_rows(std::move(a), order);

    if (hnf.rank() != m)
        throw StructureViolation("q^0-lattice of index " + std::to_string(m) + " has rank " +
                                 std::to_string(hnf.rank()) + ", expected " + std::to_string(m));
    for (int r = 0; r < m; ++r)
        if (hnf.pivots[static_cast<size_t>(r)] != m - r)
            throw StructureViolation("unexpected pivot column in the q^0-lattice");
    for (int n = 2; n <= m; ++n)
        if (hnf.h[static_cast<size_t>(m - n)][static_cast<size_t>(n)] != 1)
            throw StructureViolation("pivot at zeta^" + std::to_string(n) + " is not 1");

    mpz_class g = gcd(mpz_class(12), mpz_class(m));
    mpz_class lead = mpz_class(m) / g, zeta0 = mpz_class(12 - 2 * m) / g;
    const auto& psi1 = hnf.h[static_cast<size_t>(m - 1)];
    if (psi1[1] != lead || psi1[0] != zeta0)
        throw StructureViolation("psi(1) row is not (m, 12-2m)/(12,m)");

    if (m >= 2) {
        // normalize psi(2) to the exact row 6 - 4 zeta +- zeta^2
        auto& row = hnf.h[static_cast<size_t>(m - 2)];
        mpz_class num = mpz_class(-4) - row[1];
        if (!mpz_divisible_p(num.get_mpz_t(), lead.get_mpz_t()))
            throw StructureViolation("psi(2) cannot be normalized against psi(1)");
        mpz_class y = num / lead;
        for (size_t k = 0; k <= static_cast<size_t>(m); ++k)
            row[k] += y * psi1[k];
        auto& urow = hnf.u[static_cast<size_t>(m - 2)];
        const auto& u1 = hnf.u[static_cast<size_t>(m - 1)];
        for (size_t k = 0; k < urow.size(); ++k)
            urow[k] += y * u1[k];
        if (row[0] != 6 || row[1] != -4 || row[2] != 1)
            throw StructureViolation("psi(2) row is not (6, -4, 1)");
    }

    PsiBasis basis;
    basis.index = m;
    for (int n = 1; n <= m; ++n) {
        size_t r = static_cast<size_t>(m - n);
        ScaledSeries s(prec24);
        GeneratorPolynomial p(RingTag::weak0_4);
        for (size_t k = 0; k < mons.size(); ++k) {
            const mpz_class& u = hnf.u[r][k];
            if (u == 0)
                continue;
            s += mpq_class(u) * expansion[k];
            p.add_term({mons[k][0], mons[k][1], mons[k][2], mons[k][3]}, mpq_class(u));
        }
        basis.forms.push_back(make_jacobi(std::move(s), 0, m, 0, 0));
        basis.polys.push_back(std::move(p));
        basis.q0.push_back(hnf.h[r]);
        basis.pivots.push_back(n);
    }
    return basis;
}

std::mutex psi_mu;
std::map<std::pair<int, long>, PsiBasis>& psi_map() {
    static std::map<std::pair<int, long>, PsiBasis> m;
    return m;
}

GeneratorPolynomial atom14(const std::string& name, int e = 1) {
    return GeneratorPolynomial::atom(RingTag::weak_even_14, name, e);
}

GeneratorPolynomial atom8(const std::string& name, int e = 1) {
    return GeneratorPolynomial::atom(RingTag::wh0_8, name, e);
}

// polynomial mirror of f_family
GeneratorPolynomial f_family_poly(int k, int m) {
    if (k < 4 || k % 2 || m < 0)
        throw std::invalid_argument("f_family_poly: need even weight >= 4, index >= 0");
    if (m == 0) {
        if (k % 4 == 0)
            return atom14("E4", k / 4);
        GeneratorPolynomial p = atom14("E6");
        return k == 6 ? p : p * atom14("E4", (k - 6) / 4);
    }
    if (m <= 3) {
        static const char* e4[] = {"E4_1", "E4_2", "E4_3"};
        static const char* e6[] = {"E6_1", "E6_2", "F6_3"};
        if (k == 4)
            return atom14(e4[m - 1]);
        if (k == 6)
            return atom14(e6[m - 1]);
        return f_family_poly(k - 4, 0) * atom14(e4[m - 1]);
    }
    return f_family_poly(k, m - 3) * atom14("phi_0_3") - f_family_poly(k, m - 4) * atom14("phi_0_4");
}

// G_{12,m}/Delta as a polynomial: j, G4_m, then the phi recursion
GeneratorPolynomial g12_over_delta_poly(int m) {
    if (m == 0)
        return atom8("j");
    if (m <= 3) {
        static const char* g4[] = {"G4_1", "G4_2", "G4_3"};
        return atom8(g4[m - 1]);
    }
    return g12_over_delta_poly(m - 3) * atom8("phi_0_3") -
           g12_over_delta_poly(m - 4) * atom8("phi_0_4");
}

GeneratorPolynomial xi06_poly() {
    GeneratorPolynomial p(RingTag::weak0_4);
    p.add_term({2, 0, 0, 1}, -1);
    p.add_term({1, 1, 1, 0}, 9);
    p.add_term({0, 3, 0, 0}, -8);
    p.add_term({0, 0, 2, 0}, -27);
    return p;
}

void require_trivial_weight0(const JacobiForm& f, const char* who) {
    if (!has_trivial_character(f))
        throw NotInRing(std::string(who) + ": nontrivial character");
    if (f.weight != 0)
        throw NotInRing(std::string(who) + ": weight " + rat_str(f.weight) + ", expected 0");
    if (!is_integer(f.index) || f.index < 0)
        throw NotInRing(std::string(who) + ": index must be a nonnegative integer");
}

} // namespace

PsiBasis psi_basis(int m, long prec24) {
    if (m < 1)
        throw std::invalid_argument("psi_basis: index must be >= 1");
    if (prec24 < 1)
        throw InsufficientData("psi_basis: needs at least the q^0-row");
    {
        std::lock_guard<std::mutex> lk(psi_mu);
        auto it = psi_map().find({m, prec24});
        if (it != psi_map().end())
            return it->second;
    }
    PsiBasis b = build_psi_basis(m, prec24);
    std::lock_guard<std::mutex> lk(psi_mu);
    return psi_map().emplace(std::make_pair(m, prec24), std::move(b)).first->second;
}

IntegralityCertificate certify_integral(const GeneratorPolynomial& p, long prec24) {
    IntegralityCertificate cert;
    auto [w, m] = p.weight_index();
    cert.weight = w;
    cert.index = m;
    if (!is_integer(m) || !is_integer(w) || to_integer(w) % 2 != 0)
        throw NotHomogeneous("certificate covers even weight and integral index only");

    mpq_class bound = (m + w / 2) / 6;
    mpz_class n_max;
    mpz_fdiv_q(n_max.get_mpz_t(), bound.get_num().get_mpz_t(), bound.get_den().get_mpz_t());
    cert.order_bound = n_max.get_si();
    cert.assumption = "the expansion continues to a weak Jacobi form of the stated "
                      "weight and index (automatic for generator polynomials)";

    long scan24 = 24 * (std::max(cert.order_bound, 0L) + 1);
    ScaledSeries s = p.expand_series(std::max(prec24, scan24));
    if (auto ord = s.ord24(); ord && *ord < 0)
        throw NotWeak("expansion has a q-pole; the certificate covers weak forms only");

    for (const auto& [n24, row] : s.rows()) {
        if (n24 > 24 * cert.order_bound)
            break;
        for (const auto& [l2, c] : row) {
            cert.checked.emplace_back(n24, l2);
            if (!is_integer(c)) {
                cert.integral = false;
                cert.witness = {n24, l2, c};
                return cert;
            }
        }
    }
    return cert;
}

GeneratorPolynomial decompose_weak0(const JacobiForm& f) {
    require_trivial_weight0(f, "decompose_weak0");
    if (!is_weak(f))
        throw NotWeak("decompose_weak0: input has a q-pole");
    GeneratorPolynomial out(RingTag::weak0_4);
    if (f.series.is_zero())
        return out;
    long m = to_integer(f.index).get_si();
    if (m == 0) {
        mpq_class c = f.series.coeff(0, 0);
        if (!is_integer(c))
            throw NotInRing("fractional constant term", {c});
        if (!(f.series - c * ScaledSeries::one(f.series.prec24())).is_zero())
            throw NotInRing("weight-0 index-0 input is not a constant");
        return GeneratorPolynomial::constant(RingTag::weak0_4, c);
    }

    const long prec = f.series.prec24();
    const PsiBasis basis = psi_basis(static_cast<int>(m), prec);
    std::vector<mpz_class> v = q0_lattice_vector(f.series, m);
    std::vector<mpz_class> y(static_cast<size_t>(m) + 1);
    for (long n = m; n >= 1; --n) {
        const auto& row = basis.q0[static_cast<size_t>(n - 1)];
        const mpz_class& pivot = row[static_cast<size_t>(n)];
        mpz_class& target = v[static_cast<size_t>(n)];
        if (target != 0) {
            if (!mpz_divisible_p(target.get_mpz_t(), pivot.get_mpz_t()))
                throw NotInRing("q^0-term outside the integral lattice", to_rational(v));
            y[static_cast<size_t>(n)] = target / pivot;
            for (size_t k = 0; k < row.size(); ++k)
                v[k] -= y[static_cast<size_t>(n)] * row[k];
        }
    }
    if (v[0] != 0)
        throw NotInRing("q^0-term outside the integral lattice", to_rational(v));

    ScaledSeries g = f.series;
    for (long n = 1; n <= m; ++n) {
        const mpz_class& c = y[static_cast<size_t>(n)];
        if (c == 0)
            continue;
        g -= mpq_class(c) * basis.psi(static_cast<int>(n)).series;
        out = out + mpq_class(c) * basis.psi_poly(static_cast<int>(n));
    }
    if (g.is_zero())
        return out;
    if (m < 6) {
        std::vector<mpq_class> obs;
        for (const auto& [l2, c] : g.row(*g.ord24()))
            obs.push_back(c);
        throw NotInRing("nonzero q-divisible residual below index 6", obs);
    }

    JacobiForm quotient = [&] {
        try {
            return exact_div(make_jacobi(std::move(g), 0, m, 0, 0), phi("xi_0_6", prec));
        } catch (const NotDivisible& e) {
            throw NotInRing(std::string("residual not divisible by xi_0_6: ") + e.what());
        }
    }();
    return out + decompose_weak0(quotient) * xi06_poly();
}

GeneratorPolynomial decompose_weak_even(const JacobiForm& f) {
    if (!has_trivial_character(f))
        throw NotInRing("decompose_weak_even: nontrivial character");
    if (!is_integer(f.weight) || to_integer(f.weight) % 2 != 0)
        throw NotInRing("decompose_weak_even: weight must be an even integer");
    if (!is_integer(f.index) || f.index < 0)
        throw NotInRing("decompose_weak_even: index must be a nonnegative integer");
    if (!is_weak(f))
        throw NotWeak("decompose_weak_even: input has a q-pole");

    GeneratorPolynomial out(RingTag::weak_even_14);
    if (f.series.is_zero())
        return out;
    const long k2 = to_integer(f.weight).get_si();
    const long m = to_integer(f.index).get_si();
    const long prec = f.series.prec24();

    if (k2 < 0) {
        long t = -k2 / 2;
        if (m < t)
            throw NotInRing("weight " + std::to_string(k2) + " needs index >= " + std::to_string(t));
        JacobiForm q = [&] {
            try {
                return exact_div(f, pow(phi("phi_m2_1", prec), static_cast<unsigned long>(t)));
            } catch (const NotDivisible& e) {
                throw NotInRing(std::string("not divisible by phi_m2_1^") + std::to_string(t) +
                                ": " + e.what());
            }
        }();
        return embed(decompose_weak0(q), RingTag::weak_even_14) *
               atom14("phi_m2_1", static_cast<int>(t));
    }
    if (k2 == 0)
        return embed(decompose_weak0(f), RingTag::weak_even_14);
    if (k2 == 2) {
        if (m == 0)
            throw NotInRing("no nonzero weak forms of weight 2 and index 0");
        JacobiForm q = [&] {
            try {
                return exact_div(f, phi("phi_m2_1", prec));
            } catch (const NotDivisible& e) {
                throw NotInRing(std::string("weight-2 input not divisible by phi_m2_1: ") +
                                e.what());
            }
        }();
        return decompose_weak_even(q) * atom14("phi_m2_1");
    }

    // weight >= 4: cancel the q^0-term with the unit-pivot family, then
    // strip one power of Delta
    std::vector<JacobiForm> fam;
    std::vector<GeneratorPolynomial> fam_poly;
    fam.push_back(f_family(static_cast<int>(k2), static_cast<int>(m), prec));
    fam_poly.push_back(f_family_poly(static_cast<int>(k2), static_cast<int>(m)));
    if (m >= 1) {
        fam.push_back(f_family(static_cast<int>(k2), static_cast<int>(m - 1), prec) *
                      phi("phi_0_1", prec));
        fam_poly.push_back(f_family_poly(static_cast<int>(k2), static_cast<int>(m - 1)) *
                           atom14("phi_0_1"));
    }
    if (m >= 2) {
        const PsiBasis basis = psi_basis(static_cast<int>(m), prec);
        JacobiForm f0 = f_family(static_cast<int>(k2), 0, prec);
        GeneratorPolynomial p0 = f_family_poly(static_cast<int>(k2), 0);
        for (int i = 2; i <= m; ++i) {
            fam.push_back(f0 * basis.psi(i));
            fam_poly.push_back(p0 * embed(basis.psi_poly(i), RingTag::weak_even_14));
        }
    }

    std::vector<mpz_class> v = q0_lattice_vector(f.series, m);
    ScaledSeries g = f.series;
    for (long i = m; i >= 0; --i) {
        std::vector<mpz_class> w = q0_lattice_vector(fam[static_cast<size_t>(i)].series, m);
        if (w[static_cast<size_t>(i)] != 1)
            throw StructureViolation("family member has pivot != 1");
        mpz_class x = v[static_cast<size_t>(i)];
        if (x == 0)
            continue;
        for (size_t k = 0; k < v.size(); ++k)
            v[k] -= x * w[k];
        g -= mpq_class(x) * fam[static_cast<size_t>(i)].series;
        out = out + mpq_class(x) * fam_poly[static_cast<size_t>(i)];
    }
    if (!std::all_of(v.begin(), v.end(), [](const mpz_class& z) { return z == 0; }))
        throw StructureViolation("q^0-cancellation left a residual");

    if (g.is_zero())
        return out;
    JacobiForm h = [&] {
        try {
            return exact_div(make_jacobi(std::move(g), k2, m, 0, 0), basic_jacobi("Delta", prec));
        } catch (const NotDivisible& e) {
            throw NotInRing(std::string("residual not divisible by Delta: ") + e.what());
        }
    }();
    return out + decompose_weak_even(h) * atom14("Delta");
}

GeneratorPolynomial decompose_wh0(const JacobiForm& f) {
    require_trivial_weight0(f, "decompose_wh0");
    GeneratorPolynomial out(RingTag::wh0_8);
    if (f.series.is_zero())
        return out;
    const long m = to_integer(f.index).get_si();
    const long prec = f.series.prec24();
    ScaledSeries cur = f.series;

    if (m == 0) {
        for (const auto& [n24, row] : cur.rows())
            for (const auto& [l2, c] : row)
                if (l2 != 0)
                    throw NotInRing("index-0 input depends on z");
        long ord = *cur.ord24();
        for (long e = ord < 0 ? -ord / 24 : 0; e >= 1; --e) {
            mpq_class c = cur.coeff(-24 * e, 0);
            if (c == 0)
                continue;
            if (!is_integer(c))
                throw NotInRing("fractional coefficient at the pole", {c});
            ScaledSeries je =
                pow(basic_jacobi("j", prec + 24 * (e - 1)).series, static_cast<unsigned long>(e));
            cur -= c * je.truncated(prec);
            out = out + mpq_class(c) * atom8("j", static_cast<int>(e));
        }
        mpq_class c0 = cur.coeff(0, 0);
        if (!is_integer(c0))
            throw NotInRing("fractional constant term", {c0});
        cur -= c0 * ScaledSeries::one(prec);
        if (!cur.is_zero())
            throw NotInRing("index-0 input is not a polynomial in j");
        return out + GeneratorPolynomial::constant(RingTag::wh0_8, c0);
    }

    while (true) {
        if (cur.is_zero())
            return out;
        long ord = *cur.ord24();
        if (ord >= 0)
            return out + embed(decompose_weak0(make_jacobi(std::move(cur), 0, m, 0, 0)),
                               RingTag::wh0_8);

        if (ord % 24 != 0)
            throw StructureViolation("pole order not a multiple of the q-scale");
        const long n = -ord / 24;
        ScaledSeries dn =
            pow(basic_jacobi("Delta", prec + 24 * n + 24).series, static_cast<unsigned long>(n));
        std::vector<mpz_class> v = q0_lattice_vector(dn * cur, m);

        // family q^0-rows: G_{12,m} row is (1,0,..), G_{12,m-1} phi_0_1 row
        // is (10,1,0,..), the rest come from the psi rows
        GeneratorPolynomial inner(RingTag::wh0_8);
        if (m >= 2) {
            const PsiBasis basis = psi_basis(static_cast<int>(m), 24);
            for (long i = m; i >= 2; --i) {
                const auto& row = basis.q0[static_cast<size_t>(i - 1)];
                mpz_class x = v[static_cast<size_t>(i)];
                if (x == 0)
                    continue;
                for (size_t k = 0; k < v.size(); ++k)
                    v[k] -= x * row[k];
                inner = inner + mpq_class(x) * (atom8("j") *
                                                embed(basis.psi_poly(static_cast<int>(i)),
                                                      RingTag::wh0_8));
            }
        }
        if (v[1] != 0) {
            mpz_class x = v[1];
            v[1] = 0;
            v[0] -= 10 * x;
            inner = inner + mpq_class(x) * (g12_over_delta_poly(static_cast<int>(m - 1)) *
                                            atom8("phi_0_1"));
        }
        if (v[0] != 0) {
            inner = inner + mpq_class(v[0]) * g12_over_delta_poly(static_cast<int>(m));
            v[0] = 0;
        }

        GeneratorPolynomial step = pow(atom8("j"), static_cast<unsigned>(n - 1)) * inner;
        cur -= step.expand_series(prec);
        out = out + step;
        if (auto o = cur.ord24(); o && *o < -24 * (n - 1))
            throw StructureViolation("pole order did not drop after q^0-cancellation");
    }
}

namespace {

struct RelCtx {
    long prec;
    const std::map<std::string, ScaledSeries>* override_table;

    ScaledSeries operator()(const std::string& name) const {
        if (override_table) {
            auto it = override_table->find(name);
            if (it != override_table->end())
                return it->second;
        }
        if (name == "E63prime")
            return e63_prime(prec).series;
        return generator_expansion(name, prec).series;
    }
};

struct Relation {
    std::string name;
    std::function<std::pair<ScaledSeries, ScaledSeries>(const RelCtx&)> sides;
    long modulus = 0; // 0: exact equality
};

std::string term_str(long n24, long l2, const mpq_class& a, const mpq_class& b) {
    std::ostringstream os;
    os << "first difference at n24=" << n24 << ", l2=" << l2 << ": " << rat_str(a) << " vs "
       << rat_str(b);
    return os.str();
}

const std::vector<Relation>& relation_table() {
    using S = ScaledSeries;
    auto q = [](long n) { return mpq_class(n); };
    static const std::vector<Relation> rels = {
        {"1728*Delta = E4^3 - E6^2",
         [](const RelCtx& c) {
             return std::pair{mpq_class(1728) * c("Delta"), pow(c("E4"), 3) - pow(c("E6"), 2)};
         }},
        {"j*Delta = E4^3",
         [](const RelCtx& c) { return std::pair{c("j") * c("Delta"), pow(c("E4"), 3)}; }},
        {"24*phi_0_2 = phi_0_1^2 - E4*phi_m2_1^2",
         [](const RelCtx& c) {
             return std::pair{mpq_class(24) * c("phi_0_2"),
                              pow(c("phi_0_1"), 2) - c("E4") * pow(c("phi_m2_1"), 2)};
         }},
        {"432*phi_0_3 = phi_0_1^3 - 3*E4*phi_0_1*phi_m2_1^2 + 2*E6*phi_m2_1^3",
         [](const RelCtx& c) {
             return std::pair{mpq_class(432) * c("phi_0_3"),
                              pow(c("phi_0_1"), 3) -
                                  mpq_class(3) * (c("E4") * c("phi_0_1") * pow(c("phi_m2_1"), 2)) +
                                  mpq_class(2) * (c("E6") * pow(c("phi_m2_1"), 3))};
         }},
        {"4*phi_0_4 = phi_0_1*phi_0_3 - phi_0_2^2",
         [](const RelCtx& c) {
             return std::pair{mpq_class(4) * c("phi_0_4"),
                              c("phi_0_1") * c("phi_0_3") - pow(c("phi_0_2"), 2)};
         }},
        {"12*E4_1 = E4*phi_0_1 - E6*phi_m2_1",
         [](const RelCtx& c) {
             return std::pair{mpq_class(12) * c("E4_1"),
                              c("E4") * c("phi_0_1") - c("E6") * c("phi_m2_1")};
         }},
        {"12*E6_1 = E6*phi_0_1 - E4^2*phi_m2_1",
         [](const RelCtx& c) {
             return std::pair{mpq_class(12) * c("E6_1"),
                              c("E6") * c("phi_0_1") - pow(c("E4"), 2) * c("phi_m2_1")};
         }},
        {"144*Delta*phi_m2_1 = E6*E4_1 - E4*E6_1",
         [](const RelCtx& c) {
             return std::pair{mpq_class(144) * (c("Delta") * c("phi_m2_1")),
                              c("E6") * c("E4_1") - c("E4") * c("E6_1")};
         }},
        {"6*E4_2 = E4_1*phi_0_1 - E4*phi_0_2",
         [](const RelCtx& c) {
             return std::pair{mpq_class(6) * c("E4_2"),
                              c("E4_1") * c("phi_0_1") - c("E4") * c("phi_0_2")};
         }},
        {"12*E4_2 = E4_1*phi_0_1 - E6_1*phi_m2_1",
         [](const RelCtx& c) {
             return std::pair{mpq_class(12) * c("E4_2"),
                              c("E4_1") * c("phi_0_1") - c("E6_1") * c("phi_m2_1")};
         }},
        {"144*E4_2 = E4*phi_0_1^2 - 2*E6*phi_0_1*phi_m2_1 + E4^2*phi_m2_1^2",
         [](const RelCtx& c) {
             return std::pair{mpq_class(144) * c("E4_2"),
                              c("E4") * pow(c("phi_0_1"), 2) -
                                  mpq_class(2) * (c("E6") * c("phi_0_1") * c("phi_m2_1")) +
                                  pow(c("E4"), 2) * pow(c("phi_m2_1"), 2)};
         }},
        {"6*E6_2 = E6_1*phi_0_1 - E6*phi_0_2",
         [](const RelCtx& c) {
             return std::pair{mpq_class(6) * c("E6_2"),
                              c("E6_1") * c("phi_0_1") - c("E6") * c("phi_0_2")};
         }},
        {"12*E6_2 = E6_1*phi_0_1 - E4*E4_1*phi_m2_1",
         [](const RelCtx& c) {
             return std::pair{mpq_class(12) * c("E6_2"),
                              c("E6_1") * c("phi_0_1") - c("E4") * c("E4_1") * c("phi_m2_1")};
         }},
        {"144*E6_2 = E6*phi_0_1^2 - 2*E4^2*phi_0_1*phi_m2_1 + E4*E6*phi_m2_1^2",
         [](const RelCtx& c) {
             return std::pair{mpq_class(144) * c("E6_2"),
                              c("E6") * pow(c("phi_0_1"), 2) -
                                  mpq_class(2) * (pow(c("E4"), 2) * c("phi_0_1") * c("phi_m2_1")) +
                                  c("E4") * c("E6") * pow(c("phi_m2_1"), 2)};
         }},
        {"2*E4_3 = E4_1*phi_0_2 - E4*phi_0_3",
         [](const RelCtx& c) {
             return std::pair{mpq_class(2) * c("E4_3"),
                              c("E4_1") * c("phi_0_2") - c("E4") * c("phi_0_3")};
         }},
        {"6*E4_3 = E4_2*phi_0_1 - E4_1*phi_0_2",
         [](const RelCtx& c) {
             return std::pair{mpq_class(6) * c("E4_3"),
                              c("E4_2") * c("phi_0_1") - c("E4_1") * c("phi_0_2")};
         }},
        {"8*E4_3 = E4_2*phi_0_1 - E4*phi_0_3",
         [](const RelCtx& c) {
             return std::pair{mpq_class(8) * c("E4_3"),
                              c("E4_2") * c("phi_0_1") - c("E4") * c("phi_0_3")};
         }},
        {"2*F6_3 = E6_1*phi_0_2 - E6*phi_0_3",
         [](const RelCtx& c) {
             return std::pair{mpq_class(2) * c("F6_3"),
                              c("E6_1") * c("phi_0_2") - c("E6") * c("phi_0_3")};
         }},
        {"6*F6_3 = E6_2*phi_0_1 - E6_1*phi_0_2 + 24*Delta*phi_m2_1^3",
         [](const RelCtx& c) {
             return std::pair{mpq_class(6) * c("F6_3"),
                              c("E6_2") * c("phi_0_1") - c("E6_1") * c("phi_0_2") +
                                  mpq_class(24) * (c("Delta") * pow(c("phi_m2_1"), 3))};
         }},
        {"8*F6_3 = E6_2*phi_0_1 - E6*phi_0_3 + 24*Delta*phi_m2_1^3",
         [](const RelCtx& c) {
             return std::pair{mpq_class(8) * c("F6_3"),
                              c("E6_2") * c("phi_0_1") - c("E6") * c("phi_0_3") +
                                  mpq_class(24) * (c("Delta") * pow(c("phi_m2_1"), 3))};
         }},
        {"F6_3 = E63prime + 2*Delta*phi_m2_1^3",
         [](const RelCtx& c) {
             return std::pair{c("F6_3"), c("E63prime") + mpq_class(2) * (c("Delta") *
                                                                         pow(c("phi_m2_1"), 3))};
         }},
        {"xi_0_6 = -phi_0_1^2*phi_0_4 + 9*phi_0_1*phi_0_2*phi_0_3 - 8*phi_0_2^3 - 27*phi_0_3^2",
         [](const RelCtx& c) {
             return std::pair{c("xi_0_6"),
                              -(pow(c("phi_0_1"), 2) * c("phi_0_4")) +
                                  mpq_class(9) * (c("phi_0_1") * c("phi_0_2") * c("phi_0_3")) -
                                  mpq_class(8) * pow(c("phi_0_2"), 3) -
                                  mpq_class(27) * pow(c("phi_0_3"), 2)};
         }},
        {"xi_0_6 = Delta*phi_m2_1^6",
         [](const RelCtx& c) {
             return std::pair{c("xi_0_6"), c("Delta") * pow(c("phi_m2_1"), 6)};
         }},
        {"(phi_0_1^2 - 24*phi_0_2)^3 = j*xi_0_6",
         [](const RelCtx& c) {
             return std::pair{pow(pow(c("phi_0_1"), 2) - mpq_class(24) * c("phi_0_2"), 3),
                              c("j") * c("xi_0_6")};
         }},
        {"6*G4_1^2 - j*phi_0_1*G4_1 + 72*j*phi_0_1^2 + j*(j-1728)*phi_0_2 = 0",
         [q](const RelCtx& c) {
             S j = c("j");
             S lhs = mpq_class(6) * pow(c("G4_1"), 2) - j * c("phi_0_1") * c("G4_1") +
                     mpq_class(72) * (j * pow(c("phi_0_1"), 2)) +
                     (j - q(1728) * S::one(j.prec24())) * j * c("phi_0_2");
             return std::pair{lhs, S(lhs.prec24())};
         }},
        {"6*G4_2 = G4_1*phi_0_1 - j*phi_0_2",
         [](const RelCtx& c) {
             return std::pair{mpq_class(6) * c("G4_2"),
                              c("G4_1") * c("phi_0_1") - c("j") * c("phi_0_2")};
         }},
        {"2*G4_3 = G4_1*phi_0_2 - j*phi_0_3",
         [](const RelCtx& c) {
             return std::pair{mpq_class(2) * c("G4_3"),
                              c("G4_1") * c("phi_0_2") - c("j") * c("phi_0_3")};
         }},
        {"phi_0_3half^2 = phi_0_3",
         [](const RelCtx& c) { return std::pair{pow(c("phi_0_3half"), 2), c("phi_0_3")}; }},
        {"phi_m1_half^2 = phi_m2_1",
         [](const RelCtx& c) { return std::pair{pow(c("phi_m1_half"), 2), c("phi_m2_1")}; }},
        {"phi_0_3half*phi_m1_half = phi_m1_2",
         [](const RelCtx& c) {
             return std::pair{c("phi_0_3half") * c("phi_m1_half"), c("phi_m1_2")};
         }},
        {"E4_1 = E6_1 mod 24",
         [](const RelCtx& c) { return std::pair{c("E4_1"), c("E6_1")}; }, 24},
        {"E4_2 = E4_1^2 mod 12",
         [](const RelCtx& c) { return std::pair{c("E4_2"), pow(c("E4_1"), 2)}; }, 12},
    };
    return rels;
}

RelationResult check_relation(const Relation& rel, const RelCtx& ctx) {
    RelationResult res{rel.name, false, ""};
    try {
        auto [lhs, rhs] = rel.sides(ctx);
        if (rel.modulus) {
            ScaledSeries d = reduce_mod(lhs - rhs, rel.modulus);
            res.holds = d.is_zero();
            if (!res.holds) {
                const auto& entry = *d.rows().begin();
                long l2 = entry.second.begin()->first;
                res.detail = term_str(entry.first, l2, lhs.coeff(entry.first, l2),
                                      rhs.coeff(entry.first, l2)) +
                             " (mod " + std::to_string(rel.modulus) + ")";
            }
        } else {
            res.holds = agree_to(lhs, rhs, ctx.prec);
            if (!res.holds) {
                ScaledSeries d = lhs - rhs;
                const auto& entry = *d.rows().begin();
                long l2 = entry.second.begin()->first;
                res.detail = term_str(entry.first, l2, lhs.coeff(entry.first, l2),
                                      rhs.coeff(entry.first, l2));
            }
        }
    } catch (const std::exception& e) {
        res.holds = false;
        res.detail = e.what();
    }
    return res;
}

} // namespace

std::vector<RelationResult> verify_relations(long prec24,
                                             const std::map<std::string, ScaledSeries>& override_table) {
    const auto& rels = relation_table();
    RelCtx ctx{prec24, &override_table};
    std::vector<std::future<RelationResult>> jobs;
    jobs.reserve(rels.size());
    for (const auto& rel : rels)
        jobs.push_back(std::async(std::launch::async,
                                  [&rel, ctx] { return check_relation(rel, ctx); }));
    std::vector<RelationResult> out;
    out.reserve(rels.size());
    for (auto& j : jobs)
        out.push_back(j.get());
    return out;
}

std::vector<RelationResult> verify_relations(long prec24) {
    static const std::map<std::string, ScaledSeries> empty;
    return verify_relations(prec24, empty);
}

} // namespace jacring
