#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "jacring/errors.hpp"
#include "jacring/gen_poly.hpp"
#include "jacring/generators.hpp"
#include "jacring/rational.hpp"
#include "jacring/ring_structure.hpp"
#include "jacring/theta_eta.hpp"
#include "oracles.hpp"

using namespace jacring;
using oracle::Rng;

namespace {

constexpr long P = 240;  // structural tests
constexpr long PR = 288; // relation sweep

mpq_class mq(long n, long d) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

GeneratorPolynomial a14(const std::string& g, int e = 1) {
    return GeneratorPolynomial::atom(RingTag::weak_even_14, g, e);
}
GeneratorPolynomial a4(const std::string& g, int e = 1) {
    return GeneratorPolynomial::atom(RingTag::weak0_4, g, e);
}
GeneratorPolynomial a8(const std::string& g, int e = 1) {
    return GeneratorPolynomial::atom(RingTag::wh0_8, g, e);
}

// q^0-row of a trivial-character series as (c_0 .. c_m)
std::vector<mpq_class> q0_vec(const ScaledSeries& s, long m) {
    std::vector<mpq_class> c(static_cast<size_t>(m) + 1, 0);
    for (const auto& [l2, v] : s.row(0)) {
        REQUIRE(l2 % 2 == 0);
        REQUIRE(std::abs(l2) / 2 <= m);
        c[static_cast<size_t>(std::abs(l2) / 2)] = v;
    }
    return c;
}

using oracle::monomials_of;
using oracle::random_combination;

} // namespace

TEST_CASE("psi basis: pivots, leading rows, polynomial witnesses") {
    for (int m = 1; m <= 12; ++m) {
        PsiBasis b = psi_basis(m, P);
        REQUIRE(b.forms.size() == static_cast<size_t>(m));
        REQUIRE(b.polys.size() == static_cast<size_t>(m));
        REQUIRE(b.q0.size() == static_cast<size_t>(m));

        long g = std::gcd(12L, static_cast<long>(m));
        CHECK(b.q0[0][1] == m / g);
        CHECK(b.q0[0][0] == (12 - 2 * m) / g);
        for (int k = 2; k <= m; ++k)
            CHECK(b.q0[0][static_cast<size_t>(k)] == 0);

        if (m >= 2) {
            CHECK(b.q0[1][0] == 6);
            CHECK(b.q0[1][1] == -4);
            CHECK(b.q0[1][2] == 1);
            for (int k = 3; k <= m; ++k)
                CHECK(b.q0[1][static_cast<size_t>(k)] == 0);
        }

        for (int n = 1; n <= m; ++n) {
            CHECK(b.pivots[static_cast<size_t>(n - 1)] == n);
            const auto& row = b.q0[static_cast<size_t>(n - 1)];
            if (n >= 2)
                CHECK(row[static_cast<size_t>(n)] == 1);
            for (int k = n + 1; k <= m; ++k)
                CHECK(row[static_cast<size_t>(k)] == 0);

            const JacobiForm& f = b.psi(n);
            CHECK(f.weight == 0);
            CHECK(f.index == m);
            auto c = q0_vec(f.series, m);
            for (int k = 0; k <= m; ++k)
                CHECK(c[static_cast<size_t>(k)] == mpq_class(row[static_cast<size_t>(k)]));

            auto [w, idx] = b.psi_poly(n).weight_index();
            CHECK(w == 0);
            CHECK(idx == m);
            CHECK(agree_to(b.psi_poly(n).expand_series(P), f.series, P));
        }
    }
}

TEST_CASE("integrality certificates") {
    SUBCASE("Eisenstein combination of weight 4, index 1") {
        GeneratorPolynomial p =
            mq(1, 12) * (a14("E4") * a14("phi_0_1") - a14("E6") * a14("phi_m2_1"));
        IntegralityCertificate c = certify_integral(p, P);
        CHECK(c.integral);
        CHECK(c.order_bound == 0);
        CHECK(!c.checked.empty());
        CHECK(!c.witness.has_value());
        CHECK(agree_to(p.expand_series(P), generator_expansion("E4_1", P).series, P));
    }

    SUBCASE("half of phi_0_1 fails at the q^0-row") {
        GeneratorPolynomial p = GeneratorPolynomial::atom(RingTag::weak0_4, "phi_0_1", 1, mq(1, 2));
        IntegralityCertificate c = certify_integral(p, P);
        CHECK(!c.integral);
        REQUIRE(c.witness.has_value());
        auto [n24, l2, v] = *c.witness;
        CHECK(n24 == 0);
        CHECK(l2 == -2);
        CHECK(v == mq(1, 2));
    }

    SUBCASE("the weight-6 index-3 Eisenstein candidate has denominator 61") {
        GeneratorPolynomial p =
            a14("F6_3") - mq(144, 61) * (a14("Delta") * a14("phi_m2_1", 3));
        IntegralityCertificate c = certify_integral(p, P);
        CHECK(c.order_bound == 1);
        CHECK(!c.integral);
        REQUIRE(c.witness.has_value());
        auto [n24, l2, v] = *c.witness;
        CHECK(n24 == 24);
        CHECK(l2 == -6);
        CHECK(v == mq(-22, 61));
        CHECK(v.get_den() == 61);
    }

    SUBCASE("poles and inhomogeneity are rejected") {
        CHECK_THROWS_AS(certify_integral(a8("j"), P), NotWeak);
        CHECK_THROWS_AS(certify_integral(a14("E4") + a14("E6"), P), NotHomogeneous);
        CHECK_THROWS_AS(
            certify_integral(GeneratorPolynomial::atom(RingTag::half_index_14, "phi_m1_half"), P),
            NotHomogeneous);
    }
}

TEST_CASE("weight-0 decomposition") {
    SUBCASE("xi_0_6 lands on its defining polynomial") {
        GeneratorPolynomial expect(RingTag::weak0_4);
        expect.add_term({2, 0, 0, 1}, -1);
        expect.add_term({1, 1, 1, 0}, 9);
        expect.add_term({0, 3, 0, 0}, -8);
        expect.add_term({0, 0, 2, 0}, -27);
        CHECK(decompose_weak0(phi("xi_0_6", P)) == expect);
    }

    SUBCASE("phi_0_1*phi_0_3 - phi_0_2^2 is the same form as 4*phi_0_4") {
        GeneratorPolynomial p = a4("phi_0_1") * a4("phi_0_3") - pow(a4("phi_0_2"), 2);
        JacobiForm f = p.expand(P);
        GeneratorPolynomial d1 = decompose_weak0(f);
        GeneratorPolynomial d2 = decompose_weak0(mpq_class(4) * phi("phi_0_4", P));
        CHECK(d1 == d2);
        CHECK(d1.is_integral());
        CHECK(agree_to(d1.expand_series(P), f.series, P));
    }

    SUBCASE("constants and zero") {
        CHECK(decompose_weak0(make_jacobi(ScaledSeries(P), 0, 3, 0, 0)).is_zero());
        GeneratorPolynomial c =
            decompose_weak0(make_jacobi(mpq_class(5) * ScaledSeries::one(P), 0, 0, 0, 0));
        CHECK(c == GeneratorPolynomial::constant(RingTag::weak0_4, 5));
    }

    SUBCASE("fractional q^0-row is rejected with an obstruction") {
        try {
            decompose_weak0(mq(1, 2) * phi("phi_0_1", P));
            FAIL("expected NotInRing");
        } catch (const NotInRing& e) {
            REQUIRE(e.obstruction.size() == 2);
            CHECK(e.obstruction[0] == 5);
            CHECK(e.obstruction[1] == mq(1, 2));
        }
    }

    SUBCASE("q-divisible residual below index 6 is rejected") {
        JacobiForm f = make_jacobi(ScaledSeries::monomial(24, 0, 1, P), 0, 1, 0, 0);
        CHECK_THROWS_AS(decompose_weak0(f), NotInRing);
    }
}

TEST_CASE("weak even decomposition") {
    SUBCASE("named forms come back as single atoms") {
        CHECK(decompose_weak_even(jacobi_eisenstein(4, 2, P)) == a14("E4_2"));
        CHECK(decompose_weak_even(basic_jacobi("Delta", P)) == a14("Delta"));
        CHECK(decompose_weak_even(basic_jacobi("E4", P)) == a14("E4"));
        CHECK(decompose_weak_even(pow(phi("phi_m2_1", P), 3)) == a14("phi_m2_1", 3));
        CHECK(decompose_weak_even(jacobi_eisenstein(6, 3, P)) == a14("F6_3"));
    }

    SUBCASE("a weight-2 form") {
        GeneratorPolynomial p = a14("E4") * a14("phi_m2_1") * pow(a14("phi_0_1"), 2);
        JacobiForm f = p.expand(P);
        GeneratorPolynomial d = decompose_weak_even(f);
        CHECK(d.is_integral());
        CHECK(agree_to(d.expand_series(P), f.series, P));
    }

    SUBCASE("a weight-12 index-2 mixture") {
        GeneratorPolynomial p = a14("Delta") * a14("phi_0_2") -
                                mpq_class(2) * (a14("E4", 3) * a14("phi_0_2")) +
                                mpq_class(5) * (a14("E6") * a14("E6_2"));
        JacobiForm f = p.expand(P);
        GeneratorPolynomial d = decompose_weak_even(f);
        CHECK(d.is_integral());
        CHECK(agree_to(d.expand_series(P), f.series, P));
    }

    SUBCASE("impossible shapes are rejected") {
        CHECK_THROWS_AS(decompose_weak_even(make_jacobi(ScaledSeries::one(P), -2, 0, 0, 0)),
                        NotInRing);
        CHECK_THROWS_AS(decompose_weak_even(make_jacobi(ScaledSeries::one(P), 2, 0, 0, 0)),
                        NotInRing);
        CHECK_THROWS_AS(decompose_weak_even(make_jacobi(ScaledSeries::one(P), 3, 0, 0, 0)),
                        NotInRing);
    }
}

TEST_CASE("weakly holomorphic weight-0 decomposition") {
    SUBCASE("polynomials in j") {
        CHECK(decompose_wh0(basic_jacobi("j", P)) == a8("j"));
        GeneratorPolynomial p = pow(a8("j"), 2) - mpq_class(1440) * a8("j");
        CHECK(decompose_wh0(p.expand(P)) == p);
    }

    SUBCASE("the index-1 singular generator") {
        ScaledSeries s =
            generator_expansion("G4_1", P).series - mpq_class(56) * phi("phi_0_1", P).series;
        GeneratorPolynomial d = decompose_wh0(make_jacobi(std::move(s), 0, 1, 0, 0));
        CHECK(d == a8("G4_1") - mpq_class(56) * a8("phi_0_1"));
    }

    SUBCASE("the index-3 singular generator round-trips exactly") {
        GeneratorPolynomial p = a8("G4_3") - mpq_class(2) * pow(a8("phi_0_1"), 3) +
                                mpq_class(33) * (a8("phi_0_1") * a8("phi_0_2")) +
                                mpq_class(90) * a8("phi_0_3");
        JacobiForm f = p.expand(P);
        CHECK(decompose_wh0(f) == p);

        // beyond the pole rows, only the q^0-row is consumed at index 3
        JacobiForm tight = make_jacobi(f.series.truncated(24), 0, 3, 0, 0);
        CHECK(decompose_wh0(tight) == p);
    }

    SUBCASE("inputs outside the ring") {
        JacobiForm bad = make_jacobi(ScaledSeries::monomial(-24, 2, 1, P), 0, 1, 0, 0);
        CHECK_THROWS_AS(decompose_wh0(bad), NotInRing);
        ScaledSeries sym(P);
        sym.set(-24, 2, 1);
        sym.set(-24, -2, 1);
        CHECK_THROWS_AS(decompose_wh0(make_jacobi(std::move(sym), 0, 1, 0, 0)), NotInRing);
        CHECK_THROWS_AS(decompose_wh0(mq(1, 2) * phi("phi_0_1", P)), NotInRing);
    }
}

TEST_CASE("random polynomials round-trip through decomposition") {
    Rng rng(0x5eed0011);

    SUBCASE("weight 0, holomorphic at infinity") {
        int done = 0;
        while (done < 20) {
            long m = rng.pick(0, 8);
            auto mons = monomials_of(RingTag::weak0_4, 0, m, 8);
            if (mons.empty())
                continue;
            GeneratorPolynomial p = random_combination(rng, RingTag::weak0_4, mons);
            JacobiForm f = p.expand(P);
            GeneratorPolynomial d = decompose_weak0(f);
            CHECK(d.is_integral());
            CHECK(agree_to(d.expand_series(P), f.series, P));
            ++done;
        }
    }

    SUBCASE("even weight") {
        int done = 0;
        while (done < 20) {
            long m = rng.pick(0, 5);
            long k2 = 2 * rng.pick(-2, 6);
            auto mons = monomials_of(RingTag::weak_even_14, k2, m, 2);
            if (mons.empty())
                continue;
            GeneratorPolynomial p = random_combination(rng, RingTag::weak_even_14, mons);
            if (p.is_zero())
                continue;
            JacobiForm f = p.expand(P);
            GeneratorPolynomial d = decompose_weak_even(f);
            CHECK(d.is_integral());
            CHECK(agree_to(d.expand_series(P), f.series, P));
            ++done;
        }
    }

    SUBCASE("weight 0 with Delta-poles") {
        int done = 0;
        while (done < 12) {
            long m = rng.pick(1, 5);
            auto mons = monomials_of(RingTag::wh0_8, 0, m, 2);
            if (mons.empty())
                continue;
            GeneratorPolynomial p = random_combination(rng, RingTag::wh0_8, mons);
            p = p * pow(a8("j"), static_cast<unsigned>(rng.pick(0, 2)));
            if (p.is_zero())
                continue;
            JacobiForm f = p.expand(P);
            GeneratorPolynomial d = decompose_wh0(f);
            CHECK(d.is_integral());
            CHECK(agree_to(d.expand_series(P), f.series, P));
            ++done;
        }
    }
}

TEST_CASE("generator relations hold and fault injection trips them") {
    auto res = verify_relations(PR);
    CHECK(res.size() == 32);
    for (const auto& r : res) {
        if (!r.holds)
            MESSAGE(r.name, " -> ", r.detail);
        CHECK(r.holds);
    }

    SUBCASE("perturbing phi_0_2 breaks exactly the relations naming it") {
        std::map<std::string, ScaledSeries> ov{
            {"phi_0_2", phi("phi_0_2", PR).series + ScaledSeries::monomial(24, 0, 1, PR)}};
        for (const auto& r : verify_relations(PR, ov)) {
            bool mentions = r.name.find("phi_0_2") != std::string::npos;
            if (r.holds == mentions)
                MESSAGE(r.name, " -> holds=", r.holds);
            CHECK(r.holds == !mentions);
        }
    }

    SUBCASE("perturbing E4_1 breaks exactly the relations naming it") {
        std::map<std::string, ScaledSeries> ov{
            {"E4_1", generator_expansion("E4_1", PR).series + ScaledSeries::monomial(48, 0, 1, PR)}};
        for (const auto& r : verify_relations(PR, ov)) {
            bool mentions = r.name.find("E4_1") != std::string::npos;
            if (r.holds == mentions)
                MESSAGE(r.name, " -> holds=", r.holds);
            CHECK(r.holds == !mentions);
        }
    }
}
