#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacring/series.hpp"
#include "jacring/rational.hpp"
#include "oracles.hpp"

using namespace jacring;
using oracle::Rng;

TEST_CASE("monomials, ord24, zero cancellation") {
    // q^(3/24)*(zeta^(1/2) + zeta^(-1/2)) plus its negative
    ScaledSeries a(100);
    a.set(3, 1, 1);
    a.set(3, -1, 1);
    ScaledSeries b = -a;
    ScaledSeries z = a + b;
    CHECK(z.is_zero());
    CHECK(!z.ord24().has_value());
    CHECK(z.prec24() == 100);
    CHECK(a.ord24() == 3);

    // no zero coefficients may survive a cancelling add_to
    ScaledSeries c(10);
    c.add_to(2, 0, mpq_class(5));
    c.add_to(2, 0, mpq_class(-5));
    CHECK(c.rows().empty());
}

TEST_CASE("coefficient lookup honours the horizon") {
    ScaledSeries a = ScaledSeries::monomial(1, 0, 1, 48);
    CHECK(a.coeff(1, 0) == 1);
    CHECK(a.coeff(30, 4) == 0);
    CHECK_THROWS_AS(a.coeff(48, 0), PrecisionExceeded);
    CHECK_THROWS_AS(a.coeff(100, 0), PrecisionExceeded);
    CHECK_THROWS_AS(a.row(48), PrecisionExceeded);
}

TEST_CASE("product of monomials") {
    ScaledSeries a = ScaledSeries::monomial(1, 0, 1, 100);
    ScaledSeries p = a * a;
    CHECK(p.coeff(2, 0) == 1);
    CHECK(p.ord24() == 2);
    CHECK(p.prec24() == 101); // 100 + ord 1
}

TEST_CASE("product against naive convolution, horizon formula") {
    Rng rng(20240901);
    for (int rep = 0; rep < 300; ++rep) {
        auto a = oracle::random_poly(rng, -12, 40, 5, 8, rep % 3 == 0);
        auto b = oracle::random_poly(rng, -12, 40, 5, 8, rep % 5 == 0);
        auto c = a * b;
        long oa = a.ord24().value_or(a.prec24());
        long ob = b.ord24().value_or(b.prec24());
        CHECK(c.prec24() == std::min(a.prec24() + ob, b.prec24() + oa));
        auto full = oracle::conv(oracle::terms_of(a), oracle::terms_of(b));
        for (const auto& [key, v] : full)
            if (key.first < c.prec24())
                CHECK(c.coeff(key.first, key.second) == v);
        for (const auto& [n24, row] : c.rows())
            for (const auto& [l2, v] : row) {
                auto it = full.find({n24, l2});
                CHECK(it != full.end());
                CHECK(it->second == v);
            }
    }
}

TEST_CASE("ring axioms on random inputs") {
    Rng rng(7);
    for (int rep = 0; rep < 100; ++rep) {
        auto a = oracle::random_poly(rng, 0, 30, 4, 6);
        auto b = oracle::random_poly(rng, 0, 30, 4, 6);
        auto c = oracle::random_poly(rng, 0, 30, 4, 6);
        auto lhs = (a + b) * c;
        auto rhs = a * c + b * c;
        CHECK(agree_to(lhs, rhs, std::min(lhs.prec24(), rhs.prec24())));
        auto l2 = (a * b) * c;
        auto r2 = a * (b * c);
        CHECK(agree_to(l2, r2, std::min(l2.prec24(), r2.prec24())));
        CHECK(agree_to(a * b, b * a, 1000000));
    }
}

TEST_CASE("exact_div round-trips products") {
    Rng rng(99);
    for (int rep = 0; rep < 200; ++rep) {
        auto a = oracle::random_poly(rng, -6, 30, 4, 6, rep % 4 == 0);
        auto b = oracle::random_poly(rng, -6, 30, 4, 6);
        if (b.is_zero())
            continue;
        auto c = a * b;
        auto q = exact_div(c, b);
        CHECK(agree_to(q, a, q.prec24()));
        if (!a.is_zero()) {
            long expect = std::min(c.prec24(), b.prec24() + *a.ord24()) - *b.ord24();
            CHECK(q.prec24() == expect);
        }
    }
}

TEST_CASE("exact_div horizon: multiply then divide costs the divisor's order") {
    // (a*xi)/xi with ord(xi) = 24 loses exactly one q-order off a's horizon
    ScaledSeries a(240);
    a.set(0, 1, 1);
    a.set(0, -1, 1);
    a.set(0, 0, 10);
    a.set(24, 2, 3);
    ScaledSeries xi(240);
    xi.set(24, 0, 1);
    xi.set(48, 0, -24);
    auto q = exact_div(a * xi, xi);
    CHECK(q.prec24() == 240 - 24);
    CHECK(agree_to(q, a, q.prec24()));
}

TEST_CASE("exact_div rejects non-divisible input") {
    ScaledSeries one = ScaledSeries::one(120);
    ScaledSeries d(120);
    d.set(0, 2, 1);
    d.set(0, 0, -2);
    d.set(0, -2, 1);
    CHECK_THROWS_AS(exact_div(one, d), NotDivisible);
    CHECK_THROWS_AS(exact_div(one, ScaledSeries(120)), NotDivisible);
}

TEST_CASE("pow matches repeated multiplication") {
    Rng rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        auto a = oracle::random_poly(rng, 0, 20, 3, 5);
        auto p3 = pow(a, 3);
        auto m3 = a * a * a;
        CHECK(agree_to(p3, m3, std::min(p3.prec24(), m3.prec24())));
        CHECK(p3.prec24() == m3.prec24());
        auto p1 = pow(a, 1);
        CHECK(p1 == a);
        auto p0 = pow(a, 0);
        CHECK(p0.coeff(0, 0) == 1);
        CHECK(p0.prec24() == a.prec24());
    }
}

TEST_CASE("dilate_z maps keys and respects products") {
    Rng rng(13);
    for (int rep = 0; rep < 50; ++rep) {
        auto a = oracle::random_poly(rng, 0, 20, 3, 5);
        auto b = oracle::random_poly(rng, 0, 20, 3, 5);
        long d = rng.pick(1, 4);
        auto lhs = dilate_z(a * b, d);
        auto rhs = dilate_z(a, d) * dilate_z(b, d);
        CHECK(agree_to(lhs, rhs, std::min(lhs.prec24(), rhs.prec24())));
        for (const auto& [n24, row] : a.rows())
            for (const auto& [l2, c] : row)
                CHECK(dilate_z(a, d).coeff(n24, d * l2) == c);
    }
}

TEST_CASE("reduce_mod") {
    ScaledSeries a(48);
    a.set(0, 2, 1);
    a.set(0, 0, -2);
    a.set(0, -2, 1);
    auto r = reduce_mod(a, 3);
    CHECK(r.coeff(0, 2) == 1);
    CHECK(r.coeff(0, 0) == 1);
    CHECK(r.coeff(0, -2) == 1);

    // multiples of the modulus vanish from the stored support
    ScaledSeries b = ScaledSeries::monomial(0, 0, 6, 48);
    CHECK(reduce_mod(b, 3).is_zero());

    ScaledSeries frac = ScaledSeries::monomial(0, 0, mpq_class(1, 2), 48);
    CHECK_THROWS_AS(reduce_mod(frac, 3), NonIntegralInput);

    // ring homomorphism on random integral inputs
    Rng rng(17);
    for (int rep = 0; rep < 60; ++rep) {
        auto x = oracle::random_poly(rng, 0, 20, 3, 6);
        auto y = oracle::random_poly(rng, 0, 20, 3, 6);
        mpz_class n = rng.pick(2, 12);
        auto lhs = reduce_mod(x * y, n);
        auto rhs = reduce_mod(reduce_mod(x, n) * reduce_mod(y, n), n);
        CHECK(agree_to(lhs, rhs, std::min(lhs.prec24(), rhs.prec24())));
    }
}

TEST_CASE("truncation and agreement") {
    ScaledSeries a(100);
    a.set(0, 0, 1);
    a.set(50, 1, 7);
    auto t = a.truncated(40);
    CHECK(t.prec24() == 40);
    CHECK(t.coeff(0, 0) == 1);
    CHECK_THROWS_AS(t.coeff(50, 1), PrecisionExceeded);
    CHECK(agree_to(a, t, 200)); // clamps to the shared horizon
    ScaledSeries b = a;
    b.add_to(39, 0, 1);
    CHECK(!agree_to(a, b, 40));
}

TEST_CASE("rational helpers") {
    CHECK(rat_str(mpq_class(-1, 2)) == "-1/2");
    CHECK(parse_rat("22/7") == mpq_class(22, 7));
    CHECK(parse_rat("-5") == -5);
    CHECK(parse_rat("4/6") == mpq_class(2, 3));
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
    CHECK(floor_div(-7, 24) == -1);
    CHECK(floor_div(-24, 24) == -1);
    CHECK(floor_div(7, 24) == 0);
    CHECK(floor_div(-1, 6) == -1);
}
