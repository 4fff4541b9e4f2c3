#include "jacring/generators.hpp"

#include <array>
#include <cassert>
#include <stdexcept>

#include "jacring/errors.hpp"
#include "jacring/rational.hpp"
#include "jacring/theta_eta.hpp"

namespace jacring {

namespace {

void require_integral(const ScaledSeries& s, const std::string& who) {
    if (auto bad = first_fractional(s))
        throw IntegralityViolation(who + ": fractional coefficient at (" +
                                   std::to_string(bad->first) + "," +
                                   std::to_string(bad->second) + ")");
}

void require_unit_q0(const ScaledSeries& s, const std::string& who) {
    if (s.row(0) != ScaledSeries::Row{{0, 1}})
        throw NonUnitConstantTerm(who + ": q^0 row is not the constant 1");
}

// All generator series funnel through cached_series; each raw builder pads
// its ingredients so the advertised horizon is exact.

ScaledSeries phi_m1_half_raw(long p) {
    long pp = p + 24;
    return exact_div(theta(pp).series, pow(eta(pp).series, 3)).truncated(p);
}

ScaledSeries phi_m2_1_raw(long p) {
    long pp = p + 24;
    return exact_div(pow(theta(pp).series, 2), pow(eta(pp).series, 6)).truncated(p);
}

ScaledSeries phi_0_1_raw(long p) {
    ScaledSeries s = pow(xi_ab(0, 0, p).series, 2) + pow(xi_ab(0, 1, p).series, 2) +
                     pow(xi_ab(1, 0, p).series, 2);
    return (mpq_class(4) * s).truncated(p);
}

ScaledSeries phi_0_2_raw(long p) {
    ScaledSeries s = xi_ab(0, 0, p).series + xi_ab(0, 1, p).series + xi_ab(1, 0, p).series;
    return (mpq_class(2) * dilate_z(s, 2)).truncated(p);
}

ScaledSeries phi_0_3_raw(long p) {
    long pp = p + 24;
    ScaledSeries th = theta(pp).series;
    return exact_div(pow(dilate_z(th, 2), 2), pow(th, 2)).truncated(p);
}

ScaledSeries phi_0_4_raw(long p) {
    long pp = p + 24;
    ScaledSeries th = theta(pp).series;
    return exact_div(dilate_z(th, 3), th).truncated(p);
}

ScaledSeries xi_0_6_raw(long p) {
    long pp = p + 24;
    return exact_div(pow(theta(pp).series, 12), pow(eta(pp).series, 12)).truncated(p);
}

ScaledSeries phi_m1_2_raw(long p) {
    long pp = p + 24;
    return exact_div(dilate_z(theta(pp).series, 2), pow(eta(pp).series, 3)).truncated(p);
}

ScaledSeries phi_0_3half_raw(long p) {
    long pp = p + 24;
    ScaledSeries th = theta(pp).series;
    return exact_div(dilate_z(th, 2), th).truncated(p);
}

struct PhiSpec {
    const char* name;
    ScaledSeries (*raw)(long);
    int weight2; // doubled weight
    int index2;  // doubled index
    int char_H;
};

constexpr std::array<PhiSpec, 9> phi_table{{
    {"phi_0_1", &phi_0_1_raw, 0, 2, 0},
    {"phi_0_2", &phi_0_2_raw, 0, 4, 0},
    {"phi_0_3", &phi_0_3_raw, 0, 6, 0},
    {"phi_0_4", &phi_0_4_raw, 0, 8, 0},
    {"phi_m2_1", &phi_m2_1_raw, -4, 2, 0},
    {"xi_0_6", &xi_0_6_raw, 0, 12, 0},
    {"phi_m1_2", &phi_m1_2_raw, -2, 4, 0},
    {"phi_0_3half", &phi_0_3half_raw, 0, 3, 1},
    {"phi_m1_half", &phi_m1_half_raw, -2, 1, 1},
}};

mpq_class half(int n2) {
    mpq_class q(n2, 2);
    q.canonicalize();
    return q;
}

} // namespace

JacobiForm phi(const std::string& name, long prec24) {
    for (const auto& spec : phi_table)
        if (name == spec.name) {
            ScaledSeries s = cached_series(spec.name, prec24, spec.raw);
            require_integral(s, spec.name);
            return make_jacobi(std::move(s), half(spec.weight2), half(spec.index2), 0,
                               spec.char_H);
        }
    throw std::invalid_argument("phi: unknown generator '" + name + "'");
}

JacobiForm basic_jacobi(const std::string& name, long prec24) {
    if (name == "E4")
        return make_jacobi(eisenstein_e(4, prec24).series, 4, 0, 0, 0);
    if (name == "E6")
        return make_jacobi(eisenstein_e(6, prec24).series, 6, 0, 0, 0);
    if (name == "Delta")
        return make_jacobi(delta(prec24).series, 12, 0, 0, 0);
    if (name == "j")
        return make_jacobi(j_invariant(prec24).series, 0, 0, 0, 0);
    if (name == "eta")
        return make_jacobi(eta(prec24).series, mpq_class(1, 2), 0, 1, 0);
    if (name == "theta")
        return make_jacobi(theta(prec24).series, mpq_class(1, 2), mpq_class(1, 2), 3, 1);
    throw std::invalid_argument("basic_jacobi: unknown form '" + name + "'");
}

JacobiForm jacobi_eisenstein(int k, int m, long prec24) {
    std::string who = "E_{" + std::to_string(k) + "," + std::to_string(m) + "}";
    JacobiForm num = [&]() -> JacobiForm {
        JacobiForm e4 = basic_jacobi("E4", prec24);
        JacobiForm e6 = basic_jacobi("E6", prec24);
        if (k == 4 && m == 1)
            return mpq_class(1, 12) * (e4 * phi("phi_0_1", prec24) - e6 * phi("phi_m2_1", prec24));
        if (k == 6 && m == 1)
            return mpq_class(1, 12) * (e6 * phi("phi_0_1", prec24) - e4 * e4 * phi("phi_m2_1", prec24));
        if (k == 4 && m == 2)
            return mpq_class(1, 6) *
                   (jacobi_eisenstein(4, 1, prec24) * phi("phi_0_1", prec24) - e4 * phi("phi_0_2", prec24));
        if (k == 6 && m == 2)
            return mpq_class(1, 6) *
                   (jacobi_eisenstein(6, 1, prec24) * phi("phi_0_1", prec24) - e6 * phi("phi_0_2", prec24));
        if (k == 4 && m == 3)
            return mpq_class(1, 2) *
                   (jacobi_eisenstein(4, 1, prec24) * phi("phi_0_2", prec24) - e4 * phi("phi_0_3", prec24));
        if (k == 6 && m == 3) // the F_{6,3} slot
            return mpq_class(1, 2) *
                   (jacobi_eisenstein(6, 1, prec24) * phi("phi_0_2", prec24) -
                    e6 * phi("phi_0_3", prec24));
        throw std::invalid_argument("jacobi_eisenstein: no series at (k,m) = (" +
                                    std::to_string(k) + "," + std::to_string(m) + ")");
    }();
    require_integral(num.series, who);
    require_unit_q0(num.series, who);
    return num;
}

JacobiForm e63_prime(long prec24) {
    ScaledSeries t01 = theta_constant(0, 1, prec24).series;
    ScaledSeries t10 = theta_constant(1, 0, prec24).series;
    ScaledSeries c01 = theta_ab(0, 1, prec24).series;
    ScaledSeries c10 = theta_ab(1, 0, prec24).series;
    ScaledSeries s = pow(t01, 6) * pow(c01, 6) - pow(t10, 6) * pow(c10, 6) +
                     mpq_class(3, 2) * (pow(t01, 4) * pow(t10, 2) * pow(c01, 4) * pow(c10, 2)) -
                     mpq_class(3, 2) * (pow(t01, 2) * pow(t10, 4) * pow(c01, 2) * pow(c10, 4));
    s = s.truncated(prec24);
    require_integral(s, "E'_{6,3}");
    // make_jacobi also certifies that the q^(1/2)-shifted parts cancelled
    return make_jacobi(std::move(s), 6, 3, 0, 0);
}

JacobiForm f_family(int k, int m, long prec24) {
    if (k < 4 || k % 2 || m < 0)
        throw std::invalid_argument("f_family: need even weight >= 4, index >= 0");
    if (m == 0) {
        JacobiForm f = pow(basic_jacobi("E4", prec24), (k % 4 == 0) ? k / 4 : (k - 6) / 4);
        if (k % 4 != 0)
            f = f * basic_jacobi("E6", prec24);
        return {f.series.truncated(prec24), f.weight, f.index, f.char_D, f.char_H};
    }
    if (m <= 3) {
        JacobiForm e = (k <= 6) ? jacobi_eisenstein(k, m, prec24)
                                : f_family(k - 4, 0, prec24) * jacobi_eisenstein(4, m, prec24);
        return {e.series.truncated(prec24), e.weight, e.index, e.char_D, e.char_H};
    }
    JacobiForm f = f_family(k, m - 3, prec24) * phi("phi_0_3", prec24) -
                   f_family(k, m - 4, prec24) * phi("phi_0_4", prec24);
    return {f.series.truncated(prec24), f.weight, f.index, f.char_D, f.char_H};
}

namespace {

// Walks the even-coordinate model of E8 (doubled coordinates y = 2x, all
// even or all odd, sum divisible by 4) in lexicographic order, visiting
// every vector with sum(y^2) <= budget.  Returns false if the callback
// stopped the walk.
template <typename Fn>
bool walk_e8(long budget, Fn&& fn) {
    std::array<long, 8> y{};
    for (int pass = 0; pass < 2; ++pass) { // 0: even coords, 1: odd coords
        auto rec = [&](auto&& self, int i, long rem, long sum) -> bool {
            if (i == 8)
                return (sum % 4 + 4) % 4 == 0 ? fn(y, budget - rem) : true;
            long vmax = 0;
            while ((vmax + 1) * (vmax + 1) <= rem)
                ++vmax;
            if ((vmax & 1) != pass)
                --vmax; // align parity; vmax = -1 leaves the range empty
            for (long v = -vmax; v <= vmax; v += 2) {
                y[static_cast<size_t>(i)] = v;
                if (!self(self, i + 1, rem - v * v, sum + v))
                    return false;
            }
            return true;
        };
        if (!rec(rec, 0, budget, 0))
            return false;
    }
    return true;
}

} // namespace

JacobiForm theta_e8_specialize(int m, long prec24) {
    if (m < 1)
        throw std::invalid_argument("theta_e8_specialize: index must be >= 1");
    // v_m: lexicographically first vector of norm 2m, doubled coordinates,
    // even pass before odd pass, coordinates ordered -|v| < |v|
    std::array<long, 8> vm{};
    bool found = false;
    walk_e8(8 * m, [&](const std::array<long, 8>& y, long norm4) {
        if (norm4 == 8 * m) {
            vm = y;
            found = true;
            return false;
        }
        return true;
    });
    if (!found)
        throw StructureViolation("theta_e8_specialize: no vector of norm " +
                                 std::to_string(2 * m));
    ScaledSeries s(prec24);
    walk_e8((prec24 - 1) / 3, [&](const std::array<long, 8>& y, long norm4) {
        long dot = 0;
        for (int i = 0; i < 8; ++i)
            dot += y[static_cast<size_t>(i)] * vm[static_cast<size_t>(i)];
        s.add_to(3 * norm4, dot / 2, 1);
        return true;
    });
    return make_jacobi(std::move(s), 4, m, 0, 0);
}

namespace {

void require_hecke_ready(const JacobiForm& f, const char* who) {
    if (!has_trivial_character(f) || !is_integer(f.weight) || !is_integer(f.index))
        throw UnsupportedCharacter(std::string(who) +
                                   ": only trivial character, integral weight and index");
}

mpq_class int_power(long a, long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(a),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? mpq_class(p) : mpq_class(1, p);
}

} // namespace

JacobiForm hecke_u(const JacobiForm& f, long d) {
    require_hecke_ready(f, "U_d");
    assert(d >= 1);
    return {dilate_z(f.series, d), f.weight, mpq_class(d) * d * f.index, 0, 0};
}

JacobiForm hecke_v(const JacobiForm& f, long d) {
    require_hecke_ready(f, "V_d");
    assert(d >= 1);
    long k = to_integer(f.weight).get_si();
    long orders_in = f.series.prec24() / 24;
    long out24 = 24 * (orders_in / d);
    ScaledSeries out(out24);
    for (long a = 1; a <= d; ++a) {
        if (d % a)
            continue;
        mpq_class scale = int_power(a, k - 1);
        for (const auto& [n24, row] : f.series.rows()) {
            assert(n24 % 24 == 0);
            long np = n24 / 24;
            if ((np * a * a) % d)
                continue;
            long n = np * a * a / d;
            if (n % a || 24 * n >= out24)
                continue;
            for (const auto& [l2, c] : row)
                out.add_to(24 * n, a * l2, scale * c);
        }
    }
    return {std::move(out), f.weight, mpq_class(d) * f.index, 0, 0};
}

} // namespace jacring
