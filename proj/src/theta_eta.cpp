#include "jacring/theta_eta.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace jacring {

namespace {

std::mutex cache_mu;
std::map<std::pair<std::string, long>, ScaledSeries>& cache_map() {
    static std::map<std::pair<std::string, long>, ScaledSeries> m;
    return m;
}

ScaledSeries theta_sum_raw(long prec24) {
    ScaledSeries s(prec24);
    // term n: q^(1/8 + n(n+1)/2) zeta^(1/2 + n), sign (-1)^n
    for (long n = 0;; ++n) {
        long n24 = 3 + 12 * n * (n + 1);
        if (n24 >= prec24 && n > 0)
            break;
        long sign = (n % 2 == 0) ? 1 : -1;
        if (n24 < prec24) {
            s.add_to(n24, 1 + 2 * n, sign);
            s.add_to(n24, -1 - 2 * n, -sign); // partner term at -n-1
        }
        if (n24 >= prec24)
            break;
    }
    return s;
}

ScaledSeries theta_product_raw(long prec24) {
    ScaledSeries s(prec24);
    s.set(3, 1, 1);
    s.set(3, -1, -1);
    for (long n = 1; 24 * n < prec24; ++n) {
        for (long l2 : {0L, 2L, -2L}) {
            ScaledSeries f(prec24);
            f.set(0, 0, 1);
            f.set(24 * n, l2, -1);
            s = s * f;
        }
    }
    return s;
}

ScaledSeries theta_00_raw(long prec24) {
    ScaledSeries s(prec24);
    for (long n = 0; 12 * n * n < prec24; ++n) {
        s.add_to(12 * n * n, 2 * n, 1);
        if (n > 0)
            s.add_to(12 * n * n, -2 * n, 1);
    }
    return s;
}

ScaledSeries theta_01_raw(long prec24) {
    ScaledSeries s(prec24);
    for (long n = 0; 12 * n * n < prec24; ++n) {
        long sign = (n % 2 == 0) ? 1 : -1;
        s.add_to(12 * n * n, 2 * n, sign);
        if (n > 0)
            s.add_to(12 * n * n, -2 * n, sign);
    }
    return s;
}

ScaledSeries theta_10_raw(long prec24) {
    ScaledSeries s(prec24);
    for (long n = 0; 3 + 12 * n * (n + 1) < prec24; ++n) {
        s.add_to(3 + 12 * n * (n + 1), 1 + 2 * n, 1);
        s.add_to(3 + 12 * n * (n + 1), -1 - 2 * n, 1); // n' = -n-1
    }
    return s;
}

ScaledSeries zero_specialization(const ScaledSeries& a) {
    ScaledSeries s(a.prec24());
    for (const auto& [n24, row] : a.rows())
        for (const auto& [l2, c] : row)
            s.add_to(n24, 0, c);
    return s;
}

ScaledSeries eta_raw(long prec24) {
    ScaledSeries s(prec24);
    for (long k = 0;; ++k) {
        long e_pos = (6 * k + 1) * (6 * k + 1);   // k >= 0
        long e_neg = (6 * k - 1) * (6 * k - 1);   // stands for -k
        long sign = (k % 2 == 0) ? 1 : -1;
        bool any = false;
        if (e_pos < prec24) {
            s.add_to(e_pos, 0, sign);
            any = true;
        }
        if (k > 0 && e_neg < prec24) {
            s.add_to(e_neg, 0, sign);
            any = true;
        }
        if (!any)
            break;
    }
    return s;
}

ScaledSeries eisenstein_raw(long prec24, unsigned k, long scale) {
    ScaledSeries s(prec24);
    s.set(0, 0, 1);
    for (long n = 1; 24 * n < prec24; ++n)
        s.set(24 * n, 0, mpq_class(scale * divisor_sigma(k, n)));
    return s;
}

ScaledSeries e4_raw(long prec24) { return eisenstein_raw(prec24, 3, 240); }
ScaledSeries e6_raw(long prec24) { return eisenstein_raw(prec24, 5, -504); }

ScaledSeries delta_raw(long prec24) {
    ScaledSeries e = cached_series("eta", prec24 + 24, &eta_raw);
    return pow(e, 24).truncated(prec24);
}

ScaledSeries j_raw(long prec24) {
    ScaledSeries e4 = cached_series("E4", prec24 + 48, &e4_raw);
    ScaledSeries dl = cached_series("Delta", prec24 + 48, &delta_raw);
    return exact_div(pow(e4, 3), dl).truncated(prec24);
}

} // namespace

ScaledSeries cached_series(const std::string& label, long prec24,
                           ScaledSeries (*compute)(long)) {
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = cache_map().find({label, prec24});
        if (it != cache_map().end())
            return it->second;
    }
    ScaledSeries s = compute(prec24);
    std::lock_guard<std::mutex> lk(cache_mu);
    return cache_map().emplace(std::make_pair(label, prec24), std::move(s)).first->second;
}

BasicForm theta(long prec24) {
    return {cached_series("theta", prec24, &theta_sum_raw), "theta"};
}

BasicForm theta_triple_product(long prec24) {
    return {cached_series("theta.product", prec24, &theta_product_raw), "theta.product"};
}

namespace {

int ab_code(int a, int b) {
    if (a == 0 && b == 0)
        return 0;
    if (a == 0 && b == 1)
        return 1;
    if (a == 1 && b == 0)
        return 2;
    throw std::invalid_argument("theta_ab: characteristic must be 00, 01 or 10");
}

} // namespace

BasicForm theta_ab(int a, int b, long prec24) {
    static ScaledSeries (*raw[3])(long) = {&theta_00_raw, &theta_01_raw, &theta_10_raw};
    int code = ab_code(a, b);
    std::string label = "theta_" + std::to_string(a) + std::to_string(b);
    return {cached_series(label, prec24, raw[code]), label};
}

BasicForm theta_constant(int a, int b, long prec24) {
    ab_code(a, b);
    std::string label = "theta_const_" + std::to_string(a) + std::to_string(b);
    BasicForm full = theta_ab(a, b, prec24);
    // cheap enough that memoizing the projection buys nothing
    return {zero_specialization(full.series), label};
}

BasicForm xi_ab(int a, int b, long prec24) {
    ab_code(a, b);
    // the 10-case divisor has order 3/24, pad so the quotient reaches prec24
    long pad = prec24 + 24;
    ScaledSeries num = theta_ab(a, b, pad).series;
    ScaledSeries den = theta_constant(a, b, pad).series;
    std::string label = "xi_" + std::to_string(a) + std::to_string(b);
    return {exact_div(num, den).truncated(prec24), label};
}

BasicForm eta(long prec24) {
    return {cached_series("eta", prec24, &eta_raw), "eta"};
}

BasicForm delta(long prec24) {
    return {cached_series("Delta", prec24, &delta_raw), "Delta"};
}

BasicForm eisenstein_e(int k, long prec24) {
    if (k == 4)
        return {cached_series("E4", prec24, &e4_raw), "E4"};
    if (k == 6)
        return {cached_series("E6", prec24, &e6_raw), "E6"};
    throw std::invalid_argument("eisenstein_e: only weights 4 and 6 exist here");
}

BasicForm j_invariant(long prec24) {
    return {cached_series("j", prec24, &j_raw), "j"};
}

mpz_class divisor_sigma(unsigned k, long n) {
    assert(n >= 1);
    mpz_class s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), d, k);
        s += p;
        long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), e, k);
            s += p;
        }
    }
    return s;
}

} // namespace jacring
