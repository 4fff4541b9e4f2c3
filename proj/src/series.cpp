#include "jacring/series.hpp"

#include <algorithm>
#include <cassert>

#include "jacring/rational.hpp"

namespace jacring {

ScaledSeries ScaledSeries::monomial(long n24, long l2, const mpq_class& c, long prec24) {
    ScaledSeries s(prec24);
    s.set(n24, l2, c);
    return s;
}

std::optional<long> ScaledSeries::ord24() const {
    if (rows_.empty())
        return std::nullopt;
    return rows_.begin()->first;
}

mpq_class ScaledSeries::coeff(long n24, long l2) const {
    if (n24 >= prec24_)
        throw PrecisionExceeded("coefficient at q^(" + std::to_string(n24) +
                                "/24) is beyond the horizon " + std::to_string(prec24_));
    auto it = rows_.find(n24);
    if (it == rows_.end())
        return 0;
    auto jt = it->second.find(l2);
    return jt == it->second.end() ? mpq_class(0) : jt->second;
}

ScaledSeries::Row ScaledSeries::row(long n24) const {
    if (n24 >= prec24_)
        throw PrecisionExceeded("row q^(" + std::to_string(n24) +
                                "/24) is beyond the horizon " + std::to_string(prec24_));
    auto it = rows_.find(n24);
    return it == rows_.end() ? Row{} : it->second;
}

void ScaledSeries::set(long n24, long l2, const mpq_class& c) {
    assert(n24 < prec24_ && "writing past the precision horizon");
    if (c == 0) {
        auto it = rows_.find(n24);
        if (it != rows_.end()) {
            it->second.erase(l2);
            if (it->second.empty())
                rows_.erase(it);
        }
        return;
    }
    rows_[n24][l2] = c;
}

void ScaledSeries::add_to(long n24, long l2, const mpq_class& c) {
    if (c == 0)
        return;
    assert(n24 < prec24_ && "writing past the precision horizon");
    auto& row = rows_[n24];
    auto it = row.find(l2);
    if (it == row.end()) {
        row.emplace(l2, c);
        return;
    }
    it->second += c;
    if (it->second == 0) {
        row.erase(it);
        if (row.empty())
            rows_.erase(n24);
    }
}

ScaledSeries ScaledSeries::truncated(long new_prec24) const {
    assert(new_prec24 <= prec24_ && "truncation cannot raise the horizon");
    ScaledSeries out(new_prec24);
    for (const auto& [n24, row] : rows_) {
        if (n24 >= new_prec24)
            break;
        out.rows_[n24] = row;
    }
    return out;
}

ScaledSeries ScaledSeries::operator-() const {
    ScaledSeries out(prec24_);
    for (const auto& [n24, row] : rows_)
        for (const auto& [l2, c] : row)
            out.rows_[n24][l2] = -c;
    return out;
}

ScaledSeries& ScaledSeries::operator+=(const ScaledSeries& o) {
    *this = *this + o;
    return *this;
}

ScaledSeries& ScaledSeries::operator-=(const ScaledSeries& o) {
    *this = *this - o;
    return *this;
}

ScaledSeries& ScaledSeries::operator*=(const mpq_class& c) {
    if (c == 0) {
        rows_.clear();
        return *this;
    }
    for (auto& [n24, row] : rows_)
        for (auto& [l2, v] : row)
            v *= c;
    return *this;
}

ScaledSeries operator+(const ScaledSeries& a, const ScaledSeries& b) {
    ScaledSeries out = a.truncated(std::min(a.prec24(), b.prec24()));
    for (const auto& [n24, row] : b.rows()) {
        if (n24 >= out.prec24())
            break;
        for (const auto& [l2, c] : row)
            out.add_to(n24, l2, c);
    }
    return out;
}

ScaledSeries operator-(const ScaledSeries& a, const ScaledSeries& b) {
    return a + (-b);
}

ScaledSeries operator*(const mpq_class& c, const ScaledSeries& a) {
    ScaledSeries out = a;
    out *= c;
    return out;
}

namespace {

// Order lower bound used by the precision bookkeeping: takes the horizon
// itself when the operand is zero (all of it is known-zero that far).
long ord_floor(const ScaledSeries& s) {
    auto o = s.ord24();
    return o ? *o : s.prec24();
}

} // namespace

ScaledSeries operator*(const ScaledSeries& a, const ScaledSeries& b) {
    long prec = std::min(a.prec24() + ord_floor(b), b.prec24() + ord_floor(a));
    ScaledSeries out(prec);
    for (const auto& [na, ra] : a.rows()) {
        if (na + ord_floor(b) >= prec)
            break;
        for (const auto& [nb, rb] : b.rows()) {
            long n = na + nb;
            if (n >= prec)
                break;
            for (const auto& [la, ca] : ra)
                for (const auto& [lb, cb] : rb)
                    out.add_to(n, la + lb, ca * cb);
        }
    }
    return out;
}

namespace {

// Exact Laurent division of r by d (maps l2 -> coefficient, d nonempty).
// Returns the quotient or throws NotDivisible if a residue survives.
ScaledSeries::Row laurent_div(ScaledSeries::Row r, const ScaledSeries::Row& d, long level24) {
    ScaledSeries::Row q;
    const long dlo = d.begin()->first;
    const long dhi = d.rbegin()->first;
    const mpq_class& dlead = d.begin()->second;
    const long qhi = r.empty() ? 0 : r.rbegin()->first - dhi;
    while (!r.empty()) {
        long rlo = r.begin()->first;
        if (rlo - dlo > qhi)
            throw NotDivisible("residue at q^(" + std::to_string(level24) +
                               "/24) not divisible by the leading row");
        mpq_class t = r.begin()->second / dlead;
        long sh = rlo - dlo;
        q[sh] = t;
        for (const auto& [l2, c] : d) {
            auto it = r.find(l2 + sh);
            mpq_class v = (it == r.end() ? mpq_class(0) : it->second) - t * c;
            if (v == 0) {
                if (it != r.end())
                    r.erase(it);
            } else {
                r[l2 + sh] = v;
            }
        }
    }
    return q;
}

} // namespace

ScaledSeries exact_div(const ScaledSeries& a, const ScaledSeries& b) {
    if (b.is_zero())
        throw NotDivisible("division by the zero series");
    const long beta = *b.ord24();
    const ScaledSeries::Row& lead = b.rows().begin()->second;

    if (a.is_zero())
        return ScaledSeries(a.prec24() - beta);

    const long gamma = *a.ord24() - beta;
    const long prec = std::min(a.prec24(), b.prec24() + gamma) - beta;
    ScaledSeries out(prec);
    // Peel one q-level of the quotient at a time: subtract the part of the
    // product already explained by lower levels, then divide the residue by
    // b's leading row.
    for (long n = gamma; n < prec; ++n) {
        ScaledSeries::Row residue = a.row(n + beta);
        for (const auto& [k, crow] : out.rows()) {
            long bn = n + beta - k;
            auto bit = b.rows().find(bn);
            if (bit == b.rows().end())
                continue;
            for (const auto& [lc, cc] : crow)
                for (const auto& [lb, cb] : bit->second) {
                    auto [it, fresh] = residue.emplace(lc + lb, 0);
                    it->second -= cc * cb;
                    if (it->second == 0)
                        residue.erase(it);
                }
        }
        for (auto& [l2, c] : laurent_div(std::move(residue), lead, n + beta))
            out.set(n, l2, c);
    }
    return out;
}

ScaledSeries pow(const ScaledSeries& a, unsigned long e) {
    if (e == 0)
        return ScaledSeries::one(a.prec24());
    ScaledSeries base = a;
    ScaledSeries acc = ScaledSeries(0); // placeholder, assigned on first hit
    bool have = false;
    for (unsigned long k = e; k; k >>= 1) {
        if (k & 1) {
            acc = have ? acc * base : base;
            have = true;
        }
        if (k > 1)
            base = base * base;
    }
    return acc;
}

ScaledSeries dilate_z(const ScaledSeries& a, long d) {
    assert(d >= 1);
    ScaledSeries out(a.prec24());
    for (const auto& [n24, row] : a.rows())
        for (const auto& [l2, c] : row)
            out.set(n24, d * l2, c);
    return out;
}

ScaledSeries reduce_mod(const ScaledSeries& a, const mpz_class& n) {
    assert(n >= 2);
    ScaledSeries out(a.prec24());
    for (const auto& [n24, row] : a.rows())
        for (const auto& [l2, c] : row) {
            if (!is_integer(c))
                throw NonIntegralInput("cannot reduce " + c.get_str() + " at (" +
                                       std::to_string(n24) + "," + std::to_string(l2) +
                                       ") mod " + n.get_str());
            mpz_class r;
            mpz_mod(r.get_mpz_t(), c.get_num().get_mpz_t(), n.get_mpz_t());
            out.set(n24, l2, mpq_class(r));
        }
    return out;
}

bool agree_to(const ScaledSeries& a, const ScaledSeries& b, long prec24) {
    long p = std::min({prec24, a.prec24(), b.prec24()});
    auto ta = a.truncated(p), tb = b.truncated(p);
    return ta.rows_ == tb.rows_;
}

bool is_integral(const ScaledSeries& a) {
    return !first_fractional(a).has_value();
}

std::optional<std::pair<long, long>> first_fractional(const ScaledSeries& a) {
    for (const auto& [n24, row] : a.rows())
        for (const auto& [l2, c] : row)
            if (!is_integer(c))
                return std::make_pair(n24, l2);
    return std::nullopt;
}

} // namespace jacring
