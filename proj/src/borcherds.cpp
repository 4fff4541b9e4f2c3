#include "jacring/borcherds.hpp"

#include <functional>
#include <set>

#include "jacring/errors.hpp"
#include "jacring/rational.hpp"
#include "jacring/theta_eta.hpp"
#include "jacring/zlinalg.hpp"

namespace jacring {

namespace {

long require_weight0_index(const JacobiForm& f, const char* who) {
    if (!has_trivial_character(f))
        throw UnsupportedCharacter(std::string(who) + ": nontrivial character");
    if (f.weight != 0)
        throw std::invalid_argument(std::string(who) + ": weight must be 0");
    if (!is_integer(f.index) || f.index < 1)
        throw std::invalid_argument(std::string(who) + ": index must be a positive integer");
    return to_integer(f.index).get_si();
}

} // namespace

SingularData singular_part(const JacobiForm& f) {
    long m = require_weight0_index(f, "singular_part");
    if (!is_integral(f.series)) {
        auto [n24, l2] = *first_fractional(f.series);
        throw NonIntegralInput("fractional coefficient at n24=" + std::to_string(n24) +
                               ", l2=" + std::to_string(l2));
    }
    SingularData out;
    out.index = m;
    for (const auto& [n24, row] : f.series.rows()) {
        if (n24 > 0)
            break;
        for (const auto& [l2, c] : row) {
            // 4 n m < l^2 with n = n24/24, l = l2/2
            bool singular = 2 * n24 * m < 3 * l2 * l2;
            if (n24 == 0 || singular)
                out.entries[{n24 / 24, l2 / 2}] = to_integer(c);
        }
    }
    return out;
}

mpq_class q0_identity_residual(const JacobiForm& f) {
    long m = require_weight0_index(f, "q0_identity_residual");
    mpq_class acc = 0;
    for (const auto& [l2, c] : f.series.row(0)) {
        mpq_class l = mpq_class(l2) / 2;
        acc += c - mpq_class(6, m) * c * l * l;
    }
    for (const auto& [n24, row] : f.series.rows()) {
        if (n24 >= 0)
            break;
        mpz_class s1 = divisor_sigma(1, -n24 / 24);
        for (const auto& [l2, c] : row)
            acc -= 24 * s1 * c;
    }
    acc.canonicalize();
    return acc;
}

mpq_class borcherds_weight(const JacobiForm& f) {
    require_weight0_index(f, "borcherds_weight");
    if (!is_integral(f.series))
        throw NonIntegralInput("borcherds_weight: input expansion is not integral");
    mpq_class w = f.series.coeff(0, 0) / 2;
    w.canonicalize();
    return w;
}

JacobiForm psi_named(const std::string& name, long prec24) {
    if (prec24 < 120)
        throw InsufficientData("psi_named: needs prec24 >= 120");
    auto a = [](const std::string& g, int e = 1) {
        return GeneratorPolynomial::atom(RingTag::wh0_8, g, e);
    };
    GeneratorPolynomial p(RingTag::wh0_8);
    if (name == "psi_0_1")
        p = a("G4_1") - mpq_class(56) * a("phi_0_1");
    else if (name == "psi_0_2")
        p = a("G4_2") - mpq_class(14) * pow(a("phi_0_1"), 2) + mpq_class(216) * a("phi_0_2");
    else if (name == "psi_0_3")
        p = a("G4_3") - mpq_class(2) * pow(a("phi_0_1"), 3) +
            mpq_class(33) * (a("phi_0_1") * a("phi_0_2")) + mpq_class(90) * a("phi_0_3");
    else
        throw std::invalid_argument("psi_named: unknown name '" + name + "'");
    JacobiForm f = p.expand(prec24);
    if (!is_integral(f.series))
        throw IntegralityViolation("psi_named: expansion came out fractional");
    return f;
}

GeneratorPolynomial realize_singular(const SingularData& target) {
    const long m = target.index;
    if (m < 1 || m > 4)
        throw std::invalid_argument("realize_singular covers index 1 through 4");
    long p_max = 0;
    for (const auto& [key, c] : target.entries) {
        if (key.first > 0)
            throw std::invalid_argument("singular data rows must have n <= 0");
        p_max = std::max(p_max, -key.first);
    }

    // all index-m monomials in the generators with pole depth <= p_max
    const auto& gens = ring_generators(RingTag::wh0_8);
    std::vector<std::vector<int>> mons;
    std::vector<int> cur(gens.size(), 0);
    std::function<void(size_t, long, long)> rec = [&](size_t pos, long idx_rem, long pole_rem) {
        if (pos == gens.size()) {
            if (idx_rem == 0)
                mons.push_back(cur);
            return;
        }
        const GeneratorInfo& g = gens[pos];
        long gi = to_integer(g.index).get_si();
        for (int e = 0;; ++e) {
            if (gi * e > idx_rem || g.pole * e > pole_rem)
                break;
            cur[pos] = e;
            rec(pos + 1, idx_rem - gi * e, pole_rem - g.pole * e);
            if (gi == 0 && g.pole == 0)
                break; // avoid free exponents (none in this ring, but safe)
        }
        cur[pos] = 0;
    };
    rec(0, m, p_max);

    std::vector<ScaledSeries> expansion;
    expansion.reserve(mons.size());
    for (const auto& e : mons) {
        GeneratorPolynomial p(RingTag::wh0_8);
        p.add_term(e, 1);
        expansion.push_back(p.expand_series(24));
    }

    std::set<std::pair<long, long>> positions;
    for (const auto& s : expansion)
        for (const auto& [n24, row] : s.rows()) {
            if (n24 > 0)
                break;
            for (const auto& [l2, c] : row)
                positions.insert({n24, l2});
        }
    for (const auto& [key, c] : target.entries)
        positions.insert({24 * key.first, 2 * key.second});

    std::vector<std::pair<long, long>> pos(positions.begin(), positions.end());
    std::vector<std::vector<mpz_class>> a;
    a.reserve(mons.size());
    for (const auto& s : expansion) {
        std::vector<mpz_class> row(pos.size());
        for (size_t j = 0; j < pos.size(); ++j) {
            mpq_class c = s.coeff(pos[j].first, pos[j].second);
            if (!is_integer(c))
                throw StructureViolation("generator monomial expansion is not integral");
            row[j] = c.get_num();
        }
        a.push_back(std::move(row));
    }
    std::vector<mpz_class> b(pos.size());
    for (size_t j = 0; j < pos.size(); ++j) {
        auto it = target.entries.find({pos[j].first / 24, pos[j].second / 2});
        if (it != target.entries.end())
            b[j] = it->second;
    }

    std::vector<int> order(pos.size());
    for (size_t j = 0; j < pos.size(); ++j)
        order[j] = static_cast<int>(j);
    Hnf h = hnf_rows(std::move(a), order);
    std::vector<mpz_class> residual;
    auto y = solve_echelon(h.h, h.pivots, b, &residual);
    if (!y)
        throw NotRealizable("no integral index-" + std::to_string(m) +
                                " combination has the prescribed singular data",
                            std::vector<mpq_class>(residual.begin(), residual.end()));

    std::vector<mpz_class> x(mons.size(), 0);
    for (size_t r = 0; r < y->size(); ++r) {
        if ((*y)[r] == 0)
            continue;
        for (size_t j = 0; j < mons.size(); ++j)
            x[j] += (*y)[r] * h.u[r][j];
    }
    GeneratorPolynomial out(RingTag::wh0_8);
    for (size_t j = 0; j < mons.size(); ++j)
        if (x[j] != 0)
            out.add_term(mons[j], mpq_class(x[j]));
    return out;
}

} // namespace jacring
