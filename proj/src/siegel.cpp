#include "jacring/siegel.hpp"

#include <future>

#include "jacring/errors.hpp"
#include "jacring/generators.hpp"
#include "jacring/rational.hpp"
#include "jacring/theta_eta.hpp"

namespace jacring {

mpq_class FourierJacobiExpansion::coeff(long n, long l, long m) const {
    if (m < 0 || m >= static_cast<long>(fj.size()))
        throw PrecisionExceeded("no Fourier-Jacobi coefficient of index " + std::to_string(m));
    return fj[static_cast<size_t>(m)].series.coeff(24 * n, 2 * l);
}

FourierJacobiExpansion gritsenko_lift(const JacobiForm& phi, int M, long prec24) {
    if (!has_trivial_character(phi))
        throw UnsupportedCharacter("lift input must have trivial character");
    if (phi.index != 1)
        throw std::invalid_argument("lift input must have index 1");
    if (!is_integer(phi.weight) || to_integer(phi.weight) % 2 != 0)
        throw std::invalid_argument("lift input must have even integral weight");
    if (M < 1)
        throw std::invalid_argument("lift needs M >= 1");
    if (!is_holomorphic(phi))
        throw NotHolomorphic("lift input is not holomorphic");

    const long k = to_integer(phi.weight).get_si();
    FourierJacobiExpansion F;
    F.weight = k;
    F.fj.reserve(static_cast<size_t>(M) + 1);

    // f_0: the symmetry pins c(n,0,0) = c(0,0,n) = (phi|V_n)(0,0)
    //    = sigma_{k-1}(n) phi(0,0) for n >= 1; c(0,0,0) is set to phi(0,0).
    const long p0 = std::min(prec24, phi.series.prec24());
    ScaledSeries f0(p0);
    if (!is_cusp(phi)) {
        if (k < 2)
            throw std::invalid_argument("lift of a non-cusp form needs weight >= 2");
        mpq_class c00 = phi.series.coeff(0, 0);
        f0.set(0, 0, c00);
        for (long n = 1; 24 * n < p0; ++n)
            f0.set(24 * n, 0, mpq_class(divisor_sigma(k - 1, n)) * c00);
    }
    F.fj.push_back(make_jacobi(std::move(f0), k, 0, 0, 0));

    std::vector<std::future<JacobiForm>> jobs;
    for (int m = 1; m <= M; ++m)
        jobs.push_back(std::async(std::launch::async, [&phi, m, prec24] {
            JacobiForm f = hecke_v(phi, m);
            if (f.series.prec24() > prec24)
                f.series = f.series.truncated(prec24);
            return f;
        }));
    for (auto& j : jobs)
        F.fj.push_back(j.get());
    return F;
}

SiegelCertificate siegel_certify_integral(const FourierJacobiExpansion& F) {
    if (F.fj.empty())
        throw InsufficientData("empty Fourier-Jacobi expansion");
    if (F.weight <= 0 || F.weight % 2 != 0)
        throw std::invalid_argument("Siegel weight must be a positive even integer");
    const long k = F.weight / 2;

    for (size_t m = 0; m < F.fj.size(); ++m) {
        const JacobiForm& f = F.fj[m];
        if (f.weight != F.weight || f.index != static_cast<long>(m) || !has_trivial_character(f))
            throw std::invalid_argument("fj[" + std::to_string(m) +
                                        "] does not have weight " + std::to_string(F.weight) +
                                        ", index " + std::to_string(m) +
                                        ", trivial character");
        if (!is_holomorphic(f))
            throw NotHolomorphic("fj[" + std::to_string(m) + "] is not holomorphic");
    }

    SiegelCertificate cert;
    cert.weight = F.weight;
    cert.m_bound = (k + 1) / 5;
    cert.assumption =
        "input is the Fourier-Jacobi expansion of a genus-2 Siegel form of the stated weight";
    if (F.truncation() < cert.m_bound)
        throw InsufficientData("need Fourier-Jacobi data up to index " +
                               std::to_string(cert.m_bound) + ", have " +
                               std::to_string(F.truncation()));
    for (long m = 0; m <= F.truncation(); ++m) {
        long need = 24 * ((k + m) / 6 + 1);
        if (F.fj[static_cast<size_t>(m)].series.prec24() < need)
            throw InsufficientData("fj[" + std::to_string(m) + "] needs " +
                                   std::to_string(need / 24) + " q-orders");
    }

    for (long m = 0; m <= cert.m_bound; ++m) {
        const long n_bound = (k + m) / 6;
        for (long n = 0; n <= n_bound; ++n) {
            long l_max = 0;
            while ((l_max + 1) * (l_max + 1) <= 4 * n * m)
                ++l_max;
            for (long l = -l_max; l <= l_max; ++l) {
                cert.checked.emplace_back(n, l, m);
                mpq_class c = F.coeff(n, l, m);
                if (!is_integer(c)) {
                    cert.integral = false;
                    cert.witness = {n, l, m, c};
                    return cert;
                }
            }
        }
    }
    return cert;
}

} // namespace jacring
