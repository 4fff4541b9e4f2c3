#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "jacring/jacobi_form.hpp"

namespace jacring {

// Fourier–Jacobi data of a genus-2 Siegel form of even weight 2k:
// fj[m] is a holomorphic Jacobi form of weight 2k and index m, 0 <= m <= M.
struct FourierJacobiExpansion {
    long weight = 0;
    std::vector<JacobiForm> fj;

    long truncation() const { return static_cast<long>(fj.size()) - 1; }
    // c(n, l, m) of the underlying Siegel expansion
    mpq_class coeff(long n, long l, long m) const;
};

// Arithmetic lift of an index-1 Jacobi form of even weight: f_m = phi|V_m
// for 1 <= m <= M, and f_0 reconstructed from the symmetry
// c(n,l,0) = c(0,l,n) of the lift (zero when phi is a cusp form).  Each
// f_m is truncated to at most prec24.
FourierJacobiExpansion gritsenko_lift(const JacobiForm& phi, int M, long prec24);

// Finite certificate for integrality of all c(n,l,m): only
// m <= floor((k+1)/5), n <= floor((k+m)/6), l^2 <= 4nm are inspected.
struct SiegelCertificate {
    bool integral = true;
    long weight = 0;  // 2k
    long m_bound = 0; // largest Fourier-Jacobi index consumed
    std::vector<std::tuple<long, long, long>> checked;              // (n, l, m)
    std::optional<std::tuple<long, long, long, mpq_class>> witness; // (n, l, m, value)
    std::string assumption;
};

SiegelCertificate siegel_certify_integral(const FourierJacobiExpansion& F);

} // namespace jacring
