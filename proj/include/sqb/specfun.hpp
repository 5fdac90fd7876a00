#pragma once

// Special functions of complex order. Every routine is a pure function.

#include <complex>

#include "sqb/quad.hpp"

namespace sqb {

using cplx = std::complex<double>;

struct SeriesConfig {
    double rel_tol = 1e-14;
    int max_terms = 400;

    void validate() const;
};

/// log Gamma(z) on some branch; exp() of it is Gamma(z). PoleError at 0, -1, -2, ...
cplx log_gamma(cplx z);
cplx gamma(cplx z);
/// 1/Gamma(z), zero at the poles of Gamma.
cplx rgamma(cplx z);
cplx digamma(cplx z);

/// J_nu(z) for complex order and real z >= 0.
cplx bessel_j(cplx nu, double z, const SeriesConfig& cfg = {});
/// dJ_nu(z)/dnu at nu = nu0.
cplx bessel_j_dnu(cplx nu0, double z, const SeriesConfig& cfg = {});

/// I_nu(x), x > 0.
cplx bessel_i(cplx nu, double x, const SeriesConfig& cfg = {});
/// e^{-x} I_nu(x); safe for large x.
cplx bessel_i_scaled(cplx nu, double x, const SeriesConfig& cfg = {});

/// K_{i tau}(x) from the cosh integral.
double macdonald_k(double tau, double x, const quad::QuadConfig& qc = {});
/// e^x K_{i tau}(x), usable where K itself underflows.
double macdonald_k_scaled(double tau, double x, const quad::QuadConfig& qc = {});

/// L_1(2 i w), which is real for real w.
double struve_l1_imag(double w, const SeriesConfig& cfg = {});

/// Modified Struve pieces used by the cosine representation: for w >= 0,
/// L_1(2 i w) = -Y_1(2w) - struve_smooth(w).
double struve_smooth(double w);

/// Switch point between the series and the H_1 integral in struve_l1_imag.
inline constexpr double kStruveSwitch = 8.0;

} // namespace sqb
