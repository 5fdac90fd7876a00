#pragma once

// Mellin transform f*(s) = int_0^inf f(x) x^{s-1} dx, its inverse on a vertical
// line, the Parseval identity and the gamma-product cosine pair.

#include <functional>
#include <optional>

#include "sqb/quad.hpp"
#include "sqb/sampled_function.hpp"
#include "sqb/specfun.hpp"

namespace sqb {

struct MellinStrip {
    double nu = 0.5;
    double p = 2.0;
    double q = 2.0;

    MellinStrip() = default;
    MellinStrip(double nu_, double p_ = 2.0);
    void validate() const;
    /// 0 < nu < 3/4 - 1/(2p).
    bool admissible_for_forward() const;
};

using ComplexFn = std::function<cplx(cplx)>;

cplx mellin_transform(const SampledFunction& f, cplx s, const quad::QuadConfig& cfg = {});

/// (1/2 pi i) int_{nu - i inf}^{nu + i inf} F(s) x^{-s} ds at nu = strip.nu.
cplx inverse_mellin(const ComplexFn& F, const MellinStrip& strip, double x,
                    const quad::ContourSpec& spec = {}, const quad::QuadConfig& cfg = {});

struct ParsevalReport {
    double lhs = 0.0;   // int f g dx
    cplx rhs;           // (1/2 pi i) int f*(s) g*(1-s) ds
    double residual = 0.0;
};

/// Both sides of the Mellin-Parseval identity, by independent code paths.
/// f* and g* are computed numerically unless supplied.
ParsevalReport parseval_check(const SampledFunction& f, const SampledFunction& g, const MellinStrip& strip,
                              const quad::QuadConfig& cfg = {}, std::optional<ComplexFn> f_star = std::nullopt,
                              std::optional<ComplexFn> g_star = std::nullopt);

/// |Gamma(s+i tau) Gamma(s-i tau) - Gamma(2s)/2^{2s-1} int_0^inf cos(tau y) cosh^{-2s}(y/2) dy|.
double gamma_cosine_pair_check(cplx s, double tau, const quad::QuadConfig& cfg = {});

/// int_0^inf Gamma(s+i tau) Gamma(s-i tau) cos(tau y) d tau, computed by quadrature.
cplx gamma_product_cosine_integral(cplx s, double y, const quad::QuadConfig& cfg = {});
/// pi Gamma(2s) / (2^{2s} cosh^{2s}(y/2)).
cplx gamma_product_cosine_closed(cplx s, double y);

} // namespace sqb
