#include "sqb/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace sqb {

namespace {

using std::numbers::pi;
using lcplx = std::complex<long double>;

constexpr double kStirlingMin = 15.0;

// B_{2k} / (2k (2k-1)), k = 1..8
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,
    -3617.0 / 122400.0};
// B_{2k} / (2k), k = 1..8
constexpr std::array<double, 8> kDigammaAsym = {
    1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    -3617.0 / 8160.0};

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

cplx checked(cplx v, const char* what) {
    if (!is_finite(v)) throw DomainError(std::string(what) + ": result not finite");
    return v;
}

// log sin(pi z), stable for large |Im z| and near the real integers.
cplx log_sin_pi(cplx z) {
    const double n = std::round(z.real());
    const cplx w(z.real() - n, z.imag());
    const double sign = (static_cast<long long>(n) % 2 == 0) ? 1.0 : -1.0;
    if (std::abs(w.imag()) < 10.0) return std::log(sign * std::sin(pi * w));
    const bool upper = w.imag() > 0.0;
    const cplx u = upper ? w : std::conj(w);
    // sin(pi u) = (i/2) e^{-i pi u} (1 - e^{2 i pi u})
    const cplx I(0.0, 1.0);
    cplx out = -I * pi * u + std::log(0.5 * I) + std::log(1.0 - std::exp(2.0 * I * pi * u));
    out += std::log(cplx(sign, 0.0));
    return upper ? out : std::conj(out);
}

cplx cot_pi(cplx z) {
    const double n = std::round(z.real());
    const cplx w(z.real() - n, z.imag());
    const cplx I(0.0, 1.0);
    if (w.imag() >= 0.0) {
        const cplx q = std::exp(2.0 * I * pi * w);
        return I * (q + 1.0) / (q - 1.0);
    }
    const cplx q = std::exp(-2.0 * I * pi * w);
    return -I * (q + 1.0) / (q - 1.0);
}

cplx log_gamma_right(cplx z) {
    cplx prod(1.0, 0.0);
    bool shifted = false;
    while (std::abs(z) < kStirlingMin) {
        prod *= z;
        z += 1.0;
        shifted = true;
    }
    const cplx inv = 1.0 / z;
    const cplx inv2 = inv * inv;
    cplx series(0.0, 0.0);
    cplx p = inv;
    for (double c : kStirling) {
        series += c * p;
        p *= inv2;
    }
    cplx out = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + series;
    if (shifted) out -= std::log(prod);
    return out;
}

// Hankel expansion of J_nu(z) and dJ/dnu for large real z. Returns false when the
// asymptotic series stops decreasing before reaching the tolerance.
bool hankel(cplx nu, double z, double tol, cplx& j, cplx* dj) {
    const cplx mu = 4.0 * nu * nu;
    const cplx dmu = 8.0 * nu;
    cplx a(1.0, 0.0), da(0.0, 0.0);
    cplx P(1.0, 0.0), Q(0.0, 0.0), dP(0.0, 0.0), dQ(0.0, 0.0);
    double zk = 1.0;
    double last = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const cplx c = (mu - odd * odd) / (8.0 * k);
        da = da * c + a * dmu / (8.0 * k);
        a *= c;
        zk *= z;
        const cplx term = a / zk;
        const cplx dterm = da / zk;
        const double mag = std::abs(term) + std::abs(dterm);
        if (mag > last && k > 2) break;
        last = mag;
        // (-1)^m a_{2m} / z^{2m} feeds P, (-1)^m a_{2m+1} / z^{2m+1} feeds Q.
        const int m = k / 2;
        const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            P += sgn * term;
            dP += sgn * dterm;
        } else {
            Q += sgn * term;
            dQ += sgn * dterm;
        }
        const double scale = std::abs(P) + std::abs(Q) + std::abs(dP) + std::abs(dQ);
        if (mag < tol * scale) {
            converged = true;
            break;
        }
    }
    if (!converged) return false;
    const cplx chi = z - nu * (pi / 2) - pi / 4;
    const cplx cs = std::cos(chi), sn = std::sin(chi);
    const double amp = std::sqrt(2.0 / (pi * z));
    j = amp * (P * cs - Q * sn);
    if (dj) *dj = amp * (dP * cs + (pi / 2) * P * sn - dQ * sn + (pi / 2) * Q * cs);
    return true;
}

// Ascending series. With with_dnu the sum of terms weighted by psi(k + nu + 1)
// is accumulated as well.
void j_series(cplx nu, double z, const SeriesConfig& cfg, cplx& j, cplx* dj) {
    const double half = 0.5 * z;
    const long double q = -static_cast<long double>(half) * half;
    const cplx r0 = rgamma(nu + 1.0);
    lcplx term(r0.real(), r0.imag());
    lcplx sum = term;
    lcplx psi_sum(0.0L, 0.0L);
    lcplx psi(0.0L, 0.0L);
    const bool want_d = dj != nullptr;
    if (want_d) {
        if (is_nonpositive_integer(nu + 1.0)) throw DomainError("bessel_j_dnu: negative integer order");
        const cplx p0 = digamma(nu + 1.0);
        psi = lcplx(p0.real(), p0.imag());
        psi_sum = term * psi;
    }
    const lcplx lnu(nu.real(), nu.imag());
    bool converged = false;
    for (int k = 1; k <= cfg.max_terms; ++k) {
        const lcplx kn = static_cast<long double>(k) + lnu;
        term *= q / (static_cast<long double>(k) * kn);
        sum += term;
        if (want_d) {
            psi += 1.0L / kn;
            psi_sum += term * psi;
        }
        // Past the peak of the terms, stop once they drop below tolerance.
        if (static_cast<double>(k) > half &&
            std::abs(term) <= cfg.rel_tol * std::max(std::abs(sum), static_cast<long double>(1e-300))) {
            converged = true;
            break;
        }
    }
    if (r0 == cplx(0.0, 0.0) && !want_d) converged = true;
    if (!converged) throw ConvergenceError("bessel_j series: max_terms reached at z=" + std::to_string(z));
    const cplx pref = std::exp(nu * std::log(half));
    const cplx s(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
    j = pref * s;
    if (want_d) {
        const cplx ps(static_cast<double>(psi_sum.real()), static_cast<double>(psi_sum.imag()));
        *dj = std::log(half) * j - pref * ps;
    }
}

constexpr double kHankelSwitch = 20.0;

} // namespace

void SeriesConfig::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("SeriesConfig.rel_tol must be > 0");
    if (max_terms < 1) throw DomainError("SeriesConfig.max_terms must be >= 1");
}

cplx log_gamma(cplx z) {
    if (!is_finite(z)) throw DomainError("log_gamma: non-finite argument");
    if (is_nonpositive_integer(z)) throw PoleError("gamma pole at z=" + std::to_string(z.real()));
    if (z.real() < 0.5) return std::log(pi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
    return log_gamma_right(z);
}

cplx gamma(cplx z) { return checked(std::exp(log_gamma(z)), "gamma"); }

cplx rgamma(cplx z) {
    if (is_nonpositive_integer(z)) return {0.0, 0.0};
    return std::exp(-log_gamma(z));
}

cplx digamma(cplx z) {
    if (!is_finite(z)) throw DomainError("digamma: non-finite argument");
    if (is_nonpositive_integer(z)) throw PoleError("digamma pole at z=" + std::to_string(z.real()));
    if (z.real() < 0.5) return digamma(1.0 - z) - pi * cot_pi(z);
    cplx acc(0.0, 0.0);
    while (std::abs(z) < kStirlingMin) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    const cplx inv2 = 1.0 / (z * z);
    cplx series(0.0, 0.0);
    cplx p = inv2;
    for (double c : kDigammaAsym) {
        series += c * p;
        p *= inv2;
    }
    return acc + std::log(z) - 0.5 / z - series;
}

cplx bessel_j(cplx nu, double z, const SeriesConfig& cfg) {
    cfg.validate();
    if (!(z >= 0.0) || !std::isfinite(z)) throw DomainError("bessel_j: z must be finite and >= 0");
    if (z == 0.0) {
        if (nu == cplx(0.0, 0.0)) return {1.0, 0.0};
        if (nu.real() > 0.0) return {0.0, 0.0};
        throw DomainError("bessel_j: no limit at z=0 for Re nu <= 0, nu != 0");
    }
    // J_{-n} = (-1)^n J_n keeps the series away from the 1/Gamma zeros.
    if (is_nonpositive_integer(nu) && nu.real() < 0.0) {
        const double n = -nu.real();
        const double sgn = (static_cast<long long>(n) % 2 == 0) ? 1.0 : -1.0;
        return sgn * bessel_j(cplx(n, 0.0), z, cfg);
    }
    cplx j;
    if (z > kHankelSwitch && hankel(nu, z, cfg.rel_tol, j, nullptr)) return checked(j, "bessel_j");
    j_series(nu, z, cfg, j, nullptr);
    return checked(j, "bessel_j");
}

cplx bessel_j_dnu(cplx nu0, double z, const SeriesConfig& cfg) {
    cfg.validate();
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("bessel_j_dnu: z must be finite and > 0");
    cplx j, dj;
    if (z > kHankelSwitch && hankel(nu0, z, cfg.rel_tol, j, &dj)) return checked(dj, "bessel_j_dnu");
    j_series(nu0, z, cfg, j, &dj);
    return checked(dj, "bessel_j_dnu");
}

cplx bessel_i_scaled(cplx nu, double x, const SeriesConfig& cfg) {
    cfg.validate();
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_i: x must be finite and > 0");
    if (x > 30.0) {
        // e^{-x} I_nu(x) ~ (2 pi x)^{-1/2} sum (-1)^k a_k(nu) / x^k
        const cplx mu = 4.0 * nu * nu;
        cplx a(1.0, 0.0), sum(1.0, 0.0);
        double last = std::numeric_limits<double>::infinity();
        for (int k = 1; k < 200; ++k) {
            const double odd = 2.0 * k - 1.0;
            a *= -(mu - odd * odd) / (8.0 * k * x);
            const double mag = std::abs(a);
            if (mag > last) break;
            last = mag;
            sum += a;
            if (mag < cfg.rel_tol * std::abs(sum)) return sum / std::sqrt(2.0 * pi * x);
        }
    }
    const double half = 0.5 * x;
    const long double q = static_cast<long double>(half) * half;
    const cplx r0 = rgamma(nu + 1.0);
    lcplx term(r0.real(), r0.imag());
    lcplx sum = term;
    const lcplx lnu(nu.real(), nu.imag());
    bool converged = false;
    for (int k = 1; k <= std::max(cfg.max_terms, static_cast<int>(2 * x) + 50); ++k) {
        term *= q / (static_cast<long double>(k) * (static_cast<long double>(k) + lnu));
        sum += term;
        if (static_cast<double>(k) > half && std::abs(term) <= cfg.rel_tol * std::abs(sum)) {
            converged = true;
            break;
        }
    }
    if (!converged) throw ConvergenceError("bessel_i series: max_terms reached");
    const cplx pref = std::exp(nu * std::log(half) - x);
    return checked(pref * cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag())), "bessel_i");
}

cplx bessel_i(cplx nu, double x, const SeriesConfig& cfg) {
    return checked(bessel_i_scaled(nu, x, cfg) * std::exp(x), "bessel_i");
}

double macdonald_k(double tau, double x, const quad::QuadConfig& qc) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("macdonald_k: x must be finite and > 0");
    // Beyond t_max the factor e^{-x (cosh t - 1)} is below e^{-40}.
    const double t_max = std::acosh(1.0 + 40.0 / x);
    auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cos(tau * t); };
    quad::QuadConfig cfg = qc;
    cfg.abs_tol = std::min(qc.abs_tol, 1e-15 * std::exp(-x));
    const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(tau) * t_max / pi)));
    return quad::integrate<double>(f, 0.0, t_max, cfg, std::min(pieces, 200)).value;
}

double macdonald_k_scaled(double tau, double x, const quad::QuadConfig& qc) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("macdonald_k_scaled: x must be finite and > 0");
    const double t_max = std::acosh(1.0 + 40.0 / x);
    // cosh t - 1 = 2 sinh^2(t/2)
    auto f = [&](double t) {
        const double sh = std::sinh(0.5 * t);
        return std::exp(-2.0 * x * sh * sh) * std::cos(tau * t);
    };
    quad::QuadConfig cfg = qc;
    cfg.abs_tol = std::min(qc.abs_tol, 1e-15);
    const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(tau) * t_max / pi)));
    return quad::integrate<double>(f, 0.0, t_max, cfg, std::min(pieces, 200)).value;
}

double struve_smooth(double w) {
    if (!(w > 0.0)) throw DomainError("struve_smooth: w must be > 0");
    // (2/pi) int_0^inf e^{-v} sqrt(1 + (v/2w)^2) dv
    const double z = 2.0 * w;
    auto f = [&](double v) { return std::exp(-v) * std::sqrt(1.0 + (v / z) * (v / z)); };
    quad::QuadConfig cfg;
    cfg.abs_tol = 1e-16;
    cfg.rel_tol = 1e-15;
    cfg.strict = false;
    return (2.0 / pi) * quad::integrate<double>(f, 0.0, 60.0, cfg, 4).value;
}

double struve_l1_imag(double w, const SeriesConfig& cfg) {
    cfg.validate();
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("struve_l1_imag: w must be finite and >= 0");
    if (w == 0.0) return 0.0;
    if (w < kStruveSwitch) {
        // sum (-1)^{k+1} w^{2k+2} / (Gamma(k+3/2) Gamma(k+5/2))
        const long double w2 = static_cast<long double>(w) * w;
        long double term = -w2 / (std::tgamma(1.5L) * std::tgamma(2.5L));
        long double sum = term;
        for (int k = 1; k <= cfg.max_terms; ++k) {
            term *= -w2 / ((k + 0.5L) * (k + 1.5L));
            sum += term;
            if (std::abs(term) <= cfg.rel_tol * std::abs(sum)) return static_cast<double>(sum);
        }
        throw ConvergenceError("struve_l1_imag series: max_terms reached");
    }
    return -std::cyl_neumann(1.0, 2.0 * w) - struve_smooth(w);
}

} // namespace sqb
