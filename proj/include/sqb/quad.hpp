#pragma once

// Quadrature engines shared by every higher module:
//   - adaptive Gauss-Kronrod (G10/K21) on finite intervals,
//   - semi-infinite integration through x = a + t/(1-t),
//   - panel summation for slowly decaying tails, with Wynn-epsilon
//     acceleration for oscillatory ones,
//   - vertical-line (Mellin-Barnes) contour integrals,
//   - central finite-difference stencils.
//
// Everything is templated on the value type (double or std::complex<double>)
// and is deterministic: intervals are always summed in left-to-right order.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "sqb/errors.hpp"

namespace sqb::quad {

using cplx = std::complex<double>;

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 40;        // maximum bisection depth of a single interval
    double tail_cutoff = 1e-16; // relative magnitude below which an infinite tail is dropped
    double wavelength = 0.0;   // oscillation wavelength hint; 0 = none
    int max_intervals = 4000;
    bool strict = true;        // throw QuadratureError when the tolerance is unmet

    void validate() const;
};

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
    long evaluations = 0;
};

namespace detail {

inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208067669637, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const cplx& v) { return std::abs(v); }
inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

template <class T>
struct Segment {
    double a, b;
    T value;
    double error;
    double resabs;
    int depth;
};

// One G10/K21 panel, QUADPACK-style error scaling.
template <class T, class F>
Segment<T> kronrod21(F& f, double a, double b, int depth) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double abs_half = std::abs(half);

    std::array<T, 21> fv{};
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        fv[2 * j] = f(center - dx);
        fv[2 * j + 1] = f(center + dx);
    }
    fv[20] = f(center);
    for (const auto& v : fv) {
        if (!finite(v)) throw DomainError("non-finite integrand sample in [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    }

    T kron = fv[20] * kWgk[10];
    T gauss{};
    double resabs = magnitude(fv[20]) * kWgk[10];
    for (int j = 0; j < 10; ++j) {
        const T pair = fv[2 * j] + fv[2 * j + 1];
        kron += pair * kWgk[j];
        resabs += (magnitude(fv[2 * j]) + magnitude(fv[2 * j + 1])) * kWgk[j];
        if (j % 2 == 1) gauss += pair * kWg[j / 2];
    }
    const T mean = kron * 0.5;
    double resasc = magnitude(fv[20] - mean) * kWgk[10];
    for (int j = 0; j < 10; ++j)
        resasc += (magnitude(fv[2 * j] - mean) + magnitude(fv[2 * j + 1] - mean)) * kWgk[j];

    kron *= half;
    gauss *= half;
    resabs *= abs_half;
    resasc *= abs_half;

    double err = magnitude(kron - gauss);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    return {a, b, kron, err, resabs, depth};
}

} // namespace detail

/// Adaptive integral of f over [a, b], starting from `initial_pieces` equal panels.
template <class T, class F>
QuadResult<T> integrate(F&& f, double a, double b, const QuadConfig& cfg, int initial_pieces = 1) {
    using Seg = detail::Segment<T>;
    QuadResult<T> out;
    if (a == b) return out;
    initial_pieces = std::max(1, initial_pieces);

    std::vector<Seg> segs;
    segs.reserve(static_cast<std::size_t>(initial_pieces) * 4);
    const double w = (b - a) / initial_pieces;
    for (int i = 0; i < initial_pieces; ++i) {
        const double lo = a + i * w;
        const double hi = (i + 1 == initial_pieces) ? b : a + (i + 1) * w;
        segs.push_back(detail::kronrod21<T>(f, lo, hi, 0));
    }
    out.evaluations = 21L * initial_pieces;

    constexpr double eps = std::numeric_limits<double>::epsilon();
    double floor = 0.0; // 50 eps int |f|: below this the error estimate is roundoff
    auto totals = [&](T& value, double& err) {
        value = T{};
        err = 0.0;
        floor = 0.0;
        for (const auto& s : segs) {
            value += s.value;
            err += s.error;
            floor += 50.0 * eps * s.resabs;
        }
    };

    T value;
    double err;
    totals(value, err);
    while (true) {
        const double target = std::max({cfg.abs_tol, cfg.rel_tol * detail::magnitude(value), floor});
        if (err <= target) break;

        // Split the worst splittable segment. Ties resolve to the leftmost one.
        std::size_t worst = segs.size();
        bool depth_limited = false;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            const auto& s = segs[i];
            if (s.error <= 50.0 * eps * s.resabs) continue;
            if (s.depth >= cfg.max_depth) {
                depth_limited = true;
                continue;
            }
            if (worst == segs.size() || s.error > segs[worst].error) worst = i;
        }
        // Every segment at its roundoff floor: nothing more can be gained.
        if (worst == segs.size() && !depth_limited) break;
        if (worst == segs.size() || static_cast<int>(segs.size()) >= cfg.max_intervals) {
            if (cfg.strict) {
                char buf[160];
                std::snprintf(buf, sizeof buf, "adaptive quadrature on [%g, %g] stalled: error %.3g > target %.3g", a,
                              b, err, target);
                throw QuadratureError(buf);
            }
            break;
        }
        const Seg s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        segs[worst] = detail::kronrod21<T>(f, s.a, mid, s.depth + 1);
        segs.insert(segs.begin() + static_cast<std::ptrdiff_t>(worst) + 1, detail::kronrod21<T>(f, mid, s.b, s.depth + 1));
        out.evaluations += 42;
        totals(value, err);
    }
    out.value = value;
    out.error = err;
    return out;
}

/// Integral over [a, inf) through x = a + t/(1-t); f must decay fast enough for
/// the mapped integrand f(x)/(1-t)^2 to stay bounded.
template <class T, class F>
QuadResult<T> integrate_semi_infinite(F&& f, const QuadConfig& cfg, double a = 0.0) {
    auto mapped = [&](double t) -> T {
        const double one_minus = 1.0 - t;
        const double x = a + t / one_minus;
        const T v = f(x);
        if (detail::magnitude(v) == 0.0) return T{};
        return v / (one_minus * one_minus);
    };
    return integrate<T>(mapped, 0.0, 1.0, cfg, 8);
}

/// Integral over [a, inf) summed panel by panel (panel width `width`, growing
/// geometrically by `growth`) until the panel magnitude drops below
/// cfg.tail_cutoff relative to the accumulated magnitude for three panels in a row.
template <class T, class F>
QuadResult<T> integrate_panels(F&& f, double a, double width, const QuadConfig& cfg, double growth = 1.0,
                               int max_panels = 100000) {
    QuadResult<T> out;
    QuadConfig panel_cfg = cfg;
    double lo = a;
    double abs_total = 0.0;
    int quiet = 0;
    for (int n = 0; n < max_panels; ++n) {
        const double hi = lo + width;
        const auto r = integrate<T>(f, lo, hi, panel_cfg);
        out.value += r.value;
        out.error += r.error;
        out.evaluations += r.evaluations;
        const double m = detail::magnitude(r.value) + r.error;
        abs_total += m;
        if (m <= cfg.tail_cutoff * std::max(abs_total, 1e-300) || m == 0.0) {
            if (++quiet >= 3) return out;
        } else {
            quiet = 0;
        }
        lo = hi;
        width *= growth;
    }
    if (cfg.strict) throw QuadratureError("panel summation did not reach the tail cutoff");
    return out;
}

/// Wynn epsilon extrapolation of a sequence of partial sums; returns the last
/// even-column estimate and an error estimate from the two most recent ones.
template <class T>
std::pair<T, double> wynn_epsilon(const std::vector<T>& partial) {
    const std::size_t n = partial.size();
    if (n < 3) return {partial.back(), std::numeric_limits<double>::infinity()};
    std::vector<T> prev(n, T{}), cur(partial.begin(), partial.end());
    T best = partial.back();
    T best_prev = partial[n - 2];
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<T> next(n - k);
        bool broke = false;
        for (std::size_t i = 0; i + k < n; ++i) {
            const T diff = cur[i + 1] - cur[i];
            if (detail::magnitude(diff) == 0.0) {
                broke = true;
                break;
            }
            next[i] = prev[i + 1] + T(1.0) / diff;
        }
        if (broke) break;
        prev = std::move(cur);
        cur = std::move(next);
        if (k % 2 == 0 && cur.size() >= 2) {
            best = cur.back();
            best_prev = cur[cur.size() - 2];
        }
    }
    return {best, detail::magnitude(best - best_prev)};
}

/// Oscillatory integral over [a, inf): partial sums over panels of length
/// `half_period` (one sign change of the oscillation each) accelerated by Wynn
/// epsilon. Suited to integrands like A(x) sin(w x + phase) with algebraic A.
template <class T, class F>
QuadResult<T> integrate_oscillatory(F&& f, double a, double half_period, const QuadConfig& cfg, int min_panels = 8,
                                    int max_panels = 400) {
    QuadResult<T> out;
    QuadConfig panel_cfg = cfg;
    panel_cfg.abs_tol = cfg.abs_tol * 1e-2;
    std::vector<T> partial;
    T sum{};
    T last{};
    double last_err = std::numeric_limits<double>::infinity();
    double lo = a;
    for (int n = 0; n < max_panels; ++n) {
        const auto r = integrate<T>(f, lo, lo + half_period, panel_cfg);
        sum += r.value;
        out.error += r.error;
        out.evaluations += r.evaluations;
        partial.push_back(sum);
        lo += half_period;
        if (static_cast<int>(partial.size()) < min_panels) continue;
        // Only the trailing window feeds the extrapolation; early panels carry
        // transient behaviour that degrades Wynn's table.
        const std::size_t window = std::min<std::size_t>(partial.size(), 24);
        std::vector<T> tail(partial.end() - static_cast<std::ptrdiff_t>(window), partial.end());
        const auto [est, est_err] = wynn_epsilon(tail);
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * detail::magnitude(est));
        const double change = detail::magnitude(est - last);
        last = est;
        last_err = std::max(est_err, change);
        if (last_err <= target) {
            out.value = est;
            out.error += last_err;
            return out;
        }
    }
    if (cfg.strict) throw QuadratureError("oscillatory tail extrapolation did not converge");
    out.value = last;
    out.error += last_err;
    return out;
}

// ---------------------------------------------------------------------------
// Vertical-line contour integrals (1/2 pi i) * int F(s) x^{-s} ds.

enum class ContourTail {
    truncate,  // straight line cut at |Im s| = height
    bend_left, // straight up to |Im s| = height, then rays bent into Re s < abscissa
};

struct ContourSpec {
    double abscissa = 0.5;
    double height = 60.0;
    double step_hint = 0.25;
    ContourTail tail = ContourTail::truncate;
    double bend_angle = std::numbers::pi / 4; // angle of the rays past the vertical
    double edge_ratio_limit = 1e-12;          // truncate mode: allowed |F(edge)|/peak

    void validate() const;
};

struct ContourResult {
    cplx value;
    double error = 0.0;
    double edge_ratio = 0.0; // |integrand| at the truncation points relative to its peak
};

template <class F>
ContourResult integrate_vertical_line(F&& F_, double x, const ContourSpec& spec, const QuadConfig& cfg = {}) {
    spec.validate();
    if (!(x > 0.0)) throw DomainError("vertical-line integral needs x > 0");
    const double log_x = std::log(x);
    auto weight = [&](const cplx& s) -> cplx {
        const cplx v = F_(s);
        if (v == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
        return v * std::exp(-s * log_x);
    };

    double peak = 0.0;
    auto on_line = [&](double y) -> cplx {
        const cplx v = weight(cplx(spec.abscissa, y));
        peak = std::max(peak, std::abs(v));
        return v;
    };
    const int pieces = std::clamp(static_cast<int>(std::ceil(spec.height / spec.step_hint)), 1, 96);
    const auto lower = integrate<cplx>(on_line, -spec.height, 0.0, cfg, pieces);
    const auto upper = integrate<cplx>(on_line, 0.0, spec.height, cfg, pieces);

    ContourResult out;
    // ds = i dy on the line, so (1/2 pi i) * i dy = dy / (2 pi).
    out.value = (lower.value + upper.value) / (2.0 * std::numbers::pi);
    out.error = (lower.error + upper.error) / (2.0 * std::numbers::pi);

    const double edge = std::max(std::abs(weight(cplx(spec.abscissa, spec.height))),
                                 std::abs(weight(cplx(spec.abscissa, -spec.height))));
    out.edge_ratio = peak > 0.0 ? edge / peak : 0.0;

    if (spec.tail == ContourTail::truncate) {
        if (out.edge_ratio > spec.edge_ratio_limit) {
            throw TruncationWarning("contour integrand not negligible at |Im s| = " + std::to_string(spec.height) +
                                        " (ratio " + std::to_string(out.edge_ratio) + ")",
                                    out.edge_ratio);
        }
        return out;
    }

    // Bent tails: s = abscissa +/- i*height + r * dir, r in [0, inf).
    const cplx dir_up = std::polar(1.0, std::numbers::pi / 2 + spec.bend_angle);
    const cplx dir_dn = std::conj(dir_up);
    const cplx start_up(spec.abscissa, spec.height);
    const cplx start_dn(spec.abscissa, -spec.height);
    auto ray_up = [&](double r) -> cplx { return weight(start_up + r * dir_up) * dir_up; };
    auto ray_dn = [&](double r) -> cplx { return weight(start_dn + r * dir_dn) * dir_dn; };
    const auto up = integrate_semi_infinite<cplx>(ray_up, cfg);
    const auto dn = integrate_semi_infinite<cplx>(ray_dn, cfg);
    // Upper ray runs outward (same orientation as the line), lower ray runs inward.
    const cplx two_pi_i(0.0, 2.0 * std::numbers::pi);
    out.value += (up.value - dn.value) / two_pi_i;
    out.error += (up.error + dn.error) / (2.0 * std::numbers::pi);
    return out;
}

// ---------------------------------------------------------------------------
// Finite differences.

struct DiffStencil {
    int order = 1;    // 1, 2 or 3
    double h = 1e-3;  // step
    int accuracy = 4; // 2 or 4

    void validate() const;
    /// Step balancing truncation and roundoff: eps^{1/(order+accuracy)} * max(1, |x|).
    static double default_step(int order, int accuracy, double x);
    static DiffStencil balanced(int order, int accuracy, double x) {
        return {order, default_step(order, accuracy, x), accuracy};
    }
    /// Half-width of the stencil in units of h.
    int reach() const;
};

/// Central-difference weights for offsets -reach..reach (in units of h).
std::vector<double> stencil_weights(int order, int accuracy);

/// Central-difference derivative. Throws DomainError when a stencil point falls
/// at or below `lower_bound`.
template <class F>
double differentiate(F&& f, double x, const DiffStencil& st,
                     double lower_bound = -std::numeric_limits<double>::infinity()) {
    st.validate();
    const int m = st.reach();
    if (x - m * st.h <= lower_bound)
        throw DomainError("difference stencil at x=" + std::to_string(x) + " leaves the domain");
    const auto w = stencil_weights(st.order, st.accuracy);
    double acc = 0.0;
    for (int k = -m; k <= m; ++k) {
        const double c = w[static_cast<std::size_t>(k + m)];
        if (c != 0.0) acc += c * f(x + k * st.h);
    }
    return acc / std::pow(st.h, st.order);
}

} // namespace sqb::quad
