#pragma once

// A real function on (0, inf) or on the real line, either backed by a callable
// or by samples. Sampled functions are interpolated with a monotone cubic inside
// the grid and extended outside it by the declared decay law.

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace sqb {

enum class Domain { half_line, real_line };

struct Decay {
    enum class Kind { exp_sqrt, exp, power, sech_pi };
    Kind kind = Kind::exp;
    double a = 1.0; // rate; unused for sech_pi

    /// True when int |f(x)| e^{2 sqrt x} dx is finite for every f with this tail.
    bool sqrt_weight_finite() const;
    std::string describe() const;
};

Decay::Kind parse_decay_kind(const std::string& s);
std::string to_string(Decay::Kind k);
std::string to_string(Domain d);

class SampledFunction {
public:
    using Fn = std::function<double(double)>;

    static SampledFunction from_callable(Domain domain, Fn fn, Decay decay, std::string name = {});
    /// Validates grid (strictly increasing, positive on the half line) and values (finite).
    static SampledFunction from_samples(Domain domain, std::vector<double> grid, std::vector<double> values,
                                        Decay decay, std::string name = {});

    double operator()(double x) const;

    Domain domain() const { return domain_; }
    const Decay& decay() const { return decay_; }
    bool is_sampled() const { return !fn_; }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    const std::string& name() const { return name_; }

    /// Mellin strip (lo, hi) on which int f(x) x^{s-1} dx converges absolutely.
    /// lo comes from the behaviour at the origin (bounded or log-singular: 0),
    /// hi from the decay tag.
    double strip_lo() const { return strip_lo_; }
    double strip_hi() const;
    SampledFunction& set_strip_lo(double lo) {
        strip_lo_ = lo;
        return *this;
    }

    /// Sample range for integration. For callables: [0, inf) or (-inf, inf).
    double lo() const;
    double hi() const;

private:
    double interpolate(double x) const;
    double tail(double x) const;

    Domain domain_ = Domain::half_line;
    Decay decay_;
    Fn fn_;
    std::vector<double> grid_, values_, slopes_;
    std::string name_;
    double strip_lo_ = 0.0;
};

/// Fritsch-Carlson slopes for monotone piecewise-cubic Hermite interpolation.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y);

} // namespace sqb
