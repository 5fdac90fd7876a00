#include "sqb/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sqb/errors.hpp"

namespace sqb {

bool Decay::sqrt_weight_finite() const {
    switch (kind) {
    case Kind::exp_sqrt: return a > 2.0;
    case Kind::exp:
    case Kind::sech_pi: return true;
    case Kind::power: return false;
    }
    return false;
}

std::string Decay::describe() const {
    if (kind == Kind::sech_pi) return "sech_pi";
    return to_string(kind) + "(" + std::to_string(a) + ")";
}

Decay::Kind parse_decay_kind(const std::string& s) {
    if (s == "exp_sqrt") return Decay::Kind::exp_sqrt;
    if (s == "exp") return Decay::Kind::exp;
    if (s == "power") return Decay::Kind::power;
    if (s == "sech_pi") return Decay::Kind::sech_pi;
    throw SchemaError("unknown decay kind '" + s + "'");
}

std::string to_string(Decay::Kind k) {
    switch (k) {
    case Decay::Kind::exp_sqrt: return "exp_sqrt";
    case Decay::Kind::exp: return "exp";
    case Decay::Kind::power: return "power";
    case Decay::Kind::sech_pi: return "sech_pi";
    }
    return "?";
}

std::string to_string(Domain d) { return d == Domain::half_line ? "half_line" : "real_line"; }

std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> d(n, 0.0);
    if (n < 2) return d;
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (n == 2) {
        d[0] = d[1] = delta[0];
        return d;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) s = 0.0;
        else if (d0 * d1 <= 0.0 && std::abs(s) > 3.0 * std::abs(d0)) s = 3.0 * d0;
        return s;
    };
    d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return d;
}

SampledFunction SampledFunction::from_callable(Domain domain, Fn fn, Decay decay, std::string name) {
    if (!fn) throw SchemaError("callable is empty");
    SampledFunction f;
    f.domain_ = domain;
    f.fn_ = std::move(fn);
    f.decay_ = decay;
    f.name_ = std::move(name);
    return f;
}

SampledFunction SampledFunction::from_samples(Domain domain, std::vector<double> grid, std::vector<double> values,
                                              Decay decay, std::string name) {
    if (grid.size() != values.size()) throw SchemaError("grid and values differ in length");
    if (grid.size() < 2) throw SchemaError("need at least two samples");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) throw SchemaError("grid[" + std::to_string(i) + "] is not finite");
        if (!std::isfinite(values[i])) throw SchemaError("values[" + std::to_string(i) + "] is not finite");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw SchemaError("grid not strictly increasing at index " + std::to_string(i));
    }
    if (domain == Domain::half_line && !(grid.front() >= 0.0)) throw SchemaError("half_line grid must be nonnegative");
    if (decay.kind != Decay::Kind::sech_pi && !(decay.a > 0.0)) throw SchemaError("decay.a must be > 0");
    SampledFunction f;
    f.domain_ = domain;
    f.decay_ = decay;
    f.grid_ = std::move(grid);
    f.values_ = std::move(values);
    f.slopes_ = pchip_slopes(f.grid_, f.values_);
    f.name_ = std::move(name);
    return f;
}

double SampledFunction::strip_hi() const {
    switch (decay_.kind) {
    case Decay::Kind::power: return decay_.a;
    default: return std::numeric_limits<double>::infinity();
    }
}

double SampledFunction::lo() const {
    if (fn_) return domain_ == Domain::half_line ? 0.0 : -std::numeric_limits<double>::infinity();
    return grid_.front();
}

double SampledFunction::hi() const {
    if (fn_) return std::numeric_limits<double>::infinity();
    return grid_.back();
}

double SampledFunction::interpolate(double x) const {
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - grid_.begin());
    i = std::clamp<std::size_t>(i, 1, grid_.size() - 1) - 1;
    const double h = grid_[i + 1] - grid_[i];
    const double t = (x - grid_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * values_[i] + (t3 - 2 * t2 + t) * h * slopes_[i] +
           (-2 * t3 + 3 * t2) * values_[i + 1] + (t3 - t2) * h * slopes_[i + 1];
}

// Right tail from the last sample, following the declared decay.
double SampledFunction::tail(double x) const {
    const double x0 = grid_.back();
    const double v0 = values_.back();
    switch (decay_.kind) {
    case Decay::Kind::exp_sqrt: return v0 * std::exp(-decay_.a * (std::sqrt(x) - std::sqrt(x0)));
    case Decay::Kind::exp: return v0 * std::exp(-decay_.a * (x - x0));
    case Decay::Kind::power: return v0 * std::pow(x0 / x, decay_.a);
    case Decay::Kind::sech_pi: return v0 * std::exp(-std::numbers::pi * (x - x0));
    }
    return 0.0;
}

double SampledFunction::operator()(double x) const {
    if (fn_) return fn_(x);
    if (domain_ == Domain::half_line && x <= 0.0) throw DomainError("half_line function evaluated at x <= 0");
    if (x >= grid_.front() && x <= grid_.back()) return interpolate(x);
    if (x > grid_.back()) return tail(x);
    // Left of the grid: hold the first sample on the half line; on the real
    // line mirror the right-tail law from the first sample.
    if (domain_ == Domain::half_line) return values_.front();
    const double x0 = grid_.front();
    const double v0 = values_.front();
    const double d = x0 - x;
    switch (decay_.kind) {
    case Decay::Kind::exp_sqrt: return v0 * std::exp(-decay_.a * (std::sqrt(-x) - std::sqrt(std::max(-x0, 0.0))));
    case Decay::Kind::exp: return v0 * std::exp(-decay_.a * d);
    case Decay::Kind::power: return v0 * std::pow(std::abs(x0) / std::abs(x), decay_.a);
    case Decay::Kind::sech_pi: return v0 * std::exp(-std::numbers::pi * d);
    }
    return 0.0;
}

} // namespace sqb
