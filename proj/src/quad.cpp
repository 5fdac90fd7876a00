#include "sqb/quad.hpp"

namespace sqb::quad {

void QuadConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("QuadConfig tolerances must be > 0");
    if (max_depth < 1) throw DomainError("QuadConfig.max_depth must be >= 1");
    if (!(tail_cutoff > 0.0)) throw DomainError("QuadConfig.tail_cutoff must be > 0");
    if (max_intervals < 1) throw DomainError("QuadConfig.max_intervals must be >= 1");
}

void ContourSpec::validate() const {
    if (!(height > 0.0)) throw ContourError("contour height must be > 0");
    if (!(step_hint > 0.0)) throw ContourError("contour step_hint must be > 0");
    if (!std::isfinite(abscissa)) throw ContourError("contour abscissa must be finite");
    if (!(bend_angle > 0.0 && bend_angle < std::numbers::pi / 2)) throw ContourError("bend_angle must be in (0, pi/2)");
}

void DiffStencil::validate() const {
    if (order < 1 || order > 3) throw DomainError("DiffStencil.order must be 1, 2 or 3");
    if (accuracy != 2 && accuracy != 4) throw DomainError("DiffStencil.accuracy must be 2 or 4");
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("DiffStencil.h must be > 0");
}

double DiffStencil::default_step(int order, int accuracy, double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    return std::pow(eps, 1.0 / (order + accuracy)) * std::max(1.0, std::abs(x));
}

int DiffStencil::reach() const {
    // Central stencils: order 1/2 need accuracy/2 points per side, order 3 one more.
    return accuracy / 2 + (order == 3 ? 1 : 0);
}

std::vector<double> stencil_weights(int order, int accuracy) {
    if (order == 1 && accuracy == 2) return {-0.5, 0.0, 0.5};
    if (order == 1 && accuracy == 4) return {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
    if (order == 2 && accuracy == 2) return {1.0, -2.0, 1.0};
    if (order == 2 && accuracy == 4) return {-1.0 / 12, 4.0 / 3, -2.5, 4.0 / 3, -1.0 / 12};
    if (order == 3 && accuracy == 2) return {-0.5, 1.0, 0.0, -1.0, 0.5};
    if (order == 3 && accuracy == 4) return {1.0 / 8, -1.0, 13.0 / 8, 0.0, -13.0 / 8, 1.0, -1.0 / 8};
    throw DomainError("no stencil for order " + std::to_string(order) + ", accuracy " + std::to_string(accuracy));
}

} // namespace sqb::quad
