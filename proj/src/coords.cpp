#include "unruh/coords.hpp"

#include <cmath>

namespace unruh {

SpacetimeEvent to_minkowski(const RindlerEvent& ev, AccelerationParam a) {
    const double av = a.value();
    const double r = std::exp(av * ev.xi) / av;
    double t = r * std::sinh(av * ev.eta);
    double x = r * std::cosh(av * ev.eta);
    if (ev.wedge == Wedge::II) {
        t = -t;
        x = -x;
    }
    return {t, x};
}

RindlerEvent to_rindler(const SpacetimeEvent& ev, AccelerationParam a) {
    if (!(std::abs(ev.t) < std::abs(ev.x)))
        throw HorizonError("to_rindler: event on or outside the Rindler horizon (|t| >= |x|)");
    const double av = a.value();
    const Wedge w = ev.x > 0.0 ? Wedge::I : Wedge::II;
    // Both wedges: t/x = tanh(a eta), x^2 - t^2 = a^-2 e^{2 a xi}.
    const double eta = std::atanh(ev.t / ev.x) / av;
    const double xi = 0.5 * std::log(av * av * (ev.x * ev.x - ev.t * ev.t)) / av;
    return {eta, xi, w};
}

double null_coordinate_identity(const SpacetimeEvent& ev, Direction eps, AccelerationParam a) {
    const RindlerEvent r = to_rindler(ev, a);
    return a.value() * (r.xi - sign_of(eps) * r.eta);
}

double proper_acceleration(AccelerationParam a, double xi) {
    return a.value() * std::exp(-a.value() * xi);
}

double slice_velocity(AccelerationParam a, double eta) {
    return std::tanh(a.value() * eta);
}

double shifted_coordinate(double x, AccelerationParam a) {
    return x - 1.0 / a.value();
}

}  // namespace unruh
