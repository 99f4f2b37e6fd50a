#include "unruh/modes.hpp"

#include <cmath>

namespace unruh {

namespace {

void require_wavevector(double k) {
    if (k == 0.0) throw ZeroWavevectorError("mode function: zero wave vector");
}

constexpr double kFourPi = 4.0 * M_PI;

}  // namespace

cdouble minkowski_mode(double k, double t, double x) {
    require_wavevector(k);
    const double eps = k > 0.0 ? 1.0 : -1.0;
    return std::polar(1.0 / std::sqrt(kFourPi * std::abs(k)), k * (x - eps * t));
}

cdouble rindler_mode(double K, Wedge wedge, double eta, double xi) {
    require_wavevector(K);
    const double eps = K > 0.0 ? 1.0 : -1.0;
    const double eta_sign = wedge == Wedge::I ? -1.0 : +1.0;
    return std::polar(1.0 / std::sqrt(kFourPi * std::abs(K)), K * (xi + eta_sign * eps * eta));
}

FieldSample minkowski_mode_at(double k, const SpacetimeEvent& ev) {
    const double eps = k > 0.0 ? 1.0 : -1.0;
    const cdouble u = minkowski_mode(k, ev.t, ev.x);
    return {u, cdouble{0.0, -eps * k} * u, cdouble{0.0, k} * u};
}

FieldSample rindler_mode_at(double K, Wedge wedge, const SpacetimeEvent& ev, AccelerationParam a) {
    require_wavevector(K);
    const bool inside = wedge == Wedge::I ? ev.x > std::abs(ev.t) : ev.x < -std::abs(ev.t);
    if (!inside) return {};
    const RindlerEvent r = to_rindler(ev, a);
    const cdouble u = rindler_mode(K, wedge, r.eta, r.xi);
    // Chart jacobian on either wedge:
    //   d(eta)/dt = x/(a(x^2-t^2)),  d(eta)/dx = -t/(a(x^2-t^2)),
    //   d(xi)/dt = -t/(a(x^2-t^2)),  d(xi)/dx =  x/(a(x^2-t^2)).
    const double eps = K > 0.0 ? 1.0 : -1.0;
    const double eta_sign = wedge == Wedge::I ? -1.0 : +1.0;
    const double denom = a.value() * (ev.x * ev.x - ev.t * ev.t);
    const cdouble dphase_deta{0.0, K * eta_sign * eps};
    const cdouble dphase_dxi{0.0, K};
    const cdouble dt = (dphase_deta * (ev.x / denom) + dphase_dxi * (-ev.t / denom)) * u;
    const cdouble dx = (dphase_deta * (-ev.t / denom) + dphase_dxi * (ev.x / denom)) * u;
    return {u, dt, dx};
}

SliceField conjugate(const SliceField& f) {
    auto v = f.value;
    auto d = f.time_derivative;
    return {[v](double x) { return std::conj(v(x)); },
            [d](double x) { return std::conj(d(x)); }};
}

SpectralPair conjugate(const SpectralPair& f) {
    auto p = f.positive_part;
    auto n = f.negative_part;
    return {[n](double k) { return std::conj(n(k)); },
            [p](double k) { return std::conj(p(k)); }};
}

namespace {

cdouble trapezoid_product(const SliceField& f, const SliceField& g, const Grid1D& grid,
                          int stride) {
    const int n = grid.n;
    const double h = grid.periodic ? (grid.hi - grid.lo) / n : (grid.hi - grid.lo) / (n - 1);
    cdouble acc{0.0, 0.0};
    for (int i = 0; i < n; i += stride) {
        const double x = grid.lo + h * i;
        cdouble term = std::conj(f.value(x)) * g.time_derivative(x) -
                       std::conj(f.time_derivative(x)) * g.value(x);
        if (!grid.periodic && (i == 0 || i + stride >= n)) term *= 0.5;
        acc += term;
    }
    return cdouble{0.0, 1.0} * acc * (h * stride);
}

}  // namespace

IntegralResult scalar_product_x(const SliceField& f, const SliceField& g, const Grid1D& grid,
                                const QuadratureSpec& spec) {
    if (grid.n < 4) throw std::invalid_argument("scalar_product_x: grid too coarse");
    const cdouble fine = trapezoid_product(f, g, grid, 1);
    const cdouble coarse = trapezoid_product(f, g, grid, 2);
    const double err = std::abs(fine - coarse);
    const double mag = std::abs(fine);
    const bool ok = err <= spec.rel_tol * mag || (mag <= 1e-10 && err <= 1e-10);
    return {fine, err, ok};
}

IntegralResult scalar_product_k(const SpectralPair& f, const SpectralPair& g,
                                const QuadratureSpec& spec) {
    auto integrand = [&](double k) {
        return (std::conj(f.positive_part(k)) * g.positive_part(k) -
                std::conj(f.negative_part(k)) * g.negative_part(k)) /
               (2.0 * std::abs(k));
    };
    const IntegralResult neg = integrate_adaptive(integrand, -spec.k_max, 0.0, spec);
    const IntegralResult pos = integrate_adaptive(integrand, 0.0, spec.k_max, spec);
    return {neg.value + pos.value, neg.abs_error_estimate + pos.abs_error_estimate,
            neg.converged && pos.converged};
}

ConjugationResiduals conjugation_identities(const SliceField& f, const SliceField& g,
                                            const Grid1D& grid, const QuadratureSpec& spec) {
    const cdouble fg = scalar_product_x(f, g, grid, spec).value;
    const cdouble fcgc = scalar_product_x(conjugate(f), conjugate(g), grid, spec).value;
    const cdouble gf = scalar_product_x(g, f, grid, spec).value;
    return {std::abs(fg + fcgc), std::abs(fg - std::conj(gf)), std::abs(fcgc + std::conj(gf))};
}

}  // namespace unruh
