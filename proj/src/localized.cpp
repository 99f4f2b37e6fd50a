#include "unruh/localized.hpp"

#include <cmath>

namespace unruh {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void require_nonzero_k(double k) {
    if (k == 0.0) throw ZeroWavevectorError("localized amplitude: zero wave vector");
}

}  // namespace

cdouble minkowski_localized_k(double xp, double tp, double k) {
    require_nonzero_k(k);
    const double eps = k > 0.0 ? 1.0 : -1.0;
    return std::polar(std::sqrt(2.0 * std::abs(k) / kTwoPi), -k * (xp - eps * tp));
}

cdouble rindler_localized_k(double xip, double etap, Wedge wedge, double K) {
    require_nonzero_k(K);
    const double eps = K > 0.0 ? 1.0 : -1.0;
    const double eta_sign = wedge == Wedge::I ? -1.0 : +1.0;
    return std::polar(std::sqrt(2.0 * std::abs(K) / kTwoPi), -K * (xip + eta_sign * eps * etap));
}

IntegralResult localized_spacetime_field(double xp, double tp, double t, double x,
                                         const QuadratureSpec& spec) {
    const double dxv = x - xp;
    const double dtv = t - tp;
    const double eps = spec.epsilon_reg;
    auto half = [&](double dir) {
        auto f = [=](double q) {
            // q > 0; k = dir * q
            return std::polar(std::exp(-eps * q) / (kTwoPi * std::sqrt(2.0 * q)),
                              dir * q * dxv - q * dtv);
        };
        return integrate_sqrt_singular(f, kquad_inf, spec);
    };
    const IntegralResult right = half(+1.0);
    const IntegralResult left = half(-1.0);
    return {right.value + left.value, right.abs_error_estimate + left.abs_error_estimate,
            right.converged && left.converged};
}

cdouble localized_spacetime_field_closed(double xp, double tp, double t, double x,
                                         double epsilon) {
    const double dm = (x - xp) - (t - tp);
    const double dp = (x - xp) + (t - tp);
    const double c = std::sqrt(M_PI) / (kTwoPi * std::sqrt(2.0));
    return c * (std::pow(cdouble{epsilon, -dm}, -0.5) + std::pow(cdouble{epsilon, dp}, -0.5));
}

IntegralResult counterprop_amplitude(double dx, double dt, const QuadratureSpec& spec) {
    const double eps = spec.epsilon_reg;
    auto f = [=](double k) {
        const double epsk = k >= 0.0 ? 1.0 : -1.0;
        return std::polar(std::exp(-eps * std::abs(k)) / kTwoPi, k * dx - epsk * k * dt);
    };
    return integrate_adaptive(f, -kquad_inf, kquad_inf, spec);
}

cdouble counterprop_closed(double dx, double dt, double epsilon) {
    return (1.0 / kTwoPi) * (1.0 / cdouble{epsilon, -(dx - dt)} + 1.0 / cdouble{epsilon, dx + dt});
}

cdouble g_factor(double K, AccelerationParam a) {
    require_nonzero_k(K);
    const double y = K / a.value();
    const double ay = std::abs(y);
    const double epsK = K > 0.0 ? 1.0 : -1.0;
    const cdouble quarter_root = std::polar(1.0, M_PI / 4.0);
    return quarter_root / kTwoPi * epsK * std::sqrt(ay) * complex_gamma(cdouble{0.5, -y}) *
           complex_gamma(cdouble{0.0, y}) * std::exp(-M_PI * ay);
}

namespace {

// k-integral composition of the closed wedge-I Bogoliubov coefficients:
//   (u_{x,M}, u_{K,I})  =  C(K) e^{+pi|K|/2a} Gamma(s) (-i eps_K x)^{-s}
//   (u*_{x,M}, u_{K,I}) = -C(K) e^{-pi|K|/2a} Gamma(s) (+i eps_K x)^{-s}
// with C(K) = sqrt|K| a^{iK/a} Gamma(iK/a) / ((2 pi)^{3/2} a) and
// s = 1/2 - iK/a; valid for both signs of x on the principal branch.
cdouble plane_amplitude_wedge1(double x, double K, AccelerationParam a, bool conjugate) {
    const double av = a.value();
    const double y = K / av;
    const double epsK = K > 0.0 ? 1.0 : -1.0;
    const cdouble c = std::sqrt(std::abs(K)) * std::polar(1.0, y * std::log(av)) *
                      complex_gamma(cdouble{0.0, y}) / (std::pow(kTwoPi, 1.5) * av);
    const cdouble s{0.5, -y};
    const double expo = conjugate ? -1.0 : +1.0;
    const double psign = conjugate ? +1.0 : -1.0;
    const cdouble p{0.0, psign * epsK * x};
    const cdouble v = c * std::exp(expo * M_PI * std::abs(y) / 2.0) * complex_gamma(s) *
                      std::pow(p, -s);
    return conjugate ? -v : v;
}

}  // namespace

cdouble plane_in_localized_basis(double x, double K, AccelerationParam a, bool conjugate,
                                 const QuadratureSpec& spec, double damping_ratio,
                                 bool include_f) {
    require_nonzero_k(K);
    if (x == 0.0) throw std::invalid_argument("plane_in_localized_basis: x must be nonzero");
    cdouble v = plane_amplitude_wedge1(x, K, a, conjugate) *
                std::exp(-damping_ratio * std::abs(K) / a.value());
    if (include_f) {
        const double av = a.value();
        const cdouble f = cdouble{0.0, 1.0} *
                          std::polar(1.0, (K / av) * std::log(av * spec.x0)) /
                          std::sqrt(kTwoPi * std::abs(K) / av);
        v += conjugate ? -f : f;
    }
    return v;
}

TransformResult localized_transform(double x, double xi, AccelerationParam a, Wedge wedge,
                                    const QuadratureSpec& spec, const TransformOptions& options) {
    if (x == 0.0) throw std::invalid_argument("localized_transform: x must be nonzero");
    const double av = a.value();
    const double ratio = spec.damping_ratio(a);
    const double window = options.k_window_scale * av;
    // Wedge II reduces to -1 x (wedge I at -x).
    const double x_eff = wedge == Wedge::I ? x : -x;
    const double flip = wedge == Wedge::I ? 1.0 : -1.0;

    auto sweep_half = [&](bool conjugate, double dir) {
        auto f = [&, conjugate, dir](double q) {
            const double K = dir * q;
            cdouble amp;
            if (options.flatten_thermal && !conjugate) {
                amp = std::polar(1.0, (K / av) * std::log(av * std::abs(x_eff))) /
                      std::sqrt(cdouble{kTwoPi * av * x_eff, 0.0});
            } else if (options.flatten_thermal) {
                amp = 0.0;
            } else {
                amp = plane_amplitude_wedge1(x_eff, K, a, conjugate);
            }
            return amp * std::exp(-ratio * std::abs(K) / av) *
                   std::polar(1.0 / std::sqrt(kTwoPi), -K * xi);
        };
        return integrate_sqrt_singular(f, window, spec);
    };

    TransformResult out;
    out.coeffs.wedge = wedge;
    const IntegralResult ap = sweep_half(false, +1.0);
    const IntegralResult am = sweep_half(false, -1.0);
    const IntegralResult bp = sweep_half(true, +1.0);
    const IntegralResult bm = sweep_half(true, -1.0);
    out.coeffs.alpha_xxi = flip * (ap.value + am.value);
    out.coeffs.beta_xxi = flip * (bp.value + bm.value);
    out.abs_error = ap.abs_error_estimate + am.abs_error_estimate + bp.abs_error_estimate +
                    bm.abs_error_estimate;
    out.converged = ap.converged && am.converged && bp.converged && bm.converged;
    return out;
}

}  // namespace unruh
