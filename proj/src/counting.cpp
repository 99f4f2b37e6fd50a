#include "unruh/counting.hpp"

#include <algorithm>
#include <cmath>

namespace unruh {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kFourPiSq = 4.0 * M_PI * M_PI;

}  // namespace

cdouble pair_amplitude(double vp, double vpp, AccelerationParam a) {
    return (1.0 / kTwoPi) / cdouble{M_PI / a.value(), vp - vpp};
}

IntegralResult pair_amplitude_integral(double vp, double vpp, AccelerationParam a,
                                       const QuadratureSpec& spec) {
    const double dv = vp - vpp;
    const double av = a.value();
    auto f = [=](double K) {
        return std::polar(std::exp(M_PI * K / av) / kTwoPi, K * dv);
    };
    return integrate_adaptive(f, -kquad_inf, 0.0, spec);
}

double one_detector_rate(AccelerationParam a) { return a.value() / kFourPiSq; }

IntegralResult one_detector_rate_numeric(AccelerationParam a, const QuadratureSpec& spec) {
    auto f = [=](double dv) {
        const cdouble amp = pair_amplitude(dv, 0.0, a);
        return cdouble{std::norm(amp), 0.0};
    };
    return integrate_adaptive(f, -kquad_inf, kquad_inf, spec);
}

double proper_rate(AccelerationParam a, double xi) {
    return proper_acceleration(a, xi) / kFourPiSq;
}

double single_rate_cutoff(const DetectorBand& band, AccelerationParam a, bool paper_prefactor) {
    if (!(band.omega0 > 0.0))
        throw std::invalid_argument("single_rate_cutoff: omega0 must be positive");
    const double av = a.value();
    const double base = -(av / kTwoPi) * std::log1p(-std::exp(-kTwoPi * band.omega0 / av));
    return paper_prefactor ? 2.0 * base : base;
}

IntegralResult single_rate_cutoff_numeric(const DetectorBand& band, AccelerationParam a,
                                          const QuadratureSpec& spec) {
    if (!(band.omega0 > 0.0))
        throw std::invalid_argument("single_rate_cutoff_numeric: omega0 must be positive");
    const double av = a.value();
    auto f = [=](double w) { return cdouble{1.0 / std::expm1(kTwoPi * w / av), 0.0}; };
    return integrate_adaptive(f, band.omega0, kquad_inf, spec);
}

double pair_annihilation_kernel(double K, AccelerationParam a) {
    if (K == 0.0) throw ZeroWavevectorError("pair_annihilation_kernel: K must be nonzero");
    return 1.0 / (2.0 * std::sinh(M_PI * std::abs(K) / a.value()));
}

double pair_annihilation_kernel_series(double K, AccelerationParam a, int terms) {
    if (K == 0.0) throw ZeroWavevectorError("pair_annihilation_kernel_series: K must be nonzero");
    const double u = M_PI * std::abs(K) / a.value();
    const double x = std::exp(-2.0 * u);
    double sum = 0.0;
    for (int n = terms; n >= 1; --n) sum += n * std::pow(x, n);
    return (1.0 - x) * std::exp(u) * sum;
}

IntegralResult coincidence_correlated(double dv, const DetectorBand& band, AccelerationParam a,
                                      const QuadratureSpec& spec) {
    if (!(band.omega0 > 0.0))
        throw std::invalid_argument("coincidence_correlated: omega0 must be positive");
    auto f = [=](double u) {
        return std::polar(pair_annihilation_kernel(u, a) / kTwoPi, u * dv);
    };
    const IntegralResult inner = integrate_adaptive(f, band.omega0, kquad_inf, spec);
    const double mag = std::abs(inner.value);
    return {cdouble{mag * mag, 0.0}, 2.0 * mag * inner.abs_error_estimate, inner.converged};
}

double coincidence_peak_oracle(const DetectorBand& band, AccelerationParam a) {
    const double av = a.value();
    const double lncoth = -std::log(std::tanh(M_PI * band.omega0 / (2.0 * av)));
    const double peak = av / kFourPiSq * lncoth;
    return peak * peak;
}

IntegralResult coincidence_total(double dv, const DetectorBand& band, AccelerationParam a,
                                 const QuadratureSpec& spec, bool paper_prefactor) {
    const IntegralResult r = coincidence_correlated(dv, band, a, spec);
    const double w = single_rate_cutoff(band, a, paper_prefactor);
    return {r.value + w * w, r.abs_error_estimate, r.converged};
}

CollapsedState::CollapsedState(double xi_prime, AccelerationParam a)
    : xi_prime_(xi_prime), a_(a) {}

CollapsedState collapsed_state(double xi_prime, AccelerationParam a) {
    return {xi_prime, a};
}

cdouble CollapsedState::k_amplitude(double K) const {
    const double av = a_.value();
    return std::polar(std::sqrt(M_PI / av) * std::exp(-M_PI * std::abs(K) / av),
                      -K * xi_prime_);
}

IntegralResult CollapsedState::norm_squared(const QuadratureSpec& spec) const {
    auto f = [this](double K) { return cdouble{std::norm(k_amplitude(K)), 0.0}; };
    return integrate_adaptive(f, -kquad_inf, kquad_inf, spec);
}

IntegralResult CollapsedState::xi_amplitude(double xi, const QuadratureSpec& spec) const {
    auto f = [this, xi](double K) {
        return k_amplitude(K) * std::polar(1.0 / std::sqrt(kTwoPi), K * xi);
    };
    return integrate_adaptive(f, -kquad_inf, kquad_inf, spec);
}

cdouble CollapsedState::xi_amplitude_printed(double xi) const {
    const double av = a_.value();
    return kTwoPi / std::pow(av, 1.5) / cdouble{xi - xi_prime_, M_PI / av};
}

std::vector<ProjectedAmplitude> project_collapsed_to_minkowski(const CollapsedState& state,
                                                               std::span<const double> x_grid,
                                                               AccelerationParam a,
                                                               const QuadratureSpec& spec) {
    const double av = a.value();
    // The xi integrand pairs the transform peak near ln|ax|/a with the
    // collapsed Lorentzian around xi'; cover both with generous margins.
    QuadratureSpec outer = spec;
    outer.rel_tol = std::max(spec.rel_tol, 1e-5);
    outer.max_subdivisions = std::min(spec.max_subdivisions, 120);

    std::vector<ProjectedAmplitude> out;
    out.reserve(x_grid.size());
    for (const double x : x_grid) {
        bool inner_ok = true;
        auto f = [&](double xi) {
            const TransformResult tr = localized_transform(x, xi, a, Wedge::II, spec);
            if (!tr.converged) inner_ok = false;
            // closed form of (u_{xi,II}, psi): Fourier transform of the
            // two-sided exponential K amplitude
            const double s = xi - state.xi_prime();
            const double w = M_PI / av;
            const double lorentz =
                std::sqrt(M_PI / av) / std::sqrt(kTwoPi) * 2.0 * w / (w * w + s * s);
            return tr.coeffs.alpha_xxi * lorentz;
        };
        const double peak_xi = std::log(std::abs(av * x)) / av;
        const double lo = std::min(peak_xi, state.xi_prime()) - 12.0 * M_PI / av;
        const double hi = std::max(peak_xi, state.xi_prime()) + 12.0 * M_PI / av;
        const IntegralResult r = integrate_adaptive(f, lo, hi, outer);
        out.push_back({x, r.value, r.abs_error_estimate, r.converged && inner_ok});
    }
    return out;
}

double flux_from_density(double density, Direction direction) {
    if (density < 0.0) throw std::invalid_argument("flux_from_density: density must be >= 0");
    return sign_of(direction) * density;
}

}  // namespace unruh
