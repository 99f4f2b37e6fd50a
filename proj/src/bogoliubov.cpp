#include "unruh/bogoliubov.hpp"

#include <cmath>

#include "unruh/modes.hpp"

namespace unruh {

namespace {

void require_nonzero(double k, double K) {
    if (k == 0.0 || K == 0.0)
        throw ZeroWavevectorError("bogoliubov: wave vectors must be nonzero");
}

double resolve_x0(AccelerationParam a, double x0) {
    return x0 > 0.0 ? x0 : kDefaultX0Scale / a.value();
}

// Gamma part of the wedge-I alpha without the selection-rule branch.
cdouble gamma_part(double k, double K, AccelerationParam a, double half_pi_sign) {
    const double av = a.value();
    const double ak = std::abs(k);
    const double aK = std::abs(K);
    const cdouble power = std::polar(1.0, -(K / av) * std::log(ak / av));
    return std::sqrt(aK) / (2.0 * M_PI * av * std::sqrt(ak)) * power * complex_gamma(cdouble{0.0, K / av}) *
           std::exp(half_pi_sign * M_PI * aK / (2.0 * av));
}

}  // namespace

cdouble bogoliubov_f_term(double k, double K, AccelerationParam a, double x0) {
    require_nonzero(k, K);
    const double epsK = K > 0.0 ? 1.0 : -1.0;
    const double r = resolve_x0(a, x0);
    return cdouble{0.0, epsK} * std::polar(1.0, (K / a.value()) * std::log(a.value() * r)) /
           (4.0 * M_PI * std::sqrt(std::abs(k * K)));
}

cdouble alpha_closed(double k, double K, AccelerationParam a, bool include_f, double x0) {
    require_nonzero(k, K);
    cdouble v{0.0, 0.0};
    if ((K > 0.0) == (k > 0.0)) v = gamma_part(k, K, a, +1.0);
    if (include_f) v += bogoliubov_f_term(k, K, a, x0);
    return v;
}

cdouble beta_closed(double k, double K, AccelerationParam a, bool include_f, double x0) {
    require_nonzero(k, K);
    cdouble v{0.0, 0.0};
    if ((K > 0.0) == (k > 0.0)) v = -gamma_part(k, K, a, -1.0);
    if (include_f) v += bogoliubov_f_term(k, K, a, x0);
    return v;
}

BogoliubovPair bogoliubov_wedge2(double k, double K, AccelerationParam a, bool include_f,
                                 double x0) {
    require_nonzero(k, K);
    BogoliubovPair p;
    p.wedge = Wedge::II;
    if ((-K > 0.0) == (k > 0.0)) {
        p.alpha = -gamma_part(k, K, a, +1.0);
        p.beta = gamma_part(k, K, a, -1.0);
    }
    p.f_term = bogoliubov_f_term(k, K, a, x0);
    if (include_f) {
        p.alpha += p.f_term;
        p.beta += p.f_term;
    }
    return p;
}

BogoliubovPair bogoliubov_closed(double k, double K, AccelerationParam a, Wedge wedge,
                                 bool include_f, double x0) {
    if (wedge == Wedge::II) return bogoliubov_wedge2(k, K, a, include_f, x0);
    BogoliubovPair p;
    p.wedge = Wedge::I;
    p.alpha = alpha_closed(k, K, a, include_f, x0);
    p.beta = beta_closed(k, K, a, include_f, x0);
    p.f_term = bogoliubov_f_term(k, K, a, x0);
    return p;
}

NumericBogoliubov bogoliubov_numeric(double k, double K, AccelerationParam a, Wedge wedge,
                                     const QuadratureSpec& spec) {
    require_nonzero(k, K);
    const double av = a.value();
    const double prefactor = 1.0 / (4.0 * M_PI * std::sqrt(std::abs(k * K)));
    // Wedge I pairs e^{-ikx} with alpha; the wedge-II integral over x < 0
    // maps onto the same half line with the phase sign reversed.
    const Direction alpha_sign = wedge == Wedge::I ? Direction::left : Direction::right;
    const Direction beta_sign = wedge == Wedge::I ? Direction::right : Direction::left;

    const double aK_over_a = std::abs(K) / av;
    const double ak = std::abs(k);
    const cdouble s0{0.0, K / av};
    const cdouble apow = std::polar(1.0, (K / av) * std::log(av));
    const double damp = spec.damping_ratio(a) * ak;

    // Exact [0, x0] boundary piece: the Abel-regularized 1/x part gives
    // the leading (a x0)^{iK/a} term; the remainder integrals converge
    // absolutely and restore the O(k x0) corrections that matter when
    // |beta| is small against the boundary artifact.
    auto boundary = [&](Direction d, double const_sign) {
        const cdouble p{damp, -static_cast<double>(sign_of(d)) * k};
        auto remainder_inv = [&](double x) {
            return std::polar(1.0, (K / av) * std::log(x)) / x * (std::exp(-p * x) - 1.0);
        };
        auto remainder_unit = [&](double x) {
            return std::polar(1.0, (K / av) * std::log(x)) * std::exp(-p * x);
        };
        const IntegralResult c1 = integrate_adaptive(remainder_inv, 0.0, spec.x0, spec);
        const IntegralResult c0 = integrate_adaptive(remainder_unit, 0.0, spec.x0, spec);
        const cdouble leading = std::pow(spec.x0, s0) / s0;
        IntegralResult out;
        out.value = -prefactor * apow *
                    (aK_over_a * (leading + c1.value) + const_sign * ak * c0.value);
        out.abs_error_estimate =
            prefactor * (aK_over_a * c1.abs_error_estimate + ak * c0.abs_error_estimate);
        out.converged = c1.converged && c0.converged;
        return out;
    };

    auto combine = [&](Direction d, double const_sign) {
        const IntegralResult inv = integrate_power_phase(k, K, a, d, PhaseWeight::inverse_x, spec);
        const IntegralResult cst = integrate_power_phase(k, K, a, d, PhaseWeight::unit, spec);
        IntegralResult out;
        out.value = prefactor * (aK_over_a * inv.value + const_sign * ak * cst.value);
        out.abs_error_estimate =
            prefactor * (aK_over_a * inv.abs_error_estimate + ak * cst.abs_error_estimate);
        out.converged = inv.converged && cst.converged;
        return out;
    };
    const IntegralResult ra = combine(alpha_sign, +1.0);
    const IntegralResult rb = combine(beta_sign, -1.0);
    const IntegralResult ba = boundary(alpha_sign, +1.0);
    const IntegralResult bb = boundary(beta_sign, -1.0);

    NumericBogoliubov out;
    out.pair.wedge = wedge;
    out.pair.f_term = bogoliubov_f_term(k, K, a, spec.x0);
    out.pair.alpha = ra.value - ba.value;
    out.pair.beta = rb.value - bb.value;
    out.abs_error = ra.abs_error_estimate + rb.abs_error_estimate + ba.abs_error_estimate +
                    bb.abs_error_estimate;
    out.converged = ra.converged && rb.converged && ba.converged && bb.converged;
    return out;
}

UnruhWeights unruh_mode_coefficients(double K, Wedge /*wedge*/, AccelerationParam a) {
    if (K == 0.0) throw ZeroWavevectorError("unruh_mode_coefficients: K must be nonzero");
    const double w = std::exp(-M_PI * std::abs(K) / a.value());
    const double norm = std::sqrt(1.0 - w * w);
    return {1.0 / norm, w / norm};
}

double PairDistribution::pmf(int n) const {
    if (n < 0) return 0.0;
    return (1.0 - ratio) * std::pow(ratio, n);
}

double PairDistribution::mean() const { return ratio / (1.0 - ratio); }

PairDistribution vacuum_pair_distribution(double K, AccelerationParam a) {
    if (K == 0.0) throw ZeroWavevectorError("vacuum_pair_distribution: K must be nonzero");
    return {std::exp(-2.0 * M_PI * std::abs(K) / a.value())};
}

VacuumModel::VacuumModel(AccelerationParam a, double box_length, int j_max)
    : a_(a), length_(box_length), j_max_(j_max) {
    if (!(box_length > 0.0) || j_max < 1)
        throw std::invalid_argument("VacuumModel: need box_length > 0 and j_max >= 1");
}

VacuumModel VacuumModel::defaults_for(AccelerationParam a) {
    return {a, 200.0 / a.value(), 400};
}

double VacuumModel::mode(int j) const {
    if (j == 0 || std::abs(j) > j_max_)
        throw std::out_of_range("VacuumModel::mode: j out of range or zero");
    return 2.0 * M_PI * j / length_;
}

double VacuumModel::boltzmann_ratio(int j) const {
    return vacuum_pair_distribution(mode(j), a_).ratio;
}

double VacuumModel::normalization(int j) const {
    return std::sqrt(1.0 - boltzmann_ratio(j));
}

double unruh_temperature(AccelerationParam a) { return a.value() / (2.0 * M_PI); }

namespace {
// CODATA 2018
constexpr double kHbar = 1.054571817e-34;   // J s
constexpr double kBoltzmann = 1.380649e-23; // J/K
constexpr double kLightSpeed = 2.99792458e8;  // m/s
}  // namespace

SiConversion si_conversions(double a_si) {
    return {a_si * kHbar / (2.0 * M_PI * kLightSpeed * kBoltzmann), a_si / kLightSpeed};
}

double acceleration_for_temperature(double t_kelvin) {
    return 2.0 * M_PI * kLightSpeed * kBoltzmann * t_kelvin / kHbar;
}

}  // namespace unruh
