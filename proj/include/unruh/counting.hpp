#ifndef UNRUH_COUNTING_HPP
#define UNRUH_COUNTING_HPP

#include <span>
#include <vector>

#include "unruh/coords.hpp"
#include "unruh/localized.hpp"
#include "unruh/quad.hpp"

namespace unruh {

// Rindler null coordinate v = eta + xi (right-to-left propagation).
struct NullCoordinate {
    double v{0.0};
};

// Frequency response floor and absorbing surface of one detector.
struct DetectorBand {
    double omega0{0.0};
    double xi_surface{0.0};
    Wedge wedge{Wedge::I};
};

// Two-photon absorption amplitude of the one-pair vacuum term:
// (1/2pi) / (i(v' - v'') + pi/a). Lorentzian correlations, linewidth 2pi/a.
cdouble pair_amplitude(double vp, double vpp, AccelerationParam a);

// Defining integral int_{-inf}^0 dK e^{-pi|K|/a} e^{iK(v'-v'')} / 2pi,
// evaluated numerically for the oracle comparison.
IntegralResult pair_amplitude_integral(double vp, double vpp, AccelerationParam a,
                                       const QuadratureSpec& spec);

// Single-detector rate per unit Rindler time, a/(4 pi^2), and its
// numeric marginal over the undetected coordinate.
double one_detector_rate(AccelerationParam a);
IntegralResult one_detector_rate_numeric(AccelerationParam a, const QuadratureSpec& spec);

// Per unit proper time: alpha/(4 pi^2) with alpha = a e^{-a xi}.
double proper_rate(AccelerationParam a, double xi);

// Cutoff-regularized single-detector density per unit Rindler time:
// (a/2pi)(-ln(1 - e^{-2 pi Omega0/a})). The printed a/pi prefactor is a
// flagged x2 convention: pass paper_prefactor = true to reproduce it.
double single_rate_cutoff(const DetectorBand& band, AccelerationParam a,
                          bool paper_prefactor = false);
IntegralResult single_rate_cutoff_numeric(const DetectorBand& band, AccelerationParam a,
                                          const QuadratureSpec& spec);

// All-pairs annihilation kernel e^{pi|K|/a}/(e^{2 pi|K|/a} - 1)
// = 1/(2 sinh(pi|K|/a)), and its geometric-series form for cross-checks.
double pair_annihilation_kernel(double K, AccelerationParam a);
double pair_annihilation_kernel_series(double K, AccelerationParam a, int terms);

// Correlated part of the coincidence rate,
// r_{I,II} = | int_{-inf}^{-Omega0} dK e^{pi|K|/a - iK dv} /
//             (2 pi (e^{2 pi|K|/a} - 1)) |^2.
IntegralResult coincidence_correlated(double dv, const DetectorBand& band, AccelerationParam a,
                                      const QuadratureSpec& spec);

// Closed-form peak value [(a/4pi^2) ln coth(pi Omega0 / 2a)]^2.
double coincidence_peak_oracle(const DetectorBand& band, AccelerationParam a);

// Total two-photon rate r_{I,II}(dv) + w_I w_II.
IntegralResult coincidence_total(double dv, const DetectorBand& band, AccelerationParam a,
                                 const QuadratureSpec& spec, bool paper_prefactor = false);

// One-photon state left after a wedge-I click at xi'. K-amplitudes are
// (u_{K,II}, psi) = sqrt(pi/a) e^{-pi|K|/a} e^{-iK xi'}; xi-amplitudes
// come from the numeric localized transform of those, with the paper's
// printed form available separately for comparison.
class CollapsedState {
public:
    CollapsedState(double xi_prime, AccelerationParam a);

    double xi_prime() const { return xi_prime_; }
    AccelerationParam acceleration() const { return a_; }

    cdouble k_amplitude(double K) const;
    IntegralResult norm_squared(const QuadratureSpec& spec) const;  // = 1
    IntegralResult xi_amplitude(double xi, const QuadratureSpec& spec) const;
    cdouble xi_amplitude_printed(double xi) const;  // (2pi/a^{3/2}) [(xi-xi') + i pi/a]^{-1}

private:
    double xi_prime_;
    AccelerationParam a_;
};

CollapsedState collapsed_state(double xi_prime, AccelerationParam a);

// Minkowski localized amplitudes (u_{x,M}, psi) of the collapsed state on
// a position grid, via the wedge-II localized transform.
struct ProjectedAmplitude {
    double x;
    cdouble value;
    double abs_error;
    bool converged;
};

std::vector<ProjectedAmplitude> project_collapsed_to_minkowski(const CollapsedState& state,
                                                               std::span<const double> x_grid,
                                                               AccelerationParam a,
                                                               const QuadratureSpec& spec);

// Normal-incidence flux from number density: +-c * density, positive for
// left-to-right propagation (c = 1).
double flux_from_density(double density, Direction direction);

}  // namespace unruh

#endif
