#ifndef UNRUH_LOCALIZED_HPP
#define UNRUH_LOCALIZED_HPP

#include "unruh/coords.hpp"
#include "unruh/modes.hpp"
#include "unruh/quad.hpp"

namespace unruh {

// Label of an exactly localized basis state on a spacelike slice.
struct LocalizedLabel {
    Frame frame{Frame::minkowski};
    double position{0.0};    // x' or xi'
    double slice_time{0.0};  // t' or eta'
    FreqSign freq_sign{FreqSign::positive};
};

// k-space amplitude of the Minkowski localized state:
// sqrt(2|k|) exp[-i k (x' - eps_k t')] / sqrt(2 pi).
cdouble minkowski_localized_k(double xp, double tp, double k);

// Rindler localized amplitude, eta' sign per wedge; labels of the other
// wedge give zero.
cdouble rindler_localized_k(double xip, double etap, Wedge wedge, double K);

// Spacetime field of the Minkowski localized state: numeric k-integral of
// exp[i k (x-x') - i eps_k k (t-t')] / (2 pi sqrt(2|k|)), tail damped by
// exp(-epsilon_reg |k|). Scales as |x-x'|^{-1/2} at equal times.
IntegralResult localized_spacetime_field(double xp, double tp, double t, double x,
                                         const QuadratureSpec& spec);

// Closed form of the damped field integral, used as the test oracle.
cdouble localized_spacetime_field_closed(double xp, double tp, double t, double x,
                                         double epsilon);

// Spacetime probability amplitude between localized states:
// (1/2pi) int dk exp(i k dx - i eps_k k dt), damped by exp(-epsilon_reg |k|).
// A delta sequence at dx = +-dt plus principal-value tails that cancel at
// dt = 0.
IntegralResult counterprop_amplitude(double dx, double dt, const QuadratureSpec& spec);

// Closed form of the damped counterpropagating amplitude:
// (1/2pi) [ (eps - i(dx-dt))^{-1} + (eps + i(dx+dt))^{-1} ].
cdouble counterprop_closed(double dx, double dt, double epsilon);

// Thermal factor g(K) of the localized-basis amplitudes, principal branch
// (-1)^{1/4} = e^{i pi/4}; |g|^2 = 1/(e^{4 pi |K|/a} - 1).
cdouble g_factor(double K, AccelerationParam a);

// Wedge-I Rindler plane wave in the Minkowski localized basis,
// (u_{x,M}, u_{K,I}) or with conjugate = true (u*_{x,M}, u_{K,I}), both
// signs of x. Evaluated as the k-integral of the closed Bogoliubov
// coefficients, which reproduces the printed closed forms exactly for
// x > 0, K > 0 and up to a phase elsewhere (moduli always agree).
// damping_ratio applies the finite-linewidth factor exp(-ratio |K|/a);
// include_f adds the printed boundary term i (a x0)^{iK/a}/sqrt(2pi|K|/a)
// with the conjugate sign flipped.
cdouble plane_in_localized_basis(double x, double K, AccelerationParam a, bool conjugate,
                                 const QuadratureSpec& spec, double damping_ratio = 0.0,
                                 bool include_f = false);

// Localized-to-localized transformation coefficients (positive and
// negative frequency Minkowski amplitudes of a Rindler localized state).
struct TransformCoefficients {
    cdouble alpha_xxi{0.0, 0.0};
    cdouble beta_xxi{0.0, 0.0};
    Wedge wedge{Wedge::I};
};

struct TransformResult {
    TransformCoefficients coeffs;
    double abs_error{0.0};
    bool converged{false};
};

struct TransformOptions {
    double k_window_scale{40.0};   // K window is |K| <= k_window_scale * a
    bool flatten_thermal{false};   // replace the thermal factor by its plateau
};

// Numeric K-integral of plane_in_localized_basis x exp(-iK xi)/sqrt(2pi)
// with the |K|^{-1/2} endpoint handled by the u^2 substitution. The
// rapidly oscillating f(K) term is dropped. Wedge II amplitudes are
// -1 x (wedge I at -x), giving alpha^II_{x,xi} = -alpha^I_{|x|,xi} for
// x < 0. Damping uses spec.epsilon_reg through damping_ratio.
TransformResult localized_transform(double x, double xi, AccelerationParam a, Wedge wedge,
                                    const QuadratureSpec& spec,
                                    const TransformOptions& options = {});

}  // namespace unruh

#endif
