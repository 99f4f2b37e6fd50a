#ifndef UNRUH_QUAD_HPP
#define UNRUH_QUAD_HPP

#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>

#include "unruh/coords.hpp"

namespace unruh {

using cdouble = std::complex<double>;

// All regulators and cutoffs used by the oscillatory integrals live here.
//   epsilon_reg  exponential damping scale for oscillatory tails
//   x0           lower cutoff for integrands with a 1/x factor
//   omega0       minimum Rindler frequency admitted by frequency integrals
//   k_max        truncation bound for infinite wave-vector windows
struct QuadratureSpec {
    double epsilon_reg{0.01};
    double x0{1e-4};
    double omega0_cutoff{0.0};
    double k_max{50.0};
    double rel_tol{1e-8};
    int max_subdivisions{2000};

    // Defaults scaled to the chart acceleration: epsilon = 0.01 a,
    // x0 = 1e-4/a, k_max = 50 a.
    static QuadratureSpec defaults_for(AccelerationParam a);

    // Throws std::invalid_argument if any field violates its invariant.
    void validate() const;

    // Dimensionless damping strength epsilon/a used where the regulator
    // multiplies |k| x or |K|/a.
    double damping_ratio(AccelerationParam a) const { return epsilon_reg / a.value(); }
};

struct IntegralResult {
    cdouble value{0.0, 0.0};
    double abs_error_estimate{0.0};
    bool converged{false};
};

using ComplexIntegrand = std::function<cdouble(double)>;

inline constexpr double kquad_inf = std::numeric_limits<double>::infinity();

// Adaptive Gauss-Kronrod (G7,K15) subdivision of [lo, hi]; infinite
// endpoints are mapped by a smooth compactifying change of variables.
// Runs until the global error estimate meets rel_tol or the subdivision
// budget is exhausted, in which case converged = false (the partial value
// and its error estimate are still reported).
IntegralResult integrate_adaptive(const ComplexIntegrand& f, double lo, double hi,
                                  const QuadratureSpec& spec);

// Weight of integrate_power_phase: 1 or 1/x.
enum class PhaseWeight { unit, inverse_x };

// Regularized integral int_{x0}^inf dx (a x)^{iK/a} e^{sign*i k x} w(x),
// damped by exp(-(epsilon/a)|k| x). The K = 0, 1/x combination has no
// x0 -> 0 limit and is reported as non-converged.
IntegralResult integrate_power_phase(double k, double K, AccelerationParam a, Direction sign,
                                     PhaseWeight weight, const QuadratureSpec& spec);

// Integral over [0, hi] of an integrand with an integrable |u|^{-1/2}
// endpoint singularity at 0; the substitution u = s^2 bounds it first.
IntegralResult integrate_sqrt_singular(const ComplexIntegrand& f, double hi,
                                       const QuadratureSpec& spec);

struct GammaPoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Gamma function for complex argument (Lanczos series with reflection
// for Re z < 1/2). Throws GammaPoleError at nonpositive integers.
cdouble complex_gamma(cdouble z);

}  // namespace unruh

#endif
