#ifndef UNRUH_MODES_HPP
#define UNRUH_MODES_HPP

#include <complex>
#include <functional>

#include "unruh/coords.hpp"
#include "unruh/quad.hpp"

namespace unruh {

enum class Frame { minkowski, rindler_I, rindler_II };
enum class FreqSign { positive, negative };

struct ZeroWavevectorError : std::domain_error {
    using std::domain_error::domain_error;
};

// Plane-wave label; negative freq_sign denotes the complex-conjugate mode.
struct ModeLabel {
    Frame frame{Frame::minkowski};
    double wavevector{1.0};
    FreqSign freq_sign{FreqSign::positive};
};

// u_{k,M}(t,x) = exp[i k (x - eps_k t)] / sqrt(4 pi |k|).
cdouble minkowski_mode(double k, double t, double x);

// u_{K,I} = exp[i K (xi - eps_K eta)] / sqrt(4 pi |K|) inside wedge I,
// u_{K,II} = exp[i K (xi + eps_K eta)] / sqrt(4 pi |K|) inside wedge II
// (eta sign reversed: increasing eta is decreasing Minkowski time there);
// each vanishes identically in the other wedge.
cdouble rindler_mode(double K, Wedge wedge, double eta, double xi);

// Mode value with its Minkowski-time and space derivatives at an event.
struct FieldSample {
    cdouble value{0.0, 0.0};
    cdouble dt{0.0, 0.0};
    cdouble dx{0.0, 0.0};
};

FieldSample minkowski_mode_at(double k, const SpacetimeEvent& ev);

// Rindler mode sampled at a Minkowski event; identically zero (all three
// components) outside the mode's wedge.
FieldSample rindler_mode_at(double K, Wedge wedge, const SpacetimeEvent& ev, AccelerationParam a);

// Field restricted to one spacelike slice, parameterized by position.
// time_derivative carries the derivative conjugate to the slice (for a
// boosted slice the caller bakes the slice geometry into it), so the
// scalar product never needs finite differences.
struct SliceField {
    std::function<cdouble(double)> value;
    std::function<cdouble(double)> time_derivative;
};

SliceField conjugate(const SliceField& f);

// Uniform sampling of [lo, hi] with n points; periodic grids reuse the
// left endpoint weight for the right one (trapezoid becomes exact for
// box-commensurate waves).
struct Grid1D {
    double lo{0.0};
    double hi{1.0};
    int n{1024};
    bool periodic{true};
};

// Indefinite scalar product i * integral dx [f* dt(g) - dt(f)* g] on the
// slice, evaluated by the grid's trapezoid rule. The error estimate is a
// half-resolution comparison; converged is judged against spec.rel_tol.
IntegralResult scalar_product_x(const SliceField& f, const SliceField& g, const Grid1D& grid,
                                const QuadratureSpec& spec);

// Positive/negative frequency content as functions of the wave vector.
struct SpectralPair {
    std::function<cdouble(double)> positive_part;
    std::function<cdouble(double)> negative_part;
};

SpectralPair conjugate(const SpectralPair& f);

// k-space scalar product: integral dk/(2|k|) [f+* g+ - f-* g-] over the
// window |k| <= spec.k_max.
IntegralResult scalar_product_k(const SpectralPair& f, const SpectralPair& g,
                                const QuadratureSpec& spec);

// Residuals of (f,g) = -(f*,g*), (f,g) = (g,f)*, (f*,g*) = -(g,f)*.
struct ConjugationResiduals {
    double conjugate_pair;
    double hermiticity;
    double combined;
};

ConjugationResiduals conjugation_identities(const SliceField& f, const SliceField& g,
                                            const Grid1D& grid, const QuadratureSpec& spec);

}  // namespace unruh

#endif
