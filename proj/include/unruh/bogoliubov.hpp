#ifndef UNRUH_BOGOLIUBOV_HPP
#define UNRUH_BOGOLIUBOV_HPP

#include <vector>

#include "unruh/coords.hpp"
#include "unruh/modes.hpp"
#include "unruh/quad.hpp"

namespace unruh {

// Mode-mixing coefficients between a Minkowski plane wave k and a Rindler
// plane wave K. alpha and beta are the Gamma-function parts; f_term is the
// x0 boundary artifact F(K)(a x0)^{iK/a}, carried separately so that
// |alpha|^2/|beta|^2 = e^{2 pi |K|/a} holds on the fields themselves.
struct BogoliubovPair {
    cdouble alpha{0.0, 0.0};
    cdouble beta{0.0, 0.0};
    cdouble f_term{0.0, 0.0};
    Wedge wedge{Wedge::I};
};

inline constexpr double kDefaultX0Scale = 1e-4;  // x0 = 1e-4 / a unless overridden

// Boundary term common to alpha and beta: i eps_K (a x0)^{iK/a} / (4 pi sqrt|kK|).
cdouble bogoliubov_f_term(double k, double K, AccelerationParam a, double x0);

// Wedge-I closed forms. The parallel-wavevector selection rule
// delta_{eps_K, eps_k} is an exact branch. include_f adds the boundary term.
cdouble alpha_closed(double k, double K, AccelerationParam a, bool include_f,
                     double x0 = -1.0);
cdouble beta_closed(double k, double K, AccelerationParam a, bool include_f,
                    double x0 = -1.0);

// Wedge-II coefficients: selection rule delta_{eps_K,eps_k} -> -delta_{eps_{-K},eps_k}.
BogoliubovPair bogoliubov_wedge2(double k, double K, AccelerationParam a, bool include_f,
                                 double x0 = -1.0);

BogoliubovPair bogoliubov_closed(double k, double K, AccelerationParam a, Wedge wedge,
                                 bool include_f, double x0 = -1.0);

// Direct evaluation of the defining hypersurface integrals (wedge II uses
// x -> |x|), damped by exp(-(epsilon/a)|k| x). alpha/beta hold the
// integral minus the analytic f_term; adding f_term back recovers the raw
// integral. Note the defining integrals evaluate to -beta_closed and (in
// wedge II) -alpha_closed relative to the printed closed forms; moduli
// agree throughout.
struct NumericBogoliubov {
    BogoliubovPair pair;
    double abs_error{0.0};
    bool converged{false};
};

NumericBogoliubov bogoliubov_numeric(double k, double K, AccelerationParam a, Wedge wedge,
                                     const QuadratureSpec& spec);

// Weights of the normalized Unruh mode U_{K,J} on (u_{K,J}, u*_{-K,J'}):
// (1, e^{-pi|K|/a}) / sqrt(1 - e^{-2 pi |K|/a}).
struct UnruhWeights {
    double same_wedge;
    double cross_conjugate;
};

UnruhWeights unruh_mode_coefficients(double K, Wedge wedge, AccelerationParam a);

// Per-mode content of the Minkowski vacuum in the Rindler basis: geometric
// pair-number law P(n) = (1-x) x^n with x = e^{-2 pi |K|/a}.
struct PairDistribution {
    double ratio;  // x
    double pmf(int n) const;
    double mean() const;  // 1/(e^{2 pi |K|/a} - 1)
};

PairDistribution vacuum_pair_distribution(double K, AccelerationParam a);

// Discretized two-mode-squeezed description of the Minkowski vacuum:
// K_j = 2 pi j / L, Boltzmann ratio x_j, normalization C_j = sqrt(1-x_j).
class VacuumModel {
public:
    VacuumModel(AccelerationParam a, double box_length, int j_max);
    static VacuumModel defaults_for(AccelerationParam a);  // L = 200/a, |j| <= 400

    double box_length() const { return length_; }
    int j_max() const { return j_max_; }
    double mode(int j) const;             // K_j, j != 0
    double boltzmann_ratio(int j) const;  // x_j in (0,1)
    double normalization(int j) const;    // C_j
    AccelerationParam acceleration() const { return a_; }

private:
    AccelerationParam a_;
    double length_;
    int j_max_;
};

// T_U = a / (2 pi) in natural units.
double unruh_temperature(AccelerationParam a);

// SI conversions: T_U = a hbar / (2 pi c k_B), acceleration frequency a/c.
struct SiConversion {
    double temperature_kelvin;
    double acceleration_frequency_hz;
};

SiConversion si_conversions(double a_si);

// Acceleration (m/s^2) whose Unruh temperature is the given kelvin value.
double acceleration_for_temperature(double t_kelvin);

}  // namespace unruh

#endif
