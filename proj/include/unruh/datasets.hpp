#ifndef UNRUH_DATASETS_HPP
#define UNRUH_DATASETS_HPP

#include <string>
#include <vector>

#include "unruh/coords.hpp"
#include "unruh/curve.hpp"
#include "unruh/quad.hpp"
#include "unruh/sweep.hpp"

namespace unruh {

// Everything a figure command needs: chart acceleration, regulators,
// grid, and output toggles. Build one with the per-figure defaults and
// override fields from flags or a config file.
struct RunConfig {
    double a{1.0};
    QuadratureSpec spec{QuadratureSpec::defaults_for(AccelerationParam(1.0))};
    double x{1.0};  // localized-state position for fig3/fig4

    double grid_min{0.0};
    double grid_max{1.0};
    double grid_step{0.1};

    std::vector<double> omega0_list;  // fig5 cutoffs, absolute units

    bool include_f{false};
    bool paper_prefactor{false};
    ExecMode mode{ExecMode::openmp};

    AccelerationParam acceleration() const { return AccelerationParam(a); }
    void validate() const;
    std::size_t grid_size() const;
    double abscissa(std::size_t i) const { return grid_min + static_cast<double>(i) * grid_step; }
};

RunConfig fig3_defaults(double a = 1.0);  // K/a in [-10, 10], step 0.05
RunConfig fig4_defaults(double a = 1.0);  // a xi - ln|ax| in [-6, 6], step 0.05
RunConfig fig5_defaults(double a = 1.0);  // a dv in [-20, 20], step 0.1

std::string config_summary(const RunConfig& cfg, const std::string& command);

// Localized-basis amplitudes of the wedge-I Rindler plane wave vs K/a at
// fixed x (f-term off by default, no linewidth damping):
// K_over_a, abs_pos, abs_neg, arg_pos, arg_neg, converged. Rows with
// |K| below resolution are dropped (the amplitude diverges at K = 0).
CsvTable fig3_dataset(const RunConfig& cfg);

// Localized-to-localized coefficients vs a xi - ln|ax| at epsilon = 0.01 a:
// columns |ax|^{1/2} alpha/a and beta/a for wedge I at x and wedge II at
// -x (real parts; the imaginary residue is quadrature noise).
CsvTable fig4_dataset(const RunConfig& cfg);

// Coincidence counting rate / a^2 vs a(v''-v'): the one-pair term and
// r_{I,II} for each cutoff in omega0_list.
CsvTable fig5_dataset(const RunConfig& cfg);

}  // namespace unruh

#endif
