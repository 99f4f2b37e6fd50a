#include "unruh/datasets.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "unruh/counting.hpp"
#include "unruh/localized.hpp"

namespace unruh {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

void RunConfig::validate() const {
    (void)AccelerationParam(a);
    spec.validate();
    if (!(grid_step > 0.0)) throw std::invalid_argument("RunConfig: grid_step must be > 0");
    if (!(grid_max > grid_min)) throw std::invalid_argument("RunConfig: grid_max must exceed grid_min");
}

std::size_t RunConfig::grid_size() const {
    return static_cast<std::size_t>(std::floor((grid_max - grid_min) / grid_step + 0.5)) + 1;
}

RunConfig fig3_defaults(double a) {
    RunConfig cfg;
    cfg.a = a;
    cfg.spec = QuadratureSpec::defaults_for(AccelerationParam(a));
    cfg.x = 1.0 / a;
    cfg.grid_min = -10.0;
    cfg.grid_max = 10.0;
    cfg.grid_step = 0.05;
    return cfg;
}

RunConfig fig4_defaults(double a) {
    RunConfig cfg = fig3_defaults(a);
    cfg.grid_min = -6.0;
    cfg.grid_max = 6.0;
    cfg.grid_step = 0.05;
    return cfg;
}

RunConfig fig5_defaults(double a) {
    RunConfig cfg = fig3_defaults(a);
    cfg.grid_min = -20.0;
    cfg.grid_max = 20.0;
    cfg.grid_step = 0.1;
    cfg.omega0_list = {0.01 * a, 0.02 * a, 0.05 * a, 0.13 * a};
    return cfg;
}

std::string config_summary(const RunConfig& cfg, const std::string& command) {
    std::string s = command;
    s += " a=" + fmt(cfg.a);
    s += " epsilon=" + fmt(cfg.spec.epsilon_reg);
    s += " x0=" + fmt(cfg.spec.x0);
    s += " k_max=" + fmt(cfg.spec.k_max);
    s += " rel_tol=" + fmt(cfg.spec.rel_tol);
    s += " max_subdivisions=" + std::to_string(cfg.spec.max_subdivisions);
    s += " x=" + fmt(cfg.x);
    s += " grid=[" + fmt(cfg.grid_min) + "," + fmt(cfg.grid_max) + "]";
    s += " step=" + fmt(cfg.grid_step);
    if (!cfg.omega0_list.empty()) {
        s += " omega0=";
        for (std::size_t i = 0; i < cfg.omega0_list.size(); ++i) {
            if (i) s += ';';
            s += fmt(cfg.omega0_list[i]);
        }
    }
    s += cfg.include_f ? " include_f=1" : " include_f=0";
    s += cfg.paper_prefactor ? " paper_prefactor=1" : " paper_prefactor=0";
    return s;
}

CsvTable fig3_dataset(const RunConfig& cfg) {
    cfg.validate();
    const AccelerationParam a = cfg.acceleration();
    const std::size_t n = cfg.grid_size();

    CsvTable table;
    table.config_comment = config_summary(cfg, "fig3");
    table.columns = {"K_over_a", "abs_pos", "abs_neg", "arg_pos", "arg_neg"};

    std::vector<CsvTable::Row> rows(n);
    std::vector<char> keep(n, 1);
    sweep(n, cfg.mode, [&](std::size_t i) {
        const double s = cfg.abscissa(i);
        if (std::abs(s) < 1e-6 * cfg.grid_step) {
            keep[i] = 0;
            return;
        }
        const double K = s * cfg.a;
        const cdouble pos =
            plane_in_localized_basis(cfg.x, K, a, false, cfg.spec, 0.0, cfg.include_f);
        const cdouble neg =
            plane_in_localized_basis(cfg.x, K, a, true, cfg.spec, 0.0, cfg.include_f);
        rows[i] = {{s, std::abs(pos), std::abs(neg), std::arg(pos), std::arg(neg)}, true};
    });
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i]) table.rows.push_back(std::move(rows[i]));
    return table;
}

CsvTable fig4_dataset(const RunConfig& cfg) {
    cfg.validate();
    if (!(cfg.x > 0.0)) throw std::invalid_argument("fig4_dataset: x must be positive");
    const AccelerationParam a = cfg.acceleration();
    const std::size_t n = cfg.grid_size();
    const double ax = cfg.a * cfg.x;
    const double scale = std::sqrt(std::abs(ax)) / cfg.a;

    CsvTable table;
    table.config_comment = config_summary(cfg, "fig4");
    table.columns = {"a_xi_minus_ln_ax", "alpha_I", "beta_I", "alpha_II", "beta_II"};
    table.rows.resize(n);

    sweep(n, cfg.mode, [&](std::size_t i) {
        const double s = cfg.abscissa(i);
        const double xi = (s + std::log(ax)) / cfg.a;
        const TransformResult one = localized_transform(cfg.x, xi, a, Wedge::I, cfg.spec);
        const TransformResult two = localized_transform(-cfg.x, xi, a, Wedge::II, cfg.spec);
        table.rows[i] = {{s, scale * one.coeffs.alpha_xxi.real(),
                          scale * one.coeffs.beta_xxi.real(),
                          scale * two.coeffs.alpha_xxi.real(),
                          scale * two.coeffs.beta_xxi.real()},
                         one.converged && two.converged};
    });
    return table;
}

CsvTable fig5_dataset(const RunConfig& cfg) {
    cfg.validate();
    const AccelerationParam a = cfg.acceleration();
    if (cfg.omega0_list.empty())
        throw std::invalid_argument("fig5_dataset: omega0_list must not be empty");
    const std::size_t n = cfg.grid_size();
    const double a2 = cfg.a * cfg.a;

    CsvTable table;
    table.config_comment = config_summary(cfg, "fig5");
    table.columns = {"a_dv", "one_pair"};
    for (const double w0 : cfg.omega0_list)
        table.columns.push_back("r_omega0_" + fmt(w0 / cfg.a));
    table.rows.resize(n);

    sweep(n, cfg.mode, [&](std::size_t i) {
        const double s = cfg.abscissa(i);
        const double dv = s / cfg.a;
        CsvTable::Row row;
        row.converged = true;
        row.values.push_back(s);
        row.values.push_back(std::norm(pair_amplitude(0.0, dv, a)) / a2);
        for (const double w0 : cfg.omega0_list) {
            const DetectorBand band{w0, 0.0, Wedge::I};
            const IntegralResult r = coincidence_correlated(dv, band, a, cfg.spec);
            row.values.push_back(r.value.real() / a2);
            row.converged = row.converged && r.converged;
        }
        table.rows[i] = std::move(row);
    });
    return table;
}

}  // namespace unruh
