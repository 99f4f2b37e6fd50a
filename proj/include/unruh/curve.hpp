#ifndef UNRUH_CURVE_HPP
#define UNRUH_CURVE_HPP

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace unruh {

// CSV-facing sampled result: one complex value with its error estimate
// per abscissa, rows sorted by abscissa.
struct SampledCurve {
    struct Row {
        double abscissa;
        double value_re;
        double value_im;
        double abs_value;
        double error_estimate;
        bool converged;
    };
    std::vector<Row> rows;

    void add(double abscissa, std::complex<double> value, double error, bool converged);
    bool all_converged() const;
};

// General figure dataset: named numeric columns plus a trailing converged
// flag per row. Written as CSV with a leading '#' config line.
struct CsvTable {
    std::string config_comment;
    std::vector<std::string> columns;  // excluding the trailing "converged"
    struct Row {
        std::vector<double> values;
        bool converged;
    };
    std::vector<Row> rows;

    bool all_converged() const;
};

// Deterministic formatting: %.12g per cell, converged as 0/1.
void write_csv(std::ostream& os, const CsvTable& table);

}  // namespace unruh

#endif
