#include "unruh/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace unruh {

void SampledCurve::add(double abscissa, std::complex<double> value, double error,
                       bool converged) {
    rows.push_back({abscissa, value.real(), value.imag(),
                    std::hypot(value.real(), value.imag()), error, converged});
}

bool SampledCurve::all_converged() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.converged; });
}

bool CsvTable::all_converged() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.converged; });
}

namespace {

std::string format_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

void write_csv(std::ostream& os, const CsvTable& table) {
    if (!table.config_comment.empty()) os << "# " << table.config_comment << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ',';
        os << table.columns[i];
    }
    os << ",converged\n";
    for (const CsvTable::Row& row : table.rows) {
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            if (i) os << ',';
            os << format_cell(row.values[i]);
        }
        os << ',' << (row.converged ? 1 : 0) << "\n";
    }
}

}  // namespace unruh
