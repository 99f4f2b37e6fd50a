// Times the serial reference sweep against the OpenMP sweep on the fig5
// and fig4 grids and reports speedup plus a max-difference check.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "unruh/datasets.hpp"

namespace {

using namespace unruh;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

double max_abs_diff(const CsvTable& a, const CsvTable& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t j = 0; j < a.rows[i].values.size(); ++j)
            m = std::max(m, std::abs(a.rows[i].values[j] - b.rows[i].values[j]));
    return m;
}

template <typename Builder>
void bench(const char* name, RunConfig cfg, Builder build) {
    cfg.mode = ExecMode::serial;
    auto t0 = clock_type::now();
    const CsvTable serial = build(cfg);
    const double ts = seconds_since(t0);

    cfg.mode = ExecMode::openmp;
    t0 = clock_type::now();
    const CsvTable parallel = build(cfg);
    const double tp = seconds_since(t0);

    std::printf("%-6s rows=%zu  serial %.3fs  openmp %.3fs  speedup %.2fx  max|diff| %.3g\n",
                name, serial.rows.size(), ts, tp, ts / tp, max_abs_diff(serial, parallel));
}

}  // namespace

int main() {
    RunConfig f5 = fig5_defaults(1.0);
    bench("fig5", f5, fig5_dataset);

    RunConfig f4 = fig4_defaults(1.0);
    f4.grid_min = -2.0;
    f4.grid_max = 2.0;
    bench("fig4", f4, fig4_dataset);
    return 0;
}
