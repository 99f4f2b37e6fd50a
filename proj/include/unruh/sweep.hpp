#ifndef UNRUH_SWEEP_HPP
#define UNRUH_SWEEP_HPP

#include <cstddef>

namespace unruh {

// Grid sweeps are embarrassingly parallel: every index writes its own
// slot, so serial and OpenMP execution produce identical results. The
// serial path is kept as the reference implementation for tests and the
// benchmark target.
enum class ExecMode { serial, openmp };

template <typename Fn>
void sweep(std::size_t n, ExecMode mode, Fn&& fn) {
#ifdef _OPENMP
    if (mode == ExecMode::openmp) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace unruh

#endif
