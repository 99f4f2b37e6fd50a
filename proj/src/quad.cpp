#include "unruh/quad.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace unruh {

QuadratureSpec QuadratureSpec::defaults_for(AccelerationParam a) {
    QuadratureSpec s;
    s.epsilon_reg = 0.01 * a.value();
    s.x0 = 1e-4 / a.value();
    s.omega0_cutoff = 0.0;
    s.k_max = 50.0 * a.value();
    s.rel_tol = 1e-8;
    s.max_subdivisions = 2000;
    return s;
}

void QuadratureSpec::validate() const {
    if (!(epsilon_reg > 0.0)) throw std::invalid_argument("QuadratureSpec: epsilon_reg must be > 0");
    if (!(x0 > 0.0)) throw std::invalid_argument("QuadratureSpec: x0 must be > 0");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be > 0");
    if (!(omega0_cutoff >= 0.0)) throw std::invalid_argument("QuadratureSpec: omega0_cutoff must be >= 0");
    if (!(k_max > omega0_cutoff)) throw std::invalid_argument("QuadratureSpec: k_max must exceed omega0_cutoff");
    if (max_subdivisions <= 0) throw std::invalid_argument("QuadratureSpec: max_subdivisions must be positive");
}

namespace {

// Kronrod-15 nodes on [0,1] half-interval with K15 weights, plus the
// embedded Gauss-7 weights on the odd-index nodes.
constexpr double kron_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kron_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    cdouble value;
    double error;
    double scale;  // integral of |f|, used as a size reference
};

PanelEstimate gk15(const ComplexIntegrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cdouble k15{0.0, 0.0};
    cdouble g7{0.0, 0.0};
    double resabs = 0.0;
    for (int i = 0; i < 8; ++i) {
        if (kron_x[i] == 0.0) {
            const cdouble fc = f(c);
            k15 += kron_w[i] * fc;
            g7 += gauss_w[3] * fc;
            resabs += kron_w[i] * std::abs(fc);
            continue;
        }
        const cdouble fl = f(c - h * kron_x[i]);
        const cdouble fr = f(c + h * kron_x[i]);
        k15 += kron_w[i] * (fl + fr);
        resabs += kron_w[i] * (std::abs(fl) + std::abs(fr));
        if (i % 2 == 1) g7 += gauss_w[i / 2] * (fl + fr);
    }
    const double err = std::abs(h) * std::abs(k15 - g7);
    return {h * k15, err, std::abs(h) * resabs};
}

struct Interval {
    double lo, hi;
    PanelEstimate est;
    bool operator<(const Interval& o) const { return est.error < o.est.error; }
};

// Absolute floor below which a value counts as numerically zero.
constexpr double kAbsFloor = 1e-12;

IntegralResult adapt_finite(const ComplexIntegrand& f, double lo, double hi,
                            const QuadratureSpec& spec) {
    std::priority_queue<Interval> heap;
    heap.push({lo, hi, gk15(f, lo, hi)});
    cdouble total = heap.top().est.value;
    double err = heap.top().est.error;
    int used = 1;
    auto good = [&] {
        const double mag = std::abs(total);
        return err <= spec.rel_tol * mag || (mag <= kAbsFloor && err <= kAbsFloor);
    };
    while (!good() && used < spec.max_subdivisions) {
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // interval at floating resolution; keep its estimate and stop splitting it
            Interval pinned = worst;
            pinned.est.error = 0.0;
            err -= worst.est.error;
            heap.push(pinned);
            continue;
        }
        const PanelEstimate l = gk15(f, worst.lo, mid);
        const PanelEstimate r = gk15(f, mid, worst.hi);
        total += l.value + r.value - worst.est.value;
        err += l.error + r.error - worst.est.error;
        heap.push({worst.lo, mid, l});
        heap.push({mid, worst.hi, r});
        ++used;
    }
    return {total, err, good()};
}

}  // namespace

IntegralResult integrate_adaptive(const ComplexIntegrand& f, double lo, double hi,
                                  const QuadratureSpec& spec) {
    spec.validate();
    if (!(lo < hi)) throw std::invalid_argument("integrate_adaptive: requires lo < hi");
    const bool lo_inf = std::isinf(lo);
    const bool hi_inf = std::isinf(hi);
    if (!lo_inf && !hi_inf) return adapt_finite(f, lo, hi, spec);
    if (!lo_inf) {
        // x = lo + u/(1-u), u in (0,1)
        auto g = [&f, lo](double u) {
            const double om = 1.0 - u;
            return f(lo + u / om) / (om * om);
        };
        return adapt_finite(g, 0.0, 1.0, spec);
    }
    if (!hi_inf) {
        auto g = [&f, hi](double u) {
            const double om = 1.0 - u;
            return f(hi - u / om) / (om * om);
        };
        return adapt_finite(g, 0.0, 1.0, spec);
    }
    // x = u/(1-u^2), u in (-1,1)
    auto g = [&f](double u) {
        const double d = 1.0 - u * u;
        return f(u / d) * ((1.0 + u * u) / (d * d));
    };
    return adapt_finite(g, -1.0, 1.0, spec);
}

IntegralResult integrate_power_phase(double k, double K, AccelerationParam a, Direction sign,
                                     PhaseWeight weight, const QuadratureSpec& spec) {
    spec.validate();
    if (k == 0.0) throw std::invalid_argument("integrate_power_phase: k must be nonzero");
    if (K == 0.0 && weight == PhaseWeight::inverse_x) {
        // logarithmically divergent as x0 -> 0; no limit exists
        return {cdouble{std::numeric_limits<double>::quiet_NaN(), 0.0}, kquad_inf, false};
    }
    const double av = a.value();
    const double damp = spec.damping_ratio(a) * std::abs(k);
    const double phase_k = sign_of(sign) * k;
    const double pk = K / av;
    auto f = [=](double x) {
        const double mag = std::exp(-damp * x);
        const cdouble ph = std::polar(mag, phase_k * x + pk * std::log(av * x));
        return weight == PhaseWeight::inverse_x ? ph / x : ph;
    };
    return integrate_adaptive(f, spec.x0, kquad_inf, spec);
}

IntegralResult integrate_sqrt_singular(const ComplexIntegrand& f, double hi,
                                       const QuadratureSpec& spec) {
    auto g = [&f](double s) { return 2.0 * s * f(s * s); };
    const double shi = std::isinf(hi) ? kquad_inf : std::sqrt(hi);
    return integrate_adaptive(g, 0.0, shi, spec);
}

namespace {

// Lanczos approximation, g = 7, 9 terms.
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

cdouble gamma_lanczos(cdouble z) {
    z -= 1.0;
    cdouble acc = lanczos_c[0];
    for (int i = 1; i < 9; ++i) acc += lanczos_c[i] / (z + static_cast<double>(i));
    const cdouble t = z + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace

cdouble complex_gamma(cdouble z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw GammaPoleError("complex_gamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        return M_PI / (std::sin(M_PI * z) * gamma_lanczos(1.0 - z));
    }
    return gamma_lanczos(z);
}

}  // namespace unruh
