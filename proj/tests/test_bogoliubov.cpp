#include <doctest.h>

#include <cmath>
#include <random>

#include "unruh/bogoliubov.hpp"
#include "unruh/sweep.hpp"

using namespace unruh;

namespace {
const AccelerationParam a1{1.0};
QuadratureSpec spec1() { return QuadratureSpec::defaults_for(a1); }
}  // namespace

TEST_CASE("alpha_closed examples") {
    CHECK(alpha_closed(1.0, -1.0, a1, false) == cdouble{0.0, 0.0});
    CHECK(alpha_closed(-2.0, 0.5, a1, false) == cdouble{0.0, 0.0});

    // |alpha|^2 = e^pi |Gamma(i)|^2 / (4 pi^2) = e^pi / (4 pi^2) * pi/sinh(pi)
    const double expected = std::exp(M_PI) / (4.0 * M_PI * M_PI) * M_PI / std::sinh(M_PI);
    CHECK(std::norm(alpha_closed(1.0, 1.0, a1, false)) ==
          doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(alpha_closed(0.0, 1.0, a1, false), ZeroWavevectorError);
}

TEST_CASE("beta_closed examples and thermal law") {
    const double b2 = std::norm(beta_closed(1.0, 1.0, a1, false));
    CHECK(b2 == doctest::Approx(1.0 / (2.0 * M_PI * std::expm1(2.0 * M_PI))).epsilon(1e-12));

    CHECK(beta_closed(1.0, -1.0, a1, false) == cdouble{0.0, 0.0});

    std::mt19937 rng(42u);
    std::uniform_real_distribution<double> logd(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double k = std::copysign(std::pow(10.0, logd(rng)), logd(rng));
        const double K = std::copysign(std::pow(10.0, logd(rng)), k);  // parallel sector
        const AccelerationParam a{std::pow(10.0, 0.5 * logd(rng))};
        const double law = std::norm(beta_closed(k, K, a, false)) * 2.0 * M_PI * a.value() *
                           std::abs(k) * std::expm1(2.0 * M_PI * std::abs(K) / a.value());
        CHECK(std::abs(law - 1.0) < 1e-10);
    }
}

TEST_CASE("ratio law |alpha/beta|^2 = e^{2 pi |K|/a}") {
    for (double K : {0.3, 1.0, 2.5}) {
        const double ratio = std::norm(alpha_closed(0.7, K, a1, false)) /
                             std::norm(beta_closed(0.7, K, a1, false));
        CHECK(ratio == doctest::Approx(std::exp(2.0 * M_PI * K)).epsilon(1e-12));
        // |alpha|^2 - |beta|^2 = |beta|^2 (e^{2 pi |K|/a} - 1)
        const double lhs = std::norm(alpha_closed(0.7, K, a1, false)) -
                           std::norm(beta_closed(0.7, K, a1, false));
        const double rhs = std::norm(beta_closed(0.7, K, a1, false)) * std::expm1(2.0 * M_PI * K);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("wedge II selection rule flips") {
    const BogoliubovPair p = bogoliubov_wedge2(1.0, -1.0, a1, false);
    CHECK(std::abs(p.alpha) > 0.0);
    CHECK(std::abs(p.beta) > 0.0);

    const BogoliubovPair zero = bogoliubov_wedge2(1.0, 1.0, a1, false);
    CHECK(zero.alpha == cdouble{0.0, 0.0});

    // |beta^II_{k,-K}| = |beta^I_{k,K}|
    CHECK(std::abs(bogoliubov_wedge2(1.0, -1.0, a1, false).beta) ==
          doctest::Approx(std::abs(beta_closed(1.0, 1.0, a1, false))).epsilon(1e-12));
}

TEST_CASE("bogoliubov_numeric cross-checks the closed forms") {
    // epsilon = 1e-3 keeps the regulator bias well inside the 1% gate;
    // the oscillation count scales like 1/epsilon, hence the budget.
    QuadratureSpec spec = spec1();
    spec.epsilon_reg = 1e-3;
    spec.x0 = 1e-4;
    spec.max_subdivisions = 40000;
    const NumericBogoliubov n = bogoliubov_numeric(1.0, 1.0, a1, Wedge::I, spec);
    REQUIRE(n.converged);

    const cdouble ac = alpha_closed(1.0, 1.0, a1, false);
    const cdouble bc = beta_closed(1.0, 1.0, a1, false);

    // alpha agrees in full phase; the defining integral evaluates to the
    // opposite sign of the printed beta (moduli agree).
    CHECK(std::abs(n.pair.alpha - ac) <= 0.01 * std::abs(ac));
    CHECK(std::abs(n.pair.beta + bc) <= 0.01 * std::abs(bc));
    CHECK(std::abs(std::abs(n.pair.beta) - std::abs(bc)) <= 0.01 * std::abs(bc));

    SUBCASE("wedge II") {
        const NumericBogoliubov m = bogoliubov_numeric(1.0, -1.0, a1, Wedge::II, spec);
        REQUIRE(m.converged);
        const BogoliubovPair closed = bogoliubov_wedge2(1.0, -1.0, a1, false);
        CHECK(std::abs(m.pair.alpha + closed.alpha) <= 0.01 * std::abs(closed.alpha));
        CHECK(std::abs(m.pair.beta - closed.beta) <= 0.01 * std::abs(closed.beta));
    }

    SUBCASE("halving x0 leaves the Gamma part stable") {
        QuadratureSpec half = spec;
        half.x0 = spec.x0 / 2.0;
        const NumericBogoliubov m = bogoliubov_numeric(1.0, 1.0, a1, Wedge::I, half);
        CHECK(std::abs(m.pair.alpha - n.pair.alpha) <= 1e-3 * std::abs(n.pair.alpha));
        // the raw integral moves by the f-term phase change
        const cdouble raw_n = n.pair.alpha + n.pair.f_term;
        const cdouble raw_m = m.pair.alpha + m.pair.f_term;
        CHECK(std::abs(raw_m - raw_n) > 10.0 * std::abs(m.pair.alpha - n.pair.alpha));
    }
}

TEST_CASE("numeric ratio law on a log grid") {
    QuadratureSpec spec = spec1();
    spec.epsilon_reg = 1e-3;
    spec.x0 = 1e-4;
    spec.max_subdivisions = 40000;
    for (double k : {0.1, 1.0, 10.0}) {
        for (double K : {0.1, 1.0, 3.0}) {
            const NumericBogoliubov n = bogoliubov_numeric(k, K, a1, Wedge::I, spec);
            REQUIRE(n.converged);
            const double ratio = std::norm(n.pair.alpha) / std::norm(n.pair.beta);
            CHECK(std::abs(ratio / std::exp(2.0 * M_PI * K) - 1.0) < 0.02);
        }
    }
}

TEST_CASE("K = 0 paths are rejected or flagged") {
    CHECK_THROWS_AS(bogoliubov_numeric(1.0, 0.0, a1, Wedge::I, spec1()), ZeroWavevectorError);
    const auto r =
        integrate_power_phase(1.0, 0.0, a1, Direction::right, PhaseWeight::inverse_x, spec1());
    CHECK_FALSE(r.converged);
}

TEST_CASE("unruh_mode_coefficients") {
    const UnruhWeights big = unruh_mode_coefficients(50.0, Wedge::I, a1);
    CHECK(big.same_wedge == doctest::Approx(1.0));
    CHECK(big.cross_conjugate == doctest::Approx(0.0));

    const UnruhWeights w = unruh_mode_coefficients(1.0, Wedge::I, a1);
    const double norm = std::sqrt(1.0 - std::exp(-2.0 * M_PI));
    CHECK(w.same_wedge == doctest::Approx(1.0 / norm).epsilon(1e-14));
    CHECK(w.cross_conjugate == doctest::Approx(std::exp(-M_PI) / norm).epsilon(1e-14));
}

TEST_CASE("Unruh modes have no negative-frequency Minkowski content") {
    // (u*_{k,M}, U_{K,I}) = beta^I_{kK} - e^{-pi|K|/a} conj(alpha^II_{k,-K})
    // from the defining integrals; the residual must be far below the
    // positive-frequency overlap scale.
    QuadratureSpec spec = spec1();
    spec.epsilon_reg = 1e-3;
    spec.x0 = 1e-4;
    spec.max_subdivisions = 40000;
    const double K = 1.0;
    const double w = std::exp(-M_PI * K);
    const double norm = std::sqrt(1.0 - w * w);

    double max_neg = 0.0;
    double max_pos = 0.0;
    for (double k : {0.2, 0.5, 1.0, 2.0, 5.0}) {
        const NumericBogoliubov one = bogoliubov_numeric(k, K, a1, Wedge::I, spec);
        const NumericBogoliubov two = bogoliubov_numeric(k, -K, a1, Wedge::II, spec);
        REQUIRE(one.converged);
        REQUIRE(two.converged);
        const double neg = std::abs(one.pair.beta - w * std::conj(two.pair.alpha)) / norm;
        const double pos = std::abs(one.pair.alpha - w * std::conj(two.pair.beta)) / norm;
        max_neg = std::max(max_neg, neg);
        max_pos = std::max(max_pos, pos);
    }
    CHECK(max_neg < 1e-3 * max_pos);
}

TEST_CASE("vacuum pair distribution") {
    const PairDistribution d = vacuum_pair_distribution(1.0, a1);

    SUBCASE("geometric law and normalization") {
        double sum = 0.0;
        for (int n = 0; n < 60; ++n) sum += d.pmf(n);
        CHECK(std::abs(sum - 1.0) < 1e-12);
        for (int n = 0; n < 10; ++n)
            CHECK(d.pmf(n + 1) / d.pmf(n) == doctest::Approx(d.ratio).epsilon(1e-13));
        CHECK(d.pmf(0) == doctest::Approx(1.0 - std::exp(-2.0 * M_PI)).epsilon(1e-14));
    }

    SUBCASE("Bose-Einstein mean at the Unruh temperature") {
        for (double K : {0.2, 1.0, 4.0}) {
            const PairDistribution p = vacuum_pair_distribution(K, a1);
            CHECK(std::abs(p.mean() - 1.0 / std::expm1(2.0 * M_PI * K)) < 1e-12);
        }
    }
}

TEST_CASE("VacuumModel discretization covers the thermal range") {
    const VacuumModel vm = VacuumModel::defaults_for(a1);
    CHECK(vm.boltzmann_ratio(1) > 0.5);
    CHECK(vm.boltzmann_ratio(vm.j_max()) < 1e-10);
    for (int j : {1, 5, 40}) {
        const double c = vm.normalization(j);
        CHECK(c * c == doctest::Approx(1.0 - vm.boltzmann_ratio(j)).epsilon(1e-14));
    }
    CHECK(vm.mode(-3) == doctest::Approx(-vm.mode(3)));
    CHECK_THROWS_AS(vm.mode(0), std::out_of_range);
}

TEST_CASE("Unruh temperature and SI conversions") {
    CHECK(unruh_temperature(AccelerationParam{2.0 * M_PI}) == doctest::Approx(1.0));
    CHECK(unruh_temperature(AccelerationParam{2.0}) ==
          doctest::Approx(2.0 * unruh_temperature(a1)).epsilon(1e-14));

    // T_U = 1 K from a = 2 pi c k_B / hbar; round trip through both helpers
    const double acc = acceleration_for_temperature(1.0);
    CHECK(acc == doctest::Approx(2.466e20).epsilon(1e-3));
    const SiConversion si = si_conversions(acc);
    CHECK(si.temperature_kelvin == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(si.acceleration_frequency_hz == doctest::Approx(acc / 2.99792458e8).epsilon(1e-12));
}
