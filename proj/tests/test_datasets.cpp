#include <doctest.h>

#include <cmath>
#include <sstream>

#include "unruh/datasets.hpp"

using namespace unruh;

TEST_CASE("fig3 dataset") {
    RunConfig cfg = fig3_defaults(1.0);
    cfg.grid_min = -4.0;
    cfg.grid_max = 4.0;
    cfg.grid_step = 0.5;
    const CsvTable t = fig3_dataset(cfg);

    SUBCASE("column contract") {
        REQUIRE(t.columns.size() == 5);
        CHECK(t.columns[0] == "K_over_a");
        CHECK(t.columns[1] == "abs_pos");
        CHECK(t.columns[2] == "abs_neg");
        CHECK(t.columns[3] == "arg_pos");
        CHECK(t.columns[4] == "arg_neg");
        std::ostringstream os;
        write_csv(os, t);
        const std::string s = os.str();
        CHECK(s.rfind("# fig3", 0) == 0);
        CHECK(s.find("K_over_a,abs_pos,abs_neg,arg_pos,arg_neg,converged\n") !=
              std::string::npos);
    }

    SUBCASE("K = 0 row is dropped, neighbors blow up as |K|^{-1/2}") {
        CHECK(t.rows.size() == 16);  // 17 grid points minus the origin
        for (const auto& row : t.rows) CHECK(row.values[0] != 0.0);
        // plateau at the right edge
        const auto& last = t.rows.back();
        CHECK(last.values[1] == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(0.01));
        // args in (-pi, pi]
        for (const auto& row : t.rows) {
            CHECK(row.values[3] <= M_PI);
            CHECK(row.values[3] > -M_PI);
        }
    }

    SUBCASE("serial and parallel sweeps agree exactly") {
        RunConfig serial = cfg;
        serial.mode = ExecMode::serial;
        const CsvTable s = fig3_dataset(serial);
        REQUIRE(s.rows.size() == t.rows.size());
        for (std::size_t i = 0; i < s.rows.size(); ++i)
            for (std::size_t j = 0; j < s.rows[i].values.size(); ++j)
                CHECK(s.rows[i].values[j] == t.rows[i].values[j]);
    }
}

TEST_CASE("fig4 dataset") {
    RunConfig cfg = fig4_defaults(1.0);
    cfg.grid_min = -0.5;
    cfg.grid_max = 0.5;
    cfg.grid_step = 0.1;
    const CsvTable t = fig4_dataset(cfg);
    REQUIRE(t.rows.size() == 11);

    SUBCASE("wedge-I alpha peaks at zero abscissa") {
        double best = 0.0;
        double best_s = 99.0;
        for (const auto& row : t.rows)
            if (std::abs(row.values[1]) > best) {
                best = std::abs(row.values[1]);
                best_s = row.values[0];
            }
        CHECK(std::abs(best_s) <= cfg.grid_step / 2.0);
    }

    SUBCASE("wedge II negates wedge I") {
        for (const auto& row : t.rows) {
            CHECK(row.values[3] == doctest::Approx(-row.values[1]).epsilon(1e-9));
            CHECK(row.values[4] == doctest::Approx(-row.values[2]).epsilon(1e-9));
        }
    }

    SUBCASE("starved subdivision budget flags rows but still emits values") {
        RunConfig starved = cfg;
        starved.grid_min = 0.0;
        starved.grid_max = starved.grid_step;
        starved.spec.max_subdivisions = 3;
        const CsvTable s = fig4_dataset(starved);
        REQUIRE(s.rows.size() == 2);
        CHECK_FALSE(s.rows[0].converged);
        CHECK(std::isfinite(s.rows[0].values[1]));
    }
}

TEST_CASE("fig5 dataset") {
    RunConfig cfg = fig5_defaults(1.0);
    cfg.grid_min = -3.0;
    cfg.grid_max = 3.0;
    cfg.grid_step = 0.5;
    const CsvTable t = fig5_dataset(cfg);
    REQUIRE(t.columns.size() == 6);
    CHECK(t.columns[1] == "one_pair");
    CHECK(t.columns[2] == "r_omega0_0.01");
    CHECK(t.columns[5] == "r_omega0_0.13");
    REQUIRE(t.rows.size() == 13);

    SUBCASE("one-pair column matches the squared closed form") {
        const auto& mid = t.rows[6];
        CHECK(mid.values[0] == doctest::Approx(0.0));
        CHECK(mid.values[1] ==
              doctest::Approx(1.0 / (4.0 * std::pow(M_PI, 4))).epsilon(1e-10));
    }

    SUBCASE("curves are even and peak at dv = 0") {
        for (std::size_t c = 1; c < 6; ++c) {
            for (std::size_t i = 0; i < t.rows.size(); ++i) {
                const auto& mirror = t.rows[t.rows.size() - 1 - i];
                CHECK(t.rows[i].values[c] ==
                      doctest::Approx(mirror.values[c]).epsilon(1e-9));
                CHECK(t.rows[i].values[c] <= t.rows[6].values[c] * (1.0 + 1e-12));
            }
        }
    }

    SUBCASE("cutoff ordering at the peak") {
        const auto& mid = t.rows[6];
        CHECK(mid.values[2] > mid.values[3]);
        CHECK(mid.values[3] > mid.values[4]);
        CHECK(mid.values[4] > mid.values[5]);
    }

    SUBCASE("identical config gives byte-identical CSV") {
        std::ostringstream first, second;
        write_csv(first, t);
        write_csv(second, fig5_dataset(cfg));
        CHECK(first.str() == second.str());
    }
}

TEST_CASE("RunConfig validation") {
    RunConfig cfg = fig5_defaults(1.0);
    cfg.grid_step = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = fig5_defaults(1.0);
    cfg.grid_max = cfg.grid_min;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = fig5_defaults(1.0);
    cfg.omega0_list.clear();
    CHECK_THROWS_AS(fig5_dataset(cfg), std::invalid_argument);
}
