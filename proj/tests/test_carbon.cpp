// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "nofade/carbon.hpp"
#include "nofade/errors.hpp"
#include "test_util.hpp"

using namespace nofade;
using testutil::TempDir;

namespace {

const char* kDbText =
    "# name | tdp_watts | peak_flops | source\n"
    "V100 | 250 | 1.40e13 | datasheet\n"
    "\n"
    "GTX 1080 Ti | 250 | 1.13e13 | datasheet\n";

}  // namespace

TEST_CASE("watt per flop is tdp over peak throughput") {
    GpuSpec spec;
    spec.name = "unit";
    spec.tdp_watts = 250.0;
    spec.peak_flops = 1.25e13;
    CHECK(watt_per_flop(spec) == 2.0e-11);

    spec.peak_flops = 0.0;
    CHECK_THROWS_AS(watt_per_flop(spec), ValidationError);
}

TEST_CASE("power draw multiplies flops, rate and hours") {
    CHECK(power_draw(1.0e9, 2.5e-10, 0.0, 100.0) == 25.0);
    CHECK(power_draw(1.0e9, 2.0e-10, 0.5e-10, 100.0) == 25.0);
    CHECK(power_draw(5.0, 1.0, 1.0, 0.0) == 0.0);
}

TEST_CASE("power draw validates its inputs") {
    CHECK_THROWS_AS(power_draw(0.0, 1e-11, 1e-11, 10.0), ValidationError);
    CHECK_THROWS_AS(power_draw(-1.0, 1e-11, 1e-11, 10.0), ValidationError);
    CHECK_THROWS_AS(power_draw(1e9, -1e-11, 1e-11, 10.0), ValidationError);
    CHECK_THROWS_AS(power_draw(1e9, 1e-11, 1e-11, -1.0), ValidationError);
}

TEST_CASE("one kilowatt-hour converts exactly at the default intensity") {
    const CarbonConfig config;
    CHECK(config.intensity_t_per_kwh == 0.707e-3);
    CHECK(co2_emissions(1000.0, config.intensity_t_per_kwh) == 7.07e-4);
}

TEST_CASE("emissions validate their inputs") {
    CHECK_THROWS_AS(co2_emissions(-1.0, 0.707e-3), ValidationError);
    CHECK_THROWS_AS(co2_emissions(10.0, -0.1), ValidationError);
    CHECK(co2_emissions(0.0, 0.707e-3) == 0.0);
}

TEST_CASE("energy and emissions scale linearly in every factor") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> flops(1e6, 1e12);
    std::uniform_real_distribution<double> rate(1e-12, 1e-9);
    std::uniform_real_distribution<double> hours(0.1, 5000.0);
    std::uniform_real_distribution<double> intensity(1e-5, 1e-2);
    for (int trial = 0; trial < 1000; ++trial) {
        const double f = flops(rng);
        const double wg = rate(rng);
        const double wc = rate(rng);
        const double h = hours(rng);
        const double base = power_draw(f, wg, wc, h);

        CHECK(power_draw(2.0 * f, wg, wc, h) == doctest::Approx(2.0 * base).epsilon(1e-15));
        CHECK(power_draw(f, 2.0 * wg, 2.0 * wc, h) == doctest::Approx(2.0 * base).epsilon(1e-15));
        CHECK(power_draw(f, wg, wc, 2.0 * h) == doctest::Approx(2.0 * base).epsilon(1e-15));

        const double ci = intensity(rng);
        const double co2 = co2_emissions(base, ci);
        CHECK(co2_emissions(2.0 * base, ci) == doctest::Approx(2.0 * co2).epsilon(1e-15));
        CHECK(co2_emissions(base, 2.0 * ci) == doctest::Approx(2.0 * co2).epsilon(1e-15));
    }
}

TEST_CASE("hardware db parses records and skips comments") {
    TempDir dir("hwdb");
    testutil::spew(dir.path / "hw.db", kDbText);
    const HardwareDb db = HardwareDb::load(dir.path / "hw.db");
    REQUIRE(db.specs().size() == 2);

    const GpuSpec& v100 = db.find("V100");
    CHECK(v100.tdp_watts == 250.0);
    CHECK(v100.peak_flops == 1.40e13);
    CHECK(v100.source == "datasheet");
    CHECK(db.find("GTX 1080 Ti").peak_flops == 1.13e13);
}

TEST_CASE("unknown gpu lookup lists what the db knows") {
    TempDir dir("hwdb-miss");
    testutil::spew(dir.path / "hw.db", kDbText);
    const HardwareDb db = HardwareDb::load(dir.path / "hw.db");
    CHECK_THROWS_WITH_AS(db.find("A100"), doctest::Contains("V100"), LookupError);
}

TEST_CASE("hardware db reports bad lines by number") {
    TempDir dir("hwdb-bad");
    testutil::spew(dir.path / "hw.db", "# header\nV100 | 250 | 1.4e13 | ok\nbroken line\n");
    CHECK_THROWS_WITH_AS(HardwareDb::load(dir.path / "hw.db"), doctest::Contains(":3:"),
                         ConfigError);

    testutil::spew(dir.path / "neg.db", "V100 | -5 | 1.4e13 | bad tdp\n");
    CHECK_THROWS_AS(HardwareDb::load(dir.path / "neg.db"), ConfigError);

    testutil::spew(dir.path / "dup.db",
                   "V100 | 250 | 1.4e13 | a\nV100 | 300 | 1.5e13 | b\n");
    CHECK_THROWS_WITH_AS(HardwareDb::load(dir.path / "dup.db"), doctest::Contains("duplicate"),
                         ConfigError);

    CHECK_THROWS_AS(HardwareDb::load(dir.path / "missing.db"), IoError);
}

TEST_CASE("estimating a record combines lookup, draw and intensity") {
    TempDir dir("hwdb-est");
    testutil::spew(dir.path / "hw.db", kDbText);
    const HardwareDb db = HardwareDb::load(dir.path / "hw.db");

    ModelRecord rec;
    rec.model = "m";
    rec.dataset = "d";
    rec.gpu_type = "V100";
    rec.flops = 3.4e9;
    rec.gpu_hours = 96.0;

    const CarbonConfig config;
    const CarbonEstimate est = estimate_carbon(rec, db, config);
    CHECK(est.gpu_watt_per_flop == 250.0 / 1.40e13);
    CHECK(est.cpu_watt_per_flop == 1.0e-11);

    const long double oracle_wh = 3.4e9L * (250.0L / 1.40e13L + 1.0e-11L) * 96.0L;
    CHECK(est.power_wh == doctest::Approx(static_cast<double>(oracle_wh)).epsilon(1e-14));
    CHECK(est.co2_tonnes ==
          doctest::Approx(static_cast<double>(oracle_wh / 1000.0L * 0.707e-3L)).epsilon(1e-14));

    rec.gpu_type = "unknown-gpu";
    CHECK_THROWS_AS(estimate_carbon(rec, db, config), LookupError);
}
