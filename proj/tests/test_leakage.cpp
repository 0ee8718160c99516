#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fluxlat/errors.hpp"
#include "fluxlat/leakage.hpp"

using namespace fluxlat;

namespace {

// a hand-tuned 66 ns CZ pulse near the gap-0.1 calibration point; the map
// tests only need a fixed, reasonable drive
PulseSpec map_pulse() { return make_pulse(0.028, 66.0, -0.004); }

}  // namespace

TEST_CASE("resonance margin is the sum of the two detunings") {
    CHECK(czz_resonance_margin(4.0, 3.5, 3.0, 3.2) ==
          doctest::Approx(0.3).epsilon(1e-15));
    CHECK(czz_resonance_margin(6.7029, 6.1998, 2.8829, 3.4829) ==
          doctest::Approx(-0.0969).epsilon(1e-9));
    CHECK_THROWS_AS(czz_resonance_margin(-1.0, 3.5, 3.0, 3.2), ValidationError);
    CHECK_THROWS_AS(czz_resonance_margin(4.0, 0.0, 3.0, 3.2), ValidationError);
}

TEST_CASE("leakage rate is exactly zero at zero matrix element") {
    const double rate = leakage_rate(0.1, 0.03, 0.0, {1, 1, 0}, map_pulse());
    CHECK(rate == 0.0);
    CHECK_THROWS_AS(leakage_rate(0.1, 0.0, -0.1, {1, 1, 0}, map_pulse()),
                    ValidationError);
}

TEST_CASE("on-resonance leakage grows as k squared") {
    const double r1 = leakage_rate(0.1, 0.0, 1e-3, {0, 0, 0}, map_pulse());
    const double r2 = leakage_rate(0.1, 0.0, 1e-2, {0, 0, 0}, map_pulse());
    CHECK(r1 > 0.0);
    const double ratio = r2 / r1;
    CHECK(ratio > 80.0);
    CHECK(ratio < 120.0);
}

TEST_CASE("channel reporting keeps ordinary rates untouched") {
    LeakageChannel ch = leakage_channel(0.1, 0.0, 1e-2, {0, 0, 0}, map_pulse());
    CHECK(ch.rate == leakage_rate(0.1, 0.0, 1e-2, {0, 0, 0}, map_pulse()));
    CHECK_FALSE(ch.flagged);
    CHECK(ch.k == 1e-2);
    CHECK(ch.delta_ghz == 0.0);
}

TEST_CASE("bucket thresholds sit at the decade boundaries") {
    CHECK(leakage_bucket(0.0) == 0);
    CHECK(leakage_bucket(0.9e-5) == 0);
    CHECK(leakage_bucket(1e-5) == 1);
    CHECK(leakage_bucket(5e-5) == 1);
    CHECK(leakage_bucket(5e-4) == 2);
    CHECK(leakage_bucket(5e-3) == 3);
    CHECK(leakage_bucket(-5e-4) == 2);
}

TEST_CASE("default sources are the two occupied corners and the idle state") {
    const auto sources = default_leakage_sources();
    REQUIRE(sources.size() == 3);
    CHECK(sources[0] == BareLabel{1, 1, 0});
    CHECK(sources[1] == BareLabel{1, 1, 1});
    CHECK(sources[2] == BareLabel{0, 0, 0});
}

TEST_CASE("leakage map lays out sources, k, and delta") {
    SweepResult r =
        leakage_map(0.1, {0.0, 1e-2}, {-0.05, 0.0}, {{1, 1, 0}}, map_pulse());
    CHECK(r.scenario == "leakage-map");
    REQUIRE(r.axes.size() == 3);
    CHECK(r.axes[0].name == "source");
    REQUIRE(r.axes[0].labels.size() == 1);
    CHECK(r.axes[0].labels[0] == "110");
    CHECK(r.axes[1].name == "k");
    CHECK(r.axes[2].name == "delta_ghz");
    REQUIRE(r.points() == 4);

    const auto& rate = r.column("rate");
    const auto& status = r.column("status");
    for (long i = 0; i < 4; ++i) CHECK(status[i] == 0.0);
    // delta is the fastest axis: flat 0,1 are k=0, flat 2,3 are k=1e-2
    CHECK(rate[0] == 0.0);
    CHECK(rate[1] == 0.0);
    CHECK(rate[3] > 0.0);
    CHECK(rate[3] ==
          leakage_channel(0.1, 0.0, 1e-2, {1, 1, 0}, map_pulse()).rate);
    for (long i = 0; i < 4; ++i)
        CHECK(r.column("bucket")[i] == leakage_bucket(rate[i]));
}

TEST_CASE("leakage map validates its grids") {
    CHECK_THROWS_AS(leakage_map(0.1, {}, {0.0}, {{1, 1, 0}}, map_pulse()),
                    ValidationError);
    CHECK_THROWS_AS(leakage_map(0.1, {0.1}, {}, {{1, 1, 0}}, map_pulse()),
                    ValidationError);
    CHECK_THROWS_AS(leakage_map(0.1, {0.1}, {0.0}, {}, map_pulse()),
                    ValidationError);
    CHECK_THROWS_AS(leakage_map(0.1, {-0.1}, {0.0}, {{1, 1, 0}}, map_pulse()),
                    ValidationError);
    CHECK_THROWS_AS(leakage_map(0.0, {0.1}, {0.0}, {{1, 1, 0}}, map_pulse()),
                    ValidationError);
    CHECK_THROWS_AS(leakage_map(0.1, {0.1}, {0.0}, {{1, 2, 0}}, map_pulse()),
                    ValidationError);
}
