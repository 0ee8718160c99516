#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <tuple>
#include <vector>

#include "fluxlat/errors.hpp"
#include "fluxlat/pulseopt.hpp"

using namespace fluxlat;

TEST_CASE("simplex search lands on a quadratic minimum") {
    auto f = [](double x, double y) {
        return (x - 1.3) * (x - 1.3) + 2.0 * (y + 0.4) * (y + 0.4) + 5.0;
    };
    NmResult r = nelder_mead_2(f, 0.0, 0.0, 0.5, 0.5);
    CHECK(r.converged);
    CHECK(r.x0 == doctest::Approx(1.3).epsilon(1e-4));
    CHECK(r.x1 == doctest::Approx(-0.4).epsilon(1e-4));
    CHECK(r.value == doctest::Approx(5.0).epsilon(1e-8));
}

TEST_CASE("simplex search reports the best point it ever evaluated") {
    std::vector<std::tuple<double, double, double>> seen;
    auto f = [&](double x, double y) {
        const double v = std::cos(3.0 * x) + 0.1 * x * x + y * y;
        seen.emplace_back(x, y, v);
        return v;
    };
    NmResult r = nelder_mead_2(f, 2.0, 1.0, 0.7, 0.7, 1e-6, 120);
    double best = std::get<2>(seen[0]);
    double bx = std::get<0>(seen[0]), by = std::get<1>(seen[0]);
    for (const auto& [x, y, v] : seen)
        if (v < best) {
            best = v;
            bx = x;
            by = y;
        }
    CHECK(r.value == best);
    CHECK(r.x0 == bx);
    CHECK(r.x1 == by);
    CHECK(r.evaluations == static_cast<int>(seen.size()));
}

TEST_CASE("simplex search honors its evaluation budget") {
    auto f = [](double x, double y) { return x * x + y * y; };
    NmResult r = nelder_mead_2(f, 3.0, 3.0, 1.0, 1.0, 1e-15, 5);
    CHECK_FALSE(r.converged);
    CHECK(r.evaluations >= 3);
    CHECK(r.evaluations <= 5);

    CHECK_THROWS_AS(nelder_mead_2(f, 0, 0, 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(nelder_mead_2(f, 0, 0, 1.0, 1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(nelder_mead_2(f, 0, 0, 1.0, 1.0, 1e-6, 2), ValidationError);
}

TEST_CASE("calibration at the reference operating point") {
    const double gap = 0.1, zz = 2e-4, tau = 66.0;
    ReducedModel m = build_cz_spectator_model(gap, zz);
    const double a0 = amplitude_for_area(1.0, tau);

    // the uncalibrated full-area pulse, for the never-worse guarantee
    GateReport raw = gate_error(propagate(m, make_pulse(a0, tau)), m.u_ideal,
                                m.comp_labels);

    OptResult res = calibrate(m, tau, a0, 0.0, m.u_ideal, m.comp_labels);
    CHECK(res.converged);
    CHECK(res.evaluations > 3);
    CHECK(res.report.eps_corrected <= raw.eps_corrected);
    CHECK(res.report.eps_corrected <= res.report.eps_total);
    CHECK(res.report.eps_ph > 0.0);
    CHECK(res.report.eps_ph < 1e-4);
    CHECK(res.report.eps_leak > 1e-6);
    CHECK(res.report.eps_leak < 1e-3);
    CHECK(res.pulse.duration_ns == tau);
    CHECK(res.pulse.amplitude_ghz > 0.5 * a0);
    CHECK(res.pulse.amplitude_ghz < 2.0 * a0);
    CHECK(std::abs(res.pulse.detuning_ghz) < 0.05);

    // conditional phase of the calibrated gate, spectator in |0>:
    // comp label order is (a, b, s), so the s=0 diagonal sits at 0, 2, 4, 6.
    // The optimum balances phase against leakage, leaving an O(10 mrad)
    // conditional-phase residual at this operating point.
    const VectorXcd d = res.report.u_reduced.diagonal();
    const double phi =
        std::arg(d(0) * d(6) * std::conj(d(2)) * std::conj(d(4)));
    CHECK(std::abs(std::abs(phi) - M_PI) < 0.02);
}

TEST_CASE("calibration validates its inputs") {
    ReducedModel m = build_cz_spectator_model(0.1, 0.0);
    CHECK_THROWS_AS(calibrate(m, 5.0, 0.03, 0.0, m.u_ideal, m.comp_labels),
                    ValidationError);
    CHECK_THROWS_AS(calibrate(m, 600.0, 0.03, 0.0, m.u_ideal, m.comp_labels),
                    ValidationError);
    CHECK_THROWS_AS(calibrate(m, 66.0, 0.0, 0.0, m.u_ideal, m.comp_labels),
                    ValidationError);
}

TEST_CASE("spectator sweep fills one calibrated grid point") {
    SweepResult r = spectator_sweep(0.1, {2e-4}, {40.0});
    CHECK(r.scenario == "spectator-error");
    REQUIRE(r.axes.size() == 2);
    CHECK(r.axes[0].name == "tau_ns");
    CHECK(r.axes[1].name == "zeta_cs_ghz");
    REQUIRE(r.points() == 1);
    CHECK(r.column("status")[0] == 0.0);
    CHECK(r.column("converged")[0] == 1.0);
    CHECK(r.column("evaluations")[0] > 3.0);
    CHECK(r.column("eps_corrected")[0] < 1e-3);
    CHECK(r.column("eps_leak")[0] > 0.0);
    const double a0 = amplitude_for_area(1.0, 40.0);
    CHECK(r.column("amplitude_ghz")[0] > 0.5 * a0);
    CHECK(r.column("amplitude_ghz")[0] < 2.0 * a0);

    CHECK_THROWS_AS(spectator_sweep(0.0, {1e-4}, {40.0}), ValidationError);
    CHECK_THROWS_AS(spectator_sweep(0.1, {}, {40.0}), ValidationError);
    CHECK_THROWS_AS(spectator_sweep(0.1, {1e-4}, {}), ValidationError);
}
