#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fluxlat/circuit.hpp"
#include "fluxlat/errors.hpp"
#include "oracles.hpp"

using namespace fluxlat;

namespace {

ElementParams fluxonium_a() {
    ElementParams p;
    p.kind = ElementKind::Fluxonium;
    p.ec_ghz = 1.0;
    p.ej_ghz = 4.0;
    p.el_ghz = 0.8;
    return p;
}

}  // namespace

TEST_CASE("phase-grid oracle reproduces the harmonic limit") {
    // with E_J = 0 the fluxonium is a plain oscillator: f_k = k sqrt(8 Ec El)
    const double f1 = std::sqrt(8.0 * 1.0 * 0.8);
    auto levels = oracles::fd_fluxonium(1.0, 0.0, 0.8, std::numbers::pi, 4);
    for (int k = 1; k < 4; ++k) CHECK(levels[k] == doctest::Approx(k * f1).epsilon(1e-7));
}

TEST_CASE("fluxonium spectrum matches the independent phase-grid solver") {
    ElementSpectrum s = build_element(fluxonium_a());
    auto ref = oracles::fd_fluxonium(1.0, 4.0, 0.8, std::numbers::pi, 4);
    for (int k = 1; k < 4; ++k)
        CHECK(s.frequencies(k) == doctest::Approx(ref[k]).epsilon(2e-6));

    // pinned values from the same solver, so regressions show up even if the
    // oracle drifts with it
    CHECK(s.transition(0, 1) == doctest::Approx(0.424040171).epsilon(1e-6));
    CHECK(s.transition(0, 2) == doctest::Approx(3.906962860).epsilon(1e-6));
    CHECK(s.transition(0, 3) == doctest::Approx(6.199756156).epsilon(1e-6));
    CHECK(s.transition(1, 2) == doctest::Approx(3.482922688).epsilon(1e-6));
}

TEST_CASE("fluxonium away from the sweet spot keeps tracking the oracle") {
    ElementParams p = fluxonium_a();
    p.phi_ext = std::numbers::pi * 0.9;
    ElementSpectrum s = build_element(p);
    auto ref = oracles::fd_fluxonium(1.0, 4.0, 0.8, p.phi_ext, 3);
    CHECK(s.frequencies(1) == doctest::Approx(ref[1]).epsilon(2e-6));
    CHECK(s.frequencies(2) == doctest::Approx(ref[2]).epsilon(2e-6));
}

TEST_CASE("sweet-spot parity forbids even-even and odd-odd charge elements") {
    ElementSpectrum s = build_element(fluxonium_a());
    // at phi_ext = pi the potential is even, so eigenstates have definite
    // parity and n (odd operator) only connects opposite parities
    CHECK(std::abs(s.n_elems(0, 2)) < 1e-8);
    CHECK(std::abs(s.n_elems(1, 3)) < 1e-8);
    CHECK(std::abs(s.n_elems(0, 0)) < 1e-8);
    CHECK(std::abs(s.n_elems(0, 1)) == doctest::Approx(0.122048).epsilon(1e-4));
    CHECK(std::abs(s.n_elems(1, 2)) == doctest::Approx(0.567351).epsilon(1e-4));
    CHECK(std::abs(s.n_elems(0, 3)) == doctest::Approx(0.411739).epsilon(1e-4));
}

TEST_CASE("basis doubling leaves the retained spectrum unchanged") {
    ElementParams p = fluxonium_a();
    ElementSpectrum s1 = build_element(p);
    p.basis_dim = 2 * default_basis_dim(ElementKind::Fluxonium);
    ElementSpectrum s2 = build_element(p);
    for (int k = 1; k < 4; ++k)
        CHECK(std::abs(s1.frequencies(k) - s2.frequencies(k)) /
                  s2.frequencies(k) <
              1e-7);
}

TEST_CASE("oscillator ladder is exact") {
    ElementParams p;
    p.kind = ElementKind::Oscillator;
    p.ec_ghz = 0.25;
    p.el_ghz = 12.5;
    p.keep_levels = 5;
    ElementSpectrum s = build_element(p);
    const double f1 = std::sqrt(8.0 * 0.25 * 12.5);
    for (int k = 1; k < 5; ++k)
        CHECK(s.frequencies(k) == doctest::Approx(k * f1).epsilon(1e-12));
    // charge element of the harmonic ladder: |<0|n|1>| = (El / (32 Ec))^(1/4)
    CHECK(std::abs(s.n_elems(0, 1)) ==
          doctest::Approx(std::pow(12.5 / (32.0 * 0.25), 0.25)).epsilon(1e-10));
}

TEST_CASE("transmon approaches the oscillator asymptotics at deep E_J") {
    ElementParams p;
    p.kind = ElementKind::Transmon;
    p.ec_ghz = 0.2;
    p.ej_ghz = 20.0;  // E_J / E_C = 100
    ElementSpectrum s = build_element(p);
    const double plasma = std::sqrt(8.0 * 0.2 * 20.0) - 0.2;
    CHECK(s.transition(0, 1) == doctest::Approx(plasma).epsilon(0.01));
    // anharmonicity close to -E_C in the same regime
    const double anharm = s.transition(1, 2) - s.transition(0, 1);
    CHECK(anharm == doctest::Approx(-0.2).epsilon(0.15));
}

TEST_CASE("transmon E_J tuner hits the requested frequency") {
    ElementParams p;
    p.kind = ElementKind::Transmon;
    p.ec_ghz = 0.2;
    p.ej_ghz = 20.0;
    const double ej = tune_transmon_ej(p, 5.0);
    CHECK(ej == doctest::Approx(16.955840).epsilon(1e-4));
    p.ej_ghz = ej;
    ElementSpectrum s = build_element(p);
    CHECK(s.transition(0, 1) == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(s.transition(1, 2) - s.transition(0, 1) ==
          doctest::Approx(-0.2211).epsilon(1e-3));
    CHECK(std::abs(s.n_elems(0, 1)) == doctest::Approx(1.2498).epsilon(1e-3));
}

TEST_CASE("element validation rejects unusable parameters") {
    ElementParams p = fluxonium_a();
    p.ec_ghz = 0.0;
    CHECK_THROWS_AS(build_element(p), ValidationError);

    p = fluxonium_a();
    p.keep_levels = 200;
    p.basis_dim = 40;
    CHECK_THROWS_AS(build_element(p), ValidationError);

    ElementParams t;
    t.kind = ElementKind::Transmon;
    t.ec_ghz = 0.2;
    t.ej_ghz = -1.0;
    CHECK_THROWS_AS(build_element(t), ValidationError);
}
