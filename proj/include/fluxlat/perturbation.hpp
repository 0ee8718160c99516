#pragma once

#include <utility>
#include <vector>

#include "fluxlat/composite.hpp"

namespace fluxlat {

/// Inputs of the closed-form coupler-spectator ZZ approximation for a
/// C_alpha - Q_1 - C_beta - Q_2 chain. The qubit transition pair follows the
/// excited coupler's type: C0 uses the spectator 1-2 and neighbor 0-3
/// transitions, C1 the spectator 0-3 and neighbor 1-2 ones.
struct AnalyticZzInputs {
    int coupler_type = 0;     // 0 or 1, the x in (-1)^x
    int connection_sign = 1;  // +1 symmetric, -1 antisymmetric connection
    double f_ca_01 = 0.0;     // GHz, C_alpha 0-1
    double f_cb_01 = 0.0;     // GHz, C_beta 0-1
    double f_q2_p = 0.0;      // GHz, spectator transition (pair p)
    double f_q1_t = 0.0;      // GHz, neighbor-qubit transition (pair t)
    double n_ca_01 = 0.0;     // matrix-element magnitudes
    double n_cb_01 = 0.0;
    double n_q2_p = 0.0;
    double n_q1_t = 0.0;
    double g = 0.0;  // GHz, couplings: C_alpha-C_beta direct
    double g1 = 0.0; // C_alpha-Q_1
    double g2 = 0.0; // Q_1-C_beta
    double g3 = 0.0; // C_beta-Q_2
    bool has_oscillator = false;
    double g_o = 0.0;  // C-O coupling
    double n_o = 0.0;  // oscillator 0-1 charge element
    double f_o = 0.0;  // oscillator frequency
};

/// Level pairs (p, t) used by the analytic formula for a given coupler type.
std::pair<std::pair<int, int>, std::pair<int, int>> analytic_level_pairs(int coupler_type);

/// Closed-form coupler-spectator ZZ rate in GHz. Throws SingularDenominator
/// when any |f_ca_01 - f_*| falls below 1e-6 GHz.
double zz_cs_analytic(const AnalyticZzInputs& in);

/// Collect AnalyticZzInputs from individually diagonalized elements.
AnalyticZzInputs analytic_inputs(const ElementSpectrum& c_alpha, const ElementSpectrum& q1,
                                 const ElementSpectrum& c_beta, const ElementSpectrum& q2,
                                 int coupler_type, double g, double g1, double g2, double g3,
                                 int connection_sign = 1,
                                 const ElementSpectrum* oscillator = nullptr,
                                 double g_o = 0.0);

/// One perturbative hop: coupling g applied once, moving element_a through
/// levels_a.first -> levels_a.second and element_b likewise.
struct DiagramHop {
    int element_a = 0;
    int element_b = 0;
    std::pair<int, int> levels_a;
    std::pair<int, int> levels_b;
    double g_ghz = 0.0;
};

/// Closed virtual-transition cycle starting and ending in base_state.
struct DiagramPath {
    BareLabel base_state;
    std::vector<DiagramHop> hops;
};

/// Signed GHz contribution of one cycle: product of hop amplitudes
/// g * <j|n|i> * <l|n|k> over the product of (E_base - E_intermediate).
/// Parity-forbidden hops (|n| < 1e-8) raise ForbiddenTransition; denominators
/// below 1e-9 GHz raise SingularDenominator.
double eval_diagram(const DiagramPath& path, const std::vector<ElementSpectrum>& spectra);

/// Copy of spec with every coupling touching element_index negated (the
/// n -> -n transformation on that element).
CompositeSpec negate_element_couplings(CompositeSpec spec, int element_index);

/// True when two specs have identical dressed frequencies to tol_ghz.
bool spectra_match(const CompositeSpec& a, const CompositeSpec& b, double tol_ghz = 1e-9);

/// Verify that negating all couplings of one element leaves the exact
/// spectrum invariant (it reverses the sign of the direct coupler-coupler
/// coupling while describing the same circuit).
bool sign_transform_check(const CompositeSpec& spec, int element_index);

}  // namespace fluxlat
