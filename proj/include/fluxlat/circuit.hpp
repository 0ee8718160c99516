#pragma once

#include <numbers>
#include <string>

#include "fluxlat/linalg.hpp"

namespace fluxlat {

enum class ElementKind { Fluxonium, Transmon, Oscillator };

const char* to_string(ElementKind kind);

/// Circuit element parameters. Energies are ordinary (not angular)
/// frequencies in GHz; phi_ext is the external flux phase in radians and is
/// only meaningful for fluxonia (pi is the sweet spot).
struct ElementParams {
    ElementKind kind = ElementKind::Fluxonium;
    double ec_ghz = 0.0;
    double ej_ghz = 0.0;
    double el_ghz = 0.0;
    double phi_ext = std::numbers::pi;
    int basis_dim = 0;    // working basis size, 0 picks the kind default
    int keep_levels = 0;  // retained eigenlevels, 0 picks the kind default
    std::string name;     // optional tag used in diagnostics
};

/// Single-element spectrum: transition ladder relative to the ground state
/// plus charge/phase operators truncated to the retained eigenbasis.
/// For transmons phi_elems holds sin(phi), which is what a compact charge
/// basis can represent.
struct ElementSpectrum {
    ElementParams params;
    VectorXd frequencies;  // f_k = E_k - E_0 in GHz, f_0 = 0
    MatrixXcd n_elems;     // <i| n |j>
    MatrixXcd phi_elems;   // <i| phi |j>  (sin phi for transmons)

    int levels() const { return static_cast<int>(frequencies.size()); }
    /// Transition frequency f_j - f_i in GHz.
    double transition(int i, int j) const;
};

/// Diagonalize one element with basis-doubling until the retained transition
/// frequencies are stable to 1e-8 GHz (exact builds skip the loop). Throws
/// ValidationError for bad parameters, ConvergenceError if doubling fails
/// twice, NumericalError if retained levels are degenerate.
ElementSpectrum build_element(const ElementParams& params);

ElementSpectrum build_fluxonium(const ElementParams& params);
ElementSpectrum build_transmon(const ElementParams& params);
ElementSpectrum build_oscillator(const ElementParams& params);

/// Find the transmon E_J whose f_01 equals target_f01_ghz (other parameters
/// taken from base). Bisection on a bracket grown from base.ej_ghz; tolerance
/// 1e-10 GHz on the frequency.
double tune_transmon_ej(ElementParams base, double target_f01_ghz);

/// Kind defaults used when basis_dim / keep_levels are left at 0.
int default_basis_dim(ElementKind kind);
int default_keep_levels(ElementKind kind);

}  // namespace fluxlat
