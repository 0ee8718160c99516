#pragma once

#include <string>
#include <vector>

#include "fluxlat/composite.hpp"
#include "fluxlat/linalg.hpp"

namespace fluxlat {

/// Truncated-Gaussian drive. Frequencies in GHz, times in ns; the 2*pi sits
/// in the propagator, not here.
struct PulseSpec {
    double amplitude_ghz = 0.0;
    double duration_ns = 0.0;
    double detuning_ghz = 0.0;
    double width_ns = 0.0;
};

/// Validated constructor; width_ns = 0 picks the tau/4 default.
PulseSpec make_pulse(double amplitude_ghz, double duration_ns, double detuning_ghz = 0.0,
                     double width_ns = 0.0);

/// Peak-normalized truncated Gaussian, zero at both endpoints, value in GHz.
/// Returns 0 outside [0, tau].
double envelope(const PulseSpec& p, double t_ns);

/// Closed-form integral of envelope over [0, tau] in GHz*ns.
double envelope_area(const PulseSpec& p);

/// Amplitude giving a requested envelope area at fixed tau/sigma. The Rabi
/// angle of a resonant two-level transition is 2*pi*area, so area 0.5 is a
/// pi rotation and area 1 a full 2*pi loop.
double amplitude_for_area(double area_ghz_ns, double duration_ns, double width_ns = 0.0);

enum class ModelKind { CzSpectator, Leakage, ParasiticDrive };
enum class DrivenQubit { A, B };

/// Few-level rotating-frame model: H(t) = h_static
///   + 1/2 e(t) (drive_lower e^{-i 2 pi Delta t} + drive_upper e^{+i ...}).
/// Builders also attach the canonical computational subspace and ideal gate
/// so calibration and error extraction need no extra bookkeeping.
struct ReducedModel {
    ModelKind kind;
    int dimension = 0;
    MatrixXcd h_static;
    MatrixXcd drive_lower;
    MatrixXcd drive_upper;
    std::vector<long> comp_labels;
    MatrixXcd u_ideal;  // on the comp_labels subspace
    std::string note;
};

/// 16-dim CZ-with-spectator model on A (x) B (x) C (x) S, A most significant:
/// gap_ghz * (P0_A + P0_B) P1_C + zz_cs_ghz * P1_S P1_C + coupler drive.
/// Computational subspace: C = 0; ideal gate CZ_AB (x) I_S.
ReducedModel build_cz_spectator_model(double gap_ghz, double zz_cs_ghz);

/// 9-dim leakage model: the 8-dim A (x) B (x) C block plus one leakage level
/// |l> at detuning_ghz, reached from `source` with relative drive strength k.
/// Computational subspace: C = 0; ideal gate CZ_AB.
ReducedModel build_leakage_model(double gap_ghz, double detuning_ghz, double k,
                                 const BareLabel& source);

/// 4-dim two-qubit model driven through a parasitically mixed operator:
/// V_A = sqrt(1-D) X_A + sqrt(D) Z_A X_B (B-form with the minus sign).
/// Ideal gate: R_X(theta_target) on the chosen qubit.
ReducedModel build_parasitic_drive(double mixing, DrivenQubit which, double theta_target);

struct IntegratorOptions {
    double atol = 1e-10;
    double rtol = 1e-10;
};

/// Propagator of i dpsi/dt = 2 pi H(t) psi over [0, tau], all basis initial
/// states at once. Adaptive embedded Dormand-Prince 5(4); deterministic.
/// Throws IntegrationError on step underflow or loss of unitarity.
MatrixXcd propagate(const ReducedModel& m, const PulseSpec& p,
                    const IntegratorOptions& opt = {});

struct GateReport {
    double eps_total = 0.0;
    double eps_corrected = 0.0;
    double eps_ph = 0.0;
    double eps_leak = 0.0;
    MatrixXcd u_reduced;  // projected block on the computational subspace
    PulseSpec pulse;
};

/// Error decomposition of U against u_ideal on the comp_labels subspace.
/// eps_total: average-gate infidelity of the projected block; eps_corrected:
/// the same after the per-qubit Z phases a virtual-Z correction would remove;
/// eps_leak: mean population lost from the subspace; eps_ph: infidelity of
/// the closest unitary after single-qubit Z phases are optimized away.
GateReport gate_error(const MatrixXcd& u, const MatrixXcd& u_ideal,
                      const std::vector<long>& comp_labels);

/// Bare 3-digit label (e.g. {1,1,0}) from a string like "110".
BareLabel parse_bit_label(const std::string& s);

}  // namespace fluxlat
