#pragma once

#include <functional>
#include <vector>

#include "fluxlat/dynamics.hpp"
#include "fluxlat/sweep.hpp"

namespace fluxlat {

/// Outcome of a pulse calibration. `report` belongs to the best pulse seen
/// across all evaluations, never worse than the initial guess.
struct OptResult {
    PulseSpec pulse;
    GateReport report;
    int evaluations = 0;
    bool converged = false;
};

struct NmResult {
    double x0 = 0.0;
    double x1 = 0.0;
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Deterministic two-parameter Nelder-Mead (reflection 1, expansion 2,
/// contraction 0.5, shrink 0.5). Converged when the simplex diameter drops
/// below tol in both coordinates; stops at max_evals otherwise. Returns the
/// best point ever evaluated.
NmResult nelder_mead_2(const std::function<double(double, double)>& f, double x0, double x1,
                       double step0, double step1, double tol = 1e-6, int max_evals = 500);

/// Minimize eps_corrected (the gate error left after virtual-Z corrections)
/// over pulse amplitude and detuning. Initial simplex steps: 10% of a0_ghz
/// in amplitude, 2*pi*1e-3 GHz in detuning. Throws only if every evaluation
/// fails to integrate.
OptResult calibrate(const ReducedModel& m, double duration_ns, double a0_ghz, double delta0_ghz,
                    const MatrixXcd& u_ideal, const std::vector<long>& comp_labels,
                    const IntegratorOptions& opt = {});

/// Per-point calibrated gate errors over a (tau, zeta_cs) grid at fixed
/// coupler gap. Columns: eps_total, eps_corrected, eps_ph, eps_leak,
/// amplitude_ghz, detuning_ghz, evaluations, converged, status (0 ok / 1
/// failed; failed points hold NaN elsewhere).
SweepResult spectator_sweep(double gap_ghz, const std::vector<double>& zz_list_ghz,
                            const std::vector<double>& tau_list_ns, int threads = 1);

}  // namespace fluxlat
