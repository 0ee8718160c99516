#pragma once

#include <vector>

#include "fluxlat/dynamics.hpp"
#include "fluxlat/sweep.hpp"

namespace fluxlat {

/// One source -> leakage-level channel. `rate` is the baseline-subtracted
/// leakage probability; tiny negative residues (> -1e-12) are clipped to 0,
/// larger negative values are kept raw and flagged (the k-drive interfering
/// with side-transition leakage).
struct LeakageChannel {
    BareLabel source;
    double k = 0.0;
    double delta_ghz = 0.0;
    double rate = 0.0;
    bool flagged = false;
};

/// Raw baseline-subtracted leakage rate eps_leak(k) - eps_leak(k=0), both
/// propagated with the same pulse. Exactly 0 at k = 0.
double leakage_rate(double gap_ghz, double delta_ghz, double k, const BareLabel& source,
                    const PulseSpec& pulse, const IntegratorOptions& opt = {});

/// leakage_rate with the reporting clip/flag policy applied.
LeakageChannel leakage_channel(double gap_ghz, double delta_ghz, double k,
                               const BareLabel& source, const PulseSpec& pulse,
                               const IntegratorOptions& opt = {});

/// Order-of-magnitude plotting bucket of |rate|: 0 below 1e-5 (negligible),
/// 1 below 1e-4, 2 below 1e-3, 3 otherwise.
int leakage_bucket(double rate);

/// CZ pulse calibrated on the leakage model with the channel switched off
/// (k = 0), the frozen pulse reused across a whole map.
PulseSpec calibrate_map_pulse(double gap_ghz, double duration_ns = 66.0,
                              const IntegratorOptions& opt = {});

/// The three source states the maps default to.
std::vector<BareLabel> default_leakage_sources();

/// Rates over a (source, k, delta) grid with one frozen pulse. Columns:
/// rate, bucket, flagged, status (0 ok / 1 failed). A default-constructed
/// pulse requests the standard 66 ns k=0 calibration.
SweepResult leakage_map(double gap_ghz, const std::vector<double>& k_values,
                        const std::vector<double>& delta_values_ghz,
                        const std::vector<BareLabel>& sources, PulseSpec pulse = {},
                        int threads = 1);

/// Signed distance (f_c1u_01 - f_q_03) + (f_c0l_01 - f_q_12) from the
/// simultaneous leakage resonance; 0 means both channels hit at once.
double czz_resonance_margin(double f_c1u_01, double f_q_03, double f_c0l_01, double f_q_12);

}  // namespace fluxlat
