#include "fluxlat/leakage.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "fluxlat/errors.hpp"
#include "fluxlat/parallel.hpp"
#include "fluxlat/pulseopt.hpp"
#include "fluxlat/version.hpp"

namespace fluxlat {

namespace {

std::string source_text(const BareLabel& source) {
    std::string s;
    for (int d : source) {
        s += static_cast<char>('0' + d);
    }
    return s;
}

}  // namespace

double leakage_rate(double gap_ghz, double delta_ghz, double k, const BareLabel& source,
                    const PulseSpec& pulse, const IntegratorOptions& opt) {
    if (k < 0.0) {
        throw ValidationError("leakage matrix element k must be nonnegative, got " +
                              std::to_string(k));
    }
    const ReducedModel with = build_leakage_model(gap_ghz, delta_ghz, k, source);
    const ReducedModel base = build_leakage_model(gap_ghz, delta_ghz, 0.0, source);
    const GateReport rep_with =
        gate_error(propagate(with, pulse, opt), with.u_ideal, with.comp_labels);
    const GateReport rep_base =
        gate_error(propagate(base, pulse, opt), base.u_ideal, base.comp_labels);
    return rep_with.eps_leak - rep_base.eps_leak;
}

LeakageChannel leakage_channel(double gap_ghz, double delta_ghz, double k,
                               const BareLabel& source, const PulseSpec& pulse,
                               const IntegratorOptions& opt) {
    LeakageChannel ch;
    ch.source = source;
    ch.k = k;
    ch.delta_ghz = delta_ghz;
    ch.rate = leakage_rate(gap_ghz, delta_ghz, k, source, pulse, opt);
    if (ch.rate < 0.0) {
        if (ch.rate > -1e-12) {
            ch.rate = 0.0;
        } else {
            ch.flagged = true;
        }
    }
    return ch;
}

int leakage_bucket(double rate) {
    const double r = std::abs(rate);
    if (r < 1e-5) {
        return 0;
    }
    if (r < 1e-4) {
        return 1;
    }
    if (r < 1e-3) {
        return 2;
    }
    return 3;
}

PulseSpec calibrate_map_pulse(double gap_ghz, double duration_ns, const IntegratorOptions& opt) {
    const ReducedModel m = build_leakage_model(gap_ghz, 0.0, 0.0, BareLabel{1, 1, 0});
    const double a0 = amplitude_for_area(1.0, duration_ns);
    return calibrate(m, duration_ns, a0, 0.0, m.u_ideal, m.comp_labels, opt).pulse;
}

std::vector<BareLabel> default_leakage_sources() {
    return {BareLabel{1, 1, 0}, BareLabel{1, 1, 1}, BareLabel{0, 0, 0}};
}

SweepResult leakage_map(double gap_ghz, const std::vector<double>& k_values,
                        const std::vector<double>& delta_values_ghz,
                        const std::vector<BareLabel>& sources, PulseSpec pulse, int threads) {
    if (k_values.empty() || delta_values_ghz.empty() || sources.empty()) {
        throw ValidationError("leakage map needs nonempty k, delta, and source lists");
    }
    for (double k : k_values) {
        if (k < 0.0) {
            throw ValidationError("leakage matrix element k must be nonnegative, got " +
                                  std::to_string(k));
        }
    }
    for (const BareLabel& s : sources) {
        build_leakage_model(gap_ghz, 0.0, 0.0, s);  // validates gap and source digits
    }
    if (pulse.duration_ns == 0.0) {
        pulse = calibrate_map_pulse(gap_ghz);
    }

    const auto t_start = std::chrono::steady_clock::now();
    SweepResult r;
    r.scenario = "leakage-map";
    r.code_version = code_version;

    SweepAxis source_axis;
    source_axis.name = "source";
    for (const BareLabel& s : sources) {
        source_axis.labels.push_back(source_text(s));
    }
    r.axes = {source_axis, {"k", k_values, {}}, {"delta_ghz", delta_values_ghz, {}}};

    const long n_k = static_cast<long>(k_values.size());
    const long n_d = static_cast<long>(delta_values_ghz.size());
    const long total = r.points();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const char* name : {"rate", "bucket", "flagged", "status"}) {
        r.column(name).assign(total, nan);
    }
    std::vector<double>& c_rate = r.column("rate");
    std::vector<double>& c_bucket = r.column("bucket");
    std::vector<double>& c_flag = r.column("flagged");
    std::vector<double>& c_status = r.column("status");

    grid_map(static_cast<int>(total), threads, [&](int flat) {
        const long i_source = flat / (n_k * n_d);
        const long i_k = (flat / n_d) % n_k;
        const long i_d = flat % n_d;
        try {
            const LeakageChannel ch = leakage_channel(gap_ghz, delta_values_ghz[i_d],
                                                      k_values[i_k], sources[i_source], pulse);
            c_rate[flat] = ch.rate;
            c_bucket[flat] = static_cast<double>(leakage_bucket(ch.rate));
            c_flag[flat] = ch.flagged ? 1.0 : 0.0;
            c_status[flat] = 0.0;
        } catch (const std::exception&) {
            c_status[flat] = 1.0;
        }
    });

    r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               t_start)
                         .count();
    return r;
}

double czz_resonance_margin(double f_c1u_01, double f_q_03, double f_c0l_01, double f_q_12) {
    if (!(f_c1u_01 > 0.0) || !(f_q_03 > 0.0) || !(f_c0l_01 > 0.0) || !(f_q_12 > 0.0)) {
        throw ValidationError("resonance margin inputs must be positive frequencies");
    }
    return (f_c1u_01 - f_q_03) + (f_c0l_01 - f_q_12);
}

}  // namespace fluxlat
