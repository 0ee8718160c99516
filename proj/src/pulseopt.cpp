#include "fluxlat/pulseopt.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <string>

#include "fluxlat/errors.hpp"
#include "fluxlat/parallel.hpp"
#include "fluxlat/version.hpp"

namespace fluxlat {

namespace {

struct Vertex {
    double x0 = 0.0;
    double x1 = 0.0;
    double f = 0.0;
};

double diameter(const std::array<Vertex, 3>& v, int coord) {
    auto get = [&](int i) { return coord == 0 ? v[i].x0 : v[i].x1; };
    double lo = get(0);
    double hi = get(0);
    for (int i = 1; i < 3; ++i) {
        lo = std::min(lo, get(i));
        hi = std::max(hi, get(i));
    }
    return hi - lo;
}

}  // namespace

NmResult nelder_mead_2(const std::function<double(double, double)>& f, double x0, double x1,
                       double step0, double step1, double tol, int max_evals) {
    if (step0 == 0.0 || step1 == 0.0) {
        throw ValidationError("simplex steps must be nonzero");
    }
    if (!(tol > 0.0)) {
        throw ValidationError("convergence tolerance must be positive");
    }
    if (max_evals < 3) {
        throw ValidationError("evaluation budget must allow the initial simplex (>= 3)");
    }

    NmResult out;
    out.value = std::numeric_limits<double>::infinity();
    int evals = 0;
    auto eval = [&](double a, double b) {
        const double r = f(a, b);
        ++evals;
        if (r < out.value) {
            out.value = r;
            out.x0 = a;
            out.x1 = b;
        }
        return r;
    };

    std::array<Vertex, 3> v{{{x0, x1, 0.0}, {x0 + step0, x1, 0.0}, {x0, x1 + step1, 0.0}}};
    for (Vertex& vi : v) {
        vi.f = eval(vi.x0, vi.x1);
    }

    while (true) {
        std::stable_sort(v.begin(), v.end(),
                         [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        if (diameter(v, 0) < tol && diameter(v, 1) < tol) {
            out.converged = true;
            break;
        }
        if (evals >= max_evals) {
            break;
        }

        const double c0 = 0.5 * (v[0].x0 + v[1].x0);
        const double c1 = 0.5 * (v[0].x1 + v[1].x1);
        const double r0 = c0 + (c0 - v[2].x0);
        const double r1 = c1 + (c1 - v[2].x1);
        const double fr = eval(r0, r1);

        if (fr < v[0].f) {
            if (evals >= max_evals) {
                v[2] = {r0, r1, fr};
                continue;
            }
            const double e0 = c0 + 2.0 * (r0 - c0);
            const double e1 = c1 + 2.0 * (r1 - c1);
            const double fe = eval(e0, e1);
            v[2] = fe < fr ? Vertex{e0, e1, fe} : Vertex{r0, r1, fr};
        } else if (fr < v[1].f) {
            v[2] = {r0, r1, fr};
        } else {
            if (evals >= max_evals) {
                break;
            }
            const bool outside = fr < v[2].f;
            const double t0 = outside ? r0 : v[2].x0;
            const double t1 = outside ? r1 : v[2].x1;
            const double q0 = c0 + 0.5 * (t0 - c0);
            const double q1 = c1 + 0.5 * (t1 - c1);
            const double fq = eval(q0, q1);
            if (outside ? fq <= fr : fq < v[2].f) {
                v[2] = {q0, q1, fq};
            } else {
                for (int i = 1; i < 3; ++i) {
                    if (evals >= max_evals) {
                        break;
                    }
                    v[i].x0 = v[0].x0 + 0.5 * (v[i].x0 - v[0].x0);
                    v[i].x1 = v[0].x1 + 0.5 * (v[i].x1 - v[0].x1);
                    v[i].f = eval(v[i].x0, v[i].x1);
                }
            }
        }
    }

    out.evaluations = evals;
    return out;
}

OptResult calibrate(const ReducedModel& m, double duration_ns, double a0_ghz, double delta0_ghz,
                    const MatrixXcd& u_ideal, const std::vector<long>& comp_labels,
                    const IntegratorOptions& opt) {
    if (!(duration_ns >= 10.0 && duration_ns <= 500.0)) {
        throw ValidationError("pulse duration must lie in [10, 500] ns, got " +
                              std::to_string(duration_ns));
    }
    if (!(a0_ghz > 0.0)) {
        throw ValidationError("initial amplitude guess must be positive, got " +
                              std::to_string(a0_ghz));
    }

    bool any_success = false;
    std::exception_ptr last_failure;
    OptResult best;
    best.report.eps_corrected = std::numeric_limits<double>::infinity();

    const auto objective = [&](double a, double d) -> double {
        if (a <= 0.0) {
            return 1e3 - a;  // slope back toward positive amplitudes
        }
        const PulseSpec p = make_pulse(a, duration_ns, d);
        try {
            const MatrixXcd u = propagate(m, p, opt);
            GateReport rep = gate_error(u, u_ideal, comp_labels);
            rep.pulse = p;
            any_success = true;
            if (rep.eps_corrected < best.report.eps_corrected) {
                best.report = rep;
                best.pulse = p;
            }
            return rep.eps_corrected;
        } catch (const IntegrationError&) {
            last_failure = std::current_exception();
            return 1e3;
        }
    };

    const double delta_step = 2.0 * std::numbers::pi * 1e-3;
    const NmResult nm =
        nelder_mead_2(objective, a0_ghz, delta0_ghz, 0.1 * a0_ghz, delta_step, 1e-6, 500);
    if (!any_success) {
        std::rethrow_exception(last_failure);
    }
    best.evaluations = nm.evaluations;
    best.converged = nm.converged;
    return best;
}

SweepResult spectator_sweep(double gap_ghz, const std::vector<double>& zz_list_ghz,
                            const std::vector<double>& tau_list_ns, int threads) {
    if (!(gap_ghz > 0.0)) {
        throw ValidationError("coupler gap must be positive, got " + std::to_string(gap_ghz));
    }
    if (zz_list_ghz.empty() || tau_list_ns.empty()) {
        throw ValidationError("spectator sweep needs nonempty zeta and tau lists");
    }

    const auto t_start = std::chrono::steady_clock::now();
    SweepResult r;
    r.scenario = "spectator-error";
    r.code_version = code_version;
    r.axes = {{"tau_ns", tau_list_ns, {}}, {"zeta_cs_ghz", zz_list_ghz, {}}};
    const long n_zz = static_cast<long>(zz_list_ghz.size());
    const long total = r.points();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const char* name : {"eps_total", "eps_corrected", "eps_ph", "eps_leak", "amplitude_ghz",
                             "detuning_ghz", "evaluations", "converged", "status"}) {
        r.column(name).assign(total, nan);
    }
    std::vector<double>& c_total = r.column("eps_total");
    std::vector<double>& c_corr = r.column("eps_corrected");
    std::vector<double>& c_ph = r.column("eps_ph");
    std::vector<double>& c_leak = r.column("eps_leak");
    std::vector<double>& c_amp = r.column("amplitude_ghz");
    std::vector<double>& c_det = r.column("detuning_ghz");
    std::vector<double>& c_evals = r.column("evaluations");
    std::vector<double>& c_conv = r.column("converged");
    std::vector<double>& c_status = r.column("status");

    grid_map(static_cast<int>(total), threads, [&](int flat) {
        const double tau = tau_list_ns[flat / n_zz];
        const double zz = zz_list_ghz[flat % n_zz];
        try {
            const ReducedModel m = build_cz_spectator_model(gap_ghz, zz);
            const double a0 = amplitude_for_area(1.0, tau);
            const OptResult res = calibrate(m, tau, a0, 0.0, m.u_ideal, m.comp_labels);
            c_total[flat] = res.report.eps_total;
            c_corr[flat] = res.report.eps_corrected;
            c_ph[flat] = res.report.eps_ph;
            c_leak[flat] = res.report.eps_leak;
            c_amp[flat] = res.pulse.amplitude_ghz;
            c_det[flat] = res.pulse.detuning_ghz;
            c_evals[flat] = static_cast<double>(res.evaluations);
            c_conv[flat] = res.converged ? 1.0 : 0.0;
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

}  // namespace fluxlat
