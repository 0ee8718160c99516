#include "fluxlat/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fluxlat/errors.hpp"

namespace fluxlat {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

const MatrixXcd& pauli(char which) {
    static const MatrixXcd i2 = MatrixXcd::Identity(2, 2);
    static const MatrixXcd x = (MatrixXcd(2, 2) << 0, 1, 1, 0).finished();
    static const MatrixXcd z = (MatrixXcd(2, 2) << 1, 0, 0, -1).finished();
    static const MatrixXcd p0 = (MatrixXcd(2, 2) << 1, 0, 0, 0).finished();
    static const MatrixXcd p1 = (MatrixXcd(2, 2) << 0, 0, 0, 1).finished();
    static const MatrixXcd sm = (MatrixXcd(2, 2) << 0, 1, 0, 0).finished();
    switch (which) {
        case 'i': return i2;
        case 'x': return x;
        case 'z': return z;
        case '0': return p0;
        case '1': return p1;
        case '-': return sm;
    }
    throw ValidationError("unknown two-level operator");
}

/// kron chain over two-level factors named by a pattern like "i-1i".
MatrixXcd embed(const std::string& pattern) {
    MatrixXcd out = pauli(pattern[0]);
    for (size_t i = 1; i < pattern.size(); ++i) out = kron(out, pauli(pattern[i])).eval();
    return out;
}

MatrixXcd rx(double theta) {
    MatrixXcd r(2, 2);
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    r << cplx(c, 0), cplx(0, -s), cplx(0, -s), cplx(c, 0);
    return r;
}

}  // namespace

PulseSpec make_pulse(double amplitude_ghz, double duration_ns, double detuning_ghz,
                     double width_ns) {
    if (!(duration_ns > 0.0))
        throw ValidationError("pulse: duration must be positive");
    if (width_ns == 0.0) width_ns = duration_ns / 4.0;
    if (!(width_ns > 0.0))
        throw ValidationError("pulse: width must be positive");
    if (amplitude_ghz < 0.0)
        throw ValidationError("pulse: amplitude must be non-negative");
    return {amplitude_ghz, duration_ns, detuning_ghz, width_ns};
}

double envelope(const PulseSpec& p, double t_ns) {
    const double tau = p.duration_ns, sig = p.width_ns;
    if (t_ns < 0.0 || t_ns > tau) return 0.0;
    const double edge = std::exp(-tau * tau / (8.0 * sig * sig));
    const double u = (t_ns - 0.5 * tau) / sig;
    return p.amplitude_ghz * (std::exp(-0.5 * u * u) - edge) / (1.0 - edge);
}

double envelope_area(const PulseSpec& p) {
    const double tau = p.duration_ns, sig = p.width_ns;
    const double edge = std::exp(-tau * tau / (8.0 * sig * sig));
    const double gauss = sig * std::sqrt(two_pi) *
                         std::erf(tau / (2.0 * std::numbers::sqrt2 * sig));
    return p.amplitude_ghz * (gauss - tau * edge) / (1.0 - edge);
}

double amplitude_for_area(double area_ghz_ns, double duration_ns, double width_ns) {
    PulseSpec unit = make_pulse(1.0, duration_ns, 0.0, width_ns);
    return area_ghz_ns / envelope_area(unit);
}

ReducedModel build_cz_spectator_model(double gap_ghz, double zz_cs_ghz) {
    if (!(gap_ghz > 0.0))
        throw ValidationError("cz spectator model: gap must be positive");
    ReducedModel m;
    m.kind = ModelKind::CzSpectator;
    m.dimension = 16;
    m.h_static = gap_ghz * (embed("0i1i") + embed("i01i")) + zz_cs_ghz * embed("ii11");
    m.drive_lower = embed("ii-i");
    m.drive_upper = m.drive_lower.adjoint();
    // computational states: coupler in |0>, ideal gate CZ on (A,B), spectator idle
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            for (long s = 0; s < 2; ++s) m.comp_labels.push_back(8 * a + 4 * b + s);
    VectorXcd diag = VectorXcd::Ones(8);
    diag[6] = diag[7] = -1.0;
    m.u_ideal = diag.asDiagonal();
    m.note = "gap=" + std::to_string(gap_ghz) + " zz_cs=" + std::to_string(zz_cs_ghz);
    return m;
}

ReducedModel build_leakage_model(double gap_ghz, double detuning_ghz, double k,
                                 const BareLabel& source) {
    if (!(gap_ghz > 0.0))
        throw ValidationError("leakage model: gap must be positive");
    if (k < 0.0)
        throw ValidationError("leakage model: k must be non-negative");
    if (source.size() != 3)
        throw ValidationError("leakage model: source label needs 3 digits, got " +
                              format_label(source));
    for (int d : source)
        if (d != 0 && d != 1)
            throw ValidationError("leakage model: source digits must be 0 or 1, got " +
                                  format_label(source));
    const long src = 4 * source[0] + 2 * source[1] + source[2];

    ReducedModel m;
    m.kind = ModelKind::Leakage;
    m.dimension = 9;
    m.h_static = MatrixXcd::Zero(9, 9);
    m.h_static.topLeftCorner(8, 8) = gap_ghz * (embed("0i1") + embed("i01"));
    m.h_static(8, 8) = detuning_ghz;
    m.drive_lower = MatrixXcd::Zero(9, 9);
    m.drive_lower.topLeftCorner(8, 8) = embed("ii-");
    m.drive_lower(src, 8) = k;  // |source><l|, scaled partner of the main drive
    m.drive_upper = m.drive_lower.adjoint();
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b) m.comp_labels.push_back(4 * a + 2 * b);
    VectorXcd diag = VectorXcd::Ones(4);
    diag[3] = -1.0;
    m.u_ideal = diag.asDiagonal();
    m.note = "source=" + format_label(source);
    return m;
}

ReducedModel build_parasitic_drive(double mixing, DrivenQubit which, double theta_target) {
    if (!(mixing >= 0.0 && mixing <= 1.0))
        throw ValidationError("parasitic drive: mixing D must lie in [0,1]");
    const double a = std::sqrt(1.0 - mixing), b = std::sqrt(mixing);
    ReducedModel m;
    m.kind = ModelKind::ParasiticDrive;
    m.dimension = 4;
    m.h_static = MatrixXcd::Zero(4, 4);
    MatrixXcd v = which == DrivenQubit::A ? (a * embed("xi") + b * embed("zx")).eval()
                                          : (a * embed("ix") - b * embed("xz")).eval();
    m.drive_lower = 0.5 * v;  // Hermitian drive: lower+upper reassemble e(t) V at Delta=0
    m.drive_upper = m.drive_lower.adjoint();
    m.comp_labels = {0, 1, 2, 3};
    m.u_ideal = which == DrivenQubit::A ? kron(rx(theta_target), pauli('i'))
                                        : kron(pauli('i'), rx(theta_target));
    m.note = "D=" + std::to_string(mixing);
    return m;
}

MatrixXcd propagate(const ReducedModel& m, const PulseSpec& p, const IntegratorOptions& opt) {
    const long n = m.dimension;
    if (m.h_static.rows() != n || m.drive_lower.rows() != n || m.drive_upper.rows() != n)
        throw ValidationError("propagate: model matrices disagree with dimension");
    if (hermiticity_residual(m.h_static) > 1e-12)
        throw ValidationError("propagate: static part is not Hermitian");
    if ((m.drive_upper - m.drive_lower.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw ValidationError("propagate: drive pair is not mutually adjoint");
    const double tau = p.duration_ns;

    auto rhs = [&](double t, const MatrixXcd& y) {
        const double e = envelope(p, t);
        const double th = two_pi * p.detuning_ghz * t;
        const cplx ph(std::cos(th), -std::sin(th));
        MatrixXcd h = m.h_static +
                      (0.5 * e) * (ph * m.drive_lower + std::conj(ph) * m.drive_upper);
        return (cplx(0.0, -two_pi) * (h * y)).eval();
    };

    // Dormand-Prince 5(4), FSAL
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                        a75 = -2187.0 / 6784, a76 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

    MatrixXcd y = MatrixXcd::Identity(n, n);
    double t = 0.0;
    const double hmax = tau / 16.0, hmin = 1e-12;
    double h = std::min(0.01, tau / 100.0);
    MatrixXcd k1 = rhs(0.0, y);

    while (tau - t > 1e-12 * tau) {
        if (t + h > tau) h = tau - t;
        MatrixXcd k2 = rhs(t + c2 * h, y + h * (a21 * k1));
        MatrixXcd k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        MatrixXcd k4 = rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        MatrixXcd k5 = rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        MatrixXcd k6 =
            rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        MatrixXcd y5 = y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
        MatrixXcd k7 = rhs(t + h, y5);
        MatrixXcd err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        // error-per-unit-time control: local budgets proportional to h/tau
        // keep the accumulated error near atol/rtol however many steps the
        // pulse needs, so the 1e-8 unitarity postcondition holds at any tau
        const double budget = h / tau;
        double scaled = 0.0;
        for (long j = 0; j < n; ++j)
            for (long i = 0; i < n; ++i) {
                double tol = opt.atol +
                             opt.rtol * std::max(std::abs(y(i, j)), std::abs(y5(i, j)));
                scaled = std::max(scaled, std::abs(err(i, j)) / (budget * tol));
            }
        const bool accept = scaled <= 1.0;
        if (accept) {
            t += h;
            y = std::move(y5);
            k1 = std::move(k7);
        }
        double factor = 0.9 * std::pow(std::max(scaled, 1e-16), -0.2);
        h *= std::clamp(factor, 0.2, 5.0);
        h = std::min(h, hmax);
        if (!accept && h < hmin)
            throw IntegrationError("propagate: step size underflow at t=" +
                                   std::to_string(t) + " ns, scaled error " +
                                   std::to_string(scaled));
    }

    double unit_resid = (y.adjoint() * y - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (!(unit_resid < 1e-8))
        throw IntegrationError("propagate: propagator lost unitarity, residual " +
                               std::to_string(unit_resid));
    return y;
}

namespace {

// Largest |Tr(Z(theta) M)| over products of per-qubit Z phase corrections,
// from the diagonal of M. Coordinate ascent; each qubit update is the exact
// 1-D optimum, so the trace magnitude is nondecreasing. Non-power-of-two
// dimensions get the global-phase freedom only.
double max_trace_after_z(const VectorXcd& c) {
    const long d = c.size();
    double best = std::abs(c.sum());
    int k = 0;
    while ((1L << k) < d) ++k;
    if ((1L << k) != d) return best;

    std::vector<double> theta(k, 0.0);
    auto phase_of = [&](long j, int skip) {
        double ph = 0.0;
        for (int q = 0; q < k; ++q)
            if (q != skip && ((j >> (k - 1 - q)) & 1)) ph += theta[q];
        return ph;
    };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double prev = best;
        for (int q = 0; q < k; ++q) {
            cplx a0(0, 0), a1(0, 0);
            for (long j = 0; j < d; ++j) {
                cplx term = c[j] * std::polar(1.0, -phase_of(j, q));
                (((j >> (k - 1 - q)) & 1) ? a1 : a0) += term;
            }
            if (std::abs(a0) > 1e-300 && std::abs(a1) > 1e-300)
                theta[q] = std::arg(a1) - std::arg(a0);
        }
        cplx tr(0, 0);
        for (long j = 0; j < d; ++j) tr += c[j] * std::polar(1.0, -phase_of(j, -1));
        best = std::max(best, std::abs(tr));
        if (best - prev < 1e-15) break;
    }
    return best;
}

}  // namespace

GateReport gate_error(const MatrixXcd& u, const MatrixXcd& u_ideal,
                      const std::vector<long>& comp_labels) {
    const long d = static_cast<long>(comp_labels.size());
    if (d < 2)
        throw ValidationError("gate_error: computational subspace needs at least 2 states");
    if (u_ideal.rows() != d || u_ideal.cols() != d)
        throw ValidationError("gate_error: ideal gate shape disagrees with comp_labels");
    for (long idx : comp_labels)
        if (idx < 0 || idx >= u.rows())
            throw ValidationError("gate_error: comp label outside propagator basis");

    MatrixXcd u_sub(d, d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) u_sub(i, j) = u(comp_labels[i], comp_labels[j]);
    MatrixXcd m = u_ideal.adjoint() * u_sub;

    const double tr_mmdag = m.squaredNorm();  // Tr(M M^dag)
    const double tr_abs2 = std::norm(m.trace());
    auto clamp01 = [](double x) { return std::clamp(x, 0.0, 1.0); };

    GateReport rep;
    rep.u_reduced = u_sub;
    rep.eps_total = clamp01(1.0 - (tr_abs2 + tr_mmdag) / (d * (d + 1.0)));
    rep.eps_leak = clamp01(1.0 - tr_mmdag / d);

    // total error that survives per-qubit virtual-Z corrections
    const double best_raw = max_trace_after_z(m.diagonal());
    rep.eps_corrected = clamp01(1.0 - (best_raw * best_raw + tr_mmdag) / (d * (d + 1.0)));

    // phase error: closest unitary, then strip single-qubit Z phases
    const double best_ph = max_trace_after_z(polar_unitary(m).diagonal());
    rep.eps_ph = clamp01(1.0 - (best_ph * best_ph + d) / (d * (d + 1.0)));
    return rep;
}

BareLabel parse_bit_label(const std::string& s) {
    BareLabel out;
    for (char ch : s) {
        if (ch < '0' || ch > '9')
            throw ValidationError("bare label string must be digits, got \"" + s + "\"");
        out.push_back(ch - '0');
    }
    if (out.empty()) throw ValidationError("bare label string is empty");
    return out;
}

}  // namespace fluxlat
