#include "fluxlat/circuit.hpp"

#include <cmath>

#include "fluxlat/errors.hpp"

namespace fluxlat {

namespace {

std::string tag(const ElementParams& p) {
    return p.name.empty() ? std::string(to_string(p.kind)) : p.name;
}

ElementParams with_defaults(ElementParams p) {
    if (p.basis_dim == 0) p.basis_dim = default_basis_dim(p.kind);
    if (p.keep_levels == 0) p.keep_levels = default_keep_levels(p.kind);
    return p;
}

void validate_common(const ElementParams& p) {
    if (!(p.ec_ghz > 0.0))
        throw ValidationError(tag(p) + ": ec_ghz must be positive");
    if (p.keep_levels < 2)
        throw ValidationError(tag(p) + ": keep_levels must be at least 2");
    if (p.basis_dim < p.keep_levels)
        throw ValidationError(tag(p) + ": basis_dim smaller than keep_levels");
}

void check_retained_gaps(const ElementSpectrum& s) {
    for (int k = 1; k < s.levels(); ++k) {
        if (s.frequencies[k] - s.frequencies[k - 1] <= 1e-9)
            throw NumericalError(tag(s.params) + ": retained levels " + std::to_string(k - 1) +
                                 " and " + std::to_string(k) + " are degenerate");
    }
}

/// One fluxonium diagonalization in a harmonic-oscillator ladder of size dim.
ElementSpectrum fluxonium_at_dim(const ElementParams& p, int dim) {
    const double phi_zpf = std::pow(2.0 * p.ec_ghz / p.el_ghz, 0.25);
    const double n_zpf = std::pow(p.el_ghz / (32.0 * p.ec_ghz), 0.25);

    MatrixXd phi = MatrixXd::Zero(dim, dim);
    MatrixXd nk = MatrixXd::Zero(dim, dim);  // n = i * nk, nk real antisymmetric
    for (int m = 0; m + 1 < dim; ++m) {
        double s = std::sqrt(m + 1.0);
        phi(m, m + 1) = phi(m + 1, m) = phi_zpf * s;
        nk(m + 1, m) = n_zpf * s;
        nk(m, m + 1) = -n_zpf * s;
    }

    // cos(phi + phi_ext) through the spectral decomposition of the
    // tridiagonal phi matrix; exact within the truncated ladder.
    EighRealResult pd = eigh_tridiagonal(VectorXd::Zero(dim), phi.diagonal(1));
    MatrixXd cosmat = pd.eigenvectors *
                      (pd.eigenvalues.array() + p.phi_ext).cos().matrix().asDiagonal() *
                      pd.eigenvectors.transpose();

    MatrixXd h = -4.0 * p.ec_ghz * (nk * nk) + 0.5 * p.el_ghz * (phi * phi) -
                 p.ej_ghz * cosmat;
    EighRealResult ed = eigh_real(h);
    gauge_fix_columns(ed.eigenvectors);

    const int keep = p.keep_levels;
    MatrixXd w = ed.eigenvectors.leftCols(keep);
    ElementSpectrum out;
    out.params = p;
    out.frequencies = (ed.eigenvalues.head(keep).array() - ed.eigenvalues[0]).matrix();
    out.n_elems = cplx(0.0, 1.0) * (w.transpose() * nk * w).eval().cast<cplx>();
    out.phi_elems = (w.transpose() * phi * w).eval().cast<cplx>();
    return out;
}

/// One transmon diagonalization in the compact charge basis |-n_cut..n_cut>.
ElementSpectrum transmon_at_cut(const ElementParams& p, int n_cut) {
    const int dim = 2 * n_cut + 1;
    VectorXd diag(dim);
    for (int m = 0; m < dim; ++m) {
        double n = m - n_cut;
        diag[m] = 4.0 * p.ec_ghz * n * n;
    }
    VectorXd off = VectorXd::Constant(dim - 1, -0.5 * p.ej_ghz);
    EighRealResult ed = eigh_tridiagonal(diag, off);
    gauge_fix_columns(ed.eigenvectors);

    const int keep = p.keep_levels;
    MatrixXd w = ed.eigenvectors.leftCols(keep);
    MatrixXd nw = w;  // N * w with N = diag(n)
    for (int m = 0; m < dim; ++m) nw.row(m) *= (m - n_cut);
    // sin(phi) = (S - S^T) / 2i with S the charge-raising shift
    MatrixXd sw = MatrixXd::Zero(dim, keep);
    sw.bottomRows(dim - 1) += w.topRows(dim - 1);   // S * w
    sw.topRows(dim - 1) -= w.bottomRows(dim - 1);   // - S^T * w

    ElementSpectrum out;
    out.params = p;
    out.frequencies = (ed.eigenvalues.head(keep).array() - ed.eigenvalues[0]).matrix();
    out.n_elems = (w.transpose() * nw).eval().cast<cplx>();
    out.phi_elems = cplx(0.0, -0.5) * (w.transpose() * sw).eval().cast<cplx>();
    return out;
}

using BuildAtDim = ElementSpectrum (*)(const ElementParams&, int);

/// Doubling loop shared by fluxonium and transmon: accept once the retained
/// transitions move by less than 1e-8 GHz under one doubling, give up after
/// two consecutive failures.
ElementSpectrum converge(const ElementParams& p, int start, BuildAtDim build) {
    ElementSpectrum prev = build(p, start);
    int size = start;
    for (int failures = 0;;) {
        ElementSpectrum next = build(p, size * 2);
        double delta = (next.frequencies - prev.frequencies).cwiseAbs().maxCoeff();
        if (delta < 1e-8) {
            check_retained_gaps(next);
            return next;
        }
        if (++failures >= 2)
            throw ConvergenceError(tag(p) + ": spectrum not converged after doubling to " +
                                       std::to_string(size * 2) +
                                       " basis states, last delta " + std::to_string(delta) +
                                       " GHz",
                                   delta);
        prev = std::move(next);
        size *= 2;
    }
}

}  // namespace

const char* to_string(ElementKind kind) {
    switch (kind) {
        case ElementKind::Fluxonium: return "fluxonium";
        case ElementKind::Transmon: return "transmon";
        case ElementKind::Oscillator: return "oscillator";
    }
    return "?";
}

double ElementSpectrum::transition(int i, int j) const {
    if (i < 0 || j < 0 || i >= levels() || j >= levels())
        throw ValidationError(tag(params) + ": transition index outside retained levels");
    return frequencies[j] - frequencies[i];
}

int default_basis_dim(ElementKind kind) {
    switch (kind) {
        case ElementKind::Fluxonium: return 120;
        case ElementKind::Transmon: return 61;  // n_cut = 30
        case ElementKind::Oscillator: return 4;
    }
    return 0;
}

int default_keep_levels(ElementKind kind) {
    switch (kind) {
        case ElementKind::Fluxonium: return 10;
        case ElementKind::Transmon: return 5;
        case ElementKind::Oscillator: return 4;
    }
    return 0;
}

ElementSpectrum build_fluxonium(const ElementParams& p0) {
    ElementParams p = with_defaults(p0);
    validate_common(p);
    if (p.kind != ElementKind::Fluxonium)
        throw ValidationError(tag(p) + ": build_fluxonium called with wrong kind");
    if (!(p.el_ghz > 0.0))
        throw ValidationError(tag(p) + ": fluxonium needs el_ghz > 0");
    if (p.ej_ghz < 0.0)
        throw ValidationError(tag(p) + ": ej_ghz must be non-negative");
    return converge(p, p.basis_dim, &fluxonium_at_dim);
}

ElementSpectrum build_transmon(const ElementParams& p0) {
    ElementParams p = with_defaults(p0);
    validate_common(p);
    if (p.kind != ElementKind::Transmon)
        throw ValidationError(tag(p) + ": build_transmon called with wrong kind");
    if (p.ej_ghz < 0.0)
        throw ValidationError(tag(p) + ": ej_ghz must be non-negative");
    if (p.el_ghz != 0.0)
        throw ValidationError(tag(p) + ": transmon has no inductive term, el_ghz must be 0");
    int n_cut = (p.basis_dim - 1) / 2;
    if (n_cut < 1 || 2 * n_cut + 1 < p.keep_levels)
        throw ValidationError(tag(p) + ": basis_dim too small for a charge basis");
    return converge(p, n_cut, [](const ElementParams& q, int cut) {
        return transmon_at_cut(q, cut);
    });
}

ElementSpectrum build_oscillator(const ElementParams& p0) {
    ElementParams p = with_defaults(p0);
    if (p.basis_dim < p.keep_levels) p.basis_dim = p.keep_levels;
    validate_common(p);
    if (p.kind != ElementKind::Oscillator)
        throw ValidationError(tag(p) + ": build_oscillator called with wrong kind");
    if (!(p.el_ghz > 0.0))
        throw ValidationError(tag(p) + ": oscillator needs el_ghz > 0");
    if (p.ej_ghz != 0.0)
        throw ValidationError(tag(p) + ": oscillator must have ej_ghz = 0");

    const int keep = p.keep_levels;
    const double f_o = std::sqrt(8.0 * p.ec_ghz * p.el_ghz);
    const double phi_zpf = std::pow(2.0 * p.ec_ghz / p.el_ghz, 0.25);
    const double n_zpf = std::pow(p.el_ghz / (32.0 * p.ec_ghz), 0.25);

    ElementSpectrum out;
    out.params = p;
    out.frequencies = f_o * VectorXd::LinSpaced(keep, 0, keep - 1);
    out.n_elems = MatrixXcd::Zero(keep, keep);
    out.phi_elems = MatrixXcd::Zero(keep, keep);
    for (int m = 0; m + 1 < keep; ++m) {
        double s = std::sqrt(m + 1.0);
        out.n_elems(m + 1, m) = cplx(0.0, n_zpf * s);
        out.n_elems(m, m + 1) = cplx(0.0, -n_zpf * s);
        out.phi_elems(m + 1, m) = phi_zpf * s;
        out.phi_elems(m, m + 1) = phi_zpf * s;
    }
    return out;
}

ElementSpectrum build_element(const ElementParams& p) {
    switch (p.kind) {
        case ElementKind::Fluxonium: return build_fluxonium(p);
        case ElementKind::Transmon: return build_transmon(p);
        case ElementKind::Oscillator: return build_oscillator(p);
    }
    throw ValidationError("unknown element kind");
}

double tune_transmon_ej(ElementParams base, double target_f01_ghz) {
    if (!(target_f01_ghz > 0.0))
        throw ValidationError("tune_transmon_ej: target f_01 must be positive");
    base.kind = ElementKind::Transmon;
    auto f01 = [&base](double ej) {
        ElementParams p = base;
        p.ej_ghz = ej;
        return build_transmon(p).frequencies[1];
    };
    // start from the asymptotic inverse f_01 ~ sqrt(8 Ec Ej) - Ec
    double guess = (target_f01_ghz + base.ec_ghz) * (target_f01_ghz + base.ec_ghz) /
                   (8.0 * base.ec_ghz);
    double lo = guess / 4.0, hi = guess * 4.0;
    for (int i = 0; i < 60 && f01(lo) > target_f01_ghz; ++i) lo /= 2.0;
    for (int i = 0; i < 60 && f01(hi) < target_f01_ghz; ++i) hi *= 2.0;
    if (f01(lo) > target_f01_ghz || f01(hi) < target_f01_ghz)
        throw NumericalError("tune_transmon_ej: could not bracket target frequency");
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double f = f01(mid);
        if (std::abs(f - target_f01_ghz) < 1e-10) return mid;
        (f < target_f01_ghz ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace fluxlat
