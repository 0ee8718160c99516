#include "fluxlat/linalg.hpp"

#include <lapacke.h>

#include <cmath>

#include "fluxlat/errors.hpp"

namespace fluxlat {

EighResult eigh(const MatrixXcd& h) {
    const auto n = static_cast<lapack_int>(h.rows());
    if (h.rows() != h.cols()) throw NumericalError("eigh: matrix is not square");
    double resid = hermiticity_residual(h);
    if (resid > 1e-10)
        throw NumericalError("eigh: matrix is not Hermitian, residual " + std::to_string(resid));

    MatrixXcd a = h;  // overwritten with eigenvectors (column-major, matches Eigen)
    VectorXd w(n);
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'U', n,
                                     reinterpret_cast<lapack_complex_double*>(a.data()), n,
                                     w.data());
    if (info != 0)
        throw NumericalError("zheevd failed with info=" + std::to_string(info));
    return {std::move(w), std::move(a)};
}

EighRealResult eigh_real(const MatrixXd& h) {
    const auto n = static_cast<lapack_int>(h.rows());
    if (h.rows() != h.cols()) throw NumericalError("eigh_real: matrix is not square");
    MatrixXd a = h;
    VectorXd w(n);
    lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n, a.data(), n, w.data());
    if (info != 0)
        throw NumericalError("dsyevd failed with info=" + std::to_string(info));
    return {std::move(w), std::move(a)};
}

EighRealResult eigh_tridiagonal(const VectorXd& diag, const VectorXd& offdiag) {
    const auto n = static_cast<lapack_int>(diag.size());
    if (offdiag.size() != diag.size() - 1)
        throw NumericalError("eigh_tridiagonal: off-diagonal size mismatch");
    VectorXd d = diag;
    VectorXd e = offdiag;
    MatrixXd z(n, n);
    lapack_int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', n, d.data(), e.data(), z.data(), n);
    if (info != 0)
        throw NumericalError("dstev failed with info=" + std::to_string(info));
    return {std::move(d), std::move(z)};
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

void gauge_fix_columns(MatrixXd& vecs) {
    for (Eigen::Index c = 0; c < vecs.cols(); ++c) {
        Eigen::Index imax = 0;
        double vmax = 0.0;
        for (Eigen::Index r = 0; r < vecs.rows(); ++r) {
            double v = std::abs(vecs(r, c));
            if (v > vmax + 1e-300) {  // strict: ties keep the lowest index
                vmax = v;
                imax = r;
            }
        }
        if (vecs(imax, c) < 0.0) vecs.col(c) = -vecs.col(c);
    }
}

double hermiticity_residual(const MatrixXcd& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

MatrixXcd polar_unitary(const MatrixXcd& m) {
    Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace fluxlat
