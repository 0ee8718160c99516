#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace fluxlat {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

struct EighResult {
    VectorXd eigenvalues;   // ascending
    MatrixXcd eigenvectors; // column k belongs to eigenvalue k
};

/// Full eigendecomposition of a Hermitian matrix (LAPACK zheevd).
/// Throws NumericalError if the input is not Hermitian to 1e-10 or the
/// backend reports failure.
EighResult eigh(const MatrixXcd& h);

/// Real-symmetric variant (LAPACK dsyevd).
struct EighRealResult {
    VectorXd eigenvalues;
    MatrixXd eigenvectors;
};
EighRealResult eigh_real(const MatrixXd& h);

/// Eigendecomposition of a real symmetric tridiagonal matrix (LAPACK dstev).
EighRealResult eigh_tridiagonal(const VectorXd& diag, const VectorXd& offdiag);

/// Kronecker product, row-major digit convention: the FIRST factor owns the
/// most significant digit of the composite index.
MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b);

/// Flip eigenvector signs (columns) so the largest-magnitude entry of each
/// column is real and positive; ties broken by lowest row index.
void gauge_fix_columns(MatrixXd& vecs);

/// max |a_ij - a_ji^*|, a cheap Hermiticity residual.
double hermiticity_residual(const MatrixXcd& a);

/// Unitary factor of the polar decomposition m = u * p (via SVD).
MatrixXcd polar_unitary(const MatrixXcd& m);

}  // namespace fluxlat
