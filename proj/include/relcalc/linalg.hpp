#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>

namespace relcalc {

using Index = Eigen::Index;

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using MatrixX = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using VectorX = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RealVectorX = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

/// Hilbert-space inner product, linear in the first argument: <x, y> = y^H x.
template <typename Real>
Complex<Real> inner(const VectorX<Real>& x, const VectorX<Real>& y)
{
    return y.dot(x);
}

template <typename Real>
Real infinity()
{
    return std::numeric_limits<Real>::infinity();
}

/// Singular values of `m` (descending); empty for an empty matrix.
template <typename Real>
RealVectorX<Real> singular_values(const MatrixX<Real>& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return RealVectorX<Real>(0);
    Eigen::JacobiSVD<MatrixX<Real>> svd(m);
    return svd.singularValues();
}

/// Spectral norm; zero for an empty matrix.
template <typename Real>
Real spectral_norm(const MatrixX<Real>& m)
{
    auto s = singular_values<Real>(m);
    return s.size() == 0 ? Real(0) : s(0);
}

template <typename Real>
bool all_finite(const MatrixX<Real>& m)
{
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                return false;
    return true;
}

/// Thin orthonormal factor of a full-column-rank matrix.
template <typename Real>
MatrixX<Real> thin_q(const MatrixX<Real>& m)
{
    if (m.cols() == 0)
        return MatrixX<Real>(m.rows(), 0);
    Eigen::HouseholderQR<MatrixX<Real>> qr(m);
    return qr.householderQ() * MatrixX<Real>::Identity(m.rows(), m.cols());
}

} // namespace relcalc
