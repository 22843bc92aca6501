#pragma once

/// @file subspace.hpp
/// @brief Rank-revealing subspace arithmetic over C^m.
///
/// A Subspace stores an orthonormal basis as the columns of an m x d matrix.
/// Every rank decision goes through the TolerancePolicy carried by the value,
/// so the zero subspace (d = 0) and the full space need no special casing in
/// the relation layer.

#include "relcalc/errors.hpp"
#include "relcalc/linalg.hpp"
#include "relcalc/tolerance.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

namespace relcalc {

template <typename Real = double>
class Subspace {
public:
    using Scalar = Complex<Real>;
    using Matrix = MatrixX<Real>;
    using Vector = VectorX<Real>;

    /// Wraps a basis that is already orthonormal; the Gram matrix is checked.
    static Subspace from_orthonormal(Matrix basis, const TolerancePolicy& tol = {})
    {
        tol.validate();
        if (basis.rows() < 1)
            throw PreconditionError("subspace ambient dimension must be positive");
        if (basis.cols() > basis.rows())
            throw PreconditionError("more basis vectors than ambient dimension");
        if (!all_finite<Real>(basis))
            throw PreconditionError("non-finite entry in subspace basis");
        if (basis.cols() > 0) {
            const Matrix gram = basis.adjoint() * basis;
            const Real dev = (gram - Matrix::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff();
            if (dev >= Real(1e-12))
                throw PreconditionError("basis is not orthonormal (Gram deviation " + std::to_string(double(dev)) + ")");
        }
        return Subspace(std::move(basis), tol);
    }

    static Subspace zero(Index m, const TolerancePolicy& tol = {})
    {
        if (m < 1)
            throw PreconditionError("subspace ambient dimension must be positive");
        return Subspace(Matrix(m, 0), tol);
    }

    static Subspace full(Index m, const TolerancePolicy& tol = {})
    {
        if (m < 1)
            throw PreconditionError("subspace ambient dimension must be positive");
        return Subspace(Matrix::Identity(m, m), tol);
    }

    Index ambient_dim() const { return basis_.rows(); }
    Index dim() const { return basis_.cols(); }
    bool is_zero() const { return basis_.cols() == 0; }
    const Matrix& basis() const { return basis_; }
    const TolerancePolicy& tol() const { return tol_; }

    Matrix projector() const { return basis_ * basis_.adjoint(); }

private:
    Subspace(Matrix basis, const TolerancePolicy& tol)
        : basis_(std::move(basis))
        , tol_(tol)
    {
    }

    Matrix basis_;
    TolerancePolicy tol_;
};

namespace detail {

template <typename Real>
void require_same_ambient(const Subspace<Real>& a, const Subspace<Real>& b, const char* what)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch(std::string(what) + ": ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                                std::to_string(b.ambient_dim()) + " differ");
}

} // namespace detail

/// Orthonormal basis of the numerical column span of `vectors`.
///
/// Singular values below rank_rel_tol * max(sigma_max, reference_scale) are
/// dropped. With reference_scale = 0 the cut is purely relative; callers that
/// feed blocks of an orthonormal basis pass 1 so that roundoff-sized blocks
/// are recognised as zero.
template <typename Real>
Subspace<Real> orthonormalize_scaled(const MatrixX<Real>& vectors, const TolerancePolicy& tol, Real reference_scale)
{
    tol.validate();
    const Index m = vectors.rows();
    if (m < 1)
        throw PreconditionError("orthonormalize: ambient dimension must be positive");
    if (!all_finite<Real>(vectors))
        throw PreconditionError("orthonormalize: non-finite input");
    if (vectors.cols() == 0)
        return Subspace<Real>::zero(m, tol);

    Eigen::JacobiSVD<MatrixX<Real>> svd(vectors, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    const Real cut = Real(tol.rank_rel_tol) * std::max(s(0), reference_scale);
    Index rank = 0;
    while (rank < s.size() && s(rank) > cut)
        ++rank;
    if (rank == 0)
        return Subspace<Real>::zero(m, tol);
    // A second QR pass tightens orthonormality to working precision.
    return Subspace<Real>::from_orthonormal(thin_q<Real>(svd.matrixU().leftCols(rank)), tol);
}

/// Span of the columns of `vectors`, cut relative to the largest singular value.
template <typename Real>
Subspace<Real> orthonormalize(const MatrixX<Real>& vectors, const TolerancePolicy& tol = {})
{
    return orthonormalize_scaled<Real>(vectors, tol, Real(0));
}

/// List form: every vector must have the same length m >= 1.
template <typename Real>
Subspace<Real> orthonormalize(std::span<const VectorX<Real>> vectors, Index m, const TolerancePolicy& tol = {})
{
    if (m < 1)
        throw PreconditionError("orthonormalize: ambient dimension must be positive");
    MatrixX<Real> cols(m, static_cast<Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != m)
            throw DimensionMismatch("orthonormalize: vectors of unequal length");
        cols.col(static_cast<Index>(j)) = vectors[j];
    }
    return orthonormalize<Real>(cols, tol);
}

/// Orthogonal complement within C^m.
template <typename Real>
Subspace<Real> complement(const Subspace<Real>& a)
{
    const Index m = a.ambient_dim();
    const Index d = a.dim();
    if (d == 0)
        return Subspace<Real>::full(m, a.tol());
    if (d == m)
        return Subspace<Real>::zero(m, a.tol());
    Eigen::HouseholderQR<MatrixX<Real>> qr(a.basis());
    MatrixX<Real> q = qr.householderQ() * MatrixX<Real>::Identity(m, m);
    return Subspace<Real>::from_orthonormal(q.rightCols(m - d), a.tol());
}

/// Subspace sum A + B.
template <typename Real>
Subspace<Real> sum(const Subspace<Real>& a, const Subspace<Real>& b)
{
    detail::require_same_ambient(a, b, "sum");
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    MatrixX<Real> cols(a.ambient_dim(), a.dim() + b.dim());
    cols << a.basis(), b.basis();
    return orthonormalize_scaled<Real>(cols, a.tol(), Real(1));
}

/// Sines of the principal angles of A against B with the matching right
/// singular vectors, from the SVD of (I - P_B) Q_A.
template <typename Real>
Eigen::JacobiSVD<MatrixX<Real>> residual_svd(const Subspace<Real>& a, const Subspace<Real>& b)
{
    const MatrixX<Real> residual = a.basis() - b.basis() * (b.basis().adjoint() * a.basis());
    return Eigen::JacobiSVD<MatrixX<Real>>(residual, Eigen::ComputeFullV);
}

/// A ∩ B: directions of A whose distance to B is below angle_tol.
template <typename Real>
Subspace<Real> intersect(const Subspace<Real>& a, const Subspace<Real>& b)
{
    detail::require_same_ambient(a, b, "intersect");
    if (a.is_zero() || b.is_zero())
        return Subspace<Real>::zero(a.ambient_dim(), a.tol());
    const auto svd = residual_svd(a, b);
    const auto& s = svd.singularValues();
    const Real cut = Real(a.tol().angle_tol);
    // Singular values come sorted descending; columns beyond s.size() are exact null directions.
    Index first_small = 0;
    while (first_small < s.size() && s(first_small) >= cut)
        ++first_small;
    const Index k = a.dim() - first_small;
    if (k == 0)
        return Subspace<Real>::zero(a.ambient_dim(), a.tol());
    const MatrixX<Real> v = svd.matrixV().rightCols(k);
    return Subspace<Real>::from_orthonormal(thin_q<Real>(a.basis() * v), a.tol());
}

/// Orthogonal projection P_A v.
template <typename Real>
VectorX<Real> project(const Subspace<Real>& a, const VectorX<Real>& v)
{
    if (v.size() != a.ambient_dim())
        throw DimensionMismatch("project: vector length " + std::to_string(v.size()) + " != ambient dimension " +
                                std::to_string(a.ambient_dim()));
    if (a.is_zero())
        return VectorX<Real>::Zero(v.size());
    return a.basis() * (a.basis().adjoint() * v);
}

enum class Ordering { equal, a_subset_b, b_subset_a, incomparable };

inline const char* to_string(Ordering o)
{
    switch (o) {
    case Ordering::equal: return "equal";
    case Ordering::a_subset_b: return "A_subset_B";
    case Ordering::b_subset_a: return "B_subset_A";
    case Ordering::incomparable: return "incomparable";
    }
    return "?";
}

template <typename Real = double>
struct Comparison {
    Ordering ordering;
    Real max_angle;      ///< largest principal angle (radians), 0 when either side is {0}
    Real sin_a_from_b;   ///< ||(I - P_B) P_A||
    Real sin_b_from_a;   ///< ||(I - P_A) P_B||

    bool a_within_b() const { return ordering == Ordering::equal || ordering == Ordering::a_subset_b; }
    bool b_within_a() const { return ordering == Ordering::equal || ordering == Ordering::b_subset_a; }
};

/// Containment test: A ⊆ B iff ||(I - P_B) P_A|| < angle_tol (taken from A).
template <typename Real>
Comparison<Real> compare(const Subspace<Real>& a, const Subspace<Real>& b)
{
    detail::require_same_ambient(a, b, "compare");
    auto gap = [](const Subspace<Real>& x, const Subspace<Real>& y) -> Real {
        if (x.is_zero())
            return Real(0);
        if (y.is_zero())
            return Real(1);
        return spectral_norm<Real>(MatrixX<Real>(x.basis() - y.basis() * (y.basis().adjoint() * x.basis())));
    };
    const Real ab = gap(a, b);
    const Real ba = gap(b, a);
    const Real cut = Real(a.tol().angle_tol);
    const bool a_in_b = ab < cut;
    const bool b_in_a = ba < cut;

    Ordering ord = Ordering::incomparable;
    if (a_in_b && b_in_a && a.dim() == b.dim())
        ord = Ordering::equal;
    else if (a_in_b)
        ord = Ordering::a_subset_b;
    else if (b_in_a)
        ord = Ordering::b_subset_a;

    Real angle = 0;
    if (!a.is_zero() && !b.is_zero()) {
        const Real s = a.dim() <= b.dim() ? ab : ba;
        angle = std::asin(std::min<Real>(s, Real(1)));
    }
    return {ord, angle, ab, ba};
}

template <typename Real>
bool equal(const Subspace<Real>& a, const Subspace<Real>& b)
{
    return compare(a, b).ordering == Ordering::equal;
}

template <typename Real>
bool contains(const Subspace<Real>& outer, const Subspace<Real>& inner_space)
{
    return compare(inner_space, outer).a_within_b();
}

} // namespace relcalc
