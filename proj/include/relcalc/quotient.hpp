#pragma once

/// @file quotient.hpp
/// @brief Quotient space X/E, the single-valued part of a relation and its norms.
///
/// A class [x] ∈ X/E is represented by its component in E^⊥, which makes
/// X/E isometric to E^⊥ and removes all coset bookkeeping.

#include "relcalc/relation.hpp"

namespace relcalc {

/// <[x], [y]> = <x^⊥, y^⊥> with x^⊥ the component of x in E^⊥.
template <typename Real>
Complex<Real> quotient_inner(const Subspace<Real>& e, const VectorX<Real>& x, const VectorX<Real>& y)
{
    if (x.size() != e.ambient_dim() || y.size() != e.ambient_dim())
        throw DimensionMismatch("quotient_inner: vector length must equal ambient dimension");
    const VectorX<Real> xp = x - project(e, x);
    const VectorX<Real> yp = y - project(e, y);
    return inner<Real>(xp, yp);
}

/// d(f, E).
template <typename Real>
Real distance(const VectorX<Real>& f, const Subspace<Real>& e)
{
    return (f - project(e, f)).norm();
}

/// The operator T̃ₛ = Q_{T(0)} T with domain D(T).
///
/// `images` holds T̃ₛ applied to each column of `domain_basis`, written in
/// ambient coordinates and orthogonal to T(0).
template <typename Real = double>
class SingleValuedPart {
public:
    SingleValuedPart(GraphSplit<Real> split, const TolerancePolicy& tol)
        : domain_basis_(std::move(split.domain_basis))
        , images_(std::move(split.images))
        , mul_(Subspace<Real>::from_orthonormal(std::move(split.mul_basis), tol))
    {
    }

    const MatrixX<Real>& domain_basis() const { return domain_basis_; }
    const MatrixX<Real>& images() const { return images_; }
    const Subspace<Real>& multivalued_part() const { return mul_; }
    Index domain_dim() const { return domain_basis_.cols(); }

    /// Matrix from D(T)-coordinates to coordinates of an orthonormal basis of T(0)^⊥.
    MatrixX<Real> coordinate_matrix() const { return complement(mul_).basis().adjoint() * images_; }

    bool contains(const VectorX<Real>& x) const
    {
        const VectorX<Real> px = domain_basis_ * (domain_basis_.adjoint() * x);
        return (x - px).norm() <= Real(mul_.tol().angle_tol) * x.norm();
    }

    /// T̃ₛ x for x ∈ D(T) (the component of x outside D(T) is ignored).
    VectorX<Real> apply(const VectorX<Real>& x) const { return images_ * (domain_basis_.adjoint() * x); }

    /// ||T(x)||; throws DomainError for x ∉ D(T).
    Real norm_at(const VectorX<Real>& x) const
    {
        if (x.size() != domain_basis_.rows())
            throw DimensionMismatch("norm_at: vector length must equal space dimension");
        if (!contains(x))
            throw DomainError("norm_at: vector is not in the domain of the relation");
        return apply(x).norm();
    }

    /// ||T̃ₛ||; zero on the trivial domain.
    Real norm() const { return spectral_norm<Real>(images_); }

    /// Largest c with ||T(x)|| >= c||x|| on D(T); +inf on the trivial domain.
    Real lower_bound() const
    {
        if (domain_dim() == 0)
            return infinity<Real>();
        const auto s = singular_values<Real>(images_);
        return s(s.size() - 1);
    }

private:
    MatrixX<Real> domain_basis_;
    MatrixX<Real> images_;
    Subspace<Real> mul_;
};

template <typename Real>
SingleValuedPart<Real> single_valued_part(const Relation<Real>& t)
{
    return SingleValuedPart<Real>(split_graph(t), t.tol());
}

/// Some f with (x, f) ∈ T, read from a least-squares solve on the raw graph
/// basis instead of the canonical split; nullopt when x ∉ D(T).
template <typename Real>
std::optional<VectorX<Real>> least_squares_representative(const Relation<Real>& t, const VectorX<Real>& x)
{
    if (t.dim() == 0)
        return x.norm() == Real(0) ? std::optional<VectorX<Real>>(VectorX<Real>::Zero(t.space_dim())) : std::nullopt;
    const MatrixX<Real> args = t.arguments();
    // Thresholded SVD: the complex rank-deficient solve of
    // CompleteOrthogonalDecomposition is unreliable.
    Eigen::JacobiSVD<MatrixX<Real>> svd(args, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(Real(t.tol().rank_rel_tol));
    const VectorX<Real> y = svd.solve(x);
    if ((args * y - x).norm() > Real(t.tol().angle_tol) * std::max<Real>(x.norm(), Real(1)))
        return std::nullopt;
    return VectorX<Real>(t.values() * y);
}

/// ||T(x)|| = ||T̃ₛ x||.
///
/// In builds without NDEBUG the value is cross-checked against d(f, T(0))
/// for an independently solved representative f.
template <typename Real>
Real relation_norm_at(const Relation<Real>& t, const VectorX<Real>& x)
{
    const auto part = single_valued_part(t);
    const Real value = part.norm_at(x);
#ifndef NDEBUG
    if (const auto f = least_squares_representative(t, x)) {
        const Real other = distance<Real>(*f, part.multivalued_part());
        if (std::abs(other - value) > Real(1e-8) * std::max<Real>({value, other, Real(1)}))
            throw NumericalBreakdown("relation_norm_at: quotient norm and distance to T(0) disagree");
    }
#endif
    return value;
}

/// ||T|| = ||T̃ₛ||.
template <typename Real>
Real relation_norm(const Relation<Real>& t)
{
    return single_valued_part(t).norm();
}

} // namespace relcalc
