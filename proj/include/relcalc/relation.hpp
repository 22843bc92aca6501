#pragma once

/// @file relation.hpp
/// @brief Linear relations on C^n as graph subspaces of C^n x C^n.
///
/// A graph vector is stored as (x; f): the first n coordinates are the
/// argument, the last n the value. The algebra below (sum, scalar multiple,
/// shift) is the operator-like one, acting on a common argument x.

#include "relcalc/subspace.hpp"

#include <optional>

namespace relcalc {

template <typename Real = double>
class Relation {
public:
    using Scalar = Complex<Real>;
    using Matrix = MatrixX<Real>;
    using Vector = VectorX<Real>;

    Relation(Index n, Subspace<Real> graph)
        : n_(n)
        , graph_(std::move(graph))
    {
        if (n < 1)
            throw PreconditionError("relation space dimension must be positive");
        if (graph_.ambient_dim() != 2 * n)
            throw DimensionMismatch("relation graph must live in C^" + std::to_string(2 * n));
    }

    /// Span of arbitrary graph vectors (columns of a 2n x k matrix).
    static Relation from_graph_vectors(Index n, const Matrix& cols, const TolerancePolicy& tol = {})
    {
        if (cols.rows() != 2 * n)
            throw DimensionMismatch("graph vectors must have length 2n");
        return Relation(n, orthonormalize<Real>(cols, tol));
    }

    /// Canonical assembly from an orthonormal domain basis, the images of those
    /// basis vectors and a multivalued part. Images are reduced modulo `mul`.
    static Relation from_parts(const Matrix& domain_basis, const Matrix& images, const Subspace<Real>& mul)
    {
        const Index n = mul.ambient_dim();
        const Index k = domain_basis.cols();
        if (domain_basis.rows() != n || images.rows() != n || images.cols() != k)
            throw DimensionMismatch("from_parts: inconsistent block sizes");
        if (k + mul.dim() > 2 * n)
            throw PreconditionError("from_parts: too many graph directions");
        Matrix reduced = images;
        if (!mul.is_zero())
            reduced -= mul.basis() * (mul.basis().adjoint() * images);
        Matrix g(2 * n, k + mul.dim());
        g.setZero();
        if (k > 0) {
            Matrix top(2 * n, k);
            top << domain_basis, reduced;
            g.leftCols(k) = thin_q<Real>(top);
        }
        g.bottomRightCorner(n, mul.dim()) = mul.basis();
        return Relation(n, Subspace<Real>::from_orthonormal(std::move(g), mul.tol()));
    }

    /// Graph of a square matrix.
    static Relation graph_of(const Matrix& a, const TolerancePolicy& tol = {})
    {
        if (a.rows() != a.cols())
            throw DimensionMismatch("graph_of: matrix must be square");
        const Index n = a.rows();
        return from_parts(Matrix::Identity(n, n), a, Subspace<Real>::zero(n, tol));
    }

    /// {(0, 0)}.
    static Relation zero(Index n, const TolerancePolicy& tol = {}) { return Relation(n, Subspace<Real>::zero(2 * n, tol)); }

    /// X x X.
    static Relation full(Index n, const TolerancePolicy& tol = {}) { return Relation(n, Subspace<Real>::full(2 * n, tol)); }

    /// {0} x X.
    static Relation pure_multivalued(Index n, const TolerancePolicy& tol = {})
    {
        return from_parts(Matrix(n, 0), Matrix(n, 0), Subspace<Real>::full(n, tol));
    }

    Index space_dim() const { return n_; }
    Index dim() const { return graph_.dim(); }
    const Subspace<Real>& graph() const { return graph_; }
    const TolerancePolicy& tol() const { return graph_.tol(); }

    /// x-part block of the graph basis (n x dim).
    auto arguments() const { return graph_.basis().topRows(n_); }
    /// f-part block of the graph basis (n x dim).
    auto values() const { return graph_.basis().bottomRows(n_); }

private:
    Index n_;
    Subspace<Real> graph_;
};

/// Domain, canonical images and multivalued part read off one SVD of the
/// argument block X = U S V^H of the graph basis [X; F].
///
/// domain_basis = U_r, images = F V_r S_r^{-1}, mul_basis = F V_0. Because
/// X^H X + F^H F = I, the images are automatically orthogonal to T(0).
template <typename Real = double>
struct GraphSplit {
    MatrixX<Real> domain_basis;
    MatrixX<Real> images;
    MatrixX<Real> mul_basis;
};

template <typename Real>
GraphSplit<Real> split_graph(const Relation<Real>& t)
{
    const Index n = t.space_dim();
    const Index d = t.dim();
    if (d == 0)
        return {MatrixX<Real>(n, 0), MatrixX<Real>(n, 0), MatrixX<Real>(n, 0)};
    const MatrixX<Real> x = t.arguments();
    const MatrixX<Real> f = t.values();
    Eigen::JacobiSVD<MatrixX<Real>> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const Real cut = Real(t.tol().rank_rel_tol);
    Index r = 0;
    while (r < s.size() && s(r) > cut)
        ++r;
    GraphSplit<Real> out;
    out.domain_basis = svd.matrixU().leftCols(r);
    const MatrixX<Real> vr = svd.matrixV().leftCols(r);
    out.images = f * vr * s.head(r).cwiseInverse().template cast<Complex<Real>>().asDiagonal();
    MatrixX<Real> null_dirs = svd.matrixV().rightCols(d - r);
    out.mul_basis = d - r > 0 ? thin_q<Real>(MatrixX<Real>(f * null_dirs)) : MatrixX<Real>(n, 0);
    if (out.mul_basis.cols() > 0 && out.images.cols() > 0)
        out.images -= out.mul_basis * (out.mul_basis.adjoint() * out.images);
    return out;
}

template <typename Real = double>
struct RelationParts {
    Subspace<Real> domain;    ///< D(T)
    Subspace<Real> range;     ///< R(T)
    Subspace<Real> mul_part;  ///< T(0)
    Subspace<Real> kernel;    ///< {x : (x, 0) in T}
};

template <typename Real>
Subspace<Real> range_of(const Relation<Real>& t)
{
    const Index n = t.space_dim();
    if (t.dim() == 0)
        return Subspace<Real>::zero(n, t.tol());
    return orthonormalize_scaled<Real>(MatrixX<Real>(t.values()), t.tol(), Real(1));
}

template <typename Real>
Subspace<Real> domain_of(const Relation<Real>& t)
{
    return Subspace<Real>::from_orthonormal(split_graph(t).domain_basis, t.tol());
}

template <typename Real>
Subspace<Real> mul_part_of(const Relation<Real>& t)
{
    const auto split = split_graph(t);
    return Subspace<Real>::from_orthonormal(split.mul_basis, t.tol());
}

template <typename Real>
RelationParts<Real> components(const Relation<Real>& t)
{
    const Index n = t.space_dim();
    const auto& tol = t.tol();
    const auto split = split_graph(t);
    Subspace<Real> kernel = Subspace<Real>::zero(n, tol);
    if (t.dim() > 0) {
        const MatrixX<Real> f = t.values();
        Eigen::JacobiSVD<MatrixX<Real>> svd(f, Eigen::ComputeFullV);
        const auto& s = svd.singularValues();
        Index r = 0;
        while (r < s.size() && s(r) > Real(tol.rank_rel_tol))
            ++r;
        if (t.dim() - r > 0)
            kernel = Subspace<Real>::from_orthonormal(
                thin_q<Real>(MatrixX<Real>(t.arguments() * svd.matrixV().rightCols(t.dim() - r))), tol);
    }
    return {Subspace<Real>::from_orthonormal(split.domain_basis, tol), range_of(t),
            Subspace<Real>::from_orthonormal(split.mul_basis, tol), std::move(kernel)};
}

/// T(x) as a representative plus the multivalued part, or nothing when x ∉ D(T).
template <typename Real = double>
struct ImageSet {
    VectorX<Real> representative;
    Subspace<Real> fiber;  ///< T(0)
};

template <typename Real>
bool in_domain(const GraphSplit<Real>& split, const VectorX<Real>& x, const TolerancePolicy& tol)
{
    const VectorX<Real> px = split.domain_basis * (split.domain_basis.adjoint() * x);
    return (x - px).norm() <= Real(tol.angle_tol) * x.norm();
}

template <typename Real>
std::optional<ImageSet<Real>> image_of(const Relation<Real>& t, const VectorX<Real>& x)
{
    if (x.size() != t.space_dim())
        throw DimensionMismatch("image_of: vector length must equal space dimension");
    const auto split = split_graph(t);
    if (!in_domain(split, x, t.tol()))
        return std::nullopt;
    VectorX<Real> f = split.images * (split.domain_basis.adjoint() * x);
    return ImageSet<Real>{std::move(f), Subspace<Real>::from_orthonormal(split.mul_basis, t.tol())};
}

/// αT = {(x, αf)}.
template <typename Real>
Relation<Real> scalar_mul(Complex<Real> alpha, const Relation<Real>& t)
{
    const auto split = split_graph(t);
    const Index n = t.space_dim();
    if (alpha == Complex<Real>(0))
        return Relation<Real>::from_parts(split.domain_basis, MatrixX<Real>::Zero(n, split.domain_basis.cols()),
                                          Subspace<Real>::zero(n, t.tol()));
    return Relation<Real>::from_parts(split.domain_basis, alpha * split.images,
                                      Subspace<Real>::from_orthonormal(split.mul_basis, t.tol()));
}

/// T - λI = {(x, f - λx)}.
template <typename Real>
Relation<Real> shift(const Relation<Real>& t, Complex<Real> lambda)
{
    const auto split = split_graph(t);
    return Relation<Real>::from_parts(split.domain_basis, split.images - lambda * split.domain_basis,
                                      Subspace<Real>::from_orthonormal(split.mul_basis, t.tol()));
}

/// Operator-like sum T + S = {(x, f + g) : (x, f) ∈ T, (x, g) ∈ S}.
template <typename Real>
Relation<Real> op_sum(const Relation<Real>& t, const Relation<Real>& s)
{
    if (t.space_dim() != s.space_dim())
        throw DimensionMismatch("op_sum: space dimensions differ");
    const auto& tol = t.tol();
    const auto st = split_graph(t);
    const auto ss = split_graph(s);
    const auto dt = Subspace<Real>::from_orthonormal(st.domain_basis, tol);
    const auto ds = Subspace<Real>::from_orthonormal(ss.domain_basis, tol);
    const auto common = intersect(dt, ds);
    const MatrixX<Real>& q = common.basis();
    const MatrixX<Real> images = st.images * (st.domain_basis.adjoint() * q) + ss.images * (ss.domain_basis.adjoint() * q);
    const auto mul = sum(Subspace<Real>::from_orthonormal(st.mul_basis, tol), Subspace<Real>::from_orthonormal(ss.mul_basis, tol));
    return Relation<Real>::from_parts(q, images, mul);
}

/// T* as the orthogonal complement of the rotated graph {(-f, x)}.
template <typename Real>
Relation<Real> adjoint(const Relation<Real>& t)
{
    const Index n = t.space_dim();
    if (t.dim() == 0)
        return Relation<Real>::full(n, t.tol());
    MatrixX<Real> rotated(2 * n, t.dim());
    rotated << -t.values(), t.arguments();
    return Relation<Real>(n, complement(Subspace<Real>::from_orthonormal(std::move(rotated), t.tol())));
}

/// max |<f_i, x_j> - <x_i, f_j>| over graph basis pairs; zero iff T ⊆ T*.
template <typename Real>
Real hermitian_defect(const Relation<Real>& t)
{
    if (t.dim() == 0)
        return Real(0);
    const MatrixX<Real> x = t.arguments();
    const MatrixX<Real> f = t.values();
    return (x.adjoint() * f - f.adjoint() * x).cwiseAbs().maxCoeff();
}

/// T ⊆ T*.
template <typename Real>
bool is_hermitian(const Relation<Real>& t)
{
    return compare(t.graph(), adjoint(t).graph()).a_within_b();
}

/// T = T*; for Hermitian T this is dim(T) = n.
template <typename Real>
bool is_self_adjoint(const Relation<Real>& t)
{
    return t.dim() == t.space_dim() && is_hermitian(t);
}

template <typename Real>
bool equal(const Relation<Real>& a, const Relation<Real>& b)
{
    return a.space_dim() == b.space_dim() && equal(a.graph(), b.graph());
}

} // namespace relcalc
