#pragma once

/// @file bounds.hpp
/// @brief Relative boundedness of S with respect to T.
///
/// All routines work on D(T) in orthonormal coordinates y, where
/// ||S(x)|| = ||Ms y|| and ||T(x)|| = ||Mt y||. Three kinds of bound are
/// provided:
///   - the pure bound  ||Sx|| <= b ||Tx||,
///   - the quadratic form ||Sx||^2 <= a'^2 ||x||^2 + b'^2 ||Tx||^2 (exact),
///   - the linear form ||Sx|| <= a ||x|| + b ||Tx|| (certified upper bound
///     from support lines of the joint numerical range, sampled lower bound
///     from attained vectors).

#include "relcalc/deficiency.hpp"
#include "relcalc/parallel.hpp"
#include "relcalc/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace relcalc {

/// S and T restricted to D(T), in coordinates of an orthonormal basis of D(T).
template <typename Real = double>
struct RestrictedPair {
    MatrixX<Real> domain_basis;  ///< n x k
    MatrixX<Real> s_matrix;      ///< Ms, n x k
    MatrixX<Real> t_matrix;      ///< Mt, n x k
    TolerancePolicy tol;

    Index dim() const { return domain_basis.cols(); }
};

/// Requires D(T) ⊆ D(S).
template <typename Real>
RestrictedPair<Real> restrict_to_domain(const Relation<Real>& s, const Relation<Real>& t)
{
    if (s.space_dim() != t.space_dim())
        throw DimensionMismatch("relative bound: space dimensions differ");
    const auto pt = single_valued_part(t);
    const auto ps = single_valued_part(s);
    const auto& tol = t.tol();
    const auto dt = Subspace<Real>::from_orthonormal(pt.domain_basis(), tol);
    const auto ds = Subspace<Real>::from_orthonormal(ps.domain_basis(), tol);
    if (!compare(dt, ds).a_within_b())
        throw PreconditionError("relative bound: D(T) is not contained in D(S)");
    RestrictedPair<Real> out;
    out.domain_basis = pt.domain_basis();
    out.t_matrix = pt.images();
    out.s_matrix = ps.images() * (ps.domain_basis().adjoint() * pt.domain_basis());
    out.tol = tol;
    return out;
}

namespace detail {

/// Mt = U S V^H split into its range part Z = V_r S_r^{-1} (so that
/// ||Mt Z z|| = ||z||) and its numerical kernel N.
template <typename Real>
struct KernelSplit {
    MatrixX<Real> range_scaled;  ///< Z, k x r
    MatrixX<Real> null;          ///< N, k x (k - r)
    Real cut;                    ///< singular values <= cut count as zero
};

template <typename Real>
KernelSplit<Real> kernel_split(const RestrictedPair<Real>& p)
{
    const Index k = p.dim();
    Eigen::JacobiSVD<MatrixX<Real>> svd(p.t_matrix, Eigen::ComputeFullV);
    const auto& st = svd.singularValues();
    const Real scale = std::max(st.size() ? st(0) : Real(0), spectral_norm<Real>(p.s_matrix));
    const Real cut = Real(p.tol.rank_rel_tol) * scale;
    Index r = 0;
    while (r < st.size() && st(r) > cut)
        ++r;
    KernelSplit<Real> out;
    out.range_scaled = svd.matrixV().leftCols(r) * st.head(r).cwiseInverse().template cast<Complex<Real>>().asDiagonal();
    out.null = svd.matrixV().rightCols(k - r);
    out.cut = cut;
    return out;
}

template <typename Real>
Real lambda_max(const MatrixX<Real>& h)
{
    Eigen::SelfAdjointEigenSolver<MatrixX<Real>> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(h.rows() - 1);
}

} // namespace detail

/// sup ||Sx|| / ||Tx|| over x ∈ D(T) with Tx ≠ 0; +inf when some x has
/// ||Tx|| = 0 < ||Sx||.
template <typename Real>
Real pure_relative_bound(const RestrictedPair<Real>& p)
{
    if (p.dim() == 0)
        return Real(0);
    const auto ks = detail::kernel_split(p);
    if (ks.null.cols() > 0 && spectral_norm<Real>(MatrixX<Real>(p.s_matrix * ks.null)) > ks.cut)
        return infinity<Real>();
    if (ks.range_scaled.cols() == 0)
        return Real(0);
    return spectral_norm<Real>(MatrixX<Real>(p.s_matrix * ks.range_scaled));
}

template <typename Real>
Real pure_relative_bound(const Relation<Real>& s, const Relation<Real>& t)
{
    return pure_relative_bound(restrict_to_domain(s, t));
}

/// Minimal b' with ||Sx||^2 <= a'^2 ||x||^2 + b'^2 ||Tx||^2 on D(T).
///
/// Writing y = Z z + N w, the form is PSD iff Q = a'^2 I - L^H L is PSD and
/// P + b'^2 I - R Q^+ R^H is PSD, with K = Ms Z, L = Ms N, R = K^H L and
/// P = a'^2 Z^H Z - K^H K.
template <typename Real>
Real quadratic_bound(const RestrictedPair<Real>& p, Real a_prime)
{
    if (!(a_prime >= Real(0)))
        throw PreconditionError("quadratic_bound: a' must be nonnegative");
    if (p.dim() == 0)
        return Real(0);
    const auto ks = detail::kernel_split(p);
    const Index r = ks.range_scaled.cols();
    const Index nk = ks.null.cols();
    const Real a2 = a_prime * a_prime;
    const MatrixX<Real> l = p.s_matrix * ks.null;
    if (r == 0)
        return spectral_norm<Real>(l) <= a_prime + ks.cut ? Real(0) : infinity<Real>();

    const MatrixX<Real> k = p.s_matrix * ks.range_scaled;
    MatrixX<Real> schur = k.adjoint() * k - a2 * (ks.range_scaled.adjoint() * ks.range_scaled);
    if (nk > 0) {
        const MatrixX<Real> q = a2 * MatrixX<Real>::Identity(nk, nk) - l.adjoint() * l;
        const MatrixX<Real> rr = k.adjoint() * l;
        Eigen::SelfAdjointEigenSolver<MatrixX<Real>> es(q);
        const Real s_norm = spectral_norm<Real>(p.s_matrix);
        const Real qcut = Real(p.tol.rank_rel_tol) * std::max(a2, s_norm * s_norm);
        if (es.eigenvalues()(0) < -qcut)
            return infinity<Real>();
        MatrixX<Real> qpinv = MatrixX<Real>::Zero(nk, nk);
        for (Index j = 0; j < nk; ++j) {
            const VectorX<Real> v = es.eigenvectors().col(j);
            const Real lam = es.eigenvalues()(j);
            if (lam > qcut) {
                qpinv += (v * v.adjoint()) / lam;
            } else if ((rr * v).norm() > Real(1e-8) * std::max<Real>(spectral_norm<Real>(k) * s_norm, Real(1))) {
                return infinity<Real>();
            }
        }
        schur += rr * qpinv * rr.adjoint();
    }
    const Real beta = detail::lambda_max<Real>(MatrixX<Real>((schur + schur.adjoint()) / Real(2)));
    // Cancellation in the Schur complement leaves O(eps * scale) residue that sqrt would inflate.
    const Real floor = Real(64) * std::numeric_limits<Real>::epsilon() *
                       std::max({spectral_norm<Real>(MatrixX<Real>(k.adjoint() * k)),
                                 a2 * spectral_norm<Real>(MatrixX<Real>(ks.range_scaled.adjoint() * ks.range_scaled)),
                                 Real(std::numeric_limits<Real>::min())});
    return beta <= floor ? Real(0) : std::sqrt(beta);
}

template <typename Real>
Real quadratic_bound(const Relation<Real>& s, const Relation<Real>& t, Real a_prime)
{
    return quadratic_bound(restrict_to_domain(s, t), a_prime);
}

/// Minimal a' with ||Sx||^2 <= a'^2 ||x||^2 + b'^2 ||Tx||^2 on D(T) for given b'.
template <typename Real>
Real quadratic_a_for_b(const RestrictedPair<Real>& p, Real b_prime)
{
    if (!(b_prime >= Real(0)))
        throw PreconditionError("quadratic_a_for_b: b' must be nonnegative");
    if (p.dim() == 0)
        return Real(0);
    const MatrixX<Real> h = p.s_matrix.adjoint() * p.s_matrix - b_prime * b_prime * (p.t_matrix.adjoint() * p.t_matrix);
    return std::sqrt(std::max(detail::lambda_max<Real>(MatrixX<Real>((h + h.adjoint()) / Real(2))), Real(0)));
}

template <typename Real = double>
struct QuadraticConstants {
    Real a_prime;
    Real b_prime;
};

template <typename Real = double>
struct LinearConstants {
    Real a;
    Real b;
};

/// Linear-form constants (a, b) to quadratic ones: a'^2 = (1 + 1/eps) a^2, b'^2 = (1 + eps) b^2.
template <typename Real>
QuadraticConstants<Real> convert_bounds(Real a, Real b, Real eps)
{
    if (!(a >= Real(0)) || !(b >= Real(0)))
        throw PreconditionError("convert_bounds: a and b must be nonnegative");
    if (!(eps > Real(0)))
        throw PreconditionError("convert_bounds: epsilon must be positive");
    return {std::sqrt(Real(1) + Real(1) / eps) * a, std::sqrt(Real(1) + eps) * b};
}

/// Quadratic constants imply the linear form with the same numbers.
template <typename Real>
LinearConstants<Real> quadratic_to_linear(Real a_prime, Real b_prime)
{
    if (!(a_prime >= Real(0)) || !(b_prime >= Real(0)))
        throw PreconditionError("quadratic_to_linear: constants must be nonnegative");
    return {a_prime, b_prime};
}

template <typename Real = double>
struct CurvePoint {
    Real a;
    Real b_certified;   ///< upper bound on b_min(a)
    Real b_sampled;     ///< attained lower bound on b_min(a)
    Real b_quadratic;   ///< b' of the quadratic form at a' = a
    VectorX<Real> witness;  ///< x ∈ D(T) attaining b_sampled (ambient coordinates)
};

template <typename Real = double>
struct BoundReport {
    Real pure_b;
    std::vector<CurvePoint<Real>> curve;
    Real t_bound;      ///< infimum of achievable b over all a
    Real absorbing_a;  ///< smallest a with b_min(a) = 0, i.e. ||S|| on D(T)
};

struct BoundOptions {
    std::uint64_t seed = 0x243f6a8885a308d3ULL;
    unsigned threads = 1;
    int angles = 96;
    int refine_rounds = 12;
    int local_iterations = 80;
};

namespace detail {

template <typename Real>
struct SupportLine {
    Real phi;
    Real slope;      ///< p <= intercept + slope * s
    Real intercept;
    VectorX<Real> y; ///< boundary point of the joint numerical range
};

template <typename Real>
struct Candidate {
    VectorX<Real> y;
    Real ns, nt, ny;  ///< ||Ms y||, ||Mt y||, ||y||
};

/// b_min(a) = sup (||Ms y|| - a||y||) / ||Mt y|| on the sphere of D(T).
///
/// The joint numerical range W = {(y^H A y, y^H B y)} of A = Ms^H Ms and
/// B = Mt^H Mt is convex, the objective increases in p = ||Ms y||^2, so the
/// supremum sits on the upper boundary of W. Support lines
/// cos(phi) p + sin(phi) s <= lambda_max(cos(phi) A + sin(phi) B) bound that
/// boundary from above (certified); their top eigenvectors lie on it
/// (attained).
template <typename Real>
class LinearBoundSolver {
public:
    LinearBoundSolver(RestrictedPair<Real> pair, const BoundOptions& opts)
        : p_(std::move(pair))
        , opts_(opts)
    {
        const Index k = p_.dim();
        a_ = p_.s_matrix.adjoint() * p_.s_matrix;
        b_ = p_.t_matrix.adjoint() * p_.t_matrix;
        s_norm_ = spectral_norm<Real>(p_.s_matrix);
        if (k == 0)
            return;
        ks_ = kernel_split(p_);
        null_image_norm_ = ks_.null.cols() > 0 ? spectral_norm<Real>(MatrixX<Real>(p_.s_matrix * ks_.null)) : Real(0);
        if (ks_.null.cols() > 0) {
            Eigen::JacobiSVD<MatrixX<Real>> svd(MatrixX<Real>(p_.s_matrix * ks_.null), Eigen::ComputeFullV);
            null_witness_ = ks_.null * svd.matrixV().col(0);
        }
        sa_ = spectral_norm<Real>(a_);
        sb_ = spectral_norm<Real>(b_);
        Eigen::SelfAdjointEigenSolver<MatrixX<Real>> eb(b_, Eigen::EigenvaluesOnly);
        s_min_ = std::max(eb.eigenvalues()(0), Real(0));
        s_max_ = eb.eigenvalues()(k - 1);
        if (sa_ == Real(0) || sb_ == Real(0))
            return;
        for (int j = 0; j < opts_.angles; ++j) {
            const Real phi = -std::numbers::pi_v<Real> / 2 + std::numbers::pi_v<Real> * (Real(j) + Real(0.5)) / Real(opts_.angles);
            base_lines_.push_back(support_line(phi));
        }
        draw_samples();
    }

    Real s_norm() const { return s_norm_; }

    CurvePoint<Real> evaluate(Real a) const
    {
        CurvePoint<Real> pt{a, Real(0), Real(0), Real(0), VectorX<Real>::Zero(p_.domain_basis.rows())};
        if (p_.dim() == 0 || sa_ == Real(0))
            return pt;
        pt.b_quadratic = quadratic_bound(p_, a);
        if (ks_.null.cols() > 0 && null_image_norm_ > a + ks_.cut) {
            pt.b_certified = pt.b_sampled = infinity<Real>();
            pt.witness = p_.domain_basis * null_witness_;
            return pt;
        }
        if (ks_.range_scaled.cols() == 0)
            return pt;

        std::vector<SupportLine<Real>> lines = base_lines_;
        Real cert = Real(0);
        Real s_star = Real(0);
        for (int round = 0; round <= opts_.refine_rounds; ++round) {
            std::sort(lines.begin(), lines.end(), [](const auto& l, const auto& r) { return l.phi < r.phi; });
            std::tie(cert, s_star) = envelope_sup(lines, a);
            if (round == opts_.refine_rounds || !std::isfinite(cert))
                break;
            refine_near(lines, s_star);
        }

        Candidate<Real> best{};
        Real best_val = -infinity<Real>();
        auto consider = [&](const Candidate<Real>& c) {
            const Real v = objective(c, a);
            if (v > best_val) {
                best_val = v;
                best = c;
            }
        };
        for (const auto& l : lines)
            consider(make_candidate(l.y));
        for (const auto& c : samples_)
            consider(c);
        if (best.y.size() > 0 && std::isfinite(best_val))
            consider(local_ascent(best, a));

        pt.b_sampled = std::max(best_val, Real(0));
        if (best.y.size() > 0)
            pt.witness = p_.domain_basis * best.y;
        pt.b_certified = std::min(std::max(cert, Real(0)), pt.b_quadratic);
        return pt;
    }

private:
    SupportLine<Real> support_line(Real phi) const
    {
        const Real c = std::cos(phi), s = std::sin(phi);
        const MatrixX<Real> m = (c / sa_) * a_ + (s / sb_) * b_;
        Eigen::SelfAdjointEigenSolver<MatrixX<Real>> es(MatrixX<Real>((m + m.adjoint()) / Real(2)));
        const Index k = m.rows();
        const Real lam = es.eigenvalues()(k - 1);
        return {phi, -sa_ * s / (sb_ * c), sa_ * lam / c, es.eigenvectors().col(k - 1)};
    }

    Candidate<Real> make_candidate(const VectorX<Real>& y) const
    {
        return {y, (p_.s_matrix * y).norm(), (p_.t_matrix * y).norm(), y.norm()};
    }

    Real objective(const Candidate<Real>& c, Real a) const
    {
        if (!(c.nt > ks_.cut * c.ny))
            return -infinity<Real>();
        return (c.ns - a * c.ny) / c.nt;
    }

    /// Sphere samples in fixed chunks with per-chunk seeds, so the set does
    /// not depend on the worker count.
    void draw_samples()
    {
        const Index k = p_.dim();
        const std::size_t total = static_cast<std::size_t>(10 * k * k);
        constexpr std::size_t chunk = 64;
        const std::size_t chunks = (total + chunk - 1) / chunk;
        std::vector<std::vector<Candidate<Real>>> parts(chunks);
        parallel_for(chunks, opts_.threads, [&](std::size_t c) {
            Rng rng(derive_seed(opts_.seed, 0xb0u, c));
            const std::size_t count = std::min(chunk, total - c * chunk);
            parts[c].reserve(count);
            for (std::size_t i = 0; i < count; ++i)
                parts[c].push_back(make_candidate(rng.unit_vector<Real>(k)));
        });
        for (auto& part : parts)
            for (auto& c : part)
                samples_.push_back(std::move(c));
    }

    /// Supremum of (sqrt(g(s)) - a) / sqrt(s) for the piecewise-linear upper
    /// envelope g of `lines` on [s_min, s_max]; also returns the maximiser.
    std::pair<Real, Real> envelope_sup(const std::vector<SupportLine<Real>>& lines, Real a) const
    {
        // Lower envelope of lines sorted by decreasing slope (increasing phi).
        std::vector<const SupportLine<Real>*> hull;
        auto cross = [](const SupportLine<Real>* l1, const SupportLine<Real>* l2) {
            return (l2->intercept - l1->intercept) / (l1->slope - l2->slope);
        };
        for (const auto& l : lines) {
            if (!hull.empty() && hull.back()->slope == l.slope) {
                if (hull.back()->intercept <= l.intercept)
                    continue;
                hull.pop_back();
            }
            while (hull.size() >= 2 && cross(hull[hull.size() - 2], &l) <= cross(hull[hull.size() - 2], hull.back()))
                hull.pop_back();
            hull.push_back(&l);
        }
        Real best = -infinity<Real>();
        Real best_s = s_max_;
        const Real a2 = a * a;
        auto eval = [&](const SupportLine<Real>* l, Real s) {
            if (!(s > Real(0)))
                return;
            const Real g = std::max(l->intercept + l->slope * s, Real(0));
            const Real v = (std::sqrt(g) - a) / std::sqrt(s);
            if (v > best) {
                best = v;
                best_s = s;
            }
        };
        for (std::size_t i = 0; i < hull.size(); ++i) {
            Real lo = i == 0 ? s_min_ : std::max(s_min_, cross(hull[i - 1], hull[i]));
            Real hi = i + 1 == hull.size() ? s_max_ : std::min(s_max_, cross(hull[i], hull[i + 1]));
            if (lo > hi)
                continue;
            const SupportLine<Real>* l = hull[i];
            const Real c = l->intercept, mu = l->slope;
            if (!(lo > Real(0)) && c > a2 * (Real(1) + Real(1e-12)))
                return {infinity<Real>(), Real(0)};
            eval(l, lo);
            eval(l, hi);
            // Stationary point of sqrt(c u^2 + mu) - a u in u = 1/sqrt(s).
            const Real den = c * (c - a2);
            if (den != Real(0)) {
                const Real u2 = a2 * mu / den;
                if (u2 > Real(0)) {
                    const Real s = Real(1) / u2;
                    if (s >= lo && s <= hi)
                        eval(l, s);
                }
            }
        }
        return {best, best_s};
    }

    /// Inserts angles around the support line tangent closest to s_star.
    void refine_near(std::vector<SupportLine<Real>>& lines, Real s_star) const
    {
        // Tangent points are ordered by phi; find the first whose s exceeds s_star.
        std::size_t j = 0;
        while (j < lines.size() && std::real(lines[j].y.dot(b_ * lines[j].y)) < s_star)
            ++j;
        const Real half_pi = std::numbers::pi_v<Real> / 2;
        const Real lo = j == 0 ? -half_pi : lines[j - 1].phi;
        const Real hi = j == lines.size() ? half_pi : lines[j].phi;
        constexpr int inserts = 8;
        for (int i = 1; i <= inserts; ++i) {
            const Real phi = lo + (hi - lo) * Real(i) / Real(inserts + 1);
            if (std::abs(std::cos(phi)) > Real(0))
                lines.push_back(support_line(phi));
        }
    }

    /// Gradient ascent of the objective on the sphere.
    Candidate<Real> local_ascent(Candidate<Real> c, Real a) const
    {
        Real val = objective(c, a);
        for (int it = 0; it < opts_.local_iterations; ++it) {
            if (!(c.ns > Real(0)) || !std::isfinite(val))
                break;
            const VectorX<Real>& y = c.y;
            const VectorX<Real> grad_num = (a_ * y) / c.ns - (a / c.ny) * y;
            const VectorX<Real> grad_den = (b_ * y) / c.nt;
            VectorX<Real> grad = (grad_num * c.nt - (c.ns - a * c.ny) * grad_den) / (c.nt * c.nt);
            grad -= y * (y.dot(grad) / y.squaredNorm());
            const Real gnorm = grad.norm();
            if (!(gnorm > Real(1e-15)))
                break;
            bool improved = false;
            for (Real step = Real(1) / gnorm; step > Real(1e-14); step /= 2) {
                VectorX<Real> trial = y + step * grad;
                trial /= trial.norm();
                const auto cand = make_candidate(trial);
                const Real v = objective(cand, a);
                if (v > val) {
                    c = cand;
                    val = v;
                    improved = true;
                    break;
                }
            }
            if (!improved)
                break;
        }
        return c;
    }

    RestrictedPair<Real> p_;
    BoundOptions opts_;
    MatrixX<Real> a_, b_;
    KernelSplit<Real> ks_{};
    VectorX<Real> null_witness_;
    Real null_image_norm_ = 0;
    Real s_norm_ = 0, sa_ = 0, sb_ = 0, s_min_ = 0, s_max_ = 0;
    std::vector<SupportLine<Real>> base_lines_;
    std::vector<Candidate<Real>> samples_;
};

} // namespace detail

/// Default grid: a = 0 followed by 31 geometric points up to ||S|| on D(T).
template <typename Real>
std::vector<Real> default_a_grid(const RestrictedPair<Real>& p)
{
    std::vector<Real> grid{Real(0)};
    const auto sv = singular_values<Real>(p.s_matrix);
    if (sv.size() == 0 || sv(0) == Real(0))
        return grid;
    const Real hi = sv(0);
    const Real lo = std::max(sv(sv.size() - 1), hi * Real(1e-3));
    constexpr int points = 31;
    for (int i = 0; i < points; ++i) {
        const Real t = Real(i) / Real(points - 1);
        grid.push_back(lo == hi ? hi : lo * std::pow(hi / lo, t));
    }
    return grid;
}

/// b_min(a) for each a of a nonnegative ascending grid.
template <typename Real>
BoundReport<Real> bound_curve(const RestrictedPair<Real>& p, std::span<const Real> a_grid, const BoundOptions& opts = {})
{
    for (std::size_t i = 0; i < a_grid.size(); ++i) {
        if (!(a_grid[i] >= Real(0)))
            throw PreconditionError("bound_curve: grid values must be nonnegative");
        if (i > 0 && a_grid[i] < a_grid[i - 1])
            throw PreconditionError("bound_curve: grid must be ascending");
    }
    const detail::LinearBoundSolver<Real> solver(p, opts);
    BoundReport<Real> report;
    report.curve.reserve(a_grid.size());
    for (Real a : a_grid)
        report.curve.push_back(solver.evaluate(a));
    // b_min is non-increasing: an upper bound at a smaller a stays valid to
    // the right, an attained value at a larger a stays attained to the left.
    for (std::size_t i = 1; i < report.curve.size(); ++i)
        report.curve[i].b_certified = std::min(report.curve[i].b_certified, report.curve[i - 1].b_certified);
    for (std::size_t i = report.curve.size(); i-- > 1;) {
        if (report.curve[i].b_sampled > report.curve[i - 1].b_sampled) {
            report.curve[i - 1].b_sampled = report.curve[i].b_sampled;
            report.curve[i - 1].witness = report.curve[i].witness;
        }
    }
    report.pure_b = pure_relative_bound(p);
    // With a = ||S|| on D(T) the a-term absorbs S entirely, so the infimum over b is 0.
    report.t_bound = Real(0);
    report.absorbing_a = solver.s_norm();
    return report;
}

template <typename Real>
BoundReport<Real> bound_curve(const Relation<Real>& s, const Relation<Real>& t, std::span<const Real> a_grid,
                              const BoundOptions& opts = {})
{
    return bound_curve(restrict_to_domain(s, t), a_grid, opts);
}

template <typename Real>
BoundReport<Real> bound_curve(const Relation<Real>& s, const Relation<Real>& t, const BoundOptions& opts = {})
{
    const auto p = restrict_to_domain(s, t);
    const auto grid = default_a_grid(p);
    return bound_curve(p, std::span<const Real>(grid), opts);
}

} // namespace relcalc
