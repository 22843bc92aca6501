#include "relcalc/harness/generators.hpp"

#include <algorithm>

namespace relcalc::harness {

namespace {

enum Stream : std::uint64_t {
    stream_structure = 1,
    stream_restriction = 2,
    stream_perturbation = 3,
    stream_lower_bounded = 4,
    stream_relative = 5,
};

void require_spec(const InstanceSpec& spec)
{
    spec.tol.validate();
    if (spec.n < 1)
        throw PreconditionError("instance spec: n must be positive");
    if (spec.dim_mul < 0 || spec.dim_mul > spec.n)
        throw PreconditionError("instance spec: dim_mul must lie in [0, n]");
    if (spec.dim_dom < 0)
        throw PreconditionError("instance spec: dim_dom must be nonnegative");
}

void require_target(double b)
{
    if (!(b >= 0.0) || !(b < 1.0))
        throw PreconditionError("instance spec: perturbation_target_b must lie in [0, 1)");
}

Sub from_basis(const MatrixX<double>& basis, const TolerancePolicy& tol)
{
    return Sub::from_orthonormal(basis, tol);
}

/// Random subspace of `host` whose dimension is uniform in [0, max_dim].
Sub random_part(const Sub& host, Index max_dim, Rng& rng)
{
    const Index k = rng.uniform_int(0, std::min(max_dim, host.dim()));
    return random_subspace_within(host, k, rng);
}

/// Scaling κ with pure_relative_bound(κ S0, T) = target, or nullopt when the
/// pure bound of S0 is zero or infinite.
std::optional<double> pure_scale(const RestrictedPair<double>& p, double target)
{
    const double pure = pure_relative_bound(p);
    if (!std::isfinite(pure) || pure <= 0.0)
        return std::nullopt;
    return target / pure;
}

RestrictedPair<double> scaled(RestrictedPair<double> p, double kappa)
{
    p.s_matrix *= kappa;
    return p;
}

/// Witness (a, b) for S = κ S0: pure when finite, else a from the quadratic form at b.
Perturbation finish(const Rel& t, const MatrixX<double>& dom, const MatrixX<double>& images, const Sub& mul,
                    double target, double rho)
{
    const Rel s0 = Rel::from_parts(dom, images, mul);
    const auto p0 = restrict_to_domain(s0, t);
    double kappa = 1.0;
    if (const auto k = pure_scale(p0, target))
        kappa = rho * *k;
    const Rel s = Rel::from_parts(dom, kappa * images, mul);
    const auto p = scaled(p0, kappa);
    // Within roundoff of the target the pure bound itself is the witness.
    const double pure = pure_relative_bound(p);
    if (pure <= target * (1.0 + 1e-12))
        return {s, 0.0, std::max(pure, target)};
    return {s, quadratic_a_for_b(p, target), target};
}

} // namespace

Sub random_subspace(Index n, Index k, Rng& rng, const TolerancePolicy& tol)
{
    if (k < 0 || k > n)
        throw PreconditionError("random_subspace: dimension out of range");
    if (k == 0)
        return Sub::zero(n, tol);
    return from_basis(thin_q<double>(rng.gaussian_matrix(n, k)), tol);
}

Sub random_subspace_within(const Sub& host, Index k, Rng& rng)
{
    if (k < 0 || k > host.dim())
        throw PreconditionError("random_subspace_within: dimension out of range");
    if (k == 0)
        return Sub::zero(host.ambient_dim(), host.tol());
    const MatrixX<double> coords = thin_q<double>(rng.gaussian_matrix(host.dim(), k));
    return from_basis(thin_q<double>(MatrixX<double>(host.basis() * coords)), host.tol());
}

Rel gen_relation(Index n, Index graph_dim, Rng& rng, const TolerancePolicy& tol)
{
    if (n < 1 || graph_dim < 0 || graph_dim > 2 * n)
        throw PreconditionError("gen_relation: graph dimension must lie in [0, 2n]");
    return Rel(n, random_subspace(2 * n, graph_dim, rng, tol));
}

Rel gen_self_adjoint(const InstanceSpec& spec)
{
    require_spec(spec);
    Rng rng(derive_seed(spec.seed, stream_structure));
    const Sub mul = random_subspace(spec.n, spec.dim_mul, rng, spec.tol);
    const Sub dom = complement(mul);
    const MatrixX<double> a = rng.hermitian(dom.dim());
    return Rel::from_parts(dom.basis(), dom.basis() * a, mul);
}

Rel gen_hermitian(const InstanceSpec& spec)
{
    require_spec(spec);
    if (spec.dim_dom + spec.dim_mul > spec.n)
        throw PreconditionError("gen_hermitian: dim_dom + dim_mul must not exceed n");
    const Rel t0 = gen_self_adjoint(spec);
    Rng rng(derive_seed(spec.seed, stream_restriction));
    const auto split = split_graph(t0);
    const Sub dom0 = from_basis(split.domain_basis, spec.tol);
    const Sub dom = random_subspace_within(dom0, spec.dim_dom, rng);
    // T0 acts on its domain as images = A_dom, so A restricted to dom is images * (dom0^H dom).
    const MatrixX<double> images = split.images * (split.domain_basis.adjoint() * dom.basis());
    return Rel::from_parts(dom.basis(), images, from_basis(split.mul_basis, spec.tol));
}

Perturbation gen_perturbation(const Rel& t, const InstanceSpec& spec)
{
    require_target(spec.perturbation_target_b);
    const auto& tol = t.tol();
    const Index n = t.space_dim();
    Rng rng(derive_seed(spec.seed, stream_perturbation));
    const auto split = split_graph(t);
    const Sub dom_t = from_basis(split.domain_basis, tol);
    const Sub mul_t = from_basis(split.mul_basis, tol);
    const double target = spec.perturbation_target_b;

    if (target == 0.0) {
        const double c = rng.uniform(-2.0, 2.0);
        return {Rel::from_parts(dom_t.basis(), c * dom_t.basis(), Sub::zero(n, tol)), std::abs(c), 0.0};
    }

    // D(S) = D(T) ⊕ E with E ⊥ D(T) + T(0), so S(0) ⊆ T(0) stays orthogonal to D(S).
    const Sub free = complement(sum(dom_t, mul_t));
    const Sub extra = random_part(free, free.dim(), rng);
    const Sub mul_s = random_part(mul_t, mul_t.dim(), rng);
    MatrixX<double> dom(n, dom_t.dim() + extra.dim());
    dom << dom_t.basis(), extra.basis();
    const MatrixX<double> h = rng.hermitian(dom.cols());
    const double rho = rng.uniform(0.5, 1.5);
    return finish(t, dom, dom * h, mul_s, target, rho);
}

Rel gen_lower_bounded(const InstanceSpec& spec)
{
    require_spec(spec);
    Rng rng(derive_seed(spec.seed, stream_lower_bounded));
    if (spec.dim_dom + spec.dim_mul <= spec.n && rng.coin()) {
        const double gamma = rng.uniform(0.5, 2.0) * (rng.coin() ? 1.0 : -1.0);
        return shift(gen_hermitian(spec), Complex<double>(0.0, gamma));
    }
    const Index m = spec.dim_mul;
    const Index k = std::min(spec.dim_dom, spec.n - m);
    const Sub mul = random_subspace(spec.n, m, rng, spec.tol);
    const Sub dom = random_subspace(spec.n, k, rng, spec.tol);
    const Sub target_space = complement(mul);
    // A Gaussian map into T(0)^⊥ of dimension >= k is injective almost surely.
    const MatrixX<double> images = target_space.basis() * rng.gaussian_matrix(target_space.dim(), k);
    return Rel::from_parts(dom.basis(), images, mul);
}

Perturbation gen_relative_perturbation(const Rel& t, const InstanceSpec& spec)
{
    if (!(spec.perturbation_target_b >= 0.0))
        throw PreconditionError("gen_relative_perturbation: target must be nonnegative");
    const auto& tol = t.tol();
    const Index n = t.space_dim();
    Rng rng(derive_seed(spec.seed, stream_relative));
    const auto split = split_graph(t);
    const Sub dom_t = from_basis(split.domain_basis, tol);
    const Sub mul_t = from_basis(split.mul_basis, tol);
    const Sub extra = random_part(complement(dom_t), n - dom_t.dim(), rng);
    const Sub mul_s = random_part(mul_t, mul_t.dim(), rng);
    MatrixX<double> dom(n, dom_t.dim() + extra.dim());
    dom << dom_t.basis(), extra.basis();
    const MatrixX<double> images = rng.gaussian_matrix(n, dom.cols());
    return finish(t, dom, images, mul_s, spec.perturbation_target_b, 1.0);
}

Perturbation gen_bounded_perturbation(const Rel& t, double a, const InstanceSpec& spec)
{
    if (!(a >= 0.0) || !std::isfinite(a))
        throw PreconditionError("gen_bounded_perturbation: a must be finite and nonnegative");
    const auto& tol = t.tol();
    const Index n = t.space_dim();
    Rng rng(derive_seed(spec.seed, stream_relative, 1));
    const auto split = split_graph(t);
    const Sub dom_t = from_basis(split.domain_basis, tol);
    const Sub mul_t = from_basis(split.mul_basis, tol);
    const Sub extra = random_part(complement(dom_t), n - dom_t.dim(), rng);
    const Sub mul_s = random_part(mul_t, mul_t.dim(), rng);
    MatrixX<double> dom(n, dom_t.dim() + extra.dim());
    dom << dom_t.basis(), extra.basis();
    MatrixX<double> images = rng.gaussian_matrix(n, dom.cols());
    const Rel s0 = Rel::from_parts(dom, images, mul_s);
    const double norm = spectral_norm<double>(restrict_to_domain(s0, t).s_matrix);
    const double kappa = norm > 0.0 ? a / norm : 0.0;
    return {Rel::from_parts(dom, kappa * images, mul_s), a, 0.0};
}

Perturbation gen_dominating_hermitian(const Rel& t, const InstanceSpec& spec)
{
    require_target(spec.perturbation_target_b);
    const auto& tol = t.tol();
    const Index n = t.space_dim();
    Rng rng(derive_seed(spec.seed, stream_perturbation, 1));
    const Sub dom_t = domain_of(t);
    const Sub extra = random_part(complement(dom_t), n - dom_t.dim(), rng);
    MatrixX<double> dom(n, dom_t.dim() + extra.dim());
    dom << dom_t.basis(), extra.basis();
    const Sub dom_s = from_basis(dom, tol);
    const Sub mul_s = random_part(complement(dom_s), n - dom_s.dim(), rng);
    const MatrixX<double> h = rng.hermitian(dom.cols());
    const double rho = rng.uniform(0.5, 1.5);
    if (spec.perturbation_target_b == 0.0) {
        const Rel s = Rel::from_parts(dom, dom * h, mul_s);
        return {s, spectral_norm<double>(restrict_to_domain(s, t).s_matrix), 0.0};
    }
    return finish(t, dom, dom * h, mul_s, spec.perturbation_target_b, rho);
}

} // namespace relcalc::harness
