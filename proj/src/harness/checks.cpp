#include "relcalc/harness/checks.hpp"

#include "relcalc/deficiency.hpp"

#include <cstdio>

namespace relcalc::harness {

void TheoremReport::record(std::uint64_t seed, Verdict verdict, std::string diagnostic)
{
    ++instances_run;
    switch (verdict) {
    case Verdict::pass:
        ++passes;
        break;
    case Verdict::inapplicable:
        ++inapplicable;
        break;
    case Verdict::fail:
        failures.push_back({seed, std::move(diagnostic)});
        break;
    }
}

void TheoremReport::merge(const TheoremReport& other)
{
    if (theorem_id.empty())
        theorem_id = other.theorem_id;
    if (tolerances.empty())
        tolerances = other.tolerances;
    fuzz = fuzz || other.fuzz;
    instances_run += other.instances_run;
    passes += other.passes;
    inapplicable += other.inapplicable;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

using C = Complex<double>;

struct Outcome {
    Verdict verdict = Verdict::pass;
    std::string diagnostic;

    static Outcome inapplicable(std::string why) { return {Verdict::inapplicable, std::move(why)}; }

    /// Keeps the first failure message.
    void fail(std::string why)
    {
        if (verdict == Verdict::pass) {
            verdict = Verdict::fail;
            diagnostic = std::move(why);
        }
    }
    bool failed() const { return verdict == Verdict::fail; }
};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

TheoremReport single(const char* id, const CheckOptions& opts, const Outcome& o,
                     std::vector<std::pair<std::string, double>> tolerances)
{
    TheoremReport r;
    r.theorem_id = id;
    r.fuzz = opts.fuzz;
    r.tolerances = std::move(tolerances);
    r.record(opts.seed, o.verdict, o.diagnostic);
    return r;
}

MatrixX<double> sample_coords(Index k, int count, Rng& rng)
{
    return rng.gaussian_matrix(k, count);
}

/// Random coordinates plus the axis and top right-singular directions of Ms,
/// which is where a linear witness is tightest.
MatrixX<double> witness_probes(const RestrictedPair<double>& p, int samples, Rng& rng)
{
    const Index k = p.dim();
    Eigen::JacobiSVD<MatrixX<double>> svd(p.s_matrix, Eigen::ComputeFullV);
    MatrixX<double> probes(k, samples + 2 * k);
    probes << sample_coords(k, samples, rng), MatrixX<double>::Identity(k, k), svd.matrixV();
    return probes;
}

bool mul_contained(const Rel& s, const Rel& t)
{
    return compare(mul_part_of(s), mul_part_of(t)).a_within_b();
}

Index range_defect(const Rel& t)
{
    return complement(range_of(t)).dim();
}

Outcome lemma_3_1(const Rel& t, const Rel& s, double c, double b, const CheckOptions& opts)
{
    if (!(c > 0.0) || !std::isfinite(c))
        return Outcome::inapplicable("c must be positive and finite");
    if (!(b >= 0.0) || (!opts.fuzz && !(b < 1.0)))
        return Outcome::inapplicable("b outside [0, 1)");
    RestrictedPair<double> pair;
    try {
        pair = restrict_to_domain(s, t);
    } catch (const PreconditionError&) {
        return Outcome::inapplicable("D(T) not contained in D(S)");
    }
    if (!opts.fuzz && !mul_contained(s, t))
        return Outcome::inapplicable("S(0) not contained in T(0)");
    const double c_t = lower_bound_constant(t);
    if (c_t < c * (1.0 - tolerance::hypothesis_rel))
        return Outcome::inapplicable("lower bound " + num(c_t) + " below c = " + num(c));
    const double pure = pure_relative_bound(pair);
    if (pure > b * (1.0 + tolerance::hypothesis_rel) + 1e-12)
        return Outcome::inapplicable("pure relative bound " + num(pure) + " exceeds b = " + num(b));

    Outcome out;
    const Rel ts = op_sum(t, s);
    const double c1 = lower_bound_constant(ts);
    const double required = (1.0 - b) * c - tolerance::lower_bound_abs;
    if (c1 < required)
        out.fail("lower bound of T+S " + num(c1) + " < (1-b)c = " + num((1.0 - b) * c));
    const Index dt = range_defect(t);
    const Index dts = range_defect(ts);
    if (dt != dts)
        out.fail("dim R(T+S)^perp = " + std::to_string(dts) + " but dim R(T)^perp = " + std::to_string(dt));
    return out;
}

/// Shared core of check_lemma_3_3 and check_theorem_3_1.
Outcome lemma_3_3(const Rel& t, const Rel& s, double a, double b, const CheckOptions& opts, bool theorem)
{
    if (!is_hermitian(t))
        return Outcome::inapplicable("T is not Hermitian");
    if (!is_hermitian(s))
        return Outcome::inapplicable("S is not Hermitian");
    if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a))
        return Outcome::inapplicable("witness constants must be nonnegative");
    if (!opts.fuzz && !(b < 1.0))
        return Outcome::inapplicable("witness b >= 1");
    RestrictedPair<double> pair;
    try {
        pair = restrict_to_domain(s, t);
    } catch (const PreconditionError&) {
        return Outcome::inapplicable("D(T) not contained in D(S)");
    }
    if (!opts.fuzz && !mul_contained(s, t))
        return Outcome::inapplicable("S(0) not contained in T(0)");
    const double viol = witness_violation(t, s, a, b, opts.x_samples, opts.seed);
    if (viol > tolerance::sample_slack)
        return Outcome::inapplicable("witness (a, b) violated on a sample by " + num(viol));

    Outcome out;
    const Rel ts = op_sum(t, s);
    if (!is_hermitian(ts)) {
        out.fail("T+S is not Hermitian");
        return out;
    }
    const auto dp_t = deficiency_pair(t);
    const auto dp_ts = deficiency_pair(ts);
    if (!(dp_t == dp_ts))
        out.fail("deficiency (" + std::to_string(dp_ts.plus) + "," + std::to_string(dp_ts.minus) + ") of T+S vs (" +
                 std::to_string(dp_t.plus) + "," + std::to_string(dp_t.minus) + ") of T");
    if (!dp_ts.half_plane_constant)
        out.fail("deficiency of T+S not constant on half-planes");
    if (theorem && is_self_adjoint(ts) != is_self_adjoint(t))
        out.fail("self-adjointness of T+S differs from T");

    if (b > 0.0 && b < 1.0 && pair.dim() > 0) {
        const double eps = (1.0 / (b * b) - 1.0) / 2.0;
        const double gamma = a / (b * std::sqrt(eps));
        const double b1 = std::sqrt(1.0 + eps) * b;
        Rng rng(derive_seed(opts.seed, 0x3c));
        const MatrixX<double> coords = witness_probes(pair, opts.x_samples, rng);
        for (const double sign : {1.0, -1.0}) {
            // T ± iγI is the shift by ∓iγ.
            const C lambda(0.0, -sign * gamma);
            const Rel tg = shift(t, lambda);
            const auto part = single_valued_part(tg);
            for (Index j = 0; j < coords.cols(); ++j) {
                const VectorX<double> y = coords.col(j);
                const VectorX<double> x = pair.domain_basis * y;
                const double sx = (pair.s_matrix * y).norm();
                const double txg = part.apply(x).norm();
                const double rhs = b1 * txg;
                if (sx - rhs > tolerance::sample_slack * std::max(rhs, 1.0)) {
                    out.fail("||Sx|| = " + num(sx) + " exceeds sqrt(1+eps) b ||(T+-i gamma)x|| = " + num(rhs));
                    break;
                }
                const double tx2 = (pair.t_matrix * y).squaredNorm();
                const double rhs2 = (1.0 + eps) * b * b * (gamma * gamma * y.squaredNorm() + tx2);
                if (sx * sx - rhs2 > tolerance::sample_slack * std::max(rhs2, 1.0)) {
                    out.fail("||Sx||^2 = " + num(sx * sx) + " exceeds (1+eps) b^2 (gamma^2||x||^2 + ||Tx||^2) = " +
                             num(rhs2));
                    break;
                }
            }
            if (gamma > 0.0) {
                // The lower-bound check applied to T ± iγI with c = γ and b1 = sqrt(1+eps) b.
                const double c_g = lower_bound_constant(tg);
                if (c_g < gamma * (1.0 - tolerance::hypothesis_rel))
                    out.fail("lower bound of T+-i gamma " + num(c_g) + " below gamma = " + num(gamma));
                const Rel tsg = shift(ts, lambda);
                const double c1 = lower_bound_constant(tsg);
                if (c1 < (1.0 - b1) * gamma - tolerance::lower_bound_abs)
                    out.fail("lower bound of T+S+-i gamma " + num(c1) + " < (1-b1) gamma = " + num((1.0 - b1) * gamma));
                if (range_defect(tsg) != range_defect(tg))
                    out.fail("range defect of T+S+-i gamma differs from T+-i gamma");
            }
        }
    }
    return out;
}

Outcome lemma_2_5(const Rel& t, const Rel& s)
{
    if (!is_self_adjoint(t))
        return Outcome::inapplicable("T is not self-adjoint");
    if (!is_hermitian(s))
        return Outcome::inapplicable("S is not Hermitian");
    if (!contains(domain_of(s), domain_of(t)))
        return Outcome::inapplicable("D(T) not contained in D(S)");
    Outcome out;
    const auto cmp = compare(mul_part_of(s), mul_part_of(t));
    if (!cmp.a_within_b())
        out.fail("S(0) not contained in T(0), sine " + num(cmp.sin_a_from_b));
    return out;
}

std::vector<std::pair<std::string, double>> lemma_3_1_tolerances()
{
    return {{"lower_bound_abs", tolerance::lower_bound_abs}, {"hypothesis_rel", tolerance::hypothesis_rel}};
}

std::vector<std::pair<std::string, double>> lemma_3_3_tolerances()
{
    return {{"sample_slack", tolerance::sample_slack},
            {"lower_bound_abs", tolerance::lower_bound_abs},
            {"hypothesis_rel", tolerance::hypothesis_rel}};
}

} // namespace

double witness_violation(const Rel& t, const Rel& s, double a, double b, int samples, std::uint64_t seed)
{
    const auto pair = restrict_to_domain(s, t);
    if (pair.dim() == 0)
        return 0.0;
    Rng rng(derive_seed(seed, 0x3b));
    const MatrixX<double> probes = witness_probes(pair, samples, rng);
    double worst = -infinity<double>();
    for (Index j = 0; j < probes.cols(); ++j) {
        const VectorX<double> y = probes.col(j);
        const double lhs = (pair.s_matrix * y).norm();
        const double rhs = a * y.norm() + b * (pair.t_matrix * y).norm();
        worst = std::max(worst, (lhs - rhs) / std::max(rhs, 1.0));
    }
    return worst;
}

TheoremReport check_lemma_2_4(const Rel& t, const CheckOptions& opts)
{
    Outcome out;
    if (!is_hermitian(t)) {
        out = Outcome::inapplicable("T is not Hermitian");
    } else {
        Rng rng(derive_seed(opts.seed, 0x24));
        std::vector<C> lambdas{C(0.0, 1.0)};
        for (int k = 0; k < 2; ++k)
            lambdas.emplace_back(rng.uniform(-2.0, 2.0), rng.uniform(0.5, 2.0) * (rng.coin() ? 1.0 : -1.0));
        bool premise = false;
        for (const C& lambda : lambdas)
            if (deficiency_index(t, lambda).index == 0 && deficiency_index(t, std::conj(lambda)).index == 0)
                premise = true;
        if (!premise)
            out = Outcome::inapplicable("no sampled nonreal lambda with full ranges");
        else if (!is_self_adjoint(t))
            out.fail("full ranges at a nonreal lambda but T is not self-adjoint");
    }
    return single("2.4", opts, out, {});
}

TheoremReport check_lemma_2_5(const Rel& t, const Rel& s, const CheckOptions& opts)
{
    return single("2.5", opts, lemma_2_5(t, s), {});
}

TheoremReport check_lemma_3_1(const Rel& t, const Rel& s, double c, double b, const CheckOptions& opts)
{
    return single("3.1-lemma", opts, lemma_3_1(t, s, c, b, opts), lemma_3_1_tolerances());
}

TheoremReport check_corollary_3_1(const Rel& t, const Rel& s, double c, double a, const CheckOptions& opts)
{
    Outcome out;
    if (!(c > 0.0) || !std::isfinite(c) || !(a >= 0.0) || (!opts.fuzz && !(a < c))) {
        out = Outcome::inapplicable("requires 0 <= a < c");
    } else {
        RestrictedPair<double> pair;
        try {
            pair = restrict_to_domain(s, t);
            const double norm = spectral_norm<double>(pair.s_matrix);
            if (norm > a * (1.0 + tolerance::hypothesis_rel) + 1e-12)
                out = Outcome::inapplicable("||S|| on D(T) = " + num(norm) + " exceeds a = " + num(a));
            else
                out = lemma_3_1(t, s, c, a / c, opts);
        } catch (const PreconditionError&) {
            out = Outcome::inapplicable("D(T) not contained in D(S)");
        }
    }
    return single("3.1-corollary", opts, out, lemma_3_1_tolerances());
}

TheoremReport check_lemma_3_2(const Rel& t, std::span<const C> z_samples, const CheckOptions& opts)
{
    Outcome out;
    if (!is_hermitian(t)) {
        out = Outcome::inapplicable("T is not Hermitian");
    } else {
        const Sub dom = domain_of(t);
        Rng rng(derive_seed(opts.seed, 0x32));
        for (const C& z : z_samples) {
            const auto pz = single_valued_part(shift(t, z));
            const auto pa = single_valued_part(shift(t, C(z.real(), 0.0)));
            const MatrixX<double> xs = dom.basis() * sample_coords(dom.dim(), opts.x_samples, rng);
            for (Index j = 0; j < xs.cols(); ++j) {
                const VectorX<double> x = xs.col(j);
                const double lhs = pz.apply(x).squaredNorm();
                const double rhs = pa.apply(x).squaredNorm() + z.imag() * z.imag() * x.squaredNorm();
                if (std::abs(lhs - rhs) > tolerance::identity_rel * std::max({lhs, rhs, 1.0})) {
                    out.fail("identity off by " + num(std::abs(lhs - rhs)) + " at z = " + num(z.real()) + "+" +
                             num(z.imag()) + "i");
                    break;
                }
            }
            if (out.failed())
                break;
        }
    }
    return single("3.2", opts, out, {{"identity_rel", tolerance::identity_rel}});
}

TheoremReport check_lemma_3_3(const Rel& t, const Rel& s, double witness_a, double witness_b, const CheckOptions& opts)
{
    return single("3.3", opts, lemma_3_3(t, s, witness_a, witness_b, opts, false), lemma_3_3_tolerances());
}

TheoremReport check_theorem_3_1(const Rel& t, const Rel& s, double witness_a, double witness_b,
                                const CheckOptions& opts)
{
    return single("3.1-theorem", opts, lemma_3_3(t, s, witness_a, witness_b, opts, true), lemma_3_3_tolerances());
}

TheoremReport check_corollary_3_2(const Rel& t, const Rel& s, double witness_a, double witness_b,
                                  const CheckOptions& opts)
{
    Outcome out = lemma_2_5(t, s);
    if (out.verdict == Verdict::pass) {
        if (!opts.fuzz && !(witness_b < 1.0)) {
            out = Outcome::inapplicable("witness b >= 1");
        } else if (witness_violation(t, s, witness_a, witness_b, opts.x_samples, opts.seed) > tolerance::sample_slack) {
            out = Outcome::inapplicable("witness (a, b) violated on a sample");
        } else {
            CheckOptions inner = opts;
            inner.fuzz = true;  // S(0) ⊆ T(0) was just established, not assumed
            out = lemma_3_3(t, s, witness_a, witness_b, inner, true);
            const Rel ts = op_sum(t, s);
            if (!is_self_adjoint(ts))
                out.fail("T+S is not self-adjoint");
        }
    }
    return single("3.2-corollary", opts, out, lemma_3_3_tolerances());
}

} // namespace relcalc::harness
