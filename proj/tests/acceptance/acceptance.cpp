// Acceptance suite: one [PASS]/[FAIL] line per criterion. Exit status is the
// number of failing criteria, capped at 1.

#include "../support/oracles.hpp"
#include "relcalc/cli.hpp"
#include "relcalc/harness/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace relcalc;
using namespace relcalc::test;
using harness::InstanceSpec;

namespace {

constexpr std::uint64_t master_seed = 20240917;

// Pinned tolerances.
constexpr double adjoint_angle_tol = 1e-8;
constexpr double quotient_rel_tol = 1e-10;
constexpr double identity_rel_tol = 1e-10;
constexpr double sample_slack = 1e-9;
constexpr double lower_bound_slack = 1e-8;
constexpr double tightness_rel_tol = 0.05;
constexpr double quadratic_oracle_rel_tol = 1e-8;
constexpr double zero_floor = 1e-12;  ///< b values below this count as 0 in ratios
constexpr double max_witness_b = 0.9;

struct Outcome {
    bool pass;
    std::string detail;
};

InstanceSpec draw_spec(std::uint64_t stream, std::size_t i, bool full_domain)
{
    Rng rng(derive_seed(master_seed, stream, i));
    InstanceSpec spec;
    spec.seed = derive_seed(master_seed, stream + 0x100, i);
    spec.n = rng.uniform_int(2, 6);
    spec.dim_mul = rng.uniform_int(0, spec.n - 1);
    const Index room = spec.n - spec.dim_mul;
    spec.dim_dom = full_domain || rng.coin(0.5) ? room : rng.uniform_int(1, room);
    spec.perturbation_target_b = rng.coin(0.1) ? 0.0 : rng.uniform(0.0, max_witness_b);
    return spec;
}

/// Points of D(T): random combinations, the basis itself, and the right
/// singular vectors of S on D(T) (the directions where S is largest).
std::vector<Vec> probe_points(const RestrictedPair<double>& p, Rng& rng, int random_count)
{
    std::vector<Vec> xs;
    const Index k = p.dim();
    if (k == 0)
        return xs;
    for (int j = 0; j < random_count; ++j)
        xs.push_back(p.domain_basis * rng.unit_vector(k));
    for (Index j = 0; j < k; ++j)
        xs.push_back(p.domain_basis.col(j));
    Eigen::JacobiSVD<Mat> svd(p.s_matrix, Eigen::ComputeFullV);
    for (Index j = 0; j < k; ++j)
        xs.push_back(p.domain_basis * svd.matrixV().col(j));
    return xs;
}

double slack_excess(double lhs, double rhs)
{
    return (lhs - rhs) / std::max(rhs, 1.0);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// ---- 1, 2: adjoint ----------------------------------------------------------

std::vector<Rel> adjoint_corpus()
{
    std::vector<Rel> out;
    for (std::size_t i = 0; i < 500; ++i) {
        Rng rng(derive_seed(master_seed, 1, i));
        out.push_back(random_relation(rng, rng.uniform_int(2, 6)));
    }
    return out;
}

Outcome criterion_adjoint_oracle(const std::vector<Rel>& corpus)
{
    double worst = 0;
    std::size_t bad = 0;
    for (const Rel& t : corpus) {
        const Mat a = adjoint(t).graph().basis();
        const Mat o = definition_adjoint_basis(t);
        const double angle = std::max(max_sine(a, o), max_sine(o, a));
        worst = std::max(worst, angle);
        bad += angle >= adjoint_angle_tol;
    }
    return {bad == 0, fmt("500 relations, max sine %.3g", worst)};
}

Outcome criterion_involution(const std::vector<Rel>& corpus)
{
    std::size_t bad = 0;
    for (const Rel& t : corpus) {
        const Rel a = adjoint(t);
        bad += !equal(adjoint(a), t) || a.dim() != 2 * t.space_dim() - t.dim();
    }
    return {bad == 0, fmt("500 relations, %.0f failures", double(bad))};
}

// ---- 3: quotient norm -------------------------------------------------------

Outcome criterion_quotient_norm()
{
    double worst = 0;
    for (std::size_t i = 0; i < 300; ++i) {
        Rng rng(derive_seed(master_seed, 3, i));
        Rel t = random_relation(rng, rng.uniform_int(2, 6));
        while (t.dim() == 0)
            t = random_relation(rng, rng.uniform_int(2, 6));
        auto [x, f] = random_element(t, rng);
        const double scale = std::hypot(x.norm(), f.norm());
        x /= scale;
        f /= scale;
        const double oracle = distance_to_span(f, mul_part_basis(t));
        const double got = relation_norm_at(t, x);
        // d(., T(0)) is 1-Lipschitz, so roundoff scales with ||f||, not with the distance.
        worst = std::max(worst, std::abs(got - oracle) / std::max({oracle, f.norm(), zero_floor}));
    }
    return {worst < quotient_rel_tol, fmt("300 trials, max relative error %.3g", worst)};
}

// ---- 4: Hermitian shift identity --------------------------------------------

Outcome criterion_shift_identity()
{
    double worst = 0;
    std::size_t evaluated = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        const InstanceSpec spec = draw_spec(4, i, false);
        const Rel t = harness::gen_hermitian(spec);
        Rng rng(derive_seed(master_seed, 0x40, i));
        const Mat mul = mul_part_basis(t);
        for (int zi = 0; zi < 10; ++zi) {
            const Cx z(rng.uniform(-3, 3), zi == 0 ? 0.0 : rng.uniform(-3, 3));
            for (int k = 0; k < 50; ++k) {
                const auto [x, f] = random_element(t, rng);
                const double lhs = std::pow(distance_to_span(Vec(f - z * x), mul), 2);
                const double rhs = std::pow(distance_to_span(Vec(f - z.real() * x), mul), 2)
                    + z.imag() * z.imag() * x.squaredNorm();
                worst = std::max(worst, std::abs(lhs - rhs) / std::max({lhs, rhs, 1.0}));
                ++evaluated;
            }
        }
    }
    harness::SuiteConfig cfg;
    cfg.instances = 200;
    cfg.seed = master_seed;
    const auto report = harness::run_suite(harness::TheoremId::lemma_3_2, cfg);
    const bool ok = worst < identity_rel_tol && report.failures.empty() && report.passes == cfg.instances;
    return {ok, fmt("%.0f samples, max relative defect %.3g; checker passes %.0f/200", double(evaluated), worst,
                    double(report.passes))};
}

// ---- 5: linear and quadratic form conversion --------------------------------

Outcome criterion_conversions()
{
    double worst_forward = -infinity<double>();
    double worst_backward = -infinity<double>();
    for (std::size_t i = 0; i < 100; ++i) {
        InstanceSpec spec = draw_spec(5, i, false);
        if (spec.perturbation_target_b == 0.0)
            spec.perturbation_target_b = 0.5;
        const Rel t = harness::gen_hermitian(spec);
        const auto pert = harness::gen_perturbation(t, spec);
        const auto p = restrict_to_domain(pert.s, t);
        Rng rng(derive_seed(master_seed, 0x50, i));
        const auto xs = probe_points(p, rng, 50);
        for (const double eps : {0.1, 1.0, 10.0}) {
            const auto q = convert_bounds(pert.witness_a, pert.witness_b, eps);
            for (const Vec& x : xs) {
                const double sx = norm_at(pert.s, x), tx = norm_at(t, x);
                worst_forward = std::max(worst_forward,
                                         slack_excess(sx * sx, q.a_prime * q.a_prime * x.squaredNorm()
                                                                   + q.b_prime * q.b_prime * tx * tx));
            }
        }
        for (const double a_prime : {0.0, 0.5 * pert.witness_a, pert.witness_a, 2.0 * pert.witness_a + 0.1}) {
            const double b_prime = quadratic_bound(p, a_prime);
            if (!std::isfinite(b_prime))
                continue;
            const auto l = quadratic_to_linear(a_prime, b_prime);
            for (const Vec& x : xs) {
                const double sx = norm_at(pert.s, x), tx = norm_at(t, x);
                worst_backward = std::max(worst_backward, slack_excess(sx, l.a * x.norm() + l.b * tx));
            }
        }
    }
    const bool ok = worst_forward <= sample_slack && worst_backward <= sample_slack;
    return {ok, fmt("100 pairs x eps {0.1, 1, 10}; max excess linear->quadratic %.3g, quadratic->linear %.3g",
                    worst_forward, worst_backward)};
}

// ---- 6: lower bound and range codimension -----------------------------------

Outcome criterion_lower_bound()
{
    std::size_t bad = 0, lemma = 0, corollary = 0;
    double worst = -infinity<double>();
    for (std::size_t i = 0; i < 200; ++i) {
        InstanceSpec spec = draw_spec(6, i, false);
        const Rel t = harness::gen_lower_bounded(spec);
        const double c = lower_bound_constant(t);
        if (!(c > 0)) {
            ++bad;
            continue;
        }
        Rng rng(derive_seed(master_seed, 0x60, i));
        const bool via_corollary = i % 4 == 3;
        double b;
        harness::Perturbation pert = [&] {
            if (via_corollary) {
                const double a = rng.uniform(0.0, max_witness_b) * c;
                b = a / c;
                ++corollary;
                return harness::gen_bounded_perturbation(t, a, spec);
            }
            ++lemma;
            auto p = harness::gen_relative_perturbation(t, spec);
            b = p.witness_b;
            return p;
        }();
        const Rel sum = op_sum(t, pert.s);
        const double c1 = lower_bound_constant(sum);
        worst = std::max(worst, (1 - b) * c - c1);
        bad += c1 < (1 - b) * c - lower_bound_slack;
        bad += range_codim(sum, 0.0) != range_codim(t, 0.0);
    }
    return {bad == 0, fmt("%.0f relative + %.0f bounded pairs, worst (1-b)c - c1 = %.3g", double(lemma),
                          double(corollary), worst)};
}

// ---- 7: deficiency indices and self-adjointness -----------------------------

Outcome criterion_stability()
{
    const Cx i_unit(0, 1);
    std::size_t bad = 0, sampled = 0;
    double worst = -infinity<double>();
    for (std::size_t i = 0; i < 300; ++i) {
        const InstanceSpec spec = draw_spec(7, i, false);
        const Rel t = harness::gen_hermitian(spec);
        const auto pert = harness::gen_perturbation(t, spec);
        const double a = pert.witness_a, b = pert.witness_b;
        const Rel sum = op_sum(t, pert.s);
        for (const Cx lambda : {i_unit, -i_unit})
            bad += range_codim(sum, lambda) != range_codim(t, lambda);
        const auto dt = deficiency_pair(t), ds = deficiency_pair(sum);
        bad += dt.plus != ds.plus || dt.minus != ds.minus;
        bad += dt.plus != range_codim(t, i_unit) || dt.minus != range_codim(t, -i_unit);
        bad += self_adjoint_oracle(sum) != self_adjoint_oracle(t);
        bad += is_self_adjoint(sum) != is_self_adjoint(t);
        if (b == 0.0)
            continue;
        const double eps = (1 / (b * b) - 1) / 2;
        const double gamma = a / (b * std::sqrt(eps));
        const double b1 = std::sqrt(1 + eps) * b;
        Rng rng(derive_seed(master_seed, 0x70, i));
        const auto xs = probe_points(restrict_to_domain(pert.s, t), rng, 50);
        for (const double sign : {1.0, -1.0}) {
            const Rel shifted = shift(t, Cx(0, -sign * gamma));
            for (const Vec& x : xs) {
                worst = std::max(worst, slack_excess(norm_at(pert.s, x), b1 * norm_at(shifted, x)));
                ++sampled;
            }
        }
    }
    harness::SuiteConfig cfg;
    cfg.instances = 300;
    cfg.seed = master_seed;
    const auto theorem = harness::run_suite(harness::TheoremId::theorem_3_1, cfg);
    const auto lemma = harness::run_suite(harness::TheoremId::lemma_3_3, cfg);
    const bool ok = bad == 0 && worst <= sample_slack && theorem.failures.empty() && lemma.failures.empty();
    return {ok, fmt("300 pairs, %.0f mismatches, shifted-form max excess %.3g over %.0f samples", double(bad), worst,
                    double(sampled))};
}

// ---- 8: multivalued part containment and self-adjoint sum --------------------

Outcome criterion_self_adjoint_sum()
{
    std::size_t bad = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        const InstanceSpec spec = draw_spec(8, i, true);
        const Rel t = harness::gen_self_adjoint(spec);
        const auto pert = harness::gen_dominating_hermitian(t, spec);
        const Mat st = mul_part_basis(t), ss = mul_part_basis(pert.s);
        bad += intersect_basis(ss, st).cols() != ss.cols();
        bad += !contains(mul_part_of(t), mul_part_of(pert.s));
        const Rel sum = op_sum(t, pert.s);
        bad += !self_adjoint_oracle(sum) || !is_self_adjoint(sum);
    }
    harness::SuiteConfig cfg;
    cfg.instances = 200;
    cfg.seed = master_seed;
    const auto report = harness::run_suite(harness::TheoremId::corollary_3_2, cfg);
    const auto containment = harness::run_suite(harness::TheoremId::lemma_2_5, cfg);
    const bool ok = bad == 0 && report.failures.empty() && containment.failures.empty();
    return {ok, fmt("200 pairs, %.0f failures; checker passes %.0f/200", double(bad), double(report.passes))};
}

// ---- 9: determinism ---------------------------------------------------------

Outcome criterion_determinism()
{
    auto run = [](const char* threads) {
        std::ostringstream out, err;
        const int code = cli::run({"suite", "--seed", "7", "--threads", threads}, out, err);
        return std::make_pair(code, out.str());
    };
    const auto one = run("1");
    const auto again = run("1");
    const auto four = run("4");
    const bool ok = one.first == 0 && one.second == again.second && one.second == four.second;
    return {ok, fmt("suite --seed 7: %.0f bytes, threads 1 vs 1 vs 4", double(one.second.size()))};
}

// ---- 10: bound tightness ----------------------------------------------------

/// b'(a')^2 = max(0, lambda_max(G)), G = Mt^{+H} (Ms^H Ms - a'^2 I) Mt^{+} for injective Mt.
/// Returns b'^2 and ||Mt^+||^2 ||Ms||^2, the scale its roundoff is measured against.
std::pair<double, double> quadratic_oracle(const RestrictedPair<double>& p, double a_prime)
{
    const Mat inv = p.t_matrix.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV)
                        .solve(Mat::Identity(p.t_matrix.rows(), p.t_matrix.rows()));
    const Mat h = p.s_matrix.adjoint() * p.s_matrix - a_prime * a_prime * Mat::Identity(p.dim(), p.dim());
    const Mat g = inv.adjoint() * h * inv;
    Eigen::SelfAdjointEigenSolver<Mat> es(Mat((g + g.adjoint()) / 2.0));
    const double scale = std::pow(spectral_norm<double>(inv) * spectral_norm<double>(p.s_matrix), 2);
    return {std::max(0.0, es.eigenvalues().maxCoeff()), scale};
}

Outcome criterion_tightness()
{
    double worst_gap = 0, worst_quadratic = 0;
    std::size_t points = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        InstanceSpec spec = draw_spec(10, i, false);
        if (spec.perturbation_target_b == 0.0)
            spec.perturbation_target_b = 0.5;
        const Rel t = harness::gen_lower_bounded(spec);
        const auto pert = harness::gen_relative_perturbation(t, spec);
        const auto p = restrict_to_domain(pert.s, t);
        const auto grid = default_a_grid(p);
        const auto report = bound_curve(p, std::span<const double>(grid));
        for (const auto& pt : report.curve) {
            if (!std::isfinite(pt.b_certified))
                continue;
            ++points;
            if (pt.b_certified > zero_floor)
                worst_gap = std::max(worst_gap, (pt.b_certified - pt.b_sampled) / pt.b_certified);
            const auto [b2, scale] = quadratic_oracle(p, pt.a);
            const double err = std::abs(pt.b_quadratic * pt.b_quadratic - b2) / std::max({b2, scale, zero_floor});
            worst_quadratic = std::max(worst_quadratic, err);
        }
    }
    const bool ok = worst_gap < tightness_rel_tol && worst_quadratic < quadratic_oracle_rel_tol;
    return {ok, fmt("100 pairs, %.0f grid points, max certified/sampled gap %.3g, quadratic vs oracle %.3g",
                    double(points), worst_gap, worst_quadratic)};
}

} // namespace

int main()
{
    const auto corpus = adjoint_corpus();
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"adjoint matches definition-solved adjoint", [&] { return criterion_adjoint_oracle(corpus); }},
        {"T** = T and dim T* = 2n - dim T", [&] { return criterion_involution(corpus); }},
        {"||T(x)|| = d(f, T(0))", criterion_quotient_norm},
        {"||(T-zI)x||^2 = ||(T-Re z I)x||^2 + (Im z)^2 ||x||^2", criterion_shift_identity},
        {"linear and quadratic relative bound conversions", criterion_conversions},
        {"lower bound (1-b)c and range codimension preserved", criterion_lower_bound},
        {"deficiency indices and self-adjointness preserved", criterion_stability},
        {"S(0) in T(0) and T+S self-adjoint", criterion_self_adjoint_sum},
        {"suite reports byte-identical across runs and threads", criterion_determinism},
        {"certified and sampled b_min(a) within 5%", criterion_tightness},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %zu %s (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                    o.detail.c_str(), secs);
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
