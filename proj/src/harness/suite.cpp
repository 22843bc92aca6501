#include "relcalc/harness/suite.hpp"

#include "relcalc/deficiency.hpp"
#include "relcalc/parallel.hpp"

#include <array>

namespace relcalc::harness {

namespace {

struct Label {
    TheoremId id;
    const char* text;
};

constexpr std::array<Label, 7> labels{{
    {TheoremId::lemma_2_4, "2.4"},
    {TheoremId::lemma_2_5, "2.5"},
    {TheoremId::lemma_3_1, "3.1-lemma"},
    {TheoremId::lemma_3_2, "3.2"},
    {TheoremId::lemma_3_3, "3.3"},
    {TheoremId::theorem_3_1, "3.1-theorem"},
    {TheoremId::corollary_3_2, "3.2-corollary"},
}};

bool needs_self_adjoint(TheoremId id)
{
    return id == TheoremId::lemma_2_5 || id == TheoremId::corollary_3_2;
}

constexpr std::uint64_t choice_stream = 0x5c;
constexpr int z_samples = 10;

} // namespace

const char* theorem_label(TheoremId id)
{
    for (const auto& l : labels)
        if (l.id == id)
            return l.text;
    return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view label)
{
    if (label == "3.1")
        return TheoremId::theorem_3_1;
    for (const auto& l : labels)
        if (label == l.text)
            return l.id;
    return std::nullopt;
}

std::vector<TheoremId> all_theorems()
{
    std::vector<TheoremId> out;
    for (const auto& l : labels)
        out.push_back(l.id);
    return out;
}

void SuiteConfig::validate() const
{
    tol.validate();
    if (instances < 1)
        throw PreconditionError("suite: instance count must be at least 1");
    if (n_min < 1 || n_max < n_min)
        throw PreconditionError("suite: n range must satisfy 1 <= n_min <= n_max");
    if (dim_mul && *dim_mul < 0)
        throw PreconditionError("suite: dim_mul must be nonnegative");
    if (dim_dom && *dim_dom < 0)
        throw PreconditionError("suite: dim_dom must be nonnegative");
    if (target_b && !fuzz && !(*target_b >= 0.0 && *target_b < 1.0))
        throw PreconditionError("suite: target b must lie in [0, 1)");
    if (!(max_target_b >= 0.0 && max_target_b < 1.0))
        throw PreconditionError("suite: max target b must lie in [0, 1)");
}

InstanceSpec suite_instance(TheoremId id, const SuiteConfig& cfg, std::size_t index)
{
    InstanceSpec spec;
    spec.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(id) + 1, index);
    spec.tol = cfg.tol;
    Rng rng(derive_seed(spec.seed, choice_stream));
    spec.n = rng.uniform_int(cfg.n_min, cfg.n_max);
    const Index max_mul = spec.n - 1;
    spec.dim_mul = cfg.dim_mul ? std::min(*cfg.dim_mul, max_mul) : rng.uniform_int(0, max_mul);
    const Index room = spec.n - spec.dim_mul;
    if (needs_self_adjoint(id))
        spec.dim_dom = room;
    else if (cfg.dim_dom)
        spec.dim_dom = std::min(*cfg.dim_dom, room);
    else
        spec.dim_dom = rng.coin() ? room : rng.uniform_int(1, room);
    const double draw = rng.uniform(0.0, 1.0);
    if (cfg.fuzz)
        spec.perturbation_target_b = 1.0 + 2.0 * draw;
    else if (cfg.target_b)
        spec.perturbation_target_b = *cfg.target_b;
    else
        spec.perturbation_target_b = draw < 0.1 ? 0.0 : cfg.max_target_b * draw;
    return spec;
}

TheoremReport run_instance(TheoremId id, const InstanceSpec& spec, bool fuzz)
{
    CheckOptions opts;
    opts.seed = spec.seed;
    opts.fuzz = fuzz;
    // Perturbation generators require b < 1; fuzz instances are generated at
    // a scaled-down target and then inflated.
    InstanceSpec gen = spec;
    const double inflate = fuzz ? spec.perturbation_target_b / 0.5 : 1.0;
    if (fuzz)
        gen.perturbation_target_b = 0.5;

    switch (id) {
    case TheoremId::lemma_2_4:
        return check_lemma_2_4(gen_hermitian(gen), opts);
    case TheoremId::lemma_2_5: {
        const Rel t = gen_self_adjoint(gen);
        return check_lemma_2_5(t, gen_dominating_hermitian(t, gen).s, opts);
    }
    case TheoremId::lemma_3_1: {
        const Rel t = gen_lower_bounded(gen);
        const double c = lower_bound_constant(t);
        Rng rng(derive_seed(spec.seed, choice_stream, 1));
        if (!fuzz && rng.coin(0.25)) {
            const double a = rng.uniform(0.0, 0.9) * c;
            auto report = check_corollary_3_1(t, gen_bounded_perturbation(t, a, gen).s, c, a, opts);
            report.theorem_id = theorem_label(id);
            return report;
        }
        InstanceSpec rel = gen;
        rel.perturbation_target_b = spec.perturbation_target_b;
        const auto p = gen_relative_perturbation(t, rel);
        return check_lemma_3_1(t, p.s, c, p.witness_b, opts);
    }
    case TheoremId::lemma_3_2: {
        Rng rng(derive_seed(spec.seed, choice_stream, 2));
        std::vector<Complex<double>> zs;
        for (int k = 0; k + 1 < z_samples; ++k)
            zs.emplace_back(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));
        zs.emplace_back(rng.uniform(-3.0, 3.0), 0.0);
        return check_lemma_3_2(gen_hermitian(gen), zs, opts);
    }
    case TheoremId::lemma_3_3:
    case TheoremId::theorem_3_1: {
        const Rel t = gen_hermitian(gen);
        auto p = gen_perturbation(t, gen);
        if (fuzz)
            p = {scalar_mul(Complex<double>(inflate), p.s), inflate * p.witness_a, inflate * p.witness_b};
        return id == TheoremId::lemma_3_3 ? check_lemma_3_3(t, p.s, p.witness_a, p.witness_b, opts)
                                          : check_theorem_3_1(t, p.s, p.witness_a, p.witness_b, opts);
    }
    case TheoremId::corollary_3_2: {
        const Rel t = gen_self_adjoint(gen);
        auto p = gen_dominating_hermitian(t, gen);
        if (fuzz)
            p = {scalar_mul(Complex<double>(inflate), p.s), inflate * p.witness_a, inflate * p.witness_b};
        return check_corollary_3_2(t, p.s, p.witness_a, p.witness_b, opts);
    }
    }
    throw PreconditionError("unknown theorem id");
}

TheoremReport run_suite(TheoremId id, const SuiteConfig& cfg)
{
    cfg.validate();
    std::vector<TheoremReport> slots(cfg.instances);
    parallel_for(cfg.instances, cfg.threads, [&](std::size_t i) {
        const InstanceSpec spec = suite_instance(id, cfg, i);
        try {
            slots[i] = run_instance(id, spec, cfg.fuzz);
        } catch (const NumericalBreakdown&) {
            throw;
        } catch (const Error& e) {
            TheoremReport r;
            r.theorem_id = theorem_label(id);
            r.fuzz = cfg.fuzz;
            r.record(spec.seed, Verdict::fail, std::string("error: ") + e.what());
            slots[i] = std::move(r);
        }
    });
    TheoremReport out;
    out.theorem_id = theorem_label(id);
    out.fuzz = cfg.fuzz;
    for (const auto& r : slots)
        out.merge(r);
    return out;
}

} // namespace relcalc::harness
