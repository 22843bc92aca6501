#include "relcalc/cli.hpp"

#include "relcalc/deficiency.hpp"
#include "relcalc/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace relcalc::cli {

namespace {

using harness::Rel;
using nlohmann::json;

/// Raised for bad flag values after CLI11 parsing succeeded.
class UsageError : public Error {
public:
    using Error::Error;
};

struct NRange {
    Index lo = 2;
    Index hi = 6;
};

std::uint64_t parse_seed(const std::string& text)
{
    try {
        std::size_t used = 0;
        const auto v = std::stoull(text, &used, 0);
        if (used != text.size())
            throw UsageError("invalid seed '" + text + "'");
        return v;
    } catch (const std::logic_error&) {
        throw UsageError("invalid seed '" + text + "'");
    }
}

NRange parse_n(const std::string& text)
{
    auto to_index = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const long v = std::stol(s, &used);
            if (used != s.size() || v < 1 || v > 64)
                throw UsageError("invalid --n '" + text + "'");
            return static_cast<Index>(v);
        } catch (const std::logic_error&) {
            throw UsageError("invalid --n '" + text + "'");
        }
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Index v = to_index(text);
        return {v, v};
    }
    NRange r{to_index(text.substr(0, dots)), to_index(text.substr(dots + 2))};
    if (r.hi < r.lo)
        throw UsageError("invalid --n '" + text + "': empty range");
    return r;
}

std::string num(double v, const char* fmt = "%.6g")
{
    char buf[40];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string flag(bool b)
{
    return b ? "true" : "false";
}

/// Writes to --output when given, else to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f || !(f << text))
        throw UsageError("cannot write " + path);
}

struct Common {
    std::string seed_text;
    std::string n_text = "2..6";
    double tol_rank = TolerancePolicy{}.rank_rel_tol;
    double tol_angle = TolerancePolicy{}.angle_tol;
    std::string format = "text";
    std::string output;

    TolerancePolicy tol() const
    {
        TolerancePolicy t{tol_rank, tol_angle};
        try {
            t.validate();
        } catch (const PreconditionError& e) {
            throw UsageError(e.what());
        }
        return t;
    }

    /// --seed, then RELCALC_SEED; nullopt when neither is set.
    std::optional<std::uint64_t> seed() const
    {
        if (!seed_text.empty())
            return parse_seed(seed_text);
        if (const char* env = std::getenv("RELCALC_SEED"); env && *env)
            return parse_seed(env);
        return std::nullopt;
    }

    std::uint64_t required_seed(const char* command) const
    {
        const auto s = seed();
        if (!s)
            throw UsageError(std::string(command) + " requires --seed or RELCALC_SEED");
        return *s;
    }
};

void add_common(CLI::App* app, Common& c, std::vector<std::string> formats)
{
    app->add_option("--seed", c.seed_text, "64-bit master seed (decimal or 0x-hex)");
    app->add_option("--tol-rank", c.tol_rank, "relative rank tolerance");
    app->add_option("--tol-angle", c.tol_angle, "principal-angle tolerance");
    app->add_option("--format", c.format, "report format")->check(CLI::IsMember(formats));
    app->add_option("--output", c.output, "write the report here instead of stdout");
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
    Common common;
    std::string kind = "self-adjoint";
    std::optional<Index> dim_mul;
    std::optional<Index> dim_dom;
    double target_b = 0.5;
};

int do_generate(const GenerateArgs& g, std::ostream& out)
{
    const std::uint64_t seed = g.common.required_seed("generate");
    const NRange range = parse_n(g.common.n_text);
    harness::InstanceSpec spec;
    spec.seed = seed;
    spec.tol = g.common.tol();
    Rng rng(derive_seed(seed, 0x9e));
    spec.n = range.lo == range.hi ? range.lo : rng.uniform_int(range.lo, range.hi);
    spec.dim_mul = g.dim_mul.value_or(0);
    if (spec.dim_mul < 0 || spec.dim_mul > spec.n)
        throw UsageError("--dim-mul must lie in [0, n]");
    spec.dim_dom = g.dim_dom.value_or(spec.n - spec.dim_mul);
    spec.perturbation_target_b = g.target_b;

    io::Instance inst;
    inst.space_dim = spec.n;
    inst.tol = spec.tol;
    inst.kind = g.kind;
    inst.seed = seed;
    try {
        if (g.kind == "self-adjoint") {
            inst.relations.emplace("T", harness::gen_self_adjoint(spec));
        } else if (g.kind == "hermitian") {
            inst.relations.emplace("T", harness::gen_hermitian(spec));
        } else if (g.kind == "lower-bounded") {
            inst.relations.emplace("T", harness::gen_lower_bounded(spec));
        } else if (g.kind == "pair") {
            const Rel t = harness::gen_hermitian(spec);
            auto p = harness::gen_perturbation(t, spec);
            inst.relations.emplace("T", t);
            inst.relations.emplace("S", std::move(p.s));
            inst.witness = io::Witness{p.witness_a, p.witness_b};
        } else {  // relative-pair
            const Rel t = harness::gen_lower_bounded(spec);
            auto p = harness::gen_relative_perturbation(t, spec);
            inst.relations.emplace("T", t);
            inst.relations.emplace("S", std::move(p.s));
            inst.witness = io::Witness{p.witness_a, p.witness_b};
        }
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
    emit(io::to_json_string(inst), g.common.output, out);
    return exit_ok;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
    Common common;
    std::string input;
};

json relation_summary(const Rel& r)
{
    const auto parts = components(r);
    json j;
    j["space_dim"] = r.space_dim();
    j["dim"] = r.dim();
    j["domain_dim"] = parts.domain.dim();
    j["range_dim"] = parts.range.dim();
    j["multivalued_dim"] = parts.mul_part.dim();
    j["kernel_dim"] = parts.kernel.dim();
    const bool herm = is_hermitian(r);
    j["hermitian"] = herm;
    j["self_adjoint"] = is_self_adjoint(r);
    if (herm) {
        const auto dp = deficiency_pair(r);
        j["deficiency"] = {dp.plus, dp.minus};
    }
    j["norm"] = relation_norm(r);
    const double c = lower_bound_constant(r);
    j["lower_bound"] = std::isfinite(c) ? json(c) : json("inf");
    return j;
}

std::string verdict_text(const harness::TheoremReport& r)
{
    if (!r.failures.empty())
        return "fail (" + r.failures.front().diagnostic + ")";
    return r.inapplicable > 0 ? "inapplicable" : "pass";
}

int do_check(const CheckArgs& c, std::ostream& out)
{
    const io::Instance inst = io::load_instance(c.input);
    harness::CheckOptions opts;
    opts.seed = c.common.seed().value_or(0);

    json summary = json::object();
    for (const auto& [name, r] : inst.relations)
        summary[name] = relation_summary(r);

    std::vector<harness::TheoremReport> reports;
    const Rel* t = inst.find("T");
    const Rel* s = inst.find("S");
    if (t) {
        reports.push_back(harness::check_lemma_2_4(*t, opts));
        const std::vector<Complex<double>> zs{{0.0, 1.0}, {1.0, 2.0}, {-0.5, -1.5}, {2.0, 0.0}};
        reports.push_back(harness::check_lemma_3_2(*t, zs, opts));
    }
    std::optional<io::Witness> witness = inst.witness;
    if (t && s) {
        reports.push_back(harness::check_lemma_2_5(*t, *s, opts));
        if (!witness) {
            try {
                const double pure = pure_relative_bound(*s, *t);
                if (pure < 1.0)
                    witness = io::Witness{0.0, pure};
            } catch (const PreconditionError&) {
            }
        }
        if (witness) {
            const double c_t = lower_bound_constant(*t);
            if (c_t > 0.0 && std::isfinite(c_t))
                reports.push_back(harness::check_lemma_3_1(*t, *s, c_t, witness->b, opts));
            reports.push_back(harness::check_lemma_3_3(*t, *s, witness->a, witness->b, opts));
            reports.push_back(harness::check_theorem_3_1(*t, *s, witness->a, witness->b, opts));
            reports.push_back(harness::check_corollary_3_2(*t, *s, witness->a, witness->b, opts));
        }
    }

    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.ok();

    std::ostringstream text;
    if (c.common.format == "json") {
        json j;
        j["relations"] = summary;
        json checks = json::object();
        for (const auto& r : reports)
            checks[r.theorem_id] = verdict_text(r);
        j["checks"] = std::move(checks);
        j["ok"] = ok;
        text << j.dump(2) << "\n";
    } else {
        for (const auto& [name, j] : summary.items()) {
            text << "relation " << name << ":\n";
            text << "  dim: " << j["dim"].get<Index>() << " (domain " << j["domain_dim"].get<Index>() << ", multivalued "
                 << j["multivalued_dim"].get<Index>() << ")\n";
            text << "  hermitian: " << flag(j["hermitian"].get<bool>()) << "\n";
            text << "  self_adjoint: " << flag(j["self_adjoint"].get<bool>()) << "\n";
            if (j.contains("deficiency"))
                text << "  deficiency: (" << j["deficiency"][0].get<Index>() << ", " << j["deficiency"][1].get<Index>()
                     << ")\n";
            text << "  norm: " << num(j["norm"].get<double>()) << "\n";
            text << "  lower_bound: "
                 << (j["lower_bound"].is_string() ? std::string("inf") : num(j["lower_bound"].get<double>())) << "\n";
        }
        if (witness)
            text << "witness: a = " << num(witness->a) << ", b = " << num(witness->b) << "\n";
        for (const auto& r : reports)
            text << "check " << r.theorem_id << ": " << verdict_text(r) << "\n";
        text << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
    }
    emit(text.str(), c.common.output, out);
    return ok ? exit_ok : exit_check_failed;
}

// ---- bounds ---------------------------------------------------------------

struct BoundsArgs {
    Common common;
    std::string input;
    unsigned threads = 1;
};

int do_bounds(const BoundsArgs& b, std::ostream& out)
{
    const io::Instance inst = io::load_instance(b.input);
    const Rel* t = inst.find("T");
    const Rel* s = inst.find("S");
    if (!t || !s)
        throw UsageError("bounds needs relations named T and S");
    BoundOptions opts;
    if (const auto seed = b.common.seed())
        opts.seed = *seed;
    opts.threads = b.threads;
    RestrictedPair<double> pair;
    try {
        pair = restrict_to_domain(*s, *t);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
    const auto grid = default_a_grid(pair);
    const auto report = bound_curve(pair, std::span<const double>(grid), opts);

    std::ostringstream text;
    const std::string& fmt = b.common.format;
    if (fmt == "csv") {
        text << "a,b_certified,b_sampled\n";
        for (const auto& p : report.curve)
            text << num(p.a, "%.17g") << "," << num(p.b_certified, "%.17g") << "," << num(p.b_sampled, "%.17g") << "\n";
    } else if (fmt == "json") {
        json j;
        j["pure_b"] = std::isfinite(report.pure_b) ? json(report.pure_b) : json("inf");
        j["t_bound"] = report.t_bound;
        j["absorbing_a"] = report.absorbing_a;
        json curve = json::array();
        for (const auto& p : report.curve)
            curve.push_back({{"a", p.a}, {"b_certified", p.b_certified}, {"b_sampled", p.b_sampled},
                             {"b_quadratic", p.b_quadratic}});
        j["curve"] = std::move(curve);
        text << j.dump(2) << "\n";
    } else {
        text << "pure_b: " << (std::isfinite(report.pure_b) ? num(report.pure_b) : std::string("inf")) << "\n";
        text << "t_bound: " << num(report.t_bound) << "\n";
        text << "absorbing_a: " << num(report.absorbing_a) << "\n";
        text << "a            b_certified  b_sampled    b_quadratic\n";
        for (const auto& p : report.curve) {
            char line[96];
            std::snprintf(line, sizeof line, "%-12.6g %-12.6g %-12.6g %-12.6g\n", p.a, p.b_certified, p.b_sampled,
                          p.b_quadratic);
            text << line;
        }
    }
    emit(text.str(), b.common.output, out);
    return exit_ok;
}

// ---- suite ----------------------------------------------------------------

struct SuiteArgs {
    Common common;
    std::string theorem = "all";
    long long instances = 100;
    std::optional<Index> dim_mul;
    std::optional<Index> dim_dom;
    std::optional<double> target_b;
    unsigned threads = 1;
    bool fuzz = false;
};

int do_suite(const SuiteArgs& a, std::ostream& out)
{
    harness::SuiteConfig cfg;
    cfg.seed = a.common.required_seed("suite");
    if (a.instances < 1)
        throw UsageError("--instances must be at least 1");
    cfg.instances = static_cast<std::size_t>(a.instances);
    const NRange range = parse_n(a.common.n_text);
    cfg.n_min = range.lo;
    cfg.n_max = range.hi;
    cfg.dim_mul = a.dim_mul;
    cfg.dim_dom = a.dim_dom;
    cfg.target_b = a.target_b;
    cfg.threads = a.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.threads;
    cfg.tol = a.common.tol();
    cfg.fuzz = a.fuzz;
    try {
        cfg.validate();
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }

    std::vector<harness::TheoremId> ids;
    if (a.theorem == "all") {
        ids = harness::all_theorems();
    } else if (const auto id = harness::parse_theorem_id(a.theorem)) {
        ids.push_back(*id);
    } else {
        throw UsageError("unknown theorem '" + a.theorem + "'");
    }
    std::vector<harness::TheoremReport> reports;
    for (const auto id : ids)
        reports.push_back(harness::run_suite(id, cfg));

    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.ok();
    emit(a.common.format == "json" ? format_suite_json(reports) : format_suite_text(reports), a.common.output, out);
    return ok ? exit_ok : exit_check_failed;
}

} // namespace

std::string format_suite_text(const std::vector<harness::TheoremReport>& reports)
{
    std::ostringstream s;
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.ok();
        s << "theorem " << r.theorem_id << (r.fuzz ? " [fuzz]" : "") << ": " << r.instances_run << " instances, "
          << r.passes << " passed, " << r.inapplicable << " inapplicable, " << r.failures.size()
          << (r.fuzz ? " conclusion violations" : " failed") << "\n";
        for (const auto& f : r.failures)
            s << "  seed " << f.seed << ": " << f.diagnostic << "\n";
        if (!r.tolerances.empty()) {
            s << "  tolerances:";
            for (const auto& [name, v] : r.tolerances)
                s << " " << name << "=" << num(v, "%.3g");
            s << "\n";
        }
    }
    s << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
    return s.str();
}

std::string format_suite_json(const std::vector<harness::TheoremReport>& reports)
{
    json arr = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.ok();
        json j;
        j["theorem_id"] = r.theorem_id;
        j["fuzz"] = r.fuzz;
        j["instances_run"] = r.instances_run;
        j["passes"] = r.passes;
        j["inapplicable"] = r.inapplicable;
        json fails = json::array();
        for (const auto& f : r.failures)
            fails.push_back({{"seed", f.seed}, {"diagnostic", f.diagnostic}});
        j["failures"] = std::move(fails);
        json tol = json::object();
        for (const auto& [name, v] : r.tolerances)
            tol[name] = v;
        j["tolerances"] = std::move(tol);
        arr.push_back(std::move(j));
    }
    json top{{"reports", std::move(arr)}, {"ok", ok}};
    return top.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Linear relations: perturbation stability checks", "relcalc"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "write a random instance as JSON");
    add_common(g, gen.common, {"json"});
    gen.common.format = "json";
    g->add_option("--kind", gen.kind, "instance kind")
        ->check(CLI::IsMember({"self-adjoint", "hermitian", "lower-bounded", "pair", "relative-pair"}));
    g->add_option("--n", gen.common.n_text, "space dimension or range lo..hi");
    g->add_option("--dim-mul", gen.dim_mul, "dimension of the multivalued part");
    g->add_option("--dim-dom", gen.dim_dom, "domain dimension of Hermitian instances");
    g->add_option("--target-b", gen.target_b, "witness b of generated perturbations");

    CheckArgs chk;
    auto* c = app.add_subcommand("check", "report structure of an instance and run applicable checks");
    add_common(c, chk.common, {"text", "json"});
    c->add_option("--input", chk.input, "instance JSON")->required();

    BoundsArgs bnd;
    auto* b = app.add_subcommand("bounds", "relative-bound curve b_min(a) of S with respect to T");
    add_common(b, bnd.common, {"text", "json", "csv"});
    b->add_option("--input", bnd.input, "instance JSON with relations T and S")->required();
    b->add_option("--threads", bnd.threads, "worker threads (0 = all cores)");

    SuiteArgs su;
    auto* s = app.add_subcommand("suite", "run theorem suites over generated instances");
    add_common(s, su.common, {"text", "json"});
    s->add_option("--theorem", su.theorem, "2.4, 2.5, 3.1-lemma, 3.2, 3.3, 3.1-theorem, 3.2-corollary or all");
    s->add_option("--instances", su.instances, "instances per theorem");
    s->add_option("--n", su.common.n_text, "space dimension or range lo..hi");
    s->add_option("--dim-mul", su.dim_mul, "fixed multivalued dimension");
    s->add_option("--dim-dom", su.dim_dom, "fixed Hermitian domain dimension");
    s->add_option("--target-b", su.target_b, "fixed witness b");
    s->add_option("--threads", su.threads, "worker threads (0 = all cores)");
    s->add_flag("--fuzz", su.fuzz, "relax b < 1 and report conclusion violations without failing");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (g->parsed())
            return do_generate(gen, out);
        if (c->parsed())
            return do_check(chk, out);
        if (b->parsed()) {
            if (bnd.threads == 0)
                bnd.threads = std::max(1u, std::thread::hardware_concurrency());
            return do_bounds(bnd, out);
        }
        return do_suite(su, out);
    } catch (const NumericalBreakdown& e) {
        err << "relcalc: numerical breakdown: " << e.what() << "\n";
        return exit_numerical;
    } catch (const Error& e) {
        err << "relcalc: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace relcalc::cli
