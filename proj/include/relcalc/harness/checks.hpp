#pragma once

/// @file checks.hpp
/// @brief Executable checkers for the stability lemmas, corollaries and theorem.
///
/// A checker first verifies the hypotheses computationally. When they fail
/// the instance is recorded as inapplicable; when they hold every stated
/// conclusion is asserted. Each call returns a report over one instance.

#include "relcalc/harness/generators.hpp"

#include <span>
#include <string>
#include <vector>

namespace relcalc::harness {

enum class Verdict { pass, fail, inapplicable };

struct Failure {
    std::uint64_t seed;
    std::string diagnostic;
};

/// instances_run = passes + inapplicable + failures.size().
struct TheoremReport {
    std::string theorem_id;
    std::size_t instances_run = 0;
    std::size_t passes = 0;
    std::size_t inapplicable = 0;
    std::vector<Failure> failures;
    std::vector<std::pair<std::string, double>> tolerances;
    bool fuzz = false;  ///< failures are conclusion-violation counts, not errors

    void record(std::uint64_t seed, Verdict verdict, std::string diagnostic = {});
    /// Appends `other`; tolerances are taken from the first non-empty report.
    void merge(const TheoremReport& other);
    bool ok() const { return fuzz || failures.empty(); }
};

struct CheckOptions {
    std::uint64_t seed = 0;       ///< reported seed and sampling stream
    int x_samples = 50;           ///< random x ∈ D(T) per sampled inequality
    bool fuzz = false;            ///< skip the b < 1 and S(0) ⊆ T(0) hypotheses
};

/// Tolerances pinned for the checkers.
namespace tolerance {
inline constexpr double lower_bound_abs = 1e-8;   ///< c1 >= (1 - b)c - this
inline constexpr double identity_rel = 1e-10;     ///< squared-norm identities, relative to max(lhs, rhs, 1)
inline constexpr double sample_slack = 1e-9;      ///< sampled inequalities, relative to max(rhs, 1)
inline constexpr double hypothesis_rel = 1e-9;    ///< slack when confirming supplied constants
} // namespace tolerance

/// Hermitian T with R(T - λI) = R(T - λ̄I) = C^n at a sampled nonreal λ must be self-adjoint.
TheoremReport check_lemma_2_4(const Rel& t, const CheckOptions& opts = {});

/// T self-adjoint, S Hermitian, D(T) ⊆ D(S) ⇒ S(0) ⊆ T(0).
TheoremReport check_lemma_2_5(const Rel& t, const Rel& s, const CheckOptions& opts = {});

/// Lower bound (1 - b)c for T + S and dim R(T+S)^⊥ = dim R(T)^⊥.
TheoremReport check_lemma_3_1(const Rel& t, const Rel& s, double c, double b, const CheckOptions& opts = {});

/// ||S(x)|| <= a||x|| with a < c gives the conclusions of the previous check with b = a / c.
TheoremReport check_corollary_3_1(const Rel& t, const Rel& s, double c, double a, const CheckOptions& opts = {});

/// ||(T - zI)x||^2 = ||(T - Re z I)x||^2 + (Im z)^2 ||x||^2 on D(T) for Hermitian T.
TheoremReport check_lemma_3_2(const Rel& t, std::span<const Complex<double>> z_samples, const CheckOptions& opts = {});

/// d_±(T + S) = d_±(T) for Hermitian T, S under a witness (a, b) with b < 1.
TheoremReport check_lemma_3_3(const Rel& t, const Rel& s, double witness_a, double witness_b,
                              const CheckOptions& opts = {});

/// The previous check plus: T + S self-adjoint iff T self-adjoint.
TheoremReport check_theorem_3_1(const Rel& t, const Rel& s, double witness_a, double witness_b,
                                const CheckOptions& opts = {});

/// T self-adjoint, S Hermitian, D(T) ⊆ D(S), T-bound < 1 ⇒ T + S self-adjoint,
/// with S(0) ⊆ T(0) obtained from check_lemma_2_5 instead of assumed.
TheoremReport check_corollary_3_2(const Rel& t, const Rel& s, double witness_a, double witness_b,
                                  const CheckOptions& opts = {});

/// Largest violation of ||S(x)|| <= a||x|| + b||T(x)|| over sampled x ∈ D(T),
/// relative to max(rhs, 1); nonpositive when the witness holds on every sample.
double witness_violation(const Rel& t, const Rel& s, double a, double b, int samples, std::uint64_t seed);

} // namespace relcalc::harness
