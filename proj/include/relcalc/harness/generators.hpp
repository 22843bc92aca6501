#pragma once

/// @file generators.hpp
/// @brief Seeded random instances: self-adjoint and Hermitian relations and
/// perturbations satisfying the hypotheses of the stability results.
///
/// Every generator is a pure function of its InstanceSpec (and input
/// relation); the same seed always yields the same instance.

#include "relcalc/bounds.hpp"

#include <cstdint>

namespace relcalc::harness {

using Rel = Relation<double>;
using Sub = Subspace<double>;

struct InstanceSpec {
    Index n = 3;
    Index dim_mul = 0;  ///< dimension of the multivalued part
    Index dim_dom = 0;  ///< domain dimension for Hermitian (non-maximal) instances
    std::uint64_t seed = 0;
    double perturbation_target_b = 0.5;
    TolerancePolicy tol{};
};

/// A perturbation together with constants (a, b) for which
/// ||S(x)|| <= a||x|| + b||T(x)|| holds on D(T).
struct Perturbation {
    Rel s;
    double witness_a;
    double witness_b;
};

Sub random_subspace(Index n, Index k, Rng& rng, const TolerancePolicy& tol = {});

/// Random k-dimensional subspace of `host`.
Sub random_subspace_within(const Sub& host, Index k, Rng& rng);

/// Uniformly random graph subspace of C^{2n} of the given dimension.
Rel gen_relation(Index n, Index graph_dim, Rng& rng, const TolerancePolicy& tol = {});

/// T = {(x, Ax + m) : x ∈ M^⊥, m ∈ M} with random M (dim_mul) and Hermitian A on M^⊥.
Rel gen_self_adjoint(const InstanceSpec& spec);

/// Restriction of gen_self_adjoint(spec) to a random dim_dom-dimensional part
/// of its domain, keeping the whole multivalued part.
Rel gen_hermitian(const InstanceSpec& spec);

/// Hermitian S with D(S) ⊇ D(T), S(0) ⊆ T(0) and witness b equal to
/// spec.perturbation_target_b; target 0 gives a bounded real multiple of the
/// identity on D(T).
Perturbation gen_perturbation(const Rel& t, const InstanceSpec& spec);

/// Relation with ||T(x)|| >= c||x||, c > 0: either a random relation with an
/// injective single-valued part or a Hermitian instance shifted off the real axis.
Rel gen_lower_bounded(const InstanceSpec& spec);

/// S with D(S) ⊇ D(T), S(0) ⊆ T(0) and pure bound ||Sx|| <= b||Tx||, b = target.
Perturbation gen_relative_perturbation(const Rel& t, const InstanceSpec& spec);

/// S with D(S) ⊇ D(T), S(0) ⊆ T(0) and ||S restricted to D(T)|| = a.
Perturbation gen_bounded_perturbation(const Rel& t, double a, const InstanceSpec& spec);

/// Hermitian S whose domain contains D(T) and whose multivalued part is drawn
/// from D(S)^⊥ without reference to T(0); witness b equals the target.
Perturbation gen_dominating_hermitian(const Rel& t, const InstanceSpec& spec);

} // namespace relcalc::harness
