#pragma once

/// @file deficiency.hpp
/// @brief Deficiency spaces R(T - λI)^⊥, the indices d_± and the constant of
/// lower boundedness ||T(x)|| >= c||x||.

#include "relcalc/quotient.hpp"

#include <array>

namespace relcalc {

template <typename Real = double>
struct DeficiencyRecord {
    Complex<Real> lambda;
    Subspace<Real> space;  ///< R(T - λI)^⊥
    Index index;           ///< dim of `space`
};

template <typename Real>
DeficiencyRecord<Real> deficiency_index(const Relation<Real>& t, Complex<Real> lambda)
{
    auto space = complement(range_of(shift(t, lambda)));
    const Index index = space.dim();
    return {lambda, std::move(space), index};
}

struct DeficiencyPair {
    Index plus;
    Index minus;
    std::array<Index, 3> upper_samples;  ///< at i, 2i, 1+i
    std::array<Index, 3> lower_samples;  ///< at -i, -2i, 1-i
    bool half_plane_constant;

    friend bool operator==(const DeficiencyPair& a, const DeficiencyPair& b)
    {
        return a.plus == b.plus && a.minus == b.minus;
    }
};

/// (d_+, d_-) of a Hermitian relation, sampled at three points per half-plane.
template <typename Real>
DeficiencyPair deficiency_pair(const Relation<Real>& t)
{
    if (!is_hermitian(t))
        throw PreconditionError("deficiency_pair: relation is not Hermitian");
    using C = Complex<Real>;
    const std::array<C, 3> upper{C(0, 1), C(0, 2), C(1, 1)};
    DeficiencyPair out{};
    for (std::size_t k = 0; k < upper.size(); ++k) {
        out.upper_samples[k] = deficiency_index(t, upper[k]).index;
        out.lower_samples[k] = deficiency_index(t, std::conj(upper[k])).index;
    }
    out.plus = out.upper_samples[0];
    out.minus = out.lower_samples[0];
    out.half_plane_constant = true;
    for (std::size_t k = 1; k < upper.size(); ++k)
        if (out.upper_samples[k] != out.plus || out.lower_samples[k] != out.minus)
            out.half_plane_constant = false;
    return out;
}

/// Largest c >= 0 with ||T(x)|| >= c||x|| for all x ∈ D(T).
/// D(T) = {0} satisfies every c, reported as +inf.
template <typename Real>
Real lower_bound_constant(const Relation<Real>& t)
{
    return single_valued_part(t).lower_bound();
}

} // namespace relcalc
