#pragma once

#include "relcalc/errors.hpp"

#include <string>

namespace relcalc {

/// Single source of numerical tolerances for rank and containment decisions.
///
/// `rank_rel_tol` truncates singular values relative to the largest one,
/// `angle_tol` bounds the sine of the largest principal angle accepted as
/// containment.
struct TolerancePolicy {
    double rank_rel_tol = 1e-10;
    double angle_tol = 1e-8;

    void validate() const
    {
        auto ok = [](double v) { return v > 0.0 && v < 1e-2; };
        if (!ok(rank_rel_tol))
            throw PreconditionError("rank_rel_tol must lie in (0, 1e-2), got " + std::to_string(rank_rel_tol));
        if (!ok(angle_tol))
            throw PreconditionError("angle_tol must lie in (0, 1e-2), got " + std::to_string(angle_tol));
    }

    friend bool operator==(const TolerancePolicy&, const TolerancePolicy&) = default;
};

} // namespace relcalc
