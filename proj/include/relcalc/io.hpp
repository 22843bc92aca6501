#pragma once

/// @file io.hpp
/// @brief JSON instance files.
///
/// {"space_dim": n, "tol": {"rank_rel_tol": r, "angle_tol": t},
///  "relations": {"T": {"basis": [[re, im, ...]]}, ...},
///  "witness": {"a": a, "b": b}}
///
/// Each basis row is one graph vector (x; f) as 2n interleaved (re, im)
/// pairs, x-part first. Doubles are written in shortest round-trip form.

#include "relcalc/relation.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace relcalc::io {

struct Witness {
    double a;
    double b;
};

struct Instance {
    Index space_dim = 0;
    TolerancePolicy tol{};
    std::map<std::string, Relation<double>> relations;
    std::optional<Witness> witness;
    std::string kind;                     ///< generator that produced it, informational
    std::optional<std::uint64_t> seed;    ///< informational

    const Relation<double>* find(const std::string& name) const;
};

std::string to_json_string(const Instance& inst);

/// Throws PreconditionError on malformed input; rows are re-orthonormalized.
Instance parse_instance(std::string_view text);

void save_instance(const Instance& inst, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

} // namespace relcalc::io
