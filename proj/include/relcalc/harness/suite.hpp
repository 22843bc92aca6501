#pragma once

/// @file suite.hpp
/// @brief Seeded property suites over generated instances.
///
/// Instance i of a suite is built from derive_seed(master, theorem, i) only,
/// so a report is a function of the configuration and never of the thread count.

#include "relcalc/harness/checks.hpp"

#include <optional>
#include <string_view>

namespace relcalc::harness {

enum class TheoremId { lemma_2_4, lemma_2_5, lemma_3_1, lemma_3_2, lemma_3_3, theorem_3_1, corollary_3_2 };

/// "2.4", "2.5", "3.1-lemma", "3.2", "3.3", "3.1-theorem", "3.2-corollary".
const char* theorem_label(TheoremId id);

/// Accepts the labels above and "3.1" for "3.1-theorem".
std::optional<TheoremId> parse_theorem_id(std::string_view label);

std::vector<TheoremId> all_theorems();

struct SuiteConfig {
    std::size_t instances = 100;
    std::uint64_t seed = 0;
    Index n_min = 2;
    Index n_max = 6;
    std::optional<Index> dim_mul;      ///< fixed multivalued dimension, clamped to n - 1
    std::optional<Index> dim_dom;      ///< fixed domain dimension for Hermitian instances
    std::optional<double> target_b;    ///< fixed witness b, else drawn per instance
    double max_target_b = 0.9;
    unsigned threads = 1;
    TolerancePolicy tol{};
    bool fuzz = false;                 ///< witness b drawn from [1, 3) and hypotheses relaxed

    void validate() const;
};

/// The InstanceSpec and master instance seed for instance `index`.
InstanceSpec suite_instance(TheoremId id, const SuiteConfig& cfg, std::size_t index);

/// One instance: generate per `spec` and run the checker.
TheoremReport run_instance(TheoremId id, const InstanceSpec& spec, bool fuzz);

/// Runs cfg.instances instances and merges their reports in index order.
/// NumericalBreakdown propagates; other library errors count as failures.
TheoremReport run_suite(TheoremId id, const SuiteConfig& cfg);

} // namespace relcalc::harness
