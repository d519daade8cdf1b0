#ifndef GREENS_REPORT_HPP
#define GREENS_REPORT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "greens/inheritance.hpp"
#include "greens/stability.hpp"

namespace greens {

/// Aggregate results of sweeping every enumerated subsemigroup of one
/// semigroup through the inheritance checks.
struct SubsemigroupSweepSummary {
  std::size_t count = 0;
  bool truncated = false;
  std::size_t regular_subsemigroups = 0;
  std::size_t d_equality_failures = 0;   // embeddings with D' != D|_U
  std::size_t leq_violations = 0;        // must stay 0
  std::size_t stable_theorem_checked = 0;
  std::size_t stable_theorem_violations = 0;  // must stay 0
  std::size_t findings = 0;  // <=_R near-misses with non-regular y
};

/// Everything the analyze command prints, with deterministic ordering.
struct AnalysisReport {
  std::string name;
  std::size_t order = 0;
  std::optional<element_index> identity;
  std::size_t idempotent_count = 0;
  std::size_t regular_count = 0;
  std::size_t r_classes = 0, l_classes = 0, h_classes = 0, d_classes = 0,
              j_classes = 0;
  std::vector<std::size_t> d_class_sizes;  // by class id
  bool d_equals_j = false;
  StabilityReport stability;
  std::optional<SubsemigroupSweepSummary> subsemigroups;
};

SubsemigroupSweepSummary sweep_subsemigroups(
    std::shared_ptr<const FiniteSemigroup> S, const GreenStructure& G,
    std::size_t max_seed = 3, std::size_t cap = 5000);

/// The subsemigroup sweep is included when the order is at most
/// `subsemigroup_sweep_limit` (the sweep over all 3-element seeds grows as
/// n^3 closures).
AnalysisReport analyze(std::shared_ptr<const FiniteSemigroup> S,
                       std::string name,
                       std::size_t subsemigroup_sweep_limit = 50);

std::string render(const AnalysisReport& report);

std::string render_stability(const FiniteSemigroup& S,
                             const StabilityReport& report);

std::string render_inheritance(const FiniteSemigroup& S,
                               const SubsemigroupEmbedding& U,
                               const InheritanceReport& inh,
                               const LeqInheritanceReport& leq,
                               const StableTheoremReport& stable);

std::string render_enumeration(const FiniteSemigroup& S,
                               const SubsemigroupEnumeration& e);

}  // namespace greens

#endif  // GREENS_REPORT_HPP
