#ifndef GREENS_STABILITY_HPP
#define GREENS_STABILITY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "greens/finite_semigroup.hpp"
#include "greens/green_structure.hpp"

namespace greens {

enum class StabilityKind {
  right_stability,  // x J xy but not x R xy
  left_stability,   // x J yx but not x L yx
  kw_left,          // Sx subset Sxy but Sx != Sxy
  kw_right,         // xS subset yxS but xS != yxS
  kw1_left,         // x <=_L xy but not x L xy
  kw1_right,        // x <=_R yx but not x R yx
};

std::string to_string(StabilityKind kind);

struct StabilityWitness {
  StabilityKind kind;
  element_index x, y;
  bool operator==(const StabilityWitness&) const = default;
};

/// Stability of one element under the modern definition: right-stable iff
/// x J xy implies x R xy for every y, and dually.  The witness, when
/// present, is the smallest violating y for the reported side.
struct ElementStability {
  bool right_stable = true;
  bool left_stable = true;
  std::optional<StabilityWitness> witness;
};

ElementStability element_stability(const FiniteSemigroup& S,
                                   const GreenStructure& G, element_index x);

/// Every x has x^k = x^{2k} for some k.
bool is_periodic(const FiniteSemigroup& S);

/// Every x has some power in a group H-class.  All powers up to cycle start
/// plus period are tested, so the answer is exact.
bool is_group_bound(const FiniteSemigroup& S, const GreenStructure& G);

/// The older ideal-based stability conditions.  kw_stable uses principal
/// ideals without an adjoined identity (Sx, xS), exactly where it differs
/// from the S^1 variant; kw1_stable uses S^1 ideals.
struct KwReport {
  bool kw_stable = true;
  bool kw1_stable = true;
  std::vector<StabilityWitness> witnesses;
};

KwReport kw_stability(const FiniteSemigroup& S);

/// For every J-class, does its set of R-classes (resp. L-classes) have a
/// minimal element under the class preorder?
struct MinimalityReport {
  bool mr_star = true;
  bool ml_star = true;
};

MinimalityReport minimality_conditions(const FiniteSemigroup& S,
                                       const GreenStructure& G);

/// All stability variants of one semigroup, each computed by its own
/// definition rather than inferred from the others.
struct StabilityReport {
  std::vector<bool> right_stable, left_stable;  // per element
  bool stable = true;
  bool kw_stable = true;
  bool kw1_stable = true;
  bool periodic = true;
  bool group_bound = true;
  bool mr_star = true;
  bool ml_star = true;
  std::vector<StabilityWitness> witnesses;
};

StabilityReport stability_report(const FiniteSemigroup& S,
                                 const GreenStructure& G);

/// For a simple semigroup (one J-class) the four conditions below are
/// equivalent; classify_simple evaluates each independently and throws
/// InternalCheckError if they ever disagree.  miller_clifford is the
/// condition x R xy L y for all x, y.
struct SimpleClassification {
  bool simple = false;
  bool stable = false;
  bool completely_regular = false;
  bool completely_simple = false;
  bool miller_clifford = false;
};

SimpleClassification classify_simple(const FiniteSemigroup& S,
                                     const GreenStructure& G);

/// Right-simple semigroups decompose as (group) x (right-zero) exactly when
/// left-cancellative; for finite right-simple input this always succeeds.
/// The isomorphism is verified elementwise against the product rule
/// (g, s)(h, t) = (gh, t).
struct RightGroupDecomposition {
  enum class Status { decomposed, not_right_simple, not_left_cancellative };
  Status status = Status::not_right_simple;
  std::size_t group_order = 0;
  std::size_t right_zero_order = 0;
  // a, b, c with ab = ac and b != c when not left-cancellative
  std::array<element_index, 3> cancellation_witness{};
};

RightGroupDecomposition right_group_decomposition(const FiniteSemigroup& S,
                                                  const GreenStructure& G);

}  // namespace greens

#endif  // GREENS_STABILITY_HPP
