#ifndef GREENS_INHERITANCE_HPP
#define GREENS_INHERITANCE_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "greens/green_structure.hpp"
#include "greens/subsemigroup.hpp"

namespace greens {

/// How one Green's relation computed inside U compares against the ambient
/// relation restricted to U.  `restriction_only` lists the pairs related in
/// the restriction but not intrinsically, in ambient indices, x < y,
/// lexicographic.
struct RelationComparison {
  bool contains = true;  // intrinsic is a subset of the restriction
  bool equals = true;
  std::vector<std::pair<element_index, element_index>> restriction_only;
};

/// Comparison of all five relations plus the hypothesis flags that drive
/// the inheritance theorems: u_regular (every element of U regular within
/// U) and reg_s_closed (U is exactly Reg(S)).
///
/// Containment of the intrinsic relation in the restriction holds for every
/// valid embedding, and regularity of U forces equality for R, L and H;
/// inheritance_report throws InternalCheckError if either fails, since that
/// indicates a bug rather than mathematics.
struct InheritanceReport {
  RelationComparison r, l, h, d, j;
  bool u_regular = false;
  bool reg_s_closed = false;
};

InheritanceReport inheritance_report(const GreenStructure& ambient_green,
                                     const SubsemigroupEmbedding& U);
InheritanceReport inheritance_report(const FiniteSemigroup& S,
                                     const SubsemigroupEmbedding& U);

/// For x, y in U with y regular in U, ambient x <=_R y must imply intrinsic
/// x <=_R y, and dually for <=_L.  Violations (always empty on correct
/// input) are returned rather than thrown so sweeps can report them.
/// `findings` lists near-misses in the right preorder: pairs with x regular
/// in U, y not regular in U, ambient x <=_R y, but intrinsically x not
/// <=_R y.  Pairs are ambient indices in lexicographic order.
struct LeqInheritanceReport {
  std::vector<std::pair<element_index, element_index>> violations_r;
  std::vector<std::pair<element_index, element_index>> violations_l;
  std::vector<std::pair<element_index, element_index>> findings;
};

LeqInheritanceReport leqr_inheritance_check(const GreenStructure& ambient_green,
                                            const SubsemigroupEmbedding& U);
LeqInheritanceReport leqr_inheritance_check(const FiniteSemigroup& S,
                                            const SubsemigroupEmbedding& U);

/// When Reg(S) is closed under the product, the intrinsic D of Reg(S)
/// equals the restriction of D, and (finitely, where D = J) likewise for J.
struct RegularSetReport {
  bool closed = false;
  // product of two regular elements that is not regular, when not closed
  std::pair<element_index, element_index> violation{no_element, no_element};
  bool d_equal = false;
  bool j_equal = false;
  std::optional<SubsemigroupEmbedding> embedding;
};

RegularSetReport reg_closed_check(std::shared_ptr<const FiniteSemigroup> S);

/// When R and L are inherited by U, two U-elements that are ambient
/// J-related and intrinsically <=_J-comparable must be intrinsically
/// D-related (every element of a finite ambient semigroup is stable).
struct StableTheoremReport {
  bool applicable = false;  // R' = R|_U and L' = L|_U
  std::vector<std::pair<element_index, element_index>> violations;
};

StableTheoremReport thm_stable_check(const GreenStructure& ambient_green,
                                     const SubsemigroupEmbedding& U);
StableTheoremReport thm_stable_check(const FiniteSemigroup& S,
                                     const SubsemigroupEmbedding& U);

/// Closures of all nonempty subsets of size <= max_seed, deduplicated by
/// member set, in first-discovery order (subsets enumerated by size, then
/// lexicographically).  Stops with `truncated` set once `cap` distinct
/// subsemigroups have been produced.
struct SubsemigroupEnumeration {
  std::vector<SubsemigroupEmbedding> embeddings;
  bool truncated = false;
};

SubsemigroupEnumeration enumerate_subsemigroups(
    std::shared_ptr<const FiniteSemigroup> S, std::size_t max_seed = 3,
    std::size_t cap = 5000);

}  // namespace greens

#endif  // GREENS_INHERITANCE_HPP
