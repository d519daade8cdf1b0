#ifndef GREENS_CONCRETE_ELEMENT_HPP
#define GREENS_CONCRETE_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "greens/finite_semigroup.hpp"

namespace greens {

/// A total map on {0..m-1}.  Maps act on the right: x(fg) = (xf)g.
struct Transformation {
  std::vector<std::int32_t> images;
};

/// A partial injective map on {0..m-1}; -1 marks an undefined point.  The
/// everywhere-undefined map is a legitimate element (the zero of I_m).
struct PartialInjection {
  std::vector<std::int32_t> images;
};

/// Square matrix over {0,1} under boolean matrix multiplication.
struct BooleanMatrix {
  std::size_t dim = 0;
  std::vector<std::uint8_t> bits;  // row-major, dim*dim
};

/// Shared structure for Rees matrix coordinates: the structure group and the
/// column-by-row sandwich matrix of group elements.
struct ReesContext {
  FiniteSemigroup group;
  std::vector<std::vector<element_index>> sandwich;  // sandwich[col][row]

  std::size_t rows() const { return sandwich.empty() ? 0 : sandwich[0].size(); }
  std::size_t columns() const { return sandwich.size(); }
};

/// (row, group element, column) with product
/// (i, g, c)(j, h, d) = (i, g * P[c][j] * h, d).
struct ReesTriple {
  element_index row = 0;
  element_index group_element = 0;
  element_index column = 0;
  std::shared_ptr<const ReesContext> context;
};

/// One element of a concrete representation, tagged by variant.  Ordering is
/// by (variant, payload) and gives the canonical tie-break used when new
/// elements are discovered in the same closure round.
class ConcreteElement {
 public:
  using Payload =
      std::variant<Transformation, PartialInjection, BooleanMatrix, ReesTriple>;

  explicit ConcreteElement(Payload payload);

  const Payload& payload() const { return payload_; }

  /// Base-set size for maps, dimension for matrices, 0 for Rees triples.
  std::size_t degree() const;

  std::string to_string() const;

  bool operator==(const ConcreteElement& other) const;
  std::strong_ordering operator<=>(const ConcreteElement& other) const;

 private:
  Payload payload_;
};

/// a then b, in the right-action convention.  Throws MixedVariantsError or
/// DimensionMismatchError on incompatible operands.
ConcreteElement compose(const ConcreteElement& a, const ConcreteElement& b);

struct GeneratedSemigroup {
  FiniteSemigroup semigroup;
  std::vector<ConcreteElement> elements;  // payload of each index
};

/// Breadth-first closure of the generators under composition, deduplicated
/// by canonical payload.  Elements are ordered generators-first, then by
/// discovery round with lexicographic payload ties.  Exceeding `size_limit`
/// is an error, not truncation.
GeneratedSemigroup generate_from_maps(
    const std::vector<ConcreteElement>& generators,
    std::size_t size_limit = 100000);

}  // namespace greens

#endif  // GREENS_CONCRETE_ELEMENT_HPP
