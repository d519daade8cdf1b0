#ifndef GREENS_SUBSEMIGROUP_HPP
#define GREENS_SUBSEMIGROUP_HPP

#include <memory>
#include <vector>

#include "greens/finite_semigroup.hpp"

namespace greens {

/// A subset of an ambient semigroup, closed under the ambient product, with
/// its own local multiplication table and index maps both ways.
struct SubsemigroupEmbedding {
  std::shared_ptr<const FiniteSemigroup> ambient;
  std::vector<element_index> members;      // sorted ambient indices
  FiniteSemigroup local;                   // table restricted to members
  std::vector<element_index> from_ambient; // ambient index -> local or no_element

  element_index to_ambient(element_index u) const { return members[u]; }

  bool contains(element_index ambient_index) const {
    return ambient_index < from_ambient.size() &&
           from_ambient[ambient_index] != no_element;
  }
};

/// Smallest product-closed superset of `subset`, as an embedding.  The local
/// table inherits the ambient labels of the members.
SubsemigroupEmbedding closure(std::shared_ptr<const FiniteSemigroup> S,
                              const std::vector<element_index>& subset);

}  // namespace greens

#endif  // GREENS_SUBSEMIGROUP_HPP
