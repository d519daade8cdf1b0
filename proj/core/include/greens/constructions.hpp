#ifndef GREENS_CONSTRUCTIONS_HPP
#define GREENS_CONSTRUCTIONS_HPP

#include <vector>

#include "greens/finite_semigroup.hpp"

namespace greens {

FiniteSemigroup trivial_semigroup();

/// The five-element combinatorial Brandt semigroup of 2x2 binary matrix
/// units with zero, in the order 0, e, f, a, b.
FiniteSemigroup brandt_b2();

/// Z_n under addition, identity 0.
FiniteSemigroup cyclic_group(std::size_t n);

/// xy = y.
FiniteSemigroup right_zero_semigroup(std::size_t n);

/// xy = x.
FiniteSemigroup left_zero_semigroup(std::size_t n);

/// All products equal the zero at index 0.
FiniteSemigroup null_semigroup(std::size_t n);

/// {0, e} under meet; e is the identity.
FiniteSemigroup two_element_semilattice();

/// Componentwise product on pairs, ordered (a, b) -> a * |B| + b.
FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b);

/// T_m: all total maps on m points, sorted lexicographically by image list,
/// under right-action composition.  Intended for small m (the table has
/// m^{2m} entries).
FiniteSemigroup full_transformation_monoid(std::size_t m);

/// I_m: all partial injections on m points, sorted lexicographically with
/// undefined before defined points.
FiniteSemigroup symmetric_inverse_monoid(std::size_t m);

/// Rees matrix semigroup (without zero) over a group, with the given
/// column-by-row sandwich matrix of group elements.  Elements are triples
/// (row, group element, column) in lexicographic order.
FiniteSemigroup rees_matrix_semigroup(
    const FiniteSemigroup& group,
    const std::vector<std::vector<element_index>>& sandwich);

}  // namespace greens

#endif  // GREENS_CONSTRUCTIONS_HPP
