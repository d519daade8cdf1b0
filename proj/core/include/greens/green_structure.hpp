#ifndef GREENS_GREEN_STRUCTURE_HPP
#define GREENS_GREEN_STRUCTURE_HPP

#include <vector>

#include "greens/bit_relation.hpp"
#include "greens/finite_semigroup.hpp"

namespace greens {

/// The three Green's preorders as bit relations: leq_r.get(x, y) means
/// x <=_R y, i.e. x lies in y S^1, and dually for the others.
struct GreenPreorders {
  BitRelation leq_r, leq_l, leq_j;
};

/// Preorders computed as reachability in the Cayley graphs (right edges
/// z -> zg for <=_R, left edges for <=_L, both kinds for <=_J), by SCC
/// condensation followed by transitive closure over the DAG.  All elements
/// are used as multipliers, so no generator metadata is needed.
GreenPreorders compute_preorders(const FiniteSemigroup& S);

/// Green's preorders plus the five equivalences as class-id vectors.  Class
/// ids are numbered by smallest contained element index, so id assignment is
/// deterministic.  D is computed twice, as the composition R o L and as J;
/// green_classes throws DJMismatchError if the two disagree (a library bug,
/// never valid on finite input).
struct GreenStructure {
  BitRelation leq_r, leq_l, leq_j;
  std::vector<element_index> r_class, l_class, h_class, d_class, j_class;
  std::size_t r_count = 0, l_count = 0, h_count = 0, d_count = 0, j_count = 0;
};

GreenStructure green_classes(const FiniteSemigroup& S);

/// Elements of the given class, ascending.
std::vector<element_index> class_members(
    const std::vector<element_index>& class_ids, element_index id);

/// One D-class rendered as a grid: rows are its R-classes, columns its
/// L-classes, each cell the intersection H-class.  In a finite semigroup
/// every cell of a D-class is nonempty.
struct EggboxCell {
  std::vector<element_index> elements;
  bool has_idempotent = false;
  bool is_group = false;  // an H-class is a group iff it has an idempotent
};

struct EggboxDiagram {
  element_index d_class_id = 0;
  std::vector<element_index> r_classes;  // sorted ids, one per row
  std::vector<element_index> l_classes;  // sorted ids, one per column
  std::vector<std::vector<EggboxCell>> cells;  // [row][column]
};

EggboxDiagram eggbox(const FiniteSemigroup& S, const GreenStructure& G,
                     element_index d);

/// True iff the H-class contains an idempotent.
bool is_group_h_class(const FiniteSemigroup& S, const GreenStructure& G,
                      element_index h);

}  // namespace greens

#endif  // GREENS_GREEN_STRUCTURE_HPP
