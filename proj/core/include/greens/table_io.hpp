#ifndef GREENS_TABLE_IO_HPP
#define GREENS_TABLE_IO_HPP

#include <string>
#include <string_view>

#include "greens/concrete_element.hpp"
#include "greens/finite_semigroup.hpp"
#include "greens/green_structure.hpp"

namespace greens {

/// Table file format: line 1 is n, lines 2..n+1 hold n space-separated
/// 0-based entries each, and an optional trailing "labels:" line carries n
/// whitespace-separated names.  Blank lines are ignored.
FiniteSemigroup parse_table_file(std::string_view text);

/// Inverse of parse_table_file; parse(emit(S)) == S.
std::string emit_table_file(const FiniteSemigroup& S);

/// Generator file format, one generator per line:
///   t m: i_1 ... i_m       total map, 1-based images
///   p m: i_1 ... i_m       partial injection, "-" for undefined
///   bm m: r_1;...;r_m      boolean matrix, rows of m bits
FiniteSemigroup parse_generators_file(std::string_view text);

/// parse_generators_file plus the concrete element of each index.
GeneratedSemigroup parse_generators_file_full(std::string_view text);

enum class SemigroupFileKind { table, generators };

/// A file whose first token is a number is a table file; one starting with
/// t, p or bm is a generator file.
SemigroupFileKind sniff_file_kind(std::string_view text);

FiniteSemigroup parse_semigroup_file(std::string_view text);

enum class EggboxFormat { text, dot };

/// One grid per D-class.  Text mode marks group H-classes with '*'; dot
/// mode clusters D-classes with R-classes as rows and L-classes as columns.
/// Output is deterministic for a given semigroup.
std::string emit_eggbox(const FiniteSemigroup& S, const GreenStructure& G,
                        EggboxFormat format);

}  // namespace greens

#endif  // GREENS_TABLE_IO_HPP
