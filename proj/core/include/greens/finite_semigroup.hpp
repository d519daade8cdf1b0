#ifndef GREENS_FINITE_SEMIGROUP_HPP
#define GREENS_FINITE_SEMIGROUP_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "greens/errors.hpp"

namespace greens {

using element_index = std::uint32_t;

/// Sentinel for "no element" in index maps.
inline constexpr element_index no_element =
    std::numeric_limits<element_index>::max();

/// A finite semigroup on elements 0..n-1 given by its multiplication table.
///
/// Instances are immutable once constructed and every operation on them is a
/// pure function of its inputs, so concurrent use needs no synchronisation.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;

  std::size_t size() const { return n_; }

  /// Table lookup with bounds checking.
  element_index product(element_index x, element_index y) const;

  /// Unchecked table lookup for hot loops.
  element_index at(element_index x, element_index y) const {
    return table_[static_cast<std::size_t>(x) * n_ + y];
  }

  /// The unique two-sided identity, if one exists.
  std::optional<element_index> identity() const { return identity_; }

  std::span<const element_index> row(element_index x) const {
    return {table_.data() + static_cast<std::size_t>(x) * n_, n_};
  }

  const std::optional<std::vector<std::string>>& labels() const {
    return labels_;
  }

  /// Display name of an element: the stored label, or the index as text.
  std::string label(element_index x) const;

  bool operator==(const FiniteSemigroup&) const = default;

  /// Builds without the associativity sweep, for tables that are associative
  /// by construction (composition tables, restrictions of validated tables).
  /// Still detects an identity.
  static FiniteSemigroup from_table_unchecked(
      std::size_t n, std::vector<element_index> table,
      std::optional<std::vector<std::string>> labels = std::nullopt);

 private:
  std::size_t n_ = 0;
  std::vector<element_index> table_;  // row-major, n*n
  std::optional<element_index> identity_;
  std::optional<std::vector<std::string>> labels_;
};

/// Validates a raw table (entry range, exhaustive associativity), detects the
/// two-sided identity if present, and builds the semigroup.
FiniteSemigroup validate_table(
    const std::vector<std::vector<element_index>>& rows,
    std::optional<std::vector<std::string>> labels = std::nullopt);

/// Lexicographically first triple (x, y, z) with (xy)z != x(yz), if any.
std::optional<std::array<element_index, 3>> associativity_witness(
    const FiniteSemigroup& S);

/// x^k for k >= 1 by repeated multiplication.
element_index power(const FiniteSemigroup& S, element_index x,
                    std::uint64_t k);

/// S itself when S already has an identity, otherwise S^1 with one new
/// element adjoined as a two-sided identity.
FiniteSemigroup adjoin_identity(const FiniteSemigroup& S);

/// All x with x^2 = x, ascending.
std::vector<element_index> idempotents(const FiniteSemigroup& S);

/// Whether x = xzx for some z (brute force over z).
bool is_regular_element(const FiniteSemigroup& S, element_index x);

/// Reg(S), ascending.
std::vector<element_index> regular_set(const FiniteSemigroup& S);

/// Smallest k, p >= 1 with x^{k+p} = x^k.  Always exists finitely and
/// satisfies k + p <= n + 1.
struct OrderData {
  std::uint32_t index;
  std::uint32_t period;
  bool operator==(const OrderData&) const = default;
};

OrderData element_order_data(const FiniteSemigroup& S, element_index x);

}  // namespace greens

#endif  // GREENS_FINITE_SEMIGROUP_HPP
