#ifndef GREENS_ERRORS_HPP
#define GREENS_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace greens {

/// Base class of every exception thrown by this library.
struct SemigroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A multiplication table failed the exhaustive associativity sweep.
/// Carries the lexicographically first witness triple.
struct NonAssociativeError : SemigroupError {
  NonAssociativeError(std::uint32_t x_, std::uint32_t y_, std::uint32_t z_)
      : SemigroupError("table is not associative at (" + std::to_string(x_) +
                       ", " + std::to_string(y_) + ", " + std::to_string(z_) +
                       ")"),
        x(x_),
        y(y_),
        z(z_) {}
  std::uint32_t x, y, z;
};

struct IndexError : SemigroupError {
  using SemigroupError::SemigroupError;
};

struct EmptySubsetError : SemigroupError {
  EmptySubsetError() : SemigroupError("subset must be nonempty") {}
};

struct MixedVariantsError : SemigroupError {
  MixedVariantsError() : SemigroupError("generators mix element variants") {}
};

struct DimensionMismatchError : SemigroupError {
  using SemigroupError::SemigroupError;
};

struct SizeLimitError : SemigroupError {
  explicit SizeLimitError(std::size_t limit_)
      : SemigroupError("closure exceeded the size limit of " +
                       std::to_string(limit_)),
        limit(limit_) {}
  std::size_t limit;
};

struct UnknownClassError : SemigroupError {
  using SemigroupError::SemigroupError;
};

/// Malformed input file; `line` is 1-based.
struct ParseError : SemigroupError {
  ParseError(std::size_t line_, const std::string& reason)
      : SemigroupError("parse error at line " + std::to_string(line_) + ": " +
                       reason),
        line(line_) {}
  std::size_t line;
};

/// Two computations that must agree by theory disagreed.  Reaching this
/// indicates a bug in the library, not bad input.
struct InternalCheckError : SemigroupError {
  using SemigroupError::SemigroupError;
};

/// The D relation computed as the join of R and L disagreed with J on a
/// finite semigroup.  Unreachable on valid input.
struct DJMismatchError : InternalCheckError {
  DJMismatchError(std::uint32_t x_, std::uint32_t y_)
      : InternalCheckError("D and J disagree on the pair (" +
                           std::to_string(x_) + ", " + std::to_string(y_) +
                           ")"),
        x(x_),
        y(y_) {}
  std::uint32_t x, y;
};

}  // namespace greens

#endif  // GREENS_ERRORS_HPP
