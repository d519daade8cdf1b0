#ifndef GREENS_BIT_RELATION_HPP
#define GREENS_BIT_RELATION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace greens {

/// Dense boolean relation on {0..n-1} x {0..n-1}, packed 64 entries per word.
/// Rows are contiguous so that row-wise unions and subset tests are cheap.
class BitRelation {
 public:
  BitRelation() = default;

  explicit BitRelation(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }

  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }

  /// row(dst) |= row(src)
  void or_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) {
      bits_[dst * words_ + w] |= bits_[src * words_ + w];
    }
  }

  /// row(i) subseteq row(j)
  bool row_subset(std::size_t i, std::size_t j) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if (bits_[i * words_ + w] & ~bits_[j * words_ + w]) {
        return false;
      }
    }
    return true;
  }

  bool rows_equal(std::size_t i, std::size_t j) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if (bits_[i * words_ + w] != bits_[j * words_ + w]) {
        return false;
      }
    }
    return true;
  }

  bool operator==(const BitRelation&) const = default;

  bool is_reflexive() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!get(i, i)) {
        return false;
      }
    }
    return true;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (get(i, j) != get(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_transitive() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && get(i, j) && !row_subset_rows(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  /// (A o B)(x, y) iff A(x, z) and B(z, y) for some z.
  friend BitRelation compose(const BitRelation& a, const BitRelation& b) {
    BitRelation out(a.n_);
    for (std::size_t x = 0; x < a.n_; ++x) {
      for (std::size_t z = 0; z < a.n_; ++z) {
        if (a.get(x, z)) {
          for (std::size_t w = 0; w < a.words_; ++w) {
            out.bits_[x * a.words_ + w] |= b.bits_[z * a.words_ + w];
          }
        }
      }
    }
    return out;
  }

  BitRelation transposed() const {
    BitRelation out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (get(i, j)) {
          out.set(j, i);
        }
      }
    }
    return out;
  }

 private:
  bool row_subset_rows(std::size_t i, std::size_t j) const {
    return row_subset(i, j);
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace greens

#endif  // GREENS_BIT_RELATION_HPP
