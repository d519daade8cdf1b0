#include "greens/finite_semigroup.hpp"

#include <algorithm>
#include <unordered_map>

namespace greens {

namespace {

std::optional<element_index> detect_identity(
    std::size_t n, const std::vector<element_index>& table) {
  for (std::size_t c = 0; c < n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = table[c * n + x] == x && table[x * n + c] == x;
    }
    if (ok) {
      return static_cast<element_index>(c);
    }
  }
  return std::nullopt;
}

}  // namespace

element_index FiniteSemigroup::product(element_index x,
                                       element_index y) const {
  if (x >= n_ || y >= n_) {
    throw IndexError("element index out of range");
  }
  return at(x, y);
}

std::string FiniteSemigroup::label(element_index x) const {
  if (labels_ && x < labels_->size()) {
    return (*labels_)[x];
  }
  return std::to_string(x);
}

FiniteSemigroup FiniteSemigroup::from_table_unchecked(
    std::size_t n, std::vector<element_index> table,
    std::optional<std::vector<std::string>> labels) {
  if (table.size() != n * n) {
    throw SemigroupError("table size does not match element count");
  }
  if (labels && labels->size() != n) {
    throw SemigroupError("label count does not match element count");
  }
  FiniteSemigroup S;
  S.n_ = n;
  S.table_ = std::move(table);
  S.identity_ = detect_identity(n, S.table_);
  S.labels_ = std::move(labels);
  return S;
}

FiniteSemigroup validate_table(
    const std::vector<std::vector<element_index>>& rows,
    std::optional<std::vector<std::string>> labels) {
  const std::size_t n = rows.size();
  if (n == 0) {
    throw SemigroupError("a semigroup needs at least one element");
  }
  std::vector<element_index> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw SemigroupError("table is not square");
    }
    for (element_index v : r) {
      if (v >= n) {
        throw IndexError("table entry " + std::to_string(v) +
                         " out of range 0.." + std::to_string(n - 1));
      }
      flat.push_back(v);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const element_index xy = flat[x * n + y];
      for (std::size_t z = 0; z < n; ++z) {
        if (flat[xy * n + z] != flat[x * n + flat[y * n + z]]) {
          throw NonAssociativeError(static_cast<element_index>(x),
                                    static_cast<element_index>(y),
                                    static_cast<element_index>(z));
        }
      }
    }
  }
  return FiniteSemigroup::from_table_unchecked(n, std::move(flat),
                                               std::move(labels));
}

std::optional<std::array<element_index, 3>> associativity_witness(
    const FiniteSemigroup& S) {
  const std::size_t n = S.size();
  for (element_index x = 0; x < n; ++x) {
    for (element_index y = 0; y < n; ++y) {
      const element_index xy = S.at(x, y);
      for (element_index z = 0; z < n; ++z) {
        if (S.at(xy, z) != S.at(x, S.at(y, z))) {
          return std::array<element_index, 3>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

element_index power(const FiniteSemigroup& S, element_index x,
                    std::uint64_t k) {
  if (k == 0) {
    throw SemigroupError("power exponent must be >= 1");
  }
  element_index acc = x;
  for (std::uint64_t i = 1; i < k; ++i) {
    acc = S.at(acc, x);
  }
  return acc;
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& S) {
  if (S.identity()) {
    return S;
  }
  const std::size_t n = S.size();
  const std::size_t m = n + 1;
  std::vector<element_index> table(m * m);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      table[x * m + y] = S.at(static_cast<element_index>(x),
                              static_cast<element_index>(y));
    }
  }
  const element_index e = static_cast<element_index>(n);
  for (std::size_t x = 0; x < m; ++x) {
    table[x * m + e] = static_cast<element_index>(x);
    table[e * m + x] = static_cast<element_index>(x);
  }
  std::optional<std::vector<std::string>> labels;
  if (S.labels()) {
    labels = *S.labels();
    labels->push_back("1");
  }
  return FiniteSemigroup::from_table_unchecked(m, std::move(table),
                                               std::move(labels));
}

std::vector<element_index> idempotents(const FiniteSemigroup& S) {
  std::vector<element_index> out;
  for (element_index x = 0; x < S.size(); ++x) {
    if (S.at(x, x) == x) {
      out.push_back(x);
    }
  }
  return out;
}

bool is_regular_element(const FiniteSemigroup& S, element_index x) {
  for (element_index z = 0; z < S.size(); ++z) {
    if (S.at(S.at(x, z), x) == x) {
      return true;
    }
  }
  return false;
}

std::vector<element_index> regular_set(const FiniteSemigroup& S) {
  std::vector<element_index> out;
  for (element_index x = 0; x < S.size(); ++x) {
    if (is_regular_element(S, x)) {
      out.push_back(x);
    }
  }
  return out;
}

OrderData element_order_data(const FiniteSemigroup& S, element_index x) {
  // Walk x, x^2, ... until the first repeat; index = first occurrence of the
  // repeated power, period = gap.
  std::unordered_map<element_index, std::uint32_t> seen;
  element_index cur = x;
  std::uint32_t k = 1;
  seen[cur] = k;
  for (;;) {
    cur = S.at(cur, x);
    ++k;
    auto it = seen.find(cur);
    if (it != seen.end()) {
      return OrderData{it->second, k - it->second};
    }
    seen[cur] = k;
  }
}

}  // namespace greens
