#include "greens/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>

#include "greens/concrete_element.hpp"

namespace greens {

FiniteSemigroup trivial_semigroup() {
  return validate_table({{0}});
}

FiniteSemigroup brandt_b2() {
  // Order 0, e, f, a, b with a_ij a_jk = a_ik and all other products zero.
  return validate_table(
      {
          {0, 0, 0, 0, 0},
          {0, 1, 0, 3, 0},
          {0, 0, 2, 0, 4},
          {0, 0, 3, 0, 1},
          {0, 4, 0, 2, 0},
      },
      std::vector<std::string>{"0", "e", "f", "a", "b"});
}

FiniteSemigroup cyclic_group(std::size_t n) {
  std::vector<std::vector<element_index>> rows(n,
                                               std::vector<element_index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = static_cast<element_index>((i + j) % n);
    }
  }
  return validate_table(rows);
}

FiniteSemigroup right_zero_semigroup(std::size_t n) {
  std::vector<std::vector<element_index>> rows(n,
                                               std::vector<element_index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = static_cast<element_index>(j);
    }
  }
  return validate_table(rows);
}

FiniteSemigroup left_zero_semigroup(std::size_t n) {
  std::vector<std::vector<element_index>> rows(n,
                                               std::vector<element_index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = static_cast<element_index>(i);
    }
  }
  return validate_table(rows);
}

FiniteSemigroup null_semigroup(std::size_t n) {
  std::vector<std::vector<element_index>> rows(
      n, std::vector<element_index>(n, 0));
  std::vector<std::string> labels;
  labels.reserve(n);
  labels.emplace_back("0");
  for (std::size_t i = 1; i < n; ++i) {
    labels.emplace_back(1, static_cast<char>('a' + i - 1));
  }
  return validate_table(rows, std::move(labels));
}

FiniteSemigroup two_element_semilattice() {
  return validate_table({{0, 0}, {0, 1}},
                        std::vector<std::string>{"0", "e"});
}

FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  std::vector<element_index> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const element_index ax = static_cast<element_index>(x / nb);
      const element_index bx = static_cast<element_index>(x % nb);
      const element_index ay = static_cast<element_index>(y / nb);
      const element_index by = static_cast<element_index>(y % nb);
      table[x * n + y] = a.at(ax, ay) * static_cast<element_index>(nb) +
                         b.at(bx, by);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("(" + a.label(static_cast<element_index>(x / nb)) + "," +
                     b.label(static_cast<element_index>(x % nb)) + ")");
  }
  return FiniteSemigroup::from_table_unchecked(n, std::move(table),
                                               std::move(labels));
}

namespace {

// Enumerates image lists in lexicographic order; `lo` is 0 for total maps
// and -1 for partial ones.
void enumerate_images(std::size_t m, std::int32_t lo,
                      std::vector<std::int32_t>& cur,
                      const std::function<void(const std::vector<std::int32_t>&)>& emit) {
  if (cur.size() == m) {
    emit(cur);
    return;
  }
  for (std::int32_t v = lo; v < static_cast<std::int32_t>(m); ++v) {
    cur.push_back(v);
    enumerate_images(m, lo, cur, emit);
    cur.pop_back();
  }
}

FiniteSemigroup table_from_payloads(std::vector<ConcreteElement> elems) {
  std::map<ConcreteElement, element_index> index_of;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index_of.emplace(elems[i], static_cast<element_index>(i));
  }
  const std::size_t n = elems.size();
  std::vector<element_index> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      table[x * n + y] = index_of.at(compose(elems[x], elems[y]));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) {
    labels.push_back(e.to_string());
  }
  return FiniteSemigroup::from_table_unchecked(n, std::move(table),
                                               std::move(labels));
}

}  // namespace

FiniteSemigroup full_transformation_monoid(std::size_t m) {
  std::vector<ConcreteElement> elems;
  std::vector<std::int32_t> cur;
  enumerate_images(m, 0, cur, [&](const std::vector<std::int32_t>& img) {
    elems.emplace_back(Transformation{img});
  });
  return table_from_payloads(std::move(elems));
}

FiniteSemigroup symmetric_inverse_monoid(std::size_t m) {
  std::vector<ConcreteElement> elems;
  std::vector<std::int32_t> cur;
  enumerate_images(m, -1, cur, [&](const std::vector<std::int32_t>& img) {
    std::vector<bool> hit(m, false);
    for (std::int32_t v : img) {
      if (v >= 0) {
        if (hit[static_cast<std::size_t>(v)]) {
          return;
        }
        hit[static_cast<std::size_t>(v)] = true;
      }
    }
    elems.emplace_back(PartialInjection{img});
  });
  return table_from_payloads(std::move(elems));
}

FiniteSemigroup rees_matrix_semigroup(
    const FiniteSemigroup& group,
    const std::vector<std::vector<element_index>>& sandwich) {
  if (!group.identity()) {
    throw SemigroupError("Rees structure semigroup must be a group");
  }
  for (element_index g = 0; g < group.size(); ++g) {
    bool has_inverse = false;
    for (element_index h = 0; h < group.size(); ++h) {
      if (group.at(g, h) == *group.identity() &&
          group.at(h, g) == *group.identity()) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) {
      throw SemigroupError("Rees structure semigroup must be a group");
    }
  }
  auto ctx = std::make_shared<ReesContext>();
  ctx->group = group;
  ctx->sandwich = sandwich;

  std::vector<ConcreteElement> elems;
  for (element_index i = 0; i < ctx->rows(); ++i) {
    for (element_index g = 0; g < group.size(); ++g) {
      for (element_index c = 0; c < ctx->columns(); ++c) {
        elems.emplace_back(ReesTriple{i, g, c, ctx});
      }
    }
  }
  return table_from_payloads(std::move(elems));
}

}  // namespace greens
