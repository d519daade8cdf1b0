#include "greens/subsemigroup.hpp"

#include <algorithm>

namespace greens {

SubsemigroupEmbedding closure(std::shared_ptr<const FiniteSemigroup> S,
                              const std::vector<element_index>& subset) {
  if (!S) {
    throw SemigroupError("ambient semigroup is null");
  }
  if (subset.empty()) {
    throw EmptySubsetError();
  }
  const std::size_t n = S->size();
  std::vector<bool> in(n, false);
  std::vector<element_index> work;
  for (element_index x : subset) {
    if (x >= n) {
      throw IndexError("subset index out of range");
    }
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  }
  // Pair worklist: when w joins, only products involving w are new.
  for (std::size_t i = 0; i < work.size(); ++i) {
    const element_index w = work[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const element_index u = work[j];
      for (element_index p : {S->at(w, u), S->at(u, w)}) {
        if (!in[p]) {
          in[p] = true;
          work.push_back(p);
        }
      }
    }
  }

  SubsemigroupEmbedding E;
  E.ambient = std::move(S);
  E.members.reserve(work.size());
  for (element_index x = 0; x < n; ++x) {
    if (in[x]) {
      E.members.push_back(x);
    }
  }
  E.from_ambient.assign(n, no_element);
  for (std::size_t u = 0; u < E.members.size(); ++u) {
    E.from_ambient[E.members[u]] = static_cast<element_index>(u);
  }

  const std::size_t m = E.members.size();
  std::vector<element_index> table(m * m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      table[u * m + v] = E.from_ambient[E.ambient->at(E.members[u],
                                                      E.members[v])];
    }
  }
  std::optional<std::vector<std::string>> labels;
  if (E.ambient->labels()) {
    labels.emplace();
    labels->reserve(m);
    for (element_index x : E.members) {
      labels->push_back(E.ambient->label(x));
    }
  }
  E.local = FiniteSemigroup::from_table_unchecked(m, std::move(table),
                                                  std::move(labels));
  return E;
}

}  // namespace greens
