#include "greens/inheritance.hpp"

#include <algorithm>
#include <set>

namespace greens {

namespace {

RelationComparison compare_relation(
    const std::vector<element_index>& local_ids,
    const std::vector<element_index>& ambient_ids,
    const SubsemigroupEmbedding& U) {
  RelationComparison cmp;
  const std::size_t m = U.members.size();
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      const bool local = local_ids[u] == local_ids[v];
      const bool restricted =
          ambient_ids[U.members[u]] == ambient_ids[U.members[v]];
      if (local && !restricted) {
        cmp.contains = false;
        cmp.equals = false;
      }
      if (restricted && !local) {
        cmp.equals = false;
        cmp.restriction_only.emplace_back(U.members[u], U.members[v]);
      }
    }
  }
  return cmp;
}

bool all_regular(const FiniteSemigroup& S) {
  for (element_index x = 0; x < S.size(); ++x) {
    if (!is_regular_element(S, x)) {
      return false;
    }
  }
  return true;
}

}  // namespace

InheritanceReport inheritance_report(const GreenStructure& ambient_green,
                                     const SubsemigroupEmbedding& U) {
  const GreenStructure local = green_classes(U.local);

  InheritanceReport rep;
  rep.r = compare_relation(local.r_class, ambient_green.r_class, U);
  rep.l = compare_relation(local.l_class, ambient_green.l_class, U);
  rep.h = compare_relation(local.h_class, ambient_green.h_class, U);
  rep.d = compare_relation(local.d_class, ambient_green.d_class, U);
  rep.j = compare_relation(local.j_class, ambient_green.j_class, U);

  rep.u_regular = all_regular(U.local);
  rep.reg_s_closed = U.members == regular_set(*U.ambient);

  if (!rep.r.contains || !rep.l.contains || !rep.h.contains ||
      !rep.d.contains || !rep.j.contains) {
    throw InternalCheckError(
        "intrinsic Green's relation escapes the ambient restriction");
  }
  if (rep.u_regular && (!rep.r.equals || !rep.l.equals || !rep.h.equals)) {
    throw InternalCheckError(
        "regular subsemigroup fails to inherit R, L or H");
  }
  return rep;
}

InheritanceReport inheritance_report(const FiniteSemigroup& S,
                                     const SubsemigroupEmbedding& U) {
  return inheritance_report(green_classes(S), U);
}

LeqInheritanceReport leqr_inheritance_check(
    const GreenStructure& ambient_green, const SubsemigroupEmbedding& U) {
  const GreenStructure local = green_classes(U.local);
  const std::size_t m = U.members.size();

  std::vector<bool> regular_in_u(m);
  for (element_index u = 0; u < m; ++u) {
    regular_in_u[u] = is_regular_element(U.local, u);
  }

  LeqInheritanceReport rep;
  for (element_index u = 0; u < m; ++u) {
    for (element_index v = 0; v < m; ++v) {
      const element_index x = U.members[u];
      const element_index y = U.members[v];
      if (regular_in_u[v]) {
        if (ambient_green.leq_r.get(x, y) && !local.leq_r.get(u, v)) {
          rep.violations_r.emplace_back(x, y);
        }
        if (ambient_green.leq_l.get(x, y) && !local.leq_l.get(u, v)) {
          rep.violations_l.emplace_back(x, y);
        }
      } else if (regular_in_u[u] && ambient_green.leq_r.get(x, y) &&
                 !local.leq_r.get(u, v)) {
        rep.findings.emplace_back(x, y);
      }
    }
  }
  return rep;
}

LeqInheritanceReport leqr_inheritance_check(const FiniteSemigroup& S,
                                            const SubsemigroupEmbedding& U) {
  return leqr_inheritance_check(green_classes(S), U);
}

RegularSetReport reg_closed_check(std::shared_ptr<const FiniteSemigroup> S) {
  RegularSetReport rep;
  const std::vector<element_index> reg = regular_set(*S);
  if (reg.empty()) {
    // A nonempty finite semigroup always has an idempotent.
    throw SemigroupError("semigroup has no regular elements");
  }
  std::vector<bool> is_reg(S->size(), false);
  for (element_index x : reg) {
    is_reg[x] = true;
  }
  for (element_index x : reg) {
    for (element_index y : reg) {
      if (!is_reg[S->at(x, y)]) {
        rep.closed = false;
        rep.violation = {x, y};
        return rep;
      }
    }
  }
  rep.closed = true;

  SubsemigroupEmbedding U = closure(S, reg);
  if (U.members != reg) {
    throw InternalCheckError("closure changed an already closed set");
  }
  const GreenStructure ambient_green = green_classes(*S);
  const GreenStructure local = green_classes(U.local);

  auto matches = [&](const std::vector<element_index>& local_ids,
                     const std::vector<element_index>& ambient_ids) {
    for (std::size_t u = 0; u < U.members.size(); ++u) {
      for (std::size_t v = u + 1; v < U.members.size(); ++v) {
        if ((local_ids[u] == local_ids[v]) !=
            (ambient_ids[U.members[u]] == ambient_ids[U.members[v]])) {
          return false;
        }
      }
    }
    return true;
  };
  rep.d_equal = matches(local.d_class, ambient_green.d_class);
  rep.j_equal = matches(local.j_class, ambient_green.j_class) &&
                local.d_class == local.j_class;
  rep.embedding = std::move(U);
  return rep;
}

StableTheoremReport thm_stable_check(const GreenStructure& ambient_green,
                                     const SubsemigroupEmbedding& U) {
  const GreenStructure local = green_classes(U.local);
  const std::size_t m = U.members.size();

  StableTheoremReport rep;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      const bool r_local = local.r_class[u] == local.r_class[v];
      const bool r_amb = ambient_green.r_class[U.members[u]] ==
                         ambient_green.r_class[U.members[v]];
      const bool l_local = local.l_class[u] == local.l_class[v];
      const bool l_amb = ambient_green.l_class[U.members[u]] ==
                         ambient_green.l_class[U.members[v]];
      if (r_local != r_amb || l_local != l_amb) {
        rep.applicable = false;
        return rep;
      }
    }
  }
  rep.applicable = true;

  for (element_index u = 0; u < m; ++u) {
    for (element_index v = 0; v < m; ++v) {
      const element_index x = U.members[u];
      const element_index y = U.members[v];
      const bool j_amb =
          ambient_green.j_class[x] == ambient_green.j_class[y];
      if (j_amb && local.leq_j.get(u, v) &&
          local.d_class[u] != local.d_class[v]) {
        rep.violations.emplace_back(x, y);
      }
    }
  }
  return rep;
}

StableTheoremReport thm_stable_check(const FiniteSemigroup& S,
                                     const SubsemigroupEmbedding& U) {
  return thm_stable_check(green_classes(S), U);
}

SubsemigroupEnumeration enumerate_subsemigroups(
    std::shared_ptr<const FiniteSemigroup> S, std::size_t max_seed,
    std::size_t cap) {
  if (max_seed == 0) {
    throw SemigroupError("max_seed must be >= 1");
  }
  SubsemigroupEnumeration out;
  const std::size_t n = S->size();
  std::set<std::vector<element_index>> seen;

  std::vector<element_index> seed;
  // Enumerates size-k index combinations in lexicographic order.
  auto run_seeds = [&](auto&& self, std::size_t k, element_index from) -> bool {
    if (seed.size() == k) {
      SubsemigroupEmbedding E = closure(S, seed);
      if (seen.insert(E.members).second) {
        if (out.embeddings.size() >= cap) {
          out.truncated = true;
          return false;
        }
        out.embeddings.push_back(std::move(E));
      }
      return true;
    }
    for (element_index x = from; x < n; ++x) {
      seed.push_back(x);
      const bool keep_going = self(self, k, x + 1);
      seed.pop_back();
      if (!keep_going) {
        return false;
      }
    }
    return true;
  };
  for (std::size_t k = 1; k <= max_seed && k <= n; ++k) {
    if (!run_seeds(run_seeds, k, 0)) {
      break;
    }
  }
  return out;
}

}  // namespace greens
