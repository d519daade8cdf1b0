#include "greens/green_structure.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace greens {

namespace {

// Iterative Tarjan.  Components are numbered in completion order, so every
// edge leaving a component targets a smaller component id.
struct SccResult {
  std::vector<element_index> comp;
  std::size_t count = 0;
};

SccResult tarjan(const std::vector<std::vector<element_index>>& adj) {
  const std::size_t n = adj.size();
  constexpr element_index unset = no_element;
  SccResult res;
  res.comp.assign(n, unset);

  std::vector<element_index> low(n, 0), num(n, unset), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::pair<element_index, std::size_t>> call;  // node, edge pos
  element_index timer = 0;

  for (element_index root = 0; root < n; ++root) {
    if (num[root] != unset) {
      continue;
    }
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos == 0) {
        num[v] = low[v] = timer++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (pos < adj[v].size()) {
        const element_index w = adj[v][pos++];
        if (num[w] == unset) {
          call.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      }
      if (descended) {
        continue;
      }
      if (low[v] == num[v]) {
        for (;;) {
          const element_index w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          res.comp[w] = static_cast<element_index>(res.count);
          if (w == v) {
            break;
          }
        }
        ++res.count;
      }
      const element_index finished = v;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().first] =
            std::min(low[call.back().first], low[finished]);
      }
    }
  }
  return res;
}

// leq.get(x, y) iff x is reachable from y in the graph.
BitRelation reachability_preorder(
    const std::vector<std::vector<element_index>>& adj) {
  const std::size_t n = adj.size();
  const SccResult scc = tarjan(adj);
  const std::size_t c = scc.count;

  // Component successor sets, deduplicated.
  std::vector<std::vector<element_index>> csucc(c);
  for (std::size_t v = 0; v < n; ++v) {
    for (element_index w : adj[v]) {
      if (scc.comp[v] != scc.comp[w]) {
        csucc[scc.comp[v]].push_back(scc.comp[w]);
      }
    }
  }
  for (auto& s : csucc) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  // Successor components have smaller ids, so one ascending pass closes.
  BitRelation reach(c);
  for (std::size_t k = 0; k < c; ++k) {
    reach.set(k, k);
    for (element_index s : csucc[k]) {
      reach.or_row(k, s);
    }
  }

  BitRelation leq(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (reach.get(scc.comp[y], scc.comp[x])) {
        leq.set(x, y);
      }
    }
  }
  return leq;
}

std::vector<std::vector<element_index>> dedup_rows(
    std::vector<std::vector<element_index>> adj) {
  for (auto& r : adj) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }
  return adj;
}

// Mutual-preorder classes, ids numbered by smallest member.
std::pair<std::vector<element_index>, std::size_t> preorder_classes(
    const BitRelation& leq) {
  const std::size_t n = leq.size();
  std::vector<element_index> ids(n, no_element);
  std::size_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (ids[x] != no_element) {
      continue;
    }
    ids[x] = static_cast<element_index>(next);
    for (std::size_t y = x + 1; y < n; ++y) {
      if (ids[y] == no_element && leq.get(x, y) && leq.get(y, x)) {
        ids[y] = static_cast<element_index>(next);
      }
    }
    ++next;
  }
  return {std::move(ids), next};
}

// Classes of an equivalence given as a bit relation.
std::pair<std::vector<element_index>, std::size_t> relation_classes(
    const BitRelation& rel) {
  const std::size_t n = rel.size();
  std::vector<element_index> ids(n, no_element);
  std::size_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (ids[x] != no_element) {
      continue;
    }
    ids[x] = static_cast<element_index>(next);
    for (std::size_t y = x + 1; y < n; ++y) {
      if (ids[y] == no_element && rel.get(x, y)) {
        ids[y] = static_cast<element_index>(next);
      }
    }
    ++next;
  }
  return {std::move(ids), next};
}

}  // namespace

GreenPreorders compute_preorders(const FiniteSemigroup& S) {
  const std::size_t n = S.size();
  std::vector<std::vector<element_index>> right(n), left(n), both(n);
  for (element_index y = 0; y < n; ++y) {
    right[y].reserve(n);
    left[y].reserve(n);
    both[y].reserve(2 * n);
    for (element_index g = 0; g < n; ++g) {
      right[y].push_back(S.at(y, g));
      left[y].push_back(S.at(g, y));
    }
    both[y].insert(both[y].end(), right[y].begin(), right[y].end());
    both[y].insert(both[y].end(), left[y].begin(), left[y].end());
  }
  GreenPreorders P;
  P.leq_r = reachability_preorder(dedup_rows(std::move(right)));
  P.leq_l = reachability_preorder(dedup_rows(std::move(left)));
  P.leq_j = reachability_preorder(dedup_rows(std::move(both)));
  return P;
}

GreenStructure green_classes(const FiniteSemigroup& S) {
  const std::size_t n = S.size();
  GreenPreorders P = compute_preorders(S);

  GreenStructure G;
  G.leq_r = std::move(P.leq_r);
  G.leq_l = std::move(P.leq_l);
  G.leq_j = std::move(P.leq_j);

  std::tie(G.r_class, G.r_count) = preorder_classes(G.leq_r);
  std::tie(G.l_class, G.l_count) = preorder_classes(G.leq_l);
  std::tie(G.j_class, G.j_count) = preorder_classes(G.leq_j);

  // H = R intersect L, keyed by (R-class, L-class) pairs.
  G.h_class.assign(n, no_element);
  std::map<std::pair<element_index, element_index>, element_index> h_ids;
  for (std::size_t x = 0; x < n; ++x) {
    const auto key = std::make_pair(G.r_class[x], G.l_class[x]);
    auto it = h_ids.find(key);
    if (it == h_ids.end()) {
      it = h_ids.emplace(key, static_cast<element_index>(G.h_count++)).first;
    }
    G.h_class[x] = it->second;
  }

  // Route (a): D as the composition R o L (R and L commute, so this is
  // already an equivalence).
  BitRelation r_rel(n), l_rel(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (G.r_class[x] == G.r_class[y]) {
        r_rel.set(x, y);
      }
      if (G.l_class[x] == G.l_class[y]) {
        l_rel.set(x, y);
      }
    }
  }
  const BitRelation d_rel = compose(r_rel, l_rel);
  std::tie(G.d_class, G.d_count) = relation_classes(d_rel);

  // Route (b): on finite input D must equal J; any mismatch is a bug.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if ((G.d_class[x] == G.d_class[y]) != (G.j_class[x] == G.j_class[y])) {
        throw DJMismatchError(static_cast<element_index>(x),
                              static_cast<element_index>(y));
      }
    }
  }
  return G;
}

std::vector<element_index> class_members(
    const std::vector<element_index>& class_ids, element_index id) {
  std::vector<element_index> out;
  for (std::size_t x = 0; x < class_ids.size(); ++x) {
    if (class_ids[x] == id) {
      out.push_back(static_cast<element_index>(x));
    }
  }
  return out;
}

EggboxDiagram eggbox(const FiniteSemigroup& S, const GreenStructure& G,
                     element_index d) {
  if (d >= G.d_count) {
    throw UnknownClassError("no D-class with id " + std::to_string(d));
  }
  EggboxDiagram E;
  E.d_class_id = d;
  const std::vector<element_index> members = class_members(G.d_class, d);
  for (element_index x : members) {
    E.r_classes.push_back(G.r_class[x]);
    E.l_classes.push_back(G.l_class[x]);
  }
  auto dedup_sort = [](std::vector<element_index>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup_sort(E.r_classes);
  dedup_sort(E.l_classes);

  E.cells.assign(E.r_classes.size(),
                 std::vector<EggboxCell>(E.l_classes.size()));
  for (element_index x : members) {
    const auto r = static_cast<std::size_t>(
        std::lower_bound(E.r_classes.begin(), E.r_classes.end(),
                         G.r_class[x]) -
        E.r_classes.begin());
    const auto c = static_cast<std::size_t>(
        std::lower_bound(E.l_classes.begin(), E.l_classes.end(),
                         G.l_class[x]) -
        E.l_classes.begin());
    EggboxCell& cell = E.cells[r][c];
    cell.elements.push_back(x);
    if (S.at(x, x) == x) {
      cell.has_idempotent = true;
      cell.is_group = true;
    }
  }
  for (const auto& row : E.cells) {
    for (const auto& cell : row) {
      if (cell.elements.empty()) {
        throw InternalCheckError(
            "empty eggbox cell in a finite D-class, which cannot happen");
      }
    }
  }
  return E;
}

bool is_group_h_class(const FiniteSemigroup& S, const GreenStructure& G,
                      element_index h) {
  if (h >= G.h_count) {
    throw UnknownClassError("no H-class with id " + std::to_string(h));
  }
  for (element_index x : class_members(G.h_class, h)) {
    if (S.at(x, x) == x) {
      return true;
    }
  }
  return false;
}

}  // namespace greens
