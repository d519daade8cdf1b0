#include "greens/stability.hpp"

#include <algorithm>

#include "greens/bit_relation.hpp"

namespace greens {

std::string to_string(StabilityKind kind) {
  switch (kind) {
    case StabilityKind::right_stability: return "right-stability";
    case StabilityKind::left_stability: return "left-stability";
    case StabilityKind::kw_left: return "kw-left";
    case StabilityKind::kw_right: return "kw-right";
    case StabilityKind::kw1_left: return "kw1-left";
    case StabilityKind::kw1_right: return "kw1-right";
  }
  return "?";
}

ElementStability element_stability(const FiniteSemigroup& S,
                                   const GreenStructure& G, element_index x) {
  ElementStability out;
  for (element_index y = 0; y < S.size(); ++y) {
    const element_index xy = S.at(x, y);
    if (G.j_class[x] == G.j_class[xy] && G.r_class[x] != G.r_class[xy]) {
      out.right_stable = false;
      out.witness = StabilityWitness{StabilityKind::right_stability, x, y};
      break;
    }
  }
  for (element_index y = 0; y < S.size(); ++y) {
    const element_index yx = S.at(y, x);
    if (G.j_class[x] == G.j_class[yx] && G.l_class[x] != G.l_class[yx]) {
      out.left_stable = false;
      if (!out.witness) {
        out.witness = StabilityWitness{StabilityKind::left_stability, x, y};
      }
      break;
    }
  }
  return out;
}

bool is_periodic(const FiniteSemigroup& S) {
  for (element_index x = 0; x < S.size(); ++x) {
    const OrderData d = element_order_data(S, x);
    bool found = false;
    for (std::uint32_t k = 1; k <= d.index + d.period && !found; ++k) {
      found = power(S, x, k) == power(S, x, 2 * std::uint64_t{k});
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

bool is_group_bound(const FiniteSemigroup& S, const GreenStructure& G) {
  // Group H-classes, marked once.
  std::vector<bool> group_h(G.h_count, false);
  for (element_index e : idempotents(S)) {
    group_h[G.h_class[e]] = true;
  }
  for (element_index x = 0; x < S.size(); ++x) {
    const OrderData d = element_order_data(S, x);
    bool found = false;
    element_index p = x;
    for (std::uint32_t k = 1; k <= d.index + d.period && !found; ++k) {
      found = group_h[G.h_class[p]];
      p = S.at(p, x);
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

namespace {

// left_ideals[x] = row x of the relation "z in Sx" (or S^1 x when
// with_identity), packed as a BitRelation for subset tests.
BitRelation left_ideals(const FiniteSemigroup& S, bool with_identity) {
  const std::size_t n = S.size();
  BitRelation ideal(n);
  for (element_index x = 0; x < n; ++x) {
    if (with_identity) {
      ideal.set(x, x);
    }
    for (element_index s = 0; s < n; ++s) {
      ideal.set(x, S.at(s, x));
    }
  }
  return ideal;
}

BitRelation right_ideals(const FiniteSemigroup& S, bool with_identity) {
  const std::size_t n = S.size();
  BitRelation ideal(n);
  for (element_index x = 0; x < n; ++x) {
    if (with_identity) {
      ideal.set(x, x);
    }
    for (element_index s = 0; s < n; ++s) {
      ideal.set(x, S.at(x, s));
    }
  }
  return ideal;
}

}  // namespace

KwReport kw_stability(const FiniteSemigroup& S) {
  const std::size_t n = S.size();
  KwReport out;

  const BitRelation sx = left_ideals(S, false);
  const BitRelation xs = right_ideals(S, false);
  const BitRelation s1x = left_ideals(S, true);
  const BitRelation xs1 = right_ideals(S, true);

  for (element_index x = 0; x < n; ++x) {
    for (element_index y = 0; y < n; ++y) {
      const element_index xy = S.at(x, y);
      const element_index yx = S.at(y, x);
      // Sx subset Sxy must force equality, and dually.
      if (sx.row_subset(x, xy) && !sx.rows_equal(x, xy)) {
        out.kw_stable = false;
        out.witnesses.push_back({StabilityKind::kw_left, x, y});
      }
      if (xs.row_subset(x, yx) && !xs.rows_equal(x, yx)) {
        out.kw_stable = false;
        out.witnesses.push_back({StabilityKind::kw_right, x, y});
      }
      // x <=_L xy must force x L xy, and dually, with S^1 ideals.  Row z of
      // s1x is the set S^1 z, so "x in S^1 xy" reads from row xy.
      if (s1x.get(xy, x) && !s1x.rows_equal(x, xy)) {
        out.kw1_stable = false;
        out.witnesses.push_back({StabilityKind::kw1_left, x, y});
      }
      if (xs1.get(yx, x) && !xs1.rows_equal(x, yx)) {
        out.kw1_stable = false;
        out.witnesses.push_back({StabilityKind::kw1_right, x, y});
      }
    }
  }
  return out;
}

MinimalityReport minimality_conditions(const FiniteSemigroup& S,
                                       const GreenStructure& G) {
  (void)S;
  MinimalityReport out;
  auto has_minimal = [&](const std::vector<element_index>& classes,
                         const BitRelation& leq) {
    for (element_index j = 0; j < G.j_count; ++j) {
      // Representatives of the classes inside J-class j.
      std::vector<element_index> reps;
      std::vector<bool> seen(classes.size(), false);
      for (std::size_t x = 0; x < classes.size(); ++x) {
        if (G.j_class[x] == j && !seen[classes[x]]) {
          seen[classes[x]] = true;
          reps.push_back(static_cast<element_index>(x));
        }
      }
      bool minimal_found = false;
      for (element_index a : reps) {
        bool minimal = true;
        for (element_index b : reps) {
          if (classes[a] != classes[b] && leq.get(b, a)) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          minimal_found = true;
          break;
        }
      }
      if (!minimal_found) {
        return false;
      }
    }
    return true;
  };
  out.mr_star = has_minimal(G.r_class, G.leq_r);
  out.ml_star = has_minimal(G.l_class, G.leq_l);
  return out;
}

StabilityReport stability_report(const FiniteSemigroup& S,
                                 const GreenStructure& G) {
  StabilityReport out;
  const std::size_t n = S.size();
  out.right_stable.assign(n, true);
  out.left_stable.assign(n, true);
  for (element_index x = 0; x < n; ++x) {
    const ElementStability es = element_stability(S, G, x);
    out.right_stable[x] = es.right_stable;
    out.left_stable[x] = es.left_stable;
    if (es.witness) {
      out.witnesses.push_back(*es.witness);
    }
    out.stable = out.stable && es.right_stable && es.left_stable;
  }
  const KwReport kw = kw_stability(S);
  out.kw_stable = kw.kw_stable;
  out.kw1_stable = kw.kw1_stable;
  out.witnesses.insert(out.witnesses.end(), kw.witnesses.begin(),
                       kw.witnesses.end());
  out.periodic = is_periodic(S);
  out.group_bound = is_group_bound(S, G);
  const MinimalityReport m = minimality_conditions(S, G);
  out.mr_star = m.mr_star;
  out.ml_star = m.ml_star;
  return out;
}

SimpleClassification classify_simple(const FiniteSemigroup& S,
                                     const GreenStructure& G) {
  SimpleClassification out;
  out.simple = G.j_count == 1;
  if (!out.simple) {
    return out;
  }
  const std::size_t n = S.size();

  out.stable = true;
  for (element_index x = 0; x < n && out.stable; ++x) {
    const ElementStability es = element_stability(S, G, x);
    out.stable = es.right_stable && es.left_stable;
  }

  out.completely_regular = true;
  for (element_index h = 0; h < G.h_count && out.completely_regular; ++h) {
    out.completely_regular = is_group_h_class(S, G, h);
  }

  out.completely_simple = out.simple && out.completely_regular;

  out.miller_clifford = true;
  for (element_index x = 0; x < n && out.miller_clifford; ++x) {
    for (element_index y = 0; y < n && out.miller_clifford; ++y) {
      const element_index xy = S.at(x, y);
      out.miller_clifford =
          G.r_class[xy] == G.r_class[x] && G.l_class[xy] == G.l_class[y];
    }
  }

  if (out.stable != out.completely_regular ||
      out.stable != out.completely_simple ||
      out.stable != out.miller_clifford) {
    throw InternalCheckError(
        "equivalent simplicity conditions disagree on a simple semigroup");
  }
  return out;
}

RightGroupDecomposition right_group_decomposition(const FiniteSemigroup& S,
                                                  const GreenStructure& G) {
  RightGroupDecomposition out;
  if (G.r_count != 1) {
    out.status = RightGroupDecomposition::Status::not_right_simple;
    return out;
  }
  const std::size_t n = S.size();
  for (element_index a = 0; a < n; ++a) {
    for (element_index b = 0; b < n; ++b) {
      for (element_index c = b + 1; c < n; ++c) {
        if (S.at(a, b) == S.at(a, c)) {
          out.status = RightGroupDecomposition::Status::not_left_cancellative;
          out.cancellation_witness = {a, b, c};
          return out;
        }
      }
    }
  }

  const std::vector<element_index> es = idempotents(S);
  if (es.size() != G.l_count) {
    throw InternalCheckError(
        "right group must have one idempotent per L-class");
  }
  std::vector<bool> l_seen(G.l_count, false);
  for (element_index e : es) {
    if (l_seen[G.l_class[e]]) {
      throw InternalCheckError(
          "right group must have one idempotent per L-class");
    }
    l_seen[G.l_class[e]] = true;
  }

  const std::vector<element_index> g0 =
      class_members(G.h_class, G.h_class[es[0]]);

  // psi(g, e) = g*e must be a bijection G0 x E -> S obeying
  // psi(g, e) psi(h, f) = psi(gh, f).
  std::vector<element_index> g0_pos(n, no_element);
  for (std::size_t i = 0; i < g0.size(); ++i) {
    g0_pos[g0[i]] = static_cast<element_index>(i);
  }
  std::vector<bool> image_seen(n, false);
  if (g0.size() * es.size() != n) {
    throw InternalCheckError("right group decomposition has the wrong size");
  }
  for (element_index g : g0) {
    for (element_index e : es) {
      const element_index ge = S.at(g, e);
      if (image_seen[ge]) {
        throw InternalCheckError("right group decomposition is not injective");
      }
      image_seen[ge] = true;
    }
  }
  for (element_index g : g0) {
    for (element_index h : g0) {
      if (g0_pos[S.at(g, h)] == no_element) {
        throw InternalCheckError("group part of a right group is not closed");
      }
      for (element_index e : es) {
        for (element_index f : es) {
          if (S.at(S.at(g, e), S.at(h, f)) != S.at(S.at(g, h), f)) {
            throw InternalCheckError(
                "right group product rule (g,s)(h,t) = (gh,t) fails");
          }
        }
      }
    }
  }

  out.status = RightGroupDecomposition::Status::decomposed;
  out.group_order = g0.size();
  out.right_zero_order = es.size();
  return out;
}

}  // namespace greens
