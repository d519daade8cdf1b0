#include "greens/bicyclic.hpp"

#include <stdexcept>

#include "greens/errors.hpp"

namespace greens {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("bicyclic exponent overflow");
  }
  return out;
}

}  // namespace

std::string to_string(BicyclicElement x) {
  if (x.i == 0 && x.j == 0) {
    return "1";
  }
  std::string out;
  if (x.i == 1) {
    out += "b";
  } else if (x.i > 1) {
    out += "b^" + std::to_string(x.i);
  }
  if (x.j == 1) {
    out += "a";
  } else if (x.j > 1) {
    out += "a^" + std::to_string(x.j);
  }
  return out;
}

BicyclicElement bmul(BicyclicElement x, BicyclicElement y) {
  const std::uint64_t t = x.j < y.i ? x.j : y.i;
  return BicyclicElement{checked_add(x.i, y.i) - t, checked_add(x.j, y.j) - t};
}

BicyclicRelations green_bicyclic(BicyclicElement x, BicyclicElement y) {
  BicyclicRelations rel{};
  rel.r = x.i == y.i;
  rel.l = x.j == y.j;
  rel.h = x == y;
  rel.d = true;
  rel.j = true;
  rel.leq_r = x.i >= y.i;
  rel.leq_l = x.j >= y.j;
  return rel;
}

std::vector<BicyclicElement> idempotent_chain(std::uint64_t n) {
  if (n == 0) {
    throw SemigroupError("chain depth must be >= 1");
  }
  std::vector<BicyclicElement> chain;
  chain.reserve(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k) {
    chain.push_back(BicyclicElement{k, k});
  }
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (bmul(chain[k], chain[k]) != chain[k]) {
      throw InternalCheckError("b^k a^k failed to be idempotent");
    }
  }
  // e <= f iff e = fef; strictness because consecutive entries differ.
  for (std::uint64_t k = 0; k + 1 <= n; ++k) {
    const BicyclicElement f = chain[k];
    const BicyclicElement e = chain[k + 1];
    if (bmul(bmul(f, e), f) != e || e == f) {
      throw InternalCheckError("idempotent chain is not strictly descending");
    }
  }
  return chain;
}

BicyclicWitnessReport bicyclic_stability_witnesses() {
  BicyclicWitnessReport rep;
  rep.right_x = bicyclic_one;
  rep.right_y = bicyclic_b;
  const BicyclicElement xy = bmul(rep.right_x, rep.right_y);
  const BicyclicRelations r = green_bicyclic(rep.right_x, xy);
  rep.right_verified = r.j && !r.r;

  rep.left_x = bicyclic_one;
  rep.left_y = bicyclic_a;
  const BicyclicElement yx = bmul(rep.left_y, rep.left_x);
  const BicyclicRelations l = green_bicyclic(rep.left_x, yx);
  rep.left_verified = l.j && !l.l;

  if (!rep.right_verified || !rep.left_verified) {
    throw InternalCheckError("bicyclic stability witnesses failed to verify");
  }
  return rep;
}

std::vector<BicyclicElement> mrstar_failure_demo(std::uint64_t n) {
  if (n == 0) {
    throw SemigroupError("chain depth must be >= 1");
  }
  std::vector<BicyclicElement> reps;
  reps.reserve(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k) {
    reps.push_back(BicyclicElement{k, 0});
  }
  for (std::uint64_t k = 0; k + 1 <= n; ++k) {
    // (k+1, 0) = (k, 0) * b puts it below (k, 0); the closed form rules out
    // the reverse comparison, so the chain is strict.
    if (bmul(reps[k], bicyclic_b) != reps[k + 1]) {
      throw InternalCheckError("R-chain witness product failed");
    }
    const BicyclicRelations down = green_bicyclic(reps[k + 1], reps[k]);
    const BicyclicRelations up = green_bicyclic(reps[k], reps[k + 1]);
    if (!down.leq_r || up.leq_r) {
      throw InternalCheckError("R-chain is not strictly descending");
    }
  }
  return reps;
}

BicyclicSelfCheck bicyclic_selfcheck(std::uint64_t max_index) {
  BicyclicSelfCheck chk;
  chk.max_index = max_index;
  const std::uint64_t bound = max_index + 1;

  std::vector<BicyclicElement> box;
  for (std::uint64_t i = 0; i < bound; ++i) {
    for (std::uint64_t j = 0; j < bound; ++j) {
      box.push_back(BicyclicElement{i, j});
    }
  }
  // Witness pool large enough to realise every comparison inside the box:
  // for x <=_R y the witness (y.j + x.i - y.i, x.j) has entries at most
  // 2 * max_index.
  std::vector<BicyclicElement> pool;
  for (std::uint64_t i = 0; i <= 2 * max_index + 1; ++i) {
    for (std::uint64_t j = 0; j <= 2 * max_index + 1; ++j) {
      pool.push_back(BicyclicElement{i, j});
    }
  }

  chk.associativity = true;
  for (const auto& x : box) {
    for (const auto& y : box) {
      for (const auto& z : box) {
        if (bmul(bmul(x, y), z) != bmul(x, bmul(y, z))) {
          chk.associativity = false;
        }
      }
    }
  }

  chk.leq_r_matches = chk.leq_l_matches = true;
  for (const auto& x : box) {
    for (const auto& y : box) {
      bool found_r = x == y;
      bool found_l = x == y;
      for (const auto& s : pool) {
        found_r = found_r || bmul(y, s) == x;
        found_l = found_l || bmul(s, y) == x;
      }
      const BicyclicRelations rel = green_bicyclic(x, y);
      if (rel.leq_r != found_r) {
        chk.leq_r_matches = false;
      }
      if (rel.leq_l != found_l) {
        chk.leq_l_matches = false;
      }
    }
  }

  // J: s y t = x with s = b^{x.i} a^{y.i} and t = b^{y.j} a^{x.j}.
  chk.j_matches = true;
  for (const auto& x : box) {
    for (const auto& y : box) {
      const BicyclicElement s{x.i, y.i};
      const BicyclicElement t{y.j, x.j};
      if (bmul(bmul(s, y), t) != x) {
        chk.j_matches = false;
      }
    }
  }

  chk.h_trivial = true;
  for (const auto& x : box) {
    for (const auto& y : box) {
      const BicyclicRelations rel = green_bicyclic(x, y);
      if ((rel.r && rel.l) != (x == y)) {
        chk.h_trivial = false;
      }
    }
  }

  chk.all_regular = true;
  for (const auto& x : box) {
    const BicyclicElement inv{x.j, x.i};
    if (bmul(bmul(x, inv), x) != x) {
      chk.all_regular = false;
    }
  }
  return chk;
}

}  // namespace greens
