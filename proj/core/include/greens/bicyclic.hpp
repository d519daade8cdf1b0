#ifndef GREENS_BICYCLIC_HPP
#define GREENS_BICYCLIC_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace greens {

/// Normal form b^i a^j of an element of the bicyclic monoid <a, b | ab = 1>.
/// Exponents are 64-bit; additions are overflow-checked, so exceeding the
/// representable range throws rather than wrapping.
struct BicyclicElement {
  std::uint64_t i = 0;  // exponent of b
  std::uint64_t j = 0;  // exponent of a

  auto operator<=>(const BicyclicElement&) const = default;
};

inline constexpr BicyclicElement bicyclic_one{0, 0};
inline constexpr BicyclicElement bicyclic_a{0, 1};
inline constexpr BicyclicElement bicyclic_b{1, 0};

/// "b^i a^j", with trivial factors dropped; the identity prints as "1".
std::string to_string(BicyclicElement x);

/// (i1, j1)(i2, j2) = (i1 + i2 - t, j1 + j2 - t) with t = min(j1, i2).
BicyclicElement bmul(BicyclicElement x, BicyclicElement y);

/// Green's relations and preorders between two elements, in closed form:
/// x R y iff equal b-exponents, x L y iff equal a-exponents, H is equality,
/// D and J always hold (the monoid is bisimple), x <=_R y iff x.i >= y.i,
/// x <=_L y iff x.j >= y.j.
struct BicyclicRelations {
  bool r, l, h, d, j;
  bool leq_r, leq_l;
};

BicyclicRelations green_bicyclic(BicyclicElement x, BicyclicElement y);

/// e_k = b^k a^k for k = 0..n.  Verifies each e_k is idempotent and that
/// e_{k+1} < e_k strictly in the natural order e <= f iff e = fef; a
/// violation throws InternalCheckError.
std::vector<BicyclicElement> idempotent_chain(std::uint64_t n);

/// The two canonical stability failures: (1, 1*b) lies in J but not R, so 1
/// is not right-stable, and (1, a*1) lies in J but not L.  Both witnesses
/// are verified through green_bicyclic before being returned.
struct BicyclicWitnessReport {
  BicyclicElement right_x, right_y;  // x J xy holds, x R xy fails
  BicyclicElement left_x, left_y;    // x J yx holds, x L yx fails
  bool right_verified = false;
  bool left_verified = false;
};

BicyclicWitnessReport bicyclic_stability_witnesses();

/// R-class representatives b^k for k = 0..n, verified to form a strictly
/// descending <=_R chain, so the single J-class has no minimal R-class up
/// to depth n.  A violation throws InternalCheckError.
std::vector<BicyclicElement> mrstar_failure_demo(std::uint64_t n);

/// Bounded verification of the closed forms against first principles, for
/// all elements with both exponents <= max_index: associativity of bmul,
/// <=_R and <=_L against witness search, J against constructed witnesses,
/// H-triviality, and regularity via the inverse (j, i).
struct BicyclicSelfCheck {
  std::uint64_t max_index = 0;
  bool associativity = false;
  bool leq_r_matches = false;
  bool leq_l_matches = false;
  bool j_matches = false;
  bool h_trivial = false;
  bool all_regular = false;

  bool all() const {
    return associativity && leq_r_matches && leq_l_matches && j_matches &&
           h_trivial && all_regular;
  }
};

BicyclicSelfCheck bicyclic_selfcheck(std::uint64_t max_index);

}  // namespace greens

#endif  // GREENS_BICYCLIC_HPP
