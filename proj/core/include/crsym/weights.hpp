#pragma once

#include <vector>

#include "crsym/poly.hpp"

namespace crsym {

/// Catlin multitype weights (mu1, mu2), with 0 < mu2 <= mu1 <= 1/2.
struct Weight {
  Rat mu1, mu2;

  Weight(Rat m1, Rat m2);
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// mu1*(a1+b1) + mu2*(a2+b2) + cw + cwb + cu.
Rat weighted_degree(const Mono& m, const Weight& lam);

/// True iff every monomial of p has weighted degree exactly d.
bool is_weighted_homogeneous(const MixedPoly& p, const Weight& lam, const Rat& d);

/// Lexicographically least valid weight making every monomial of P have
/// weighted degree 1, in the given coordinates. P must be real, nonzero,
/// w-free and free of pluriharmonic monomials.
Weight infer_multitype_weights(const MixedPoly& P);

/// Brute-force oracle: lexicographically least valid weight with both
/// denominators dividing some d <= max_den. Returns nullopt if none found.
std::optional<Weight> infer_weights_bruteforce(const MixedPoly& P, long max_den);

/// All weights in [-1, cap] at which a nonzero weighted-homogeneous
/// holomorphic field ansatz exists. Sorted ascending; contains -1 and 0.
std::vector<Rat> admissible_field_weights(const Weight& lam, const Rat& cap = Rat(1));

/// All holomorphic monomials z1^c1 z2^c2 w^c3 of weighted degree exactly
/// `target` (c3 = 0 unless allow_w), in canonical Mono order.
std::vector<Mono> enumerate_holo_monomials(const Rat& target, const Weight& lam,
                                           bool allow_w);

}  // namespace crsym
