#pragma once

#include "crsym/poly.hpp"

namespace crsym {

/// Holomorphic polynomial vector field f1*d/dz1 + f2*d/dz2 + g*d/dw.
/// Coefficients are holomorphic polynomials in (z1, z2, w).
struct HoloField {
  MixedPoly f1, f2, g;

  HoloField() = default;
  HoloField(MixedPoly f1_, MixedPoly f2_, MixedPoly g_);

  static HoloField dw() { return {MixedPoly(), MixedPoly(), MixedPoly::one()}; }
  /// Euler field w*dw + mu1*z1*d1 + mu2*z2*d2.
  static HoloField euler(const Rat& mu1, const Rat& mu2);

  bool is_zero() const { return f1.is_zero() && f2.is_zero() && g.is_zero(); }
  /// Coefficients independent of w.
  bool is_rigid() const {
    return !f1.depends_on_w() && !f2.depends_on_w() && !g.depends_on_w();
  }

  /// Apply to a holomorphic polynomial in (z1, z2, w).
  MixedPoly apply(const MixedPoly& p) const;

  friend HoloField operator+(const HoloField& a, const HoloField& b) {
    return {a.f1 + b.f1, a.f2 + b.f2, a.g + b.g};
  }
  friend HoloField operator-(const HoloField& a, const HoloField& b) {
    return {a.f1 - b.f1, a.f2 - b.f2, a.g - b.g};
  }
  HoloField scaled(const GaussRat& c) const {
    return {f1.scaled(c), f2.scaled(c), g.scaled(c)};
  }
  friend bool operator==(const HoloField&, const HoloField&) = default;

  std::string str() const;
};

/// Commutator [X, Y] of vector fields, exact.
HoloField lie_bracket(const HoloField& X, const HoloField& Y);

}  // namespace crsym
