#pragma once

#include <map>
#include <string>
#include <vector>

#include "crsym/errors.hpp"
#include "crsym/rational.hpp"

namespace crsym {

/// Monomial z1^a1 z2^a2 Z1^b1 Z2^b2 w^cw W^cwb u^cu, where Z denotes a
/// conjugated variable, W the conjugate of w and u the real variable Re w.
struct Mono {
  int a1 = 0, a2 = 0;
  int b1 = 0, b2 = 0;
  int cw = 0, cwb = 0;
  int cu = 0;

  friend auto operator<=>(const Mono&, const Mono&) = default;

  Mono conj() const { return {b1, b2, a1, a2, cwb, cw, cu}; }
  Mono operator*(const Mono& o) const {
    return {a1 + o.a1, a2 + o.a2, b1 + o.b1, b2 + o.b2,
            cw + o.cw, cwb + o.cwb, cu + o.cu};
  }

  bool is_holomorphic() const { return b1 == 0 && b2 == 0 && cwb == 0 && cu == 0; }
  /// Mixed: contains both a holomorphic and an antiholomorphic factor.
  bool is_mixed() const { return (a1 + a2 + cw > 0) && (b1 + b2 + cwb > 0); }
  bool is_one() const { return *this == Mono{}; }
};

/// Sparse exact polynomial in z1, z2, their conjugates, w, conj(w) and u.
/// No zero coefficients are ever stored.
class MixedPoly {
 public:
  using TermMap = std::map<Mono, GaussRat>;

  MixedPoly() = default;
  static MixedPoly term(const Mono& m, GaussRat c);
  static MixedPoly constant(GaussRat c) { return term(Mono{}, std::move(c)); }
  static MixedPoly one() { return constant(GaussRat(1)); }
  static MixedPoly i() { return constant(GaussRat::i()); }
  static MixedPoly z1() { return term({1, 0, 0, 0, 0, 0, 0}, GaussRat(1)); }
  static MixedPoly z2() { return term({0, 1, 0, 0, 0, 0, 0}, GaussRat(1)); }
  static MixedPoly zb1() { return term({0, 0, 1, 0, 0, 0, 0}, GaussRat(1)); }
  static MixedPoly zb2() { return term({0, 0, 0, 1, 0, 0, 0}, GaussRat(1)); }
  static MixedPoly w() { return term({0, 0, 0, 0, 1, 0, 0}, GaussRat(1)); }
  static MixedPoly u() { return term({0, 0, 0, 0, 0, 0, 1}, GaussRat(1)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  GaussRat coeff(const Mono& m) const;

  MixedPoly& add_term(const Mono& m, const GaussRat& c);

  friend MixedPoly operator+(const MixedPoly& a, const MixedPoly& b);
  friend MixedPoly operator-(const MixedPoly& a, const MixedPoly& b);
  friend MixedPoly operator*(const MixedPoly& a, const MixedPoly& b);
  friend MixedPoly operator-(const MixedPoly& a);
  MixedPoly& operator+=(const MixedPoly& o) { return *this = *this + o; }
  MixedPoly& operator-=(const MixedPoly& o) { return *this = *this - o; }
  MixedPoly& operator*=(const MixedPoly& o) { return *this = *this * o; }
  friend bool operator==(const MixedPoly&, const MixedPoly&) = default;

  MixedPoly scaled(const GaussRat& c) const;
  MixedPoly conj() const;
  MixedPoly pow(int k) const;

  /// p == conj(p), i.e. the polynomial is real-valued.
  bool is_real() const { return *this == conj(); }
  /// Only holomorphic monomials in (z1, z2, w).
  bool is_holomorphic() const;
  /// Depends on none of w, conj(w), u.
  bool is_w_free() const;
  bool depends_on_w() const;

  MixedPoly real_part() const;  // (p + conj p)/2
  MixedPoly imag_part() const;  // (p - conj p)/2i

  /// Formal partial derivative wrt z1 (var=0), z2 (var=1) or w (var=2).
  MixedPoly wirtinger(int var) const;

  /// Sum of the non-mixed terms of a real polynomial.
  MixedPoly pluriharmonic_part() const;
  /// True iff no stored monomial is mixed. Input must be real and w-free.
  bool is_pluriharmonic() const;

  /// Replace w by u + iP and conj(w) by u - iP; P must be real and w-free.
  MixedPoly substitute_w(const MixedPoly& P) const;

  /// Canonical rendering, terms in Mono order.
  std::string str() const;

 private:
  TermMap terms_;
};

MixedPoly real_of(const MixedPoly& p);  // Re p as a polynomial
MixedPoly imag_of(const MixedPoly& p);

std::string to_string(const Mono& m);

}  // namespace crsym
