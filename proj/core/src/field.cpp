#include "crsym/field.hpp"

#include <sstream>

namespace crsym {

HoloField::HoloField(MixedPoly f1_, MixedPoly f2_, MixedPoly g_)
    : f1(std::move(f1_)), f2(std::move(f2_)), g(std::move(g_)) {
  if (!f1.is_holomorphic() || !f2.is_holomorphic() || !g.is_holomorphic())
    throw InputError("HoloField coefficients must be holomorphic in (z1, z2, w)");
}

HoloField HoloField::euler(const Rat& mu1, const Rat& mu2) {
  return {MixedPoly::z1().scaled(GaussRat(mu1)),
          MixedPoly::z2().scaled(GaussRat(mu2)), MixedPoly::w()};
}

MixedPoly HoloField::apply(const MixedPoly& p) const {
  return f1 * p.wirtinger(0) + f2 * p.wirtinger(1) + g * p.wirtinger(2);
}

HoloField lie_bracket(const HoloField& X, const HoloField& Y) {
  return {X.apply(Y.f1) - Y.apply(X.f1), X.apply(Y.f2) - Y.apply(X.f2),
          X.apply(Y.g) - Y.apply(X.g)};
}

std::string HoloField::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const MixedPoly& p, const char* dir) {
    if (p.is_zero()) return;
    // Pull a negative sign out of a single-term coefficient so the
    // rendered field stays within the input grammar.
    MixedPoly q = p;
    bool neg = false;
    if (p.size() == 1) {
      const GaussRat& c = p.terms().begin()->second;
      neg = (c.is_real() && c.re < 0) || (c.is_imaginary() && c.im < 0);
      if (neg) q = -p;
    }
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool constant_complex = q.size() == 1 && q.terms().begin()->first.is_one() &&
                            !q.terms().begin()->second.is_real() &&
                            !q.terms().begin()->second.is_imaginary();
    if (q.size() == 1 && !constant_complex)
      os << (q == MixedPoly::one() ? std::string(dir) : q.str() + "*" + dir);
    else
      os << "(" << q.str() << ")*" << dir;
  };
  emit(f1, "d1");
  emit(f2, "d2");
  emit(g, "dw");
  return first ? "0" : os.str();
}

}  // namespace crsym
