#include "crsym/poly.hpp"

#include <sstream>

namespace crsym {

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (rat_den(r) != 1) os << "/" << rat_den(r);
  return os.str();
}

std::optional<Rat> rat_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  Int n = sqrt(rat_num(r)), d = sqrt(rat_den(r));
  if (n * n != rat_num(r) || d * d != rat_den(r)) return std::nullopt;
  return Rat(n, d);
}

std::optional<GaussRat> gauss_sqrt(const GaussRat& x) {
  if (x.im == 0) {
    if (x.re >= 0) {
      if (auto s = rat_sqrt(x.re)) return GaussRat(*s);
      return std::nullopt;
    }
    if (auto s = rat_sqrt(-x.re)) return GaussRat(Rat(0), *s);
    return std::nullopt;
  }
  // (a+bi)^2 = x: a^2 = (|x| + re)/2 with |x| rational.
  auto n = rat_sqrt(x.norm());
  if (!n) return std::nullopt;
  auto a2 = (*n + x.re) / 2;
  auto a = rat_sqrt(a2);
  if (!a || *a == 0) return std::nullopt;
  Rat b = x.im / (2 * *a);
  GaussRat s(*a, b);
  if (s * s == x) return s;
  return std::nullopt;
}

std::string to_string(const GaussRat& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  if (c.re != 0) {
    os << to_string(c.re);
    if (c.im > 0) os << "+";
  }
  if (c.im != 0) {
    if (c.im == -1)
      os << "-i";
    else if (c.im == 1)
      os << "i";
    else
      os << to_string(c.im) << "*i";
  }
  return os.str();
}

MixedPoly MixedPoly::term(const Mono& m, GaussRat c) {
  MixedPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
  return p;
}

GaussRat MixedPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussRat() : it->second;
}

MixedPoly& MixedPoly::add_term(const Mono& m, const GaussRat& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

MixedPoly operator+(const MixedPoly& a, const MixedPoly& b) {
  MixedPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

MixedPoly operator-(const MixedPoly& a, const MixedPoly& b) {
  MixedPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

MixedPoly operator-(const MixedPoly& a) { return a.scaled(GaussRat(-1)); }

MixedPoly operator*(const MixedPoly& a, const MixedPoly& b) {
  MixedPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MixedPoly MixedPoly::scaled(const GaussRat& c) const {
  MixedPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

MixedPoly MixedPoly::conj() const {
  MixedPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.conj(), c.conj());
  return r;
}

MixedPoly MixedPoly::pow(int k) const {
  MixedPoly r = one();
  for (int j = 0; j < k; ++j) r *= *this;
  return r;
}

bool MixedPoly::is_holomorphic() const {
  for (const auto& [m, c] : terms_)
    if (!m.is_holomorphic()) return false;
  return true;
}

bool MixedPoly::is_w_free() const {
  for (const auto& [m, c] : terms_)
    if (m.cw != 0 || m.cwb != 0 || m.cu != 0) return false;
  return true;
}

bool MixedPoly::depends_on_w() const {
  for (const auto& [m, c] : terms_)
    if (m.cw != 0 || m.cwb != 0 || m.cu != 0) return true;
  return false;
}

MixedPoly MixedPoly::real_part() const {
  return (*this + conj()).scaled(GaussRat(Rat(1, 2)));
}

MixedPoly MixedPoly::imag_part() const {
  return (*this - conj()).scaled(GaussRat(Rat(0), Rat(-1, 2)));
}

MixedPoly real_of(const MixedPoly& p) { return p.real_part(); }
MixedPoly imag_of(const MixedPoly& p) { return p.imag_part(); }

MixedPoly MixedPoly::wirtinger(int var) const {
  MixedPoly r;
  for (const auto& [m, c] : terms_) {
    Mono d = m;
    int k;
    switch (var) {
      case 0: k = d.a1; if (k) --d.a1; break;
      case 1: k = d.a2; if (k) --d.a2; break;
      default: k = d.cw; if (k) --d.cw; break;
    }
    if (k) r.add_term(d, c * GaussRat(k));
  }
  return r;
}

MixedPoly MixedPoly::pluriharmonic_part() const {
  MixedPoly r;
  for (const auto& [m, c] : terms_)
    if (!m.is_mixed()) r.terms_.emplace(m, c);
  return r;
}

bool MixedPoly::is_pluriharmonic() const {
  if (!is_real()) throw NonRealModel("is_pluriharmonic: polynomial is not real-valued");
  for (const auto& [m, c] : terms_)
    if (m.is_mixed()) return false;
  return true;
}

MixedPoly MixedPoly::substitute_w(const MixedPoly& P) const {
  MixedPoly wp = u() + P.scaled(GaussRat::i());       // u + iP
  MixedPoly wbp = u() - P.scaled(GaussRat::i());      // u - iP
  // cache powers
  std::vector<MixedPoly> wpow{one()}, wbpow{one()};
  MixedPoly r;
  for (const auto& [m, c] : terms_) {
    while ((int)wpow.size() <= m.cw) wpow.push_back(wpow.back() * wp);
    while ((int)wbpow.size() <= m.cwb) wbpow.push_back(wbpow.back() * wbp);
    Mono base = m;
    base.cw = base.cwb = 0;
    r += (wpow[m.cw] * wbpow[m.cwb]).scaled(c) * term(base, GaussRat(1));
  }
  return r;
}

std::string to_string(const Mono& m) {
  std::ostringstream os;
  auto emit = [&](const char* name, int e) {
    if (e == 0) return;
    if (os.tellp() > 0) os << "*";
    os << name;
    if (e > 1) os << "^" << e;
  };
  emit("z1", m.a1);
  emit("z2", m.a2);
  emit("Z1", m.b1);
  emit("Z2", m.b2);
  emit("w", m.cw);
  emit("W", m.cwb);
  emit("u", m.cu);
  std::string s = os.str();
  return s.empty() ? "1" : s;
}

std::string MixedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    // Render negative real or imaginary coefficients through a " - "
    // separator so output stays within the input grammar.
    bool neg = (c.is_real() && c.re < 0) || (c.is_imaginary() && c.im < 0);
    GaussRat cc = neg ? -c : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string cs = to_string(cc);
    bool needs_paren = !cc.is_real() && !cc.is_imaginary();
    if (m.is_one()) {
      os << cs;
    } else if (cc == GaussRat(1)) {
      os << to_string(m);
    } else {
      if (needs_paren)
        os << "(" << cs << ")";
      else
        os << cs;
      os << "*" << to_string(m);
    }
  }
  return os.str();
}

}  // namespace crsym
