#include "crsym/parse.hpp"

#include <cctype>

#include "crsym/errors.hpp"

namespace crsym {

namespace {

// A partially evaluated expression: scalar + f1*d1 + f2*d2 + g*dw. The
// derivation parts are only populated when field atoms are enabled.
struct Val {
  MixedPoly c, f1, f2, g;

  bool scalar() const { return f1.is_zero() && f2.is_zero() && g.is_zero(); }
};

class Parser {
 public:
  Parser(const std::string& text, bool fields)
      : s_(text), fields_(fields) {}

  Val parse() {
    Val v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Val expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    Val v = term();
    if (neg) v = scale(v, GaussRat(-1));
    for (;;) {
      if (eat('+')) {
        Val t = term();
        v.c += t.c; v.f1 += t.f1; v.f2 += t.f2; v.g += t.g;
      } else if (eat('-')) {
        Val t = term();
        v.c -= t.c; v.f1 -= t.f1; v.f2 -= t.f2; v.g -= t.g;
      } else {
        return v;
      }
    }
  }

  Val term() {
    Val v = factor();
    while (eat('*')) {
      Val t = factor();
      // Derivations cannot be multiplied together.
      if (!v.scalar() && !t.scalar())
        fail("cannot multiply two derivation expressions");
      v = Val{v.c * t.c, v.c * t.f1 + t.c * v.f1, v.c * t.f2 + t.c * v.f2,
              v.c * t.g + t.c * v.g};
    }
    return v;
  }

  Val factor() {
    Val v = atom();
    if (eat('^')) {
      if (!v.scalar()) fail("cannot raise a derivation to a power");
      size_t start = pos_;
      long e = read_uint();
      if (e > 256) { pos_ = start; fail("exponent too large"); }
      v.c = v.c.pow((int)e);
    }
    return v;
  }

  long read_uint() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
      fail("expected a nonnegative integer");
    Int n = 0;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
      n = n * 10 + (s_[pos_] - '0');
      if (n > 1000000) fail("integer literal too large");
      ++pos_;
    }
    return n.convert_to<long>();
  }

  Rat rational() {
    Int num = read_uint();
    if (eat('/')) {
      Int den = read_uint();
      if (den == 0) fail("division by zero");
      return Rat(num, den);
    }
    return Rat(num);
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum((unsigned char)s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Val scalar(MixedPoly p) { return Val{std::move(p), {}, {}, {}}; }

  static Val scale(Val v, const GaussRat& k) {
    return Val{v.c.scaled(k), v.f1.scaled(k), v.f2.scaled(k), v.g.scaled(k)};
  }

  Val atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit((unsigned char)c))
      return scalar(MixedPoly::constant(GaussRat(rational())));
    if (c == '(') {
      ++pos_;
      Val v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (!std::isalpha((unsigned char)c)) fail("unexpected character");
    size_t start = pos_;
    std::string id = ident();
    if (id == "i") return scalar(MixedPoly::i());
    if (id == "z1") return scalar(MixedPoly::z1());
    if (id == "z2") return scalar(MixedPoly::z2());
    if (id == "Z1") return scalar(MixedPoly::zb1());
    if (id == "Z2") return scalar(MixedPoly::zb2());
    if (id == "w") return scalar(MixedPoly::w());
    if (id == "W") return scalar(MixedPoly::w().conj());
    if (id == "u") return scalar(MixedPoly::u());
    if (id == "Re" || id == "Im" || id == "conj") {
      if (!eat('(')) fail("expected '(' after '" + id + "'");
      Val v = expr();
      if (!eat(')')) fail("expected ')'");
      if (!v.scalar()) fail("'" + id + "' applies to scalar expressions only");
      if (id == "Re") return scalar(v.c.real_part());
      if (id == "Im") return scalar(v.c.imag_part());
      return scalar(v.c.conj());
    }
    if (fields_) {
      if (id == "d1") return Val{{}, MixedPoly::one(), {}, {}};
      if (id == "d2") return Val{{}, {}, MixedPoly::one(), {}};
      if (id == "dw") return Val{{}, {}, {}, MixedPoly::one()};
    }
    pos_ = start;
    fail("unknown symbol '" + id + "'");
  }

  const std::string& s_;
  bool fields_;
  size_t pos_ = 0;
};

}  // namespace

MixedPoly parse_polynomial(const std::string& text) {
  return Parser(text, /*fields=*/false).parse().c;
}

HoloField parse_field(const std::string& text) {
  Val v = Parser(text, /*fields=*/true).parse();
  if (!v.c.is_zero())
    throw InputError("a field must be a sum of coefficient*derivation terms");
  if (!v.f1.is_holomorphic() || !v.f2.is_holomorphic() || !v.g.is_holomorphic())
    throw AntiholomorphicCoefficient(
        "field coefficients must be holomorphic in (z1, z2, w)");
  return {std::move(v.f1), std::move(v.f2), std::move(v.g)};
}

}  // namespace crsym
