#include <doctest.h>

#include <random>

#include "crsym/poly.hpp"

using namespace crsym;

namespace {

// Deterministic pseudo-random small polynomial.
MixedPoly random_poly(std::mt19937& rng, int nterms, bool with_w = true) {
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3);
  MixedPoly p;
  for (int t = 0; t < nterms; ++t) {
    Mono m{e(rng), e(rng), e(rng), e(rng), 0, 0, 0};
    if (with_w) {
      m.cw = e(rng) % 2;
      m.cwb = e(rng) % 2;
      m.cu = e(rng) % 2;
    }
    p.add_term(m, GaussRat(c(rng), c(rng)));
  }
  return p;
}

// Oracle: multiply by expanding term-by-term with fresh accumulation.
MixedPoly naive_mul(const MixedPoly& a, const MixedPoly& b) {
  MixedPoly out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

}  // namespace

TEST_CASE("monomial and constant basics") {
  CHECK(MixedPoly().is_zero());
  CHECK(MixedPoly::constant(GaussRat(0)).is_zero());
  CHECK(MixedPoly::z1().is_holomorphic());
  CHECK(!MixedPoly::zb1().is_holomorphic());
  CHECK(MixedPoly::w().depends_on_w());
  CHECK(MixedPoly::u().depends_on_w());
  CHECK(MixedPoly::z2().is_w_free());
  CHECK(Mono{1, 2, 3, 4, 5, 6, 7}.conj() == Mono{3, 4, 1, 2, 6, 5, 7});
}

TEST_CASE("multiplication matches the brute-force expansion") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    MixedPoly a = random_poly(rng, 4), b = random_poly(rng, 5);
    CHECK(a * b == naive_mul(a, b));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("ring identities on random polynomials") {
  std::mt19937 rng(999);
  for (int trial = 0; trial < 25; ++trial) {
    MixedPoly a = random_poly(rng, 3), b = random_poly(rng, 3),
              c = random_poly(rng, 3);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == MixedPoly());
  }
}

TEST_CASE("conjugation is an involutive ring morphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    MixedPoly a = random_poly(rng, 4), b = random_poly(rng, 4);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
  CHECK(MixedPoly::i().conj() == -MixedPoly::i());
  CHECK(MixedPoly::w().conj() == MixedPoly::term({0, 0, 0, 0, 0, 1, 0}, GaussRat(1)));
  CHECK(MixedPoly::u().conj() == MixedPoly::u());
}

TEST_CASE("real and imaginary parts") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    MixedPoly p = random_poly(rng, 4);
    MixedPoly re = p.real_part(), im = p.imag_part();
    CHECK(re.is_real());
    CHECK(im.is_real());
    CHECK(re + im * MixedPoly::i() == p);
    CHECK(real_of(p) == re);
    CHECK(imag_of(p) == im);
  }
}

TEST_CASE("powers") {
  MixedPoly s = MixedPoly::z1() + MixedPoly::zb1();
  MixedPoly sq = s * s;
  CHECK(s.pow(2) == sq);
  CHECK(s.pow(0) == MixedPoly::one());
  CHECK(s.pow(5) == sq * sq * s);
}

TEST_CASE("wirtinger derivatives satisfy the Leibniz rule") {
  std::mt19937 rng(4242);
  for (int var = 0; var < 3; ++var)
    for (int trial = 0; trial < 15; ++trial) {
      MixedPoly a = random_poly(rng, 4), b = random_poly(rng, 4);
      CHECK((a * b).wirtinger(var) ==
            a.wirtinger(var) * b + a * b.wirtinger(var));
    }
  CHECK(MixedPoly::z1().wirtinger(0) == MixedPoly::one());
  CHECK(MixedPoly::zb1().wirtinger(0) == MixedPoly());
  CHECK(MixedPoly::w().wirtinger(2) == MixedPoly::one());
  MixedPoly p = MixedPoly::z1().pow(3) * MixedPoly::z2();
  CHECK(p.wirtinger(0) ==
        MixedPoly::constant(GaussRat(3)) * MixedPoly::z1().pow(2) * MixedPoly::z2());
}

TEST_CASE("pluriharmonic part") {
  // Re z1^2 is pluriharmonic, |z1|^2 is not.
  MixedPoly p = real_of(MixedPoly::z1().pow(2)) + MixedPoly::z1() * MixedPoly::zb1();
  CHECK(p.pluriharmonic_part() == real_of(MixedPoly::z1().pow(2)));
  CHECK(!p.is_pluriharmonic());
  CHECK(real_of(MixedPoly::z1().pow(2)).is_pluriharmonic());
}

TEST_CASE("substitute_w replaces w by u + iP") {
  MixedPoly P = MixedPoly::z1() * MixedPoly::zb1();  // |z1|^2
  MixedPoly iP = MixedPoly::i() * P;
  CHECK(MixedPoly::w().substitute_w(P) == MixedPoly::u() + iP);
  CHECK(MixedPoly::w().conj().substitute_w(P) == MixedPoly::u() - iP);
  // Im w - P vanishes on the hypersurface.
  MixedPoly imw = MixedPoly::w().imag_part();
  CHECK((imw - P).substitute_w(P).is_zero());
  // Substitution is a ring morphism.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    MixedPoly a = random_poly(rng, 3), b = random_poly(rng, 3);
    CHECK((a * b).substitute_w(P) == a.substitute_w(P) * b.substitute_w(P));
  }
}

TEST_CASE("canonical rendering") {
  CHECK(MixedPoly().str() == "0");
  CHECK(MixedPoly::one().str() == "1");
  CHECK(MixedPoly::z1().str() == "z1");
  CHECK((-MixedPoly::z1()).str() == "-z1");
  MixedPoly p = MixedPoly::z1() * MixedPoly::z2().pow(2);
  CHECK(p.str() == "z1*z2^2");
  MixedPoly q = MixedPoly::constant(GaussRat(1, 1)) * MixedPoly::z1();
  CHECK(q.str() == "(1+i)*z1");
  CHECK((MixedPoly::i() * MixedPoly::z2()).str() == "i*z2");
  CHECK(MixedPoly::constant(GaussRat(Rat(1, 2))).str() == "1/2");
}
