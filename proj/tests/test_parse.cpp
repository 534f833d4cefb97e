#include <doctest.h>

#include <random>

#include "crsym/parse.hpp"

using namespace crsym;

TEST_CASE("basic expressions") {
  CHECK(parse_polynomial("0").is_zero());
  CHECK(parse_polynomial("1 + 2") == MixedPoly::constant(GaussRat(3)));
  CHECK(parse_polynomial("3/4") == MixedPoly::constant(GaussRat(Rat(3, 4))));
  CHECK(parse_polynomial("i^2") == MixedPoly::constant(GaussRat(-1)));
  CHECK(parse_polynomial("z1*Z1") == MixedPoly::z1() * MixedPoly::zb1());
  CHECK(parse_polynomial("-z1 + z1").is_zero());
  CHECK(parse_polynomial("2 - 3") == MixedPoly::constant(GaussRat(-1)));
  CHECK(parse_polynomial("z2^3") == MixedPoly::z2().pow(3));
  CHECK(parse_polynomial("(z1 + z2)^2") ==
        (MixedPoly::z1() + MixedPoly::z2()).pow(2));
  CHECK(parse_polynomial("w + W") == MixedPoly::w() + MixedPoly::w().conj());
  CHECK(parse_polynomial("u") == MixedPoly::u());
  CHECK(parse_polynomial(" Re( Z1 * z2 ^ 2 ) ") ==
        real_of(MixedPoly::zb1() * MixedPoly::z2().pow(2)));
  CHECK(parse_polynomial("Im(z1)") == MixedPoly::z1().imag_part());
  CHECK(parse_polynomial("conj(i*z1)") ==
        (MixedPoly::i() * MixedPoly::z1()).conj());
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_polynomial("1 + 2*3") == MixedPoly::constant(GaussRat(7)));
  CHECK(parse_polynomial("2*z1^2") ==
        MixedPoly::constant(GaussRat(2)) * MixedPoly::z1().pow(2));
  CHECK(parse_polynomial("1 - 2 - 3") == MixedPoly::constant(GaussRat(-4)));
  CHECK(parse_polynomial("-2^2") == MixedPoly::constant(GaussRat(-4)));
}

TEST_CASE("syntax errors carry a position") {
  for (const char* bad : {"", "z3", "z1 z2", "2z1", "1/0", "z1^", "z1^-2",
                          "Re(z1", "(z1", "z1 +", "*z1", "d1", "z1^(2)"}) {
    try {
      parse_polynomial(bad);
      FAIL_CHECK("expected ParseError for: " << bad);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    } catch (const InputError&) {
      // 1/0 style errors are also input errors
    }
  }
}

TEST_CASE("polynomial rendering round-trips") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> e(0, 3), c(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    MixedPoly p;
    for (int t = 0; t < 4; ++t)
      p.add_term(Mono{e(rng), e(rng), e(rng), e(rng), e(rng) % 2, e(rng) % 2,
                      e(rng) % 2},
                 GaussRat(Rat(c(rng), 1 + e(rng)), Rat(c(rng), 1 + e(rng))));
    CHECK(parse_polynomial(p.str()) == p);
  }
}

TEST_CASE("field parsing") {
  HoloField X = parse_field("z1^2*d1 + i*z2*d2 + w*dw");
  CHECK(X.f1 == MixedPoly::z1().pow(2));
  CHECK(X.f2 == MixedPoly::i() * MixedPoly::z2());
  CHECK(X.g == MixedPoly::w());
  CHECK(parse_field("dw") == HoloField::dw());
  CHECK(parse_field("(1+i)*z1*d1").f1 ==
        MixedPoly::constant(GaussRat(1, 1)) * MixedPoly::z1());
  // d1 on the left of the coefficient is fine within a term.
  CHECK(parse_field("2*d1").f1 == MixedPoly::constant(GaussRat(2)));
}

TEST_CASE("field parsing rejects bad input") {
  CHECK_THROWS_AS(parse_field("z1"), InputError);           // no derivation
  CHECK_THROWS_AS(parse_field("z1*d1 + 1"), InputError);    // scalar summand
  CHECK_THROWS_AS(parse_field("Z1*d1"), AntiholomorphicCoefficient);
  CHECK_THROWS_AS(parse_field("u*dw"), AntiholomorphicCoefficient);
  CHECK_THROWS_AS(parse_field("d1*d2"), InputError);        // product of derivations
}

TEST_CASE("field rendering round-trips") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(0, 2), c(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    MixedPoly f1, f2, g;
    for (int t = 0; t < 2; ++t) {
      f1.add_term(Mono{e(rng), e(rng), 0, 0, e(rng) % 2, 0, 0},
                  GaussRat(c(rng), c(rng)));
      f2.add_term(Mono{e(rng), e(rng), 0, 0, 0, 0, 0}, GaussRat(c(rng), c(rng)));
      g.add_term(Mono{e(rng), e(rng), 0, 0, e(rng) % 2, 0, 0},
                 GaussRat(c(rng), c(rng)));
    }
    HoloField X(f1, f2, g);
    if (X.is_zero()) continue;
    CHECK(parse_field(X.str()) == X);
  }
}
