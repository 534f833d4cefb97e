#include <doctest.h>

#include "crsym/chains.hpp"
#include "crsym/parse.hpp"
#include "crsym/tangency.hpp"

using namespace crsym;

namespace {
HoloField F(const std::string& s) { return parse_field(s); }
MixedPoly P(const std::string& s) { return parse_polynomial(s); }
}  // namespace

TEST_CASE("monomial-diagonal form") {
  // Boundary form with f1 = 0: i z1^5 d2 has (p, q) = (1, 0), beta = -1.
  auto a = monomial_diagonal_form(F("i*z1^5*d2"));
  REQUIRE(a.has_value());
  CHECK(a->p == 1);
  CHECK(a->q == 0);
  CHECK(a->alpha == 5);
  CHECK(a->beta == -1);
  CHECK(a->theta == GaussRat(-1));
  CHECK(minimal_annihilated_monomial(F("i*z1^5*d2")) == Mono{1, 0, 0, 0, 0, 0, 0});

  // Boundary form with f2 = 0.
  auto b = monomial_diagonal_form(F("i*z2^2*d1"));
  REQUIRE(b.has_value());
  CHECK(b->p == 0);
  CHECK(b->q == 1);
  CHECK(b->alpha == -1);
  CHECK(b->beta == 2);
  CHECK(b->theta == GaussRat(1));
  CHECK(minimal_annihilated_monomial(F("i*z2^2*d1")) == Mono{0, 1, 0, 0, 0, 0, 0});

  // General form: 3i z1 z2^2 (2 z1 d1 - z2 d2).
  auto c = monomial_diagonal_form(F("6*i*z1^2*z2^2*d1 - 3*i*z1*z2^3*d2"));
  REQUIRE(c.has_value());
  CHECK(c->p == 1);
  CHECK(c->q == 2);
  CHECK(c->alpha == 1);
  CHECK(c->beta == 2);
  CHECK(c->theta == GaussRat(3));

  // Not monomial-diagonal.
  CHECK(!monomial_diagonal_form(F("z1*d1 + z2*d2")).has_value());
  CHECK(!monomial_diagonal_form(F("z1^2*d1 + z2*d1")).has_value());
  CHECK(!monomial_diagonal_form(F("z1*w*d1")).has_value());
  CHECK(!monomial_diagonal_form(F("dw")).has_value());
}

TEST_CASE("pure pair and its chain sum") {
  PurePairParams pp;
  pp.p = 1; pp.q = 1; pp.alpha = 1; pp.beta = 0;
  pp.K = 2; pp.N = 0; pp.m = 1;
  ChainPair pair = pure_pair(pp);
  REQUIRE(pair.m() == 1);
  CHECK(pair.U[0] == P("z1*z2^2"));
  CHECK(pair.U[1] == P("z1^2*z2^2"));
  CHECK(pair.V == pair.U);
  MixedPoly sum = chain_sum(pair);
  CHECK(sum == P("2*z1*Z1*z2^2*Z2^2*Re(z1)"));
  CHECK(sum == pure_chain_sum_closed_form(pp));
  // The generating field is a symmetry of the sum.
  HoloField X = F("i*z1^2*d1 - i*z1*z2*d2");
  XPairCheck check = verify_xpair(X, pair);
  REQUIRE(check.ok);
  CHECK(check.A == std::vector<GaussRat>{GaussRat(0, -1)});
  CHECK(check.B == check.A);
  CHECK(tangency_residual(X, sum).is_zero());
}

TEST_CASE("pure pair with boundary exponent") {
  PurePairParams pp;
  pp.p = 0; pp.q = 1; pp.alpha = -1; pp.beta = 2;
  pp.K = 3; pp.N = 1; pp.m = 1;
  ChainPair pair = pure_pair(pp);
  CHECK(chain_sum(pair) == pure_chain_sum_closed_form(pp));
  XPairCheck check = verify_xpair(F("i*z2^2*d1"), pair);
  REQUIRE(check.ok);
  CHECK(check.A == std::vector<GaussRat>{GaussRat(0, 1)});
}

TEST_CASE("pure pair parameter validation") {
  PurePairParams pp;
  pp.p = 2; pp.q = 2; pp.alpha = 1; pp.beta = 0; pp.K = 2; pp.m = 1;
  CHECK_THROWS_AS(pure_pair(pp), InvalidParams);  // not coprime
  pp.p = 0; pp.q = 0;
  CHECK_THROWS_AS(pure_pair(pp), InvalidParams);
  pp.p = 1; pp.q = 1; pp.alpha = -1;
  CHECK_THROWS_AS(pure_pair(pp), InvalidParams);  // alpha = -1 needs (0, 1)
  pp.alpha = 2; pp.beta = 2;
  CHECK_THROWS_AS(pure_pair(pp), InvalidParams);  // p beta - q alpha = 0
  pp.alpha = 1; pp.beta = 0; pp.m = kMaxChainLength;
  CHECK_THROWS_AS(pure_pair(pp), InvalidParams);  // too long
  pp.m = 3; pp.K = 1;
  CHECK_THROWS_AS(pure_pair(pp), InvalidParams);  // K p - m alpha < 0
}

TEST_CASE("the fixed exotic chains") {
  // The degenerate-multitype example: X = i z1^5 d2 with the chain
  // (z1^4 + z1^3 z2^2, 2 z1^8 z2, 2 z1^13) paired with itself.
  HoloField X = F("i*z1^5*d2");
  ChainPair pair;
  pair.U = {P("z1^4 + z1^3*z2^2"), P("2*z1^8*z2"), P("2*z1^13")};
  pair.V = pair.U;
  XPairCheck check = verify_xpair(X, pair);
  REQUIRE(check.ok);
  CHECK(check.A == std::vector<GaussRat>{GaussRat(0, 1), GaussRat(0, 1)});
  CHECK(check.B == check.A);
  MixedPoly sum = chain_sum(pair);
  CHECK(sum == P("8*z1^3*Z1^3*(Re(z1^5*Z2))^2 + 4*z1^4*Z1^4*Re(z1^9)"));
  CHECK(tangency_residual(X, sum).is_zero());

  pair.A = check.A;
  pair.B = check.B;
  auto parts = decompose_xpair(X, pair);
  CHECK(parts.size() == 3);
  MixedPoly total;
  for (const auto& t : parts) total += chain_sum(t);
  CHECK(total == sum);
}

TEST_CASE("verify_xpair reports the failing relation") {
  HoloField X = F("i*z1^5*d2");
  ChainPair bad;
  bad.U = {P("z1^4"), P("z1^7")};  // X(U_0) = 0, not a multiple of z1^7? it is 0.
  bad.V = {P("z2"), P("z1^5")};    // X(z2) = i z1^5 ok, X(z1^5) = 0 ok
  // A_0 = 0 but B_0 = i: the matching fails.
  XPairCheck check = verify_xpair(X, bad);
  CHECK(!check.ok);
  CHECK(!check.message.empty());

  ChainPair bad2;
  bad2.U = {P("z2"), P("z2")};  // X(z2) = i z1^5, not a multiple of z2
  bad2.V = bad2.U;
  CHECK(!verify_xpair(X, bad2).ok);
}

TEST_CASE("normalization rescales constants and keeps the sum") {
  PurePairParams pp;
  pp.p = 1; pp.q = 1; pp.alpha = 1; pp.beta = 0;
  pp.K = 3; pp.m = 2;
  ChainPair pure = pure_pair(pp);  // constants -i
  // Rescale chains by c_j = d_j = 2^j: constants become -i/2, the chain sum
  // is multiplied by 4.
  ChainPair scaled;
  GaussRat two(2);
  GaussRat f(1);
  for (int j = 0; j <= pure.m(); ++j) {
    scaled.U.push_back(pure.U[j].scaled(f));
    scaled.V.push_back(pure.V[j].scaled(f));
    f *= two;
  }
  scaled.A.assign(2, GaussRat(Rat(0), Rat(-1, 2)));
  scaled.B = scaled.A;
  HoloField X = F("i*z1^2*d1 - i*z1*z2*d2");
  REQUIRE(verify_xpair(X, scaled).ok);

  ChainPair norm = normalize_chains(scaled, GaussRat(0, 1));
  XPairCheck check = verify_xpair(X, norm);
  REQUIRE(check.ok);
  for (const auto& a : check.A) CHECK(a == GaussRat(0, 1));
  CHECK(chain_sum(norm) == chain_sum(scaled));
  CHECK(chain_sum(scaled) == chain_sum(pure).scaled(GaussRat(4)));

  // Mismatched constants are rejected.
  ChainPair broken = scaled;
  broken.B.assign(2, GaussRat(0, -1));
  CHECK_THROWS_AS(normalize_chains(broken, GaussRat(0, 1)), InvalidParams);
  CHECK_THROWS_AS(normalize_chains(scaled, GaussRat(1)), InvalidParams);
}

TEST_CASE("decomposition into monomial pairs") {
  // Pure pairs decompose into themselves.
  PurePairParams pp;
  pp.p = 1; pp.q = 1; pp.alpha = 1; pp.beta = 0;
  pp.K = 3; pp.N = 1; pp.m = 2;
  ChainPair pure = pure_pair(pp);
  HoloField X = F("i*z1^2*d1 - i*z1*z2*d2");
  auto parts = decompose_xpair(X, pure);
  CHECK(parts.size() == 1);
  CHECK(chain_sum(parts[0]) == chain_sum(pure));

  // A pair with a shorter chain hiding inside a longer one.
  ChainPair mixed;
  mixed.U = {P("z1*z2^2 + z1^3*z2^3"), P("z1^2*z2^2")};
  mixed.V = mixed.U;
  REQUIRE(verify_xpair(X, mixed).ok);
  auto mparts = decompose_xpair(X, mixed);
  CHECK(mparts.size() == 3);
  MixedPoly total;
  for (const auto& t : mparts) {
    total += chain_sum(t);
    for (const auto& u : t.U) CHECK(u.size() == 1);
    for (const auto& v : t.V) CHECK(v.size() == 1);
  }
  CHECK(total == chain_sum(mixed));
}
