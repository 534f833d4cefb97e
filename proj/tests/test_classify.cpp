#include <doctest.h>

#include "crsym/classify.hpp"
#include "crsym/parse.hpp"

using namespace crsym;

namespace {
HoloField F(const std::string& s) { return parse_field(s); }
MixedPoly P(const std::string& s) { return parse_polynomial(s); }
}  // namespace

TEST_CASE("diagonal rotation detection") {
  // |z1|^2 + |z2|^4: both i*z1*d1 and i*z2*d2 are imaginary rotations,
  // no real diagonal rotation.
  MixedPoly p = P("z1*Z1 + z2^2*Z2^2");
  CHECK(detect_real_rotations(p).empty());
  auto im = detect_imag_rotations(p);
  CHECK(im.size() == 2);
  for (const auto& d : im) {
    HoloField Y = d.as_field();
    CHECK(tangency_residual(Y, p).is_zero());
  }

  // Re(Z1*z2^2): one real and one imaginary diagonal rotation.
  MixedPoly q = P("Re(Z1*z2^2)");
  auto re = detect_real_rotations(q);
  auto qim = detect_imag_rotations(q);
  REQUIRE(re.size() == 1);
  REQUIRE(qim.size() == 1);
  CHECK(re[0].is_real());
  CHECK(qim[0].is_imaginary());
  // Real rotation: lam1 (a1+b1) + lam2 (a2+b2) = 0 with rows (1,2):
  // proportional to 2 z1 d1 - z2 d2.
  CHECK(tangency_residual(re[0].as_field(), q).is_zero());
  CHECK(tangency_residual(qim[0].as_field(), q).is_zero());
}

TEST_CASE("balanced models") {
  // |z1|^2 |z2|^2 Re(z1 z2^2) is balanced.
  auto y = detect_balanced(P("z1*Z1*z2*Z2*Re(z1*z2^2)"));
  REQUIRE(y.has_value());
  HoloField Y = y->as_field();
  MixedPoly p = P("z1*Z1*z2*Z2*Re(z1*z2^2)");
  // YP = P, counting the conjugate-linear action on the antiholomorphic
  // variables: Re part of the complex scaling reproduces P.
  MixedPoly yp = Y.f1 * p.wirtinger(0) + Y.f2 * p.wirtinger(1);
  CHECK(yp + yp.conj() == p + p);  // 2 Re(YP) = 2P
  // Perturbed tube Re(Z1*z2^3) + |z2|^4 is not balanced.
  CHECK(!detect_balanced(P("Re(Z1*z2^3) + z2^2*Z2^2")).has_value());
}

TEST_CASE("rotation split of a diagonalizable field") {
  // (1+2i) z1 d1 - 3 z2 d2.
  RotationSplit s = rotation_split(F("(1+2*i)*z1*d1 - 3*z2*d2"));
  CHECK(s.re == F("z1*d1 - 3*z2*d2"));
  CHECK(s.im == F("2*i*z1*d1"));
  CHECK(s.nil.is_zero());

  // Pure imaginary rotation of the quadric: z2 d1 - z1 d2 has eigenvalues
  // +-i, so it is its own imaginary part.
  RotationSplit t = rotation_split(F("z2*d1 - z1*d2"));
  CHECK(t.re.is_zero());
  CHECK(t.im == F("z2*d1 - z1*d2"));
  CHECK(t.nil.is_zero());

  // Jordan block: z1 d1 + z2 d2 + z2 d1.
  RotationSplit u = rotation_split(F("z1*d1 + z2*d1 + z2*d2"));
  CHECK(u.re == F("z1*d1 + z2*d2"));
  CHECK(u.im.is_zero());
  CHECK(u.nil == F("z2*d1"));
}

TEST_CASE("rotation split rejects bad input") {
  CHECK_THROWS_AS(rotation_split(F("z1^2*d1")), InputError);
  CHECK_THROWS_AS(rotation_split(F("z1*d1 + dw")), InputError);
  // Eigenvalues +-sqrt(2): not Gaussian rational.
  CHECK_THROWS_AS(rotation_split(F("z2*d1 + 2*z1*d2")), InputError);
}

TEST_CASE("rotation split verified against a model") {
  // On the squared quadric the su(2)-type rotations split into symmetries.
  MixedPoly p = P("(z1*Z1 + z2*Z2)^2");
  HoloField Y = F("i*z1*d1 + i*z2*d2 + z2*d1 - z1*d2");
  RotationSplit s = rotation_split(Y, &p);
  CHECK(s.re + s.im + s.nil == Y);
  CHECK(s.re.is_zero());  // eigenvalues 2i and 0
  CHECK(s.nil.is_zero());
}

TEST_CASE("split_components profiles") {
  MixedPoly p = P("Re(Z1*z2^2)");
  GradedAlgebra alg = compute_symmetry_algebra(p);
  ClassificationRow row = split_components(p, alg);
  CHECK(row.dim_g == 10);
  CHECK(row.dim_gt == 2);
  CHECK(row.dim_g0 == 3);
  CHECK(row.dim_g0_re == 1);
  CHECK(row.dim_g0_im == 1);
  CHECK(row.dim_gc == 1);
  CHECK(row.dim_gn == 2);
  CHECK(row.dim_g1 == 1);
  CHECK(row.has_euler);
  CHECK(!row.two_jet_determined);
  CHECK(row.nil_check_exact);
  CHECK(match_table_row(row, alg.lam) == std::string("T1"));

  MixedPoly q = P("(z1*Z1 + z2*Z2)^2");
  GradedAlgebra qalg = compute_symmetry_algebra(q);
  ClassificationRow qrow = split_components(q, qalg);
  CHECK(qrow.dim_g == 7);
  CHECK(qrow.dim_g0 == 5);
  CHECK(qrow.dim_g0_im == 2);
  CHECK(qrow.dim_gc == 0);
  CHECK(qrow.dim_g1 == 1);
  CHECK(qrow.two_jet_determined);
  CHECK(match_table_row(qrow, qalg.lam) == std::string("QUADRIC_M"));
}

TEST_CASE("exotic detection") {
  MixedPoly p = P("Re(Z1*z2^2)");
  GradedAlgebra alg = compute_symmetry_algebra(p);
  auto ex = detect_exotic(alg);
  REQUIRE(ex.has_value());
  CHECK(ex->weight > 0);
  CHECK(ex->weight < 1);
  CHECK(ex->X.is_rigid());
  CHECK(tangency_residual(ex->X, p).is_zero());

  // No exotic on the squared quadric.
  CHECK(!detect_exotic(compute_symmetry_algebra(P("(z1*Z1 + z2*Z2)^2")))
             .has_value());
}

TEST_CASE("table row matching is profile-based") {
  ClassificationRow r;
  r.dim_g = 3;
  r.dim_g0 = 1;
  r.dim_gc = 1;
  Weight lam(Rat(1, 17), Rat(1, 34));
  CHECK(match_table_row(r, lam) == std::string("SOLITARY_EXOTIC"));
  ClassificationRow z;
  z.dim_g = 2;
  z.dim_g0 = 1;
  CHECK(!match_table_row(z, lam).has_value());
}
