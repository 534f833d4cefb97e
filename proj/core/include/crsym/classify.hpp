#pragma once

#include <optional>
#include <string>

#include "crsym/tangency.hpp"

namespace crsym {

/// Dimension profile of a graded symmetry algebra.
struct ClassificationRow {
  int dim_g = 0;
  int dim_gt = 0;        // weights in (-1, 0)
  int dim_g0 = 0;        // full weight-0 space
  int dim_g0_re = 0;     // diagonal real rotations (given coordinates)
  int dim_g0_im = 0;     // diagonal imaginary rotations (given coordinates)
  int dim_g0_nil = 0;    // 1 if a nilpotent-carrying rotation was found
  int dim_gc = 0;        // rigid, weight in (0, 1)
  int dim_gn = 0;        // non-rigid, weight in (0, 1)
  int dim_g1 = 0;        // weight 1
  bool has_euler = false;
  bool two_jet_determined = true;  // iff dim_gc == 0
  bool nil_check_exact = true;     // false when >2-dim trace-free rotation space

  friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

/// Diagonal linear field lam1*z1*d1 + lam2*z2*d2.
struct DiagField {
  GaussRat lam1, lam2;

  bool is_real() const { return lam1.is_real() && lam2.is_real(); }
  bool is_imaginary() const { return lam1.is_imaginary() && lam2.is_imaginary(); }
  HoloField as_field() const;
};

/// Component bookkeeping over a computed algebra. Raises
/// InternalInconsistency if a nilpotent rotation coexists with dim_gc > 0.
ClassificationRow split_components(const MixedPoly& P, const GradedAlgebra& alg);

/// Basis of real diagonal rotations: kernel of lam1*(a1+b1)+lam2*(a2+b2)=0
/// over the monomials of P.
std::vector<DiagField> detect_real_rotations(const MixedPoly& P);

/// Basis of imaginary diagonal rotations (fields i*(lam1*z1*d1+lam2*z2*d2)):
/// kernel of lam1*(a1-b1)+lam2*(a2-b2)=0.
std::vector<DiagField> detect_imag_rotations(const MixedPoly& P);

/// The complex reproducing field Y with YP = P, if the model is balanced.
std::optional<DiagField> detect_balanced(const MixedPoly& P);

struct RotationSplit {
  HoloField re, im, nil;
};

/// Jordan-type split of a linear rigid weight-0 field into real, imaginary
/// and nilpotent parts. Throws InputError for nonlinear input or when the
/// eigenvalues are not Gaussian-rational. When P is given, each nonzero part
/// is checked to be a symmetry of P.
RotationSplit rotation_split(const HoloField& Y, const MixedPoly* P = nullptr);

struct ExoticSymmetry {
  HoloField X;
  Rat weight;
  bool monomial_diagonal = false;
  // Valid when monomial_diagonal: X proportional to
  // i*z1^alpha*z2^beta*(q*z1*d1 - p*z2*d2), alpha/beta possibly -1.
  int p = 0, q = 0, alpha = 0, beta = 0;
};

/// The generator of g_c, if dim_gc = 1. Throws InternalInconsistency if
/// dim_gc > 1 (contradicts the known bound in C^3).
std::optional<ExoticSymmetry> detect_exotic(const GradedAlgebra& alg);

/// The catalog row whose dimension profile matches, if any.
std::optional<std::string> match_table_row(const ClassificationRow& row,
                                           const Weight& lam);

}  // namespace crsym
