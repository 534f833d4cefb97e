#pragma once

#include <map>
#include <optional>

#include "crsym/field.hpp"
#include "crsym/weights.hpp"

namespace crsym {

/// One graded component: real basis of the symmetry fields of that weight.
struct GradedComponent {
  std::vector<HoloField> basis;
  /// Basis of the rigid (w-independent) solution subspace; only computed for
  /// weights in [0, 1), empty otherwise.
  std::vector<HoloField> rigid_basis;

  int dim() const { return (int)basis.size(); }
  int rigid_dim() const { return (int)rigid_basis.size(); }
};

/// The weighted-graded Lie algebra of infinitesimal symmetries of a model.
struct GradedAlgebra {
  Weight lam;
  std::map<Rat, GradedComponent> components;  // only nonzero components

  int dim() const;
  int dim_at(const Rat& nu) const;
  const GradedComponent* at(const Rat& nu) const;
};

/// Tangency defect of X against Im w = P: the real polynomial
///   Im g - 2 Re(f1 dP/dz1 + f2 dP/dz2), with w := u + iP.
/// X is an infinitesimal symmetry iff this vanishes identically.
MixedPoly tangency_residual(const HoloField& X, const MixedPoly& P);

/// Echelonized basis of the real space of weighted-homogeneous symmetries of
/// weight nu. With rigid_only, coefficients are not allowed to depend on w.
std::vector<HoloField> solve_weight(const MixedPoly& P, const Weight& lam,
                                    const Rat& nu, bool rigid_only = false);

/// Full graded symmetry algebra: solve_weight over every admissible weight.
/// threads = 0 picks hardware concurrency; output is identical regardless.
GradedAlgebra compute_symmetry_algebra(const MixedPoly& P, unsigned threads = 0);

/// A nonzero holomorphic field annihilating the defining function of M_P
/// identically, if one exists (holomorphic degeneracy witness).
std::optional<HoloField> holomorphic_degeneracy(const MixedPoly& P);

/// Flatten a field into real coordinates (re, im interleaved) over the
/// monomial bases for weight nu; used for span membership checks.
std::vector<Rat> field_coordinates(const HoloField& X, const Weight& lam,
                                   const Rat& nu, bool allow_w = true);

}  // namespace crsym
