#include "crsym/classify.hpp"

#include <array>

#include "crsym/chains.hpp"
#include "crsym/linsolve.hpp"

namespace crsym {

HoloField DiagField::as_field() const {
  return {MixedPoly::z1().scaled(lam1), MixedPoly::z2().scaled(lam2),
          MixedPoly()};
}

namespace {

using Mat2 = std::array<GaussRat, 4>;  // row-major 2x2

Mat2 linear_part(const HoloField& X) {
  const Mono z1m{1, 0, 0, 0, 0, 0, 0}, z2m{0, 1, 0, 0, 0, 0, 0};
  return {X.f1.coeff(z1m), X.f1.coeff(z2m), X.f2.coeff(z1m), X.f2.coeff(z2m)};
}

bool mat_zero(const Mat2& m) {
  return m[0].is_zero() && m[1].is_zero() && m[2].is_zero() && m[3].is_zero();
}

GaussRat mat_det(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }
GaussRat mat_tr(const Mat2& m) { return m[0] + m[3]; }

Mat2 mat_add(const Mat2& a, const Mat2& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
Mat2 mat_scale(const Mat2& a, const GaussRat& c) {
  return {a[0] * c, a[1] * c, a[2] * c, a[3] * c};
}

std::vector<Rat> mat_coords(const Mat2& m) {
  std::vector<Rat> v;
  v.reserve(8);
  for (const GaussRat& c : m) {
    v.push_back(c.re);
    v.push_back(c.im);
  }
  return v;
}

// A real quadratic A s^2 + B s + C.
struct Quad {
  Rat A, B, C;
  bool zero() const { return A == 0 && B == 0 && C == 0; }
  int deg() const { return A != 0 ? 2 : B != 0 ? 1 : C != 0 ? 0 : -1; }
  Rat eval(const Rat& s) const { return A * s * s + B * s + C; }
};

bool has_real_root(const Quad& q) {
  switch (q.deg()) {
    case -1: return true;
    case 0: return false;
    case 1: return true;
    default: return q.B * q.B - 4 * q.A * q.C >= 0;
  }
}

// Nonzero common real root check is not needed separately: callers ensure the
// combination matrix is nonzero for the parameter values considered.
bool common_real_root(const Quad& q1, const Quad& q2) {
  if (q1.zero()) return has_real_root(q2);
  if (q2.zero()) return has_real_root(q1);
  if (q1.deg() == 0 || q2.deg() == 0) return false;
  if (q1.deg() == 1) return q2.eval(-q1.C / q1.B) == 0;
  if (q2.deg() == 1) return q1.eval(-q2.C / q2.B) == 0;
  // Both quadratic; eliminate the leading term.
  Rat beta = q2.A * q1.B - q1.A * q2.B;
  Rat gamma = q2.A * q1.C - q1.A * q2.C;
  if (beta == 0 && gamma == 0) return has_real_root(q1);  // proportional
  if (beta == 0) return false;
  return q1.eval(-gamma / beta) == 0;
}

// Is there a nonzero real combination of the given matrices that is
// nilpotent (trace 0, determinant 0)? `exact` is cleared when the trace-free
// subspace has dimension > 2, where only pairwise combinations are tested.
bool nilpotent_in_span(const std::vector<Mat2>& mats, bool& exact) {
  // Independent spanning set.
  std::vector<Mat2> base;
  std::vector<std::vector<Rat>> coords;
  for (const Mat2& m : mats) {
    if (mat_zero(m)) continue;
    auto v = mat_coords(m);
    if (in_span(coords, v)) continue;
    base.push_back(m);
    coords.push_back(std::move(v));
  }
  if (base.empty()) return false;

  // Trace-free combinations: two real constraints on the coefficients.
  LinSys tr(base.size());
  std::vector<Rat> row(base.size());
  for (size_t k = 0; k < base.size(); ++k) row[k] = mat_tr(base[k]).re;
  tr.add_row(row);
  for (size_t k = 0; k < base.size(); ++k) row[k] = mat_tr(base[k]).im;
  tr.add_row(row);

  std::vector<Mat2> tf;
  for (const auto& t : tr.kernel_basis()) {
    Mat2 n{};
    for (size_t k = 0; k < base.size(); ++k)
      n = mat_add(n, mat_scale(base[k], GaussRat(t[k])));
    if (!mat_zero(n)) tf.push_back(n);
  }
  if (tf.empty()) return false;
  if (tf.size() == 1) return mat_det(tf[0]).is_zero();

  auto pair_nilpotent = [](const Mat2& n1, const Mat2& n2) {
    GaussRat a = mat_det(n1);
    GaussRat c = mat_det(n2);
    GaussRat b = mat_det(mat_add(n1, n2)) - a - c;
    if (a.is_zero()) return true;  // (s, t) = (1, 0)
    // t = 1: common real root of the re and im parts of a s^2 + b s + c.
    return common_real_root({a.re, b.re, c.re}, {a.im, b.im, c.im});
  };
  if (tf.size() == 2) return pair_nilpotent(tf[0], tf[1]);

  exact = false;
  for (size_t i = 0; i < tf.size(); ++i) {
    if (mat_det(tf[i]).is_zero()) return true;
    for (size_t j = i + 1; j < tf.size(); ++j)
      if (pair_nilpotent(tf[i], tf[j])) return true;
  }
  return false;
}

}  // namespace

ClassificationRow split_components(const MixedPoly& P, const GradedAlgebra& alg) {
  ClassificationRow row;
  for (const auto& [nu, comp] : alg.components) {
    row.dim_g += comp.dim();
    if (nu > -1 && nu < 0) {
      row.dim_gt += comp.dim();
    } else if (nu == 0) {
      row.dim_g0 = comp.dim();
      row.has_euler = comp.dim() > comp.rigid_dim();
    } else if (nu > 0 && nu < 1) {
      row.dim_gc += comp.rigid_dim();
      row.dim_gn += comp.dim() - comp.rigid_dim();
    } else if (nu == 1) {
      row.dim_g1 += comp.dim();
    }
  }
  row.dim_g0_re = (int)detect_real_rotations(P).size();
  row.dim_g0_im = (int)detect_imag_rotations(P).size();

  if (const GradedComponent* c0 = alg.at(Rat(0))) {
    std::vector<Mat2> mats;
    for (const HoloField& X : c0->rigid_basis) mats.push_back(linear_part(X));
    bool exact = true;
    row.dim_g0_nil = nilpotent_in_span(mats, exact) ? 1 : 0;
    row.nil_check_exact = exact;
  }

  row.two_jet_determined = row.dim_gc == 0;
  if (row.dim_g0_nil > 0 && row.dim_gc > 0)
    throw InternalInconsistency(
        "nilpotent rotation found alongside a nontrivial g_c");
  return row;
}

namespace {

std::vector<DiagField> diag_kernel(const MixedPoly& P, bool imaginary) {
  LinSys sys(2);
  for (const auto& [m, c] : P.terms()) {
    std::vector<Int> row(2);
    if (imaginary) {
      row[0] = m.a1 - m.b1;
      row[1] = m.a2 - m.b2;
    } else {
      row[0] = m.a1 + m.b1;
      row[1] = m.a2 + m.b2;
    }
    sys.add_row_int(std::move(row));
  }
  std::vector<DiagField> out;
  for (const auto& v : sys.kernel_basis()) {
    if (imaginary)
      out.push_back({GaussRat(Rat(0), v[0]), GaussRat(Rat(0), v[1])});
    else
      out.push_back({GaussRat(v[0]), GaussRat(v[1])});
  }
  return out;
}

}  // namespace

std::vector<DiagField> detect_real_rotations(const MixedPoly& P) {
  return diag_kernel(P, /*imaginary=*/false);
}

std::vector<DiagField> detect_imag_rotations(const MixedPoly& P) {
  return diag_kernel(P, /*imaginary=*/true);
}

std::optional<DiagField> detect_balanced(const MixedPoly& P) {
  // Complex (lam1, lam2) with lam1 a1 + lam2 a2 = lam1 b1 + lam2 b2 = 1 for
  // every monomial; unknowns ordered (re1, im1, re2, im2).
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (const auto& [m, c] : P.terms()) {
    rows.push_back({Rat(m.a1), Rat(0), Rat(m.a2), Rat(0)});
    rhs.push_back(1);
    rows.push_back({Rat(0), Rat(m.a1), Rat(0), Rat(m.a2)});
    rhs.push_back(0);
    rows.push_back({Rat(m.b1), Rat(0), Rat(m.b2), Rat(0)});
    rhs.push_back(1);
    rows.push_back({Rat(0), Rat(m.b1), Rat(0), Rat(m.b2)});
    rhs.push_back(0);
  }
  auto sol = solve_linear(rows, rhs, 4);
  if (!sol) return std::nullopt;
  return DiagField{GaussRat((*sol)[0], (*sol)[1]), GaussRat((*sol)[2], (*sol)[3])};
}

RotationSplit rotation_split(const HoloField& Y, const MixedPoly* P) {
  if (!Y.g.is_zero())
    throw InputError("rotation must have no d/dw component");
  Mat2 A = linear_part(Y);
  {
    HoloField lin{MixedPoly::z1().scaled(A[0]) + MixedPoly::z2().scaled(A[1]),
                  MixedPoly::z1().scaled(A[2]) + MixedPoly::z2().scaled(A[3]),
                  MixedPoly()};
    if (!(Y.f1 == lin.f1 && Y.f2 == lin.f2))
      throw InputError("rotation is not linear in (z1, z2)");
  }

  GaussRat tr = mat_tr(A), det = mat_det(A);
  GaussRat disc = tr * tr - GaussRat(4) * det;
  auto make = [](const Mat2& m) {
    return HoloField{
        MixedPoly::z1().scaled(m[0]) + MixedPoly::z2().scaled(m[1]),
        MixedPoly::z1().scaled(m[2]) + MixedPoly::z2().scaled(m[3]),
        MixedPoly()};
  };

  Mat2 mr{}, mi{}, mn{};
  if (disc.is_zero()) {
    GaussRat lam = tr / GaussRat(2);
    mr = {GaussRat(lam.re), {}, {}, GaussRat(lam.re)};
    mi = {GaussRat(Rat(0), lam.im), {}, {}, GaussRat(Rat(0), lam.im)};
    mn = {A[0] - lam, A[1], A[2], A[3] - lam};
  } else {
    auto s = gauss_sqrt(disc);
    if (!s)
      throw InputError("rotation eigenvalues are not Gaussian rational");
    GaussRat lp = (tr + *s) / GaussRat(2), lm = (tr - *s) / GaussRat(2);
    // Spectral projectors: Pp = (A - lm I)/(lp - lm), Pm = I - Pp.
    GaussRat d = lp - lm;
    Mat2 pp{(A[0] - lm) / d, A[1] / d, A[2] / d, (A[3] - lm) / d};
    Mat2 pm{GaussRat(1) - pp[0], -pp[1], -pp[2], GaussRat(1) - pp[3]};
    mr = mat_add(mat_scale(pp, GaussRat(lp.re)), mat_scale(pm, GaussRat(lm.re)));
    mi = mat_add(mat_scale(pp, GaussRat(Rat(0), lp.im)),
                 mat_scale(pm, GaussRat(Rat(0), lm.im)));
  }

  RotationSplit out{make(mr), make(mi), make(mn)};
  if (P) {
    for (const HoloField* part : {&out.re, &out.im, &out.nil})
      if (!part->is_zero() && !tangency_residual(*part, *P).is_zero())
        throw InternalInconsistency("rotation part is not itself a symmetry");
  }
  return out;
}

std::optional<ExoticSymmetry> detect_exotic(const GradedAlgebra& alg) {
  std::optional<ExoticSymmetry> found;
  int total = 0;
  for (const auto& [nu, comp] : alg.components) {
    if (!(nu > 0 && nu < 1) || comp.rigid_dim() == 0) continue;
    total += comp.rigid_dim();
    if (total > 1)
      throw InternalInconsistency("dim g_c > 1 is impossible for these models");
    ExoticSymmetry e;
    e.X = comp.rigid_basis.front();
    e.weight = nu;
    if (auto d = monomial_diagonal_form(e.X)) {
      e.monomial_diagonal = true;
      e.p = d->p;
      e.q = d->q;
      e.alpha = d->alpha;
      e.beta = d->beta;
    }
    found = std::move(e);
  }
  return found;
}

std::optional<std::string> match_table_row(const ClassificationRow& row,
                                           const Weight& lam) {
  (void)lam;
  struct Profile {
    const char* id;
    int g, gt, g0re, g0im, g1, gc;
  };
  static const Profile table[] = {
      {"T1", 10, 2, 1, 1, 1, 1}, {"T2", 7, 1, 1, 1, 1, 1},
      {"T3", 6, 0, 1, 1, 1, 1},  {"T4", 6, 2, 0, 1, 0, 1},
      {"T5", 5, 2, 0, 0, 0, 1},  {"T6", 5, 1, 1, 0, 0, 1},
      {"T7", 4, 0, 1, 0, 0, 1},  {"T8", 4, 0, 0, 1, 0, 1},
      {"T9", 4, 1, 0, 0, 0, 1},  {"GN9", 9, 2, 0, 2, 1, 0},
      {"QUADRIC_M", 7, 0, 0, 2, 1, 0},
  };
  for (const Profile& pr : table)
    if (row.dim_g == pr.g && row.dim_gt == pr.gt && row.dim_g0_re == pr.g0re &&
        row.dim_g0_im == pr.g0im && row.dim_g1 == pr.g1 && row.dim_gc == pr.gc)
      return std::string(pr.id);
  if (row.dim_g == 3 && row.dim_gc == 1 && row.dim_gt == 0 && row.dim_g1 == 0)
    return std::string("SOLITARY_EXOTIC");
  return std::nullopt;
}

}  // namespace crsym
