#include "crsym/tangency.hpp"

#include <atomic>
#include <cstdlib>
#include <set>
#include <thread>

#include "crsym/linsolve.hpp"

namespace crsym {

int GradedAlgebra::dim() const {
  int d = 0;
  for (const auto& [nu, c] : components) d += c.dim();
  return d;
}

int GradedAlgebra::dim_at(const Rat& nu) const {
  auto it = components.find(nu);
  return it == components.end() ? 0 : it->second.dim();
}

const GradedComponent* GradedAlgebra::at(const Rat& nu) const {
  auto it = components.find(nu);
  return it == components.end() ? nullptr : &it->second;
}

MixedPoly tangency_residual(const HoloField& X, const MixedPoly& P) {
  MixedPoly t = X.f1 * P.wirtinger(0) + X.f2 * P.wirtinger(1);
  MixedPoly rho = X.g.imag_part() - (t + t.conj());
  return rho.substitute_w(P);
}

namespace {

// Unknown layout for one weight: the complex coefficients of f1, f2, g over
// their monomial bases, each split into (re, im). Column order: f1
// monomials, then f2, then g; re before im.
struct Ansatz {
  std::vector<Mono> m1, m2, mg;

  Ansatz(const Weight& lam, const Rat& nu, bool allow_w)
      : m1(enumerate_holo_monomials(nu + lam.mu1, lam, allow_w)),
        m2(enumerate_holo_monomials(nu + lam.mu2, lam, allow_w)),
        mg(enumerate_holo_monomials(nu + 1, lam, allow_w)) {}

  size_t ncomplex() const { return m1.size() + m2.size() + mg.size(); }

  HoloField elementary(size_t k, const GaussRat& c) const {
    MixedPoly f1, f2, g;
    if (k < m1.size())
      f1 = MixedPoly::term(m1[k], c);
    else if (k < m1.size() + m2.size())
      f2 = MixedPoly::term(m2[k - m1.size()], c);
    else
      g = MixedPoly::term(mg[k - m1.size() - m2.size()], c);
    return {std::move(f1), std::move(f2), std::move(g)};
  }

  HoloField assemble(const std::vector<Rat>& coords) const {
    MixedPoly f1, f2, g;
    size_t k = 0;
    for (const Mono& m : m1) {
      f1.add_term(m, GaussRat(coords[2 * k], coords[2 * k + 1]));
      ++k;
    }
    for (const Mono& m : m2) {
      f2.add_term(m, GaussRat(coords[2 * k], coords[2 * k + 1]));
      ++k;
    }
    for (const Mono& m : mg) {
      g.add_term(m, GaussRat(coords[2 * k], coords[2 * k + 1]));
      ++k;
    }
    return {std::move(f1), std::move(f2), std::move(g)};
  }
};

}  // namespace

std::vector<HoloField> solve_weight(const MixedPoly& P, const Weight& lam,
                                    const Rat& nu, bool rigid_only) {
  if (!is_weighted_homogeneous(P, lam, Rat(1)))
    throw NotHomogeneous("model is not weighted-homogeneous of degree 1");
  Ansatz az(lam, nu, /*allow_w=*/!rigid_only);
  const size_t nc = az.ncomplex();
  if (nc == 0) return {};

  // The residual is R-linear in the field; one residual per real unknown.
  std::vector<MixedPoly> res(2 * nc);
  for (size_t k = 0; k < nc; ++k) {
    res[2 * k] = tangency_residual(az.elementary(k, GaussRat(1)), P);
    res[2 * k + 1] = tangency_residual(az.elementary(k, GaussRat::i()), P);
  }

  // One pair of constraint rows (re, im) per monomial of the joint support.
  std::set<Mono> support;
  for (const auto& r : res)
    for (const auto& [m, c] : r.terms()) support.insert(m);

  LinSys sys(2 * nc);
  std::vector<Rat> row(2 * nc);
  for (const Mono& m : support) {
    bool re_any = false, im_any = false;
    for (size_t j = 0; j < 2 * nc; ++j) {
      GaussRat c = res[j].coeff(m);
      row[j] = c.re;
      re_any |= c.re != 0;
    }
    if (re_any) sys.add_row(row);
    for (size_t j = 0; j < 2 * nc; ++j) {
      GaussRat c = res[j].coeff(m);
      row[j] = c.im;
      im_any |= c.im != 0;
    }
    if (im_any) sys.add_row(row);
  }

  std::vector<HoloField> basis;
  for (const auto& v : sys.kernel_basis()) {
    HoloField X = az.assemble(v);
    // Every returned field must be an exact symmetry.
    if (!tangency_residual(X, P).is_zero())
      throw InternalInconsistency("solver produced a non-symmetry");
    basis.push_back(std::move(X));
  }
  return basis;
}

GradedAlgebra compute_symmetry_algebra(const MixedPoly& P, unsigned threads) {
  Weight lam = infer_multitype_weights(P);
  std::vector<Rat> nus = admissible_field_weights(lam);

  if (threads == 0) {
    threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("CRSYM_THREADS")) {
      long v = std::atol(env);
      if (v > 0) threads = (unsigned)v;
    }
    if (threads == 0) threads = 1;
  }

  auto solve_one = [&](const Rat& nu) {
    GradedComponent c;
    c.basis = solve_weight(P, lam, nu);
    if (!c.basis.empty() && nu >= 0 && nu < 1)
      c.rigid_basis = solve_weight(P, lam, nu, /*rigid_only=*/true);
    return c;
  };

  GradedAlgebra alg{lam, {}};
  if (threads <= 1 || nus.size() <= 1) {
    for (const Rat& nu : nus) {
      auto c = solve_one(nu);
      if (!c.basis.empty()) alg.components.emplace(nu, std::move(c));
    }
    return alg;
  }

  std::vector<GradedComponent> out(nus.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= nus.size()) return;
      out[i] = solve_one(nus[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<size_t>(threads, nus.size()); ++t)
    pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (size_t i = 0; i < nus.size(); ++i)
    if (!out[i].basis.empty()) alg.components.emplace(nus[i], std::move(out[i]));
  return alg;
}

std::optional<HoloField> holomorphic_degeneracy(const MixedPoly& P) {
  // A model missing one tangential variable is degenerate outright.
  bool has_z1 = false, has_z2 = false;
  for (const auto& [m, c] : P.terms()) {
    has_z1 |= m.a1 + m.b1 > 0;
    has_z2 |= m.a2 + m.b2 > 0;
  }
  if (!has_z2) return HoloField{MixedPoly(), MixedPoly::one(), MixedPoly()};
  if (!has_z1) return HoloField{MixedPoly::one(), MixedPoly(), MixedPoly()};

  Weight lam = infer_multitype_weights(P);
  MixedPoly P1 = P.wirtinger(0), P2 = P.wirtinger(1);
  for (const Rat& nu : admissible_field_weights(lam)) {
    Ansatz az(lam, nu, /*allow_w=*/true);
    const size_t nc = az.ncomplex();
    if (nc == 0) continue;
    // Full complex tangency: g/(2i) - f1 P_z1 - f2 P_z2 = 0 on M.
    std::vector<MixedPoly> res(2 * nc);
    for (size_t k = 0; k < nc; ++k)
      for (int part = 0; part < 2; ++part) {
        HoloField X = az.elementary(k, part ? GaussRat::i() : GaussRat(1));
        MixedPoly r = X.g.scaled(GaussRat(Rat(0), Rat(-1, 2))) - X.f1 * P1 -
                      X.f2 * P2;
        res[2 * k + part] = r.substitute_w(P);
      }
    std::set<Mono> support;
    for (const auto& r : res)
      for (const auto& [m, c] : r.terms()) support.insert(m);
    LinSys sys(2 * nc);
    std::vector<Rat> row(2 * nc);
    for (const Mono& m : support)
      for (int part = 0; part < 2; ++part) {
        bool any = false;
        for (size_t j = 0; j < 2 * nc; ++j) {
          GaussRat c = res[j].coeff(m);
          row[j] = part ? c.im : c.re;
          any |= row[j] != 0;
        }
        if (any) sys.add_row(row);
      }
    auto ker = sys.kernel_basis();
    if (!ker.empty()) return az.assemble(ker.front());
  }
  return std::nullopt;
}

std::vector<Rat> field_coordinates(const HoloField& X, const Weight& lam,
                                   const Rat& nu, bool allow_w) {
  Ansatz az(lam, nu, allow_w);
  std::vector<Rat> v;
  v.reserve(2 * az.ncomplex());
  auto emit = [&](const MixedPoly& p, const std::vector<Mono>& monos) {
    for (const Mono& m : monos) {
      GaussRat c = p.coeff(m);
      v.push_back(c.re);
      v.push_back(c.im);
    }
  };
  emit(X.f1, az.m1);
  emit(X.f2, az.m2);
  emit(X.g, az.mg);
  return v;
}

}  // namespace crsym
