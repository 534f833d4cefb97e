#include "crsym/chains.hpp"

#include "crsym/errors.hpp"

namespace crsym {

namespace {

Mono zmono(long s, long t) { return {(int)s, (int)t, 0, 0, 0, 0, 0}; }

Rat factorial(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rat(f);
}

}  // namespace

std::optional<MonoDiagForm> monomial_diagonal_form(const HoloField& X) {
  if (!X.g.is_zero() || !X.is_rigid()) return std::nullopt;
  if (X.f1.size() > 1 || X.f2.size() > 1) return std::nullopt;
  if (X.f1.is_zero() && X.f2.is_zero()) return std::nullopt;
  if (!X.f1.is_holomorphic() || !X.f2.is_holomorphic()) return std::nullopt;

  MonoDiagForm d;
  const GaussRat mi(Rat(0), Rat(-1));  // 1/i
  if (X.f2.is_zero()) {
    // i*theta * z1^{alpha+1} z2^beta d1 with (p, q) = (0, 1).
    auto& [m, c] = *X.f1.terms().begin();
    if (m.a1 < 0) return std::nullopt;
    d = {0, 1, m.a1 - 1, m.a2, c * mi};
    return d;
  }
  if (X.f1.is_zero()) {
    auto& [m, c] = *X.f2.terms().begin();
    if (m.a2 < 0) return std::nullopt;
    d = {1, 0, m.a1, m.a2 - 1, -(c * mi)};
    return d;
  }
  auto& [m1, c1] = *X.f1.terms().begin();
  auto& [m2, c2] = *X.f2.terms().begin();
  if (m2.a1 != m1.a1 - 1 || m2.a2 != m1.a2 + 1) return std::nullopt;
  GaussRat r = -(c2 / c1);  // p/q
  if (!r.is_real() || r.re <= 0) return std::nullopt;
  Int pn = rat_num(r.re), qn = rat_den(r.re);
  d.p = (int)pn.convert_to<long>();
  d.q = (int)qn.convert_to<long>();
  d.alpha = m1.a1 - 1;
  d.beta = m1.a2;
  d.theta = c1 * mi / GaussRat(Rat(d.q));
  return d;
}

Mono minimal_annihilated_monomial(const HoloField& X) {
  auto d = monomial_diagonal_form(X);
  if (!d) throw NotMonomialDiagonal("field is not of monomial-diagonal form");
  return zmono(d->p, d->q);
}

namespace {

// Extract the proportionality constant in lhs = c * rhs, verifying the
// identity exactly. Returns nullopt on mismatch.
std::optional<GaussRat> proportionality(const MixedPoly& lhs,
                                        const MixedPoly& rhs) {
  if (rhs.is_zero()) {
    if (lhs.is_zero()) return GaussRat(0);
    return std::nullopt;
  }
  if (lhs.is_zero()) return GaussRat(0);
  auto& [m, c] = *rhs.terms().begin();
  GaussRat k = lhs.coeff(m) / c;
  if (lhs == rhs.scaled(k)) return k;
  return std::nullopt;
}

}  // namespace

XPairCheck verify_xpair(const HoloField& X, const ChainPair& pair) {
  XPairCheck out;
  const int m = pair.m();
  if (m < 0 || (int)pair.V.size() != m + 1) {
    out.message = "chains must be nonempty and of equal length";
    return out;
  }
  auto check_chain = [&](const std::vector<MixedPoly>& C, const char* name,
                         std::vector<GaussRat>& consts) {
    for (int j = 0; j < m; ++j) {
      auto c = proportionality(X.apply(C[j]), C[j + 1]);
      if (!c) {
        out.message = std::string("X(") + name + "_" + std::to_string(j) +
                      ") is not a constant multiple of " + name + "_" +
                      std::to_string(j + 1);
        return false;
      }
      consts.push_back(*c);
    }
    if (!X.apply(C[m]).is_zero()) {
      out.message = std::string("X(") + name + "_" + std::to_string(m) +
                    ") does not vanish";
      return false;
    }
    return true;
  };
  if (!check_chain(pair.U, "U", out.A)) return out;
  if (!check_chain(pair.V, "V", out.B)) return out;
  for (int j = 0; j < m; ++j)
    if (out.A[j] != -out.B[m - j - 1].conj()) {
      out.message = "constant condition A_" + std::to_string(j) +
                    " = -conj(B_" + std::to_string(m - j - 1) + ") fails";
      return out;
    }
  out.ok = true;
  return out;
}

namespace {

void validate(const PurePairParams& pp) {
  auto bad = [](const std::string& msg) { throw InvalidParams(msg); };
  if (pp.p < 0 || pp.q < 0 || (pp.p == 0 && pp.q == 0))
    bad("p, q must be nonnegative and not both zero");
  if (gcd(Int(pp.p), Int(pp.q)) != 1) bad("p, q must be coprime");
  if (pp.alpha < -1 || pp.beta < -1) bad("alpha, beta must be >= -1");
  if (pp.alpha == -1 && !(pp.p == 0 && pp.q == 1))
    bad("alpha = -1 requires (p, q) = (0, 1)");
  if (pp.beta == -1 && !(pp.p == 1 && pp.q == 0))
    bad("beta = -1 requires (p, q) = (1, 0)");
  if (pp.K < 1) bad("K must be positive");
  if (pp.N < 0 || pp.m < 0) bad("N, m must be nonnegative");
  if (pp.m + 1 > kMaxChainLength) bad("chain length exceeds the cap");
  if (pp.K * pp.p - pp.m * pp.alpha < 0 || pp.K * pp.q - pp.m * pp.beta < 0)
    bad("exponents K p - m alpha, K q - m beta must be nonnegative");
  if (pp.p * pp.beta - pp.q * pp.alpha == 0)
    bad("p beta - q alpha = 0 gives a holomorphically degenerate model");
  if (pp.tau.is_zero()) bad("tau must be nonzero");
}

}  // namespace

ChainPair pure_pair(const PurePairParams& pp) {
  validate(pp);
  ChainPair pair;
  const GaussRat kappa(Rat(0), Rat(pp.p * pp.beta - pp.q * pp.alpha));
  MixedPoly QN =
      MixedPoly::term(zmono((long)pp.N * pp.p, (long)pp.N * pp.q), GaussRat(1));
  for (int idx = 0; idx <= pp.m; ++idx) {
    int j = pp.m - idx;  // U_idx = U_{m-j}
    MixedPoly u = MixedPoly::term(
        zmono(pp.K * pp.p - (long)j * pp.alpha, pp.K * pp.q - (long)j * pp.beta),
        GaussRat(Rat(1) / factorial(j)));
    pair.V.push_back((u * QN).scaled(pp.tau));
    pair.U.push_back(std::move(u));
  }
  pair.A.assign(pp.m, kappa);
  pair.B.assign(pp.m, kappa);
  return pair;
}

MixedPoly chain_sum(const ChainPair& pair) {
  const int m = pair.m();
  MixedPoly s;
  for (int j = 0; j <= m; ++j) s += pair.U[j] * pair.V[m - j].conj();
  return real_of(s);
}

MixedPoly pure_chain_sum_closed_form(const PurePairParams& pp) {
  validate(pp);
  // Re(tau Q^N) * (1/m!) * (T + conj T)^m * |z1|^{2(Kp-ma)} |z2|^{2(Kq-mb)}.
  MixedPoly head = real_of(
      MixedPoly::term(zmono((long)pp.N * pp.p, (long)pp.N * pp.q), pp.tau));
  // T may have a negative exponent (boundary forms); the |.|^2 factor below
  // restores nonnegativity of every monomial.
  Mono t{pp.alpha, pp.beta, 0, 0, 0, 0, 0};
  MixedPoly re2t = MixedPoly::term(t, GaussRat(1)) +
                   MixedPoly::term(t.conj(), GaussRat(1));
  long e1 = pp.K * pp.p - (long)pp.m * pp.alpha;
  long e2 = pp.K * pp.q - (long)pp.m * pp.beta;
  MixedPoly mod = MixedPoly::term({(int)e1, (int)e2, (int)e1, (int)e2, 0, 0, 0},
                                  GaussRat(Rat(1) / factorial(pp.m)));
  MixedPoly out = head * re2t.pow(pp.m) * mod;
  for (const auto& [mm, c] : out.terms())
    if (mm.a1 < 0 || mm.a2 < 0 || mm.b1 < 0 || mm.b2 < 0)
      throw InternalInconsistency("closed form produced a negative exponent");
  return out;
}

ChainPair normalize_chains(const ChainPair& pair, const GaussRat& target) {
  if (!target.is_imaginary() || target.is_zero())
    throw InvalidParams("normalization target must be nonzero imaginary");
  const int m = pair.m();
  if (m <= 0) return pair;
  for (int j = 0; j < m; ++j)
    if (pair.A[j].is_zero() || pair.B[j].is_zero())
      throw InvalidParams("cannot normalize a chain with a zero constant");

  std::vector<GaussRat> c(m + 1), d(m + 1);
  c[0] = d[0] = GaussRat(1);
  for (int j = 0; j < m; ++j) {
    c[j + 1] = c[j] * pair.A[j] / target;
    d[j + 1] = d[j] * pair.B[j] / target;
  }
  GaussRat tau = c[0] * d[m].conj();
  for (int j = 1; j <= m; ++j)
    if (c[j] * d[m - j].conj() != tau)
      throw InvalidParams("chain constants violate the antihermitian matching");

  ChainPair out;
  out.A.assign(m, target);
  out.B.assign(m, target);
  for (int j = 0; j <= m; ++j) {
    out.U.push_back(pair.U[j].scaled(c[j]));
    out.V.push_back(pair.V[j].scaled(d[j] / tau.conj()));
  }
  if (chain_sum(out) != chain_sum(pair))
    throw InternalInconsistency("normalization changed the chain sum");
  return out;
}

namespace {

// Coefficients a_k and Q-powers S_k of one chain: C_j = sum_{k>=j} A_j^k
// with A_j^k = (a_k/(k-j)!) Q^{S_k} T^{j-k}.
struct ChainSpectrum {
  std::vector<GaussRat> a;
  std::vector<long> S;
};

ChainSpectrum extract_spectrum(const std::vector<MixedPoly>& C,
                               const MonoDiagForm& d) {
  const int m = (int)C.size() - 1;
  ChainSpectrum sp;
  sp.a.assign(m + 1, GaussRat(0));
  sp.S.assign(m + 1, 0);
  for (int j = m; j >= 0; --j) {
    MixedPoly r = C[j];
    for (int k = j + 1; k <= m; ++k) {
      if (sp.a[k].is_zero()) continue;
      Mono mono = zmono(sp.S[k] * d.p + (long)(j - k) * d.alpha,
                        sp.S[k] * d.q + (long)(j - k) * d.beta);
      r -= MixedPoly::term(mono, sp.a[k] / factorial(k - j));
    }
    if (r.is_zero()) continue;
    if (r.size() != 1)
      throw InputError("chain element does not have the X-pair structure");
    auto& [mono, coeff] = *r.terms().begin();
    if (!mono.is_holomorphic() || mono.cw != 0 ||
        (long)d.q * mono.a1 != (long)d.p * mono.a2)
      throw InputError("top chain monomial is not annihilated by X");
    sp.a[j] = coeff;
    sp.S[j] = d.p > 0 ? mono.a1 / d.p : mono.a2 / d.q;
  }
  return sp;
}

}  // namespace

std::vector<ChainPair> decompose_xpair(const HoloField& X,
                                       const ChainPair& pair) {
  auto d = monomial_diagonal_form(X);
  if (!d) throw NotMonomialDiagonal("field is not of monomial-diagonal form");
  const int m = pair.m();
  ChainSpectrum au = extract_spectrum(pair.U, *d);
  ChainSpectrum bv = extract_spectrum(pair.V, *d);
  const GaussRat kappa =
      GaussRat(Rat(0), Rat(1)) * d->theta *
      GaussRat(Rat((long)d->p * d->beta - (long)d->q * d->alpha));

  std::vector<ChainPair> parts;
  for (int k = 0; k <= m; ++k) {
    if (au.a[k].is_zero()) continue;
    for (int l = 0; l <= m; ++l) {
      if (bv.a[l].is_zero() || k + l < m) continue;
      const int len = k + l - m;  // pair of length len+1
      ChainPair t;
      for (int r = 0; r <= len; ++r) {
        int ju = m - l + r;  // chain index into A^k
        int jv = m - k + r;  // chain index into B^l
        t.U.push_back(MixedPoly::term(
            zmono(au.S[k] * d->p + (long)(ju - k) * d->alpha,
                  au.S[k] * d->q + (long)(ju - k) * d->beta),
            au.a[k] / factorial(k - ju)));
        t.V.push_back(MixedPoly::term(
            zmono(bv.S[l] * d->p + (long)(jv - l) * d->alpha,
                  bv.S[l] * d->q + (long)(jv - l) * d->beta),
            bv.a[l] / factorial(l - jv)));
      }
      t.A.assign(len, kappa);
      t.B.assign(len, kappa);
      parts.push_back(std::move(t));
    }
  }

  MixedPoly total;
  for (const ChainPair& t : parts) total += chain_sum(t);
  if (total != chain_sum(pair))
    throw InternalInconsistency("decomposition does not reproduce the chain sum");
  return parts;
}

}  // namespace crsym
