#include "crsym/catalog.hpp"

#include <sstream>

#include "crsym/chains.hpp"

namespace crsym {

namespace {

const char* kNames[] = {"T1", "T2", "T3", "T4", "T5", "T6", "T7",
                        "T8", "T9", "GN10", "GN9", "QUADRIC_M",
                        "EX_S5", "EX_TH2"};

MixedPoly zterm(int a1, int a2, int b1 = 0, int b2 = 0) {
  return MixedPoly::term({a1, a2, b1, b2, 0, 0, 0}, GaussRat(1));
}

std::map<std::string, long> defaults(RowId row) {
  switch (row) {
    case RowId::T1: return {{"alpha", 2}};
    case RowId::T2: return {{"k", 1}, {"m", 2}};
    case RowId::T3:
      return {{"k", 1}, {"l", 1}, {"alpha", 1}, {"beta", 2}, {"m", 1}};
    case RowId::T4: return {{"alpha", 2}};
    case RowId::T5: return {{"alpha", 4}};
    case RowId::T6: return {{"alpha", 2}};
    case RowId::T7:
      return {{"p", 3}, {"q", 1}, {"alpha", 2}, {"beta", 1}, {"m", 1}, {"C", 3}};
    case RowId::T8:
      return {{"p", 1},  {"q", 2},  {"alpha", 0}, {"beta", 2},
              {"K1", 2}, {"m1", 0}, {"K2", 3},    {"m2", 3}};
    case RowId::T9: return {{"alpha", 2}};
    case RowId::GN10: return {{"l", 2}};
    case RowId::GN9: return {{"l", 2}, {"sign", 1}};
    case RowId::QUADRIC_M: return {{"m", 2}};
    default: return {};
  }
}

long param(const ModelSpec& spec, const std::string& name) {
  auto it = spec.params.find(name);
  if (it != spec.params.end()) return it->second;
  auto d = defaults(spec.row);
  auto jt = d.find(name);
  if (jt == d.end())
    throw InvalidParams("unknown parameter '" + name + "' for row " +
                        row_name(spec.row));
  return jt->second;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidParams(msg);
}

// |z1|^{2 e1} |z2|^{2 e2} (Re z1^alpha z2^beta)^m, expanded exactly.
MixedPoly re_pow_term(long alpha, long beta, long m, long e1, long e2) {
  require(e1 >= 0 && e2 >= 0, "negative exponent in |z1|/|z2| factor");
  Mono t{(int)alpha, (int)beta, 0, 0, 0, 0, 0};
  MixedPoly re2t = MixedPoly::term(t, GaussRat(1)) +
                   MixedPoly::term(t.conj(), GaussRat(1));
  MixedPoly mod = MixedPoly::term(
      {(int)e1, (int)e2, (int)e1, (int)e2, 0, 0, 0},
      GaussRat(Rat(1, Int(1) << (unsigned)m)));
  MixedPoly out = re2t.pow((int)m) * mod;
  for (const auto& [mm, c] : out.terms())
    require(mm.a1 >= 0 && mm.a2 >= 0 && mm.b1 >= 0 && mm.b2 >= 0,
            "negative exponent in expanded model");
  return out;
}

// Re(tau (z1^p z2^q)^N) |z1|^{2(Kp-m*alpha)} |z2|^{2(Kq-m*beta)}
// (Re z1^alpha z2^beta)^m, for the gc+rotation families.
MixedPoly rot_family_term(long p, long q, long alpha, long beta, long K, long N,
                          long m, const GaussRat& tau) {
  MixedPoly head = real_of(
      MixedPoly::term({(int)(N * p), (int)(N * q), 0, 0, 0, 0, 0}, tau));
  return head *
         re_pow_term(alpha, beta, m, K * p - m * alpha, K * q - m * beta);
}

MixedPoly build_raw(const ModelSpec& spec) {
  switch (spec.row) {
    case RowId::T1: {
      long a = param(spec, "alpha");
      require(a > 1, "T1 needs alpha > 1");
      return real_of(zterm(0, (int)a, 1, 0));
    }
    case RowId::T2: {
      long k = param(spec, "k"), m = param(spec, "m");
      require(k >= 1 && m >= 1, "T2 needs k, m >= 1");
      return zterm((int)k, 0, (int)k, 0) * real_of(zterm(0, 1)).pow((int)m);
    }
    case RowId::T3: {
      long k = param(spec, "k"), l = param(spec, "l");
      long a = param(spec, "alpha"), b = param(spec, "beta");
      long m = param(spec, "m");
      require(m >= 1, "T3 needs m >= 1");
      require(a >= -1 && b >= -1, "T3 needs alpha, beta >= -1");
      require(k >= 0 && l >= 0, "T3 needs k, l >= 0");
      return re_pow_term(a, b, m, k, l);
    }
    case RowId::T4: {
      long a = param(spec, "alpha");
      require(a >= 1, "T4 needs alpha >= 1");
      return real_of(zterm(0, (int)(2 * a - 1), 1, 0)) +
             zterm(0, (int)a, 0, (int)a);
    }
    case RowId::T5: {
      long a = param(spec, "alpha");
      require(a >= 2, "T5 needs alpha >= 2");
      MixedPoly Q =
          spec.Q ? *spec.Q : perturbation_candidates(RowId::T5, a).front();
      return real_of(zterm(0, (int)a, 1, 0)) + Q;
    }
    case RowId::T6: {
      long a = param(spec, "alpha");
      require(a >= 1, "T6 needs alpha >= 1");
      return real_of(zterm(0, (int)a)) * real_of(zterm(0, (int)a, 1, 0));
    }
    case RowId::T7: {
      long p = param(spec, "p"), q = param(spec, "q");
      long a = param(spec, "alpha"), b = param(spec, "beta");
      long m = param(spec, "m"), C = param(spec, "C");
      require(p >= 0 && q >= 0 && p + q > 0 && gcd(Int(p), Int(q)) == 1,
              "T7 needs coprime nonnegative p, q");
      require(p * b - q * a != 0, "T7 needs p*beta - q*alpha != 0");
      require(m >= 1 && C >= 1, "T7 needs m, C >= 1");
      MixedPoly P;
      bool some_N = false;
      for (long K = 1; 2 * K <= C; ++K) {
        long N = C - 2 * K;
        if (K * p - m * a < 0 || K * q - m * b < 0) continue;
        P += rot_family_term(p, q, a, b, K, N, m, GaussRat(1));
        some_N |= N > 0;
      }
      require(!P.is_zero(), "T7 parameter set admits no terms");
      require(some_N, "T7 needs a term with N > 0 (otherwise it is row 3)");
      return P;
    }
    case RowId::T8: {
      long p = param(spec, "p"), q = param(spec, "q");
      long a = param(spec, "alpha"), b = param(spec, "beta");
      long K1 = param(spec, "K1"), m1 = param(spec, "m1");
      long K2 = param(spec, "K2"), m2 = param(spec, "m2");
      require(p >= 0 && q >= 0 && p + q > 0 && gcd(Int(p), Int(q)) == 1,
              "T8 needs coprime nonnegative p, q");
      require(p * b - q * a != 0, "T8 needs p*beta - q*alpha != 0");
      require(K1 >= 1 && K2 >= 1 && m1 >= 0 && m2 >= 0, "T8 needs K >= 1, m >= 0");
      require(K1 != K2 || m1 != m2, "T8 needs two distinct (K, m) terms");
      // Two terms of mod:gcim (N = 0, real coefficients 1).
      return re_pow_term(a, b, m1, K1 * p - m1 * a, K1 * q - m1 * b) +
             re_pow_term(a, b, m2, K2 * p - m2 * a, K2 * q - m2 * b);
    }
    case RowId::T9: {
      long a = param(spec, "alpha");
      require(a >= 1, "T9 needs alpha >= 1");
      MixedPoly Q =
          spec.Q ? *spec.Q : perturbation_candidates(RowId::T9, a).front();
      return real_of(zterm(0, (int)a)) * real_of(zterm(0, (int)a, 1, 0)) + Q;
    }
    case RowId::GN10: {
      long l = param(spec, "l");
      require(l > 1, "GN10 needs l > 1");
      return real_of(zterm(1, 0, 0, (int)l));
    }
    case RowId::GN9: {
      long l = param(spec, "l"), s = param(spec, "sign");
      require(l > 1, "GN9 needs l > 1");
      require(s == 1 || s == -1, "GN9 sign must be +-1");
      return zterm(1, 0, 1, 0) + zterm(0, (int)l, 0, (int)l).scaled(GaussRat(Rat(s)));
    }
    case RowId::QUADRIC_M: {
      long m = param(spec, "m");
      require(m > 1, "QUADRIC_M needs m > 1");
      return (zterm(1, 0, 1, 0) + zterm(0, 1, 0, 1)).pow((int)m);
    }
    case RowId::EX_S5: {
      MixedPoly z1z1 = zterm(1, 0, 1, 0);
      MixedPoly a = z1z1.pow(3) * real_of(zterm(5, 0, 0, 1)).pow(2);
      MixedPoly b = z1z1.pow(4) * real_of(zterm(9, 0));
      return a.scaled(GaussRat(8)) + b.scaled(GaussRat(4));
    }
    case RowId::EX_TH2: {
      MixedPoly Pp = (zterm(3, 3) - zterm(2, 4)).scaled(GaussRat::i());
      MixedPoly Qp = (zterm(4, 5) - zterm(3, 6)).scaled(GaussRat(3));
      return real_of(Pp * Qp.conj());
    }
  }
  throw InvalidParams("unknown row");
}

}  // namespace

std::string row_name(RowId id) { return kNames[(int)id]; }

std::optional<RowId> row_from_name(const std::string& name) {
  for (int k = 0; k < (int)std::size(kNames); ++k)
    if (name == kNames[k]) return (RowId)k;
  return std::nullopt;
}

std::vector<ModelSpec> default_specs() {
  std::vector<ModelSpec> out;
  for (int k = 0; k < (int)std::size(kNames); ++k)
    out.push_back(ModelSpec{(RowId)k, {}, std::nullopt});
  return out;
}

MixedPoly build_model(const ModelSpec& spec) {
  auto d = defaults(spec.row);
  for (const auto& [k, v] : spec.params)
    if (d.find(k) == d.end())
      throw InvalidParams("unknown parameter '" + k + "' for row " +
                          row_name(spec.row));
  MixedPoly P = build_raw(spec);
  if (auto witness = holomorphic_degeneracy(P))
    throw DegenerateInstance("built model is holomorphically degenerate");
  return P;
}

std::vector<MixedPoly> perturbation_candidates(RowId row, long alpha) {
  // For Im w = Re(zb1 z2^a) + Q: mu1 + a*mu2 = 1 and (s)*mu2 = 1 for the
  // total degree s of Q in (z2, zb2); valid weights need a+1 <= s <= 2a.
  // For the T9 base Re(z2^a)Re(zb1 z2^a): 2a+1 <= s <= 4a.
  long lo, hi;
  if (row == RowId::T5) {
    lo = alpha + 1;
    hi = 2 * alpha;
  } else if (row == RowId::T9) {
    lo = 2 * alpha + 1;
    hi = 4 * alpha;
  } else {
    throw InvalidParams("only rows T5 and T9 take perturbations");
  }
  std::vector<MixedPoly> out;
  for (long s = lo; s <= hi; ++s)
    for (long b = (s - 1) / 2; b >= 1; --b)  // a > b >= 1, noncircular
      out.push_back(real_of(zterm(0, (int)(s - b), 0, (int)b)));
  if (out.empty()) throw InvalidParams("no admissible perturbation exists");
  return out;
}

ClassificationRow expected_profile(const ModelSpec& spec) {
  // g, gt, g0, g0re, g0im, g1, gc, gn
  struct P8 { int g, gt, g0, re, im, g1, gc, gn; };
  P8 v{};
  switch (spec.row) {
    case RowId::T1:
    case RowId::GN10: v = {10, 2, 3, 1, 1, 1, 1, 2}; break;
    case RowId::T2: v = {7, 1, 3, 1, 1, 1, 1, 0}; break;
    case RowId::T3: v = {6, 0, 3, 1, 1, 1, 1, 0}; break;
    case RowId::T4: v = {6, 2, 2, 0, 1, 0, 1, 0}; break;
    case RowId::T5: v = {5, 2, 1, 0, 0, 0, 1, 0}; break;
    case RowId::T6: v = {5, 1, 2, 1, 0, 0, 1, 0}; break;
    case RowId::T7: v = {4, 0, 2, 1, 0, 0, 1, 0}; break;
    case RowId::T8: v = {4, 0, 2, 0, 1, 0, 1, 0}; break;
    case RowId::T9: v = {4, 1, 1, 0, 0, 0, 1, 0}; break;
    case RowId::GN9: v = {9, 2, 3, 0, 2, 1, 0, 2}; break;
    case RowId::QUADRIC_M: v = {7, 0, 5, 0, 2, 1, 0, 0}; break;
    case RowId::EX_S5:
    case RowId::EX_TH2: v = {3, 0, 1, 0, 0, 0, 1, 0}; break;
  }
  ClassificationRow row;
  row.dim_g = v.g;
  row.dim_gt = v.gt;
  row.dim_g0 = v.g0;
  row.dim_g0_re = v.re;
  row.dim_g0_im = v.im;
  row.dim_g1 = v.g1;
  row.dim_gc = v.gc;
  row.dim_gn = v.gn;
  row.has_euler = true;
  row.two_jet_determined = v.gc == 0;
  return row;
}

namespace {

bool profile_match(const ClassificationRow& a, const ClassificationRow& b) {
  return a.dim_g == b.dim_g && a.dim_gt == b.dim_gt && a.dim_g0 == b.dim_g0 &&
         a.dim_g0_re == b.dim_g0_re && a.dim_g0_im == b.dim_g0_im &&
         a.dim_g1 == b.dim_g1 && a.dim_gc == b.dim_gc && a.dim_gn == b.dim_gn;
}

std::string params_string(const ModelSpec& spec) {
  std::map<std::string, long> eff = defaults(spec.row);
  for (const auto& [k, val] : spec.params) eff[k] = val;
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, val] : eff) {
    os << (first ? "" : ",") << k << "=" << val;
    first = false;
  }
  return os.str();
}

}  // namespace

SweepReport sweep_table(const std::vector<ModelSpec>& specs) {
  SweepReport report;
  for (const ModelSpec& spec : specs) {
    SweepLine line;
    line.row = row_name(spec.row);
    line.params = params_string(spec);
    line.expected = expected_profile(spec);
    try {
      std::vector<ModelSpec> attempts{spec};
      if ((spec.row == RowId::T5 || spec.row == RowId::T9) && !spec.Q) {
        long a = param(spec, "alpha");
        for (const MixedPoly& q : perturbation_candidates(spec.row, a)) {
          ModelSpec alt = spec;
          alt.Q = q;
          attempts.push_back(std::move(alt));
        }
        attempts.erase(attempts.begin());  // first candidate == default
      }
      int tried = 0;
      for (const ModelSpec& attempt : attempts) {
        ++tried;
        MixedPoly P;
        try {
          P = build_model(attempt);
        } catch (const DegenerateInstance&) {
          continue;  // adjust the perturbation
        }
        GradedAlgebra alg = compute_symmetry_algebra(P);
        line.actual = split_components(P, alg);
        line.pass = profile_match(line.expected, line.actual);
        if (line.pass) break;
      }
      if (tried > 1)
        line.note = "tried " + std::to_string(tried) + " perturbations";
    } catch (const InputError& e) {
      line.pass = false;
      line.note = e.what();
    }
    report.all_pass = report.all_pass && line.pass;
    report.lines.push_back(std::move(line));
  }
  return report;
}

}  // namespace crsym
