#include "crsym/weights.hpp"

#include <algorithm>
#include <set>

namespace crsym {

Weight::Weight(Rat m1, Rat m2) : mu1(std::move(m1)), mu2(std::move(m2)) {
  if (!(mu2 > 0 && mu2 <= mu1 && mu1 <= Rat(1, 2)))
    throw InputError("invalid weight: need 0 < mu2 <= mu1 <= 1/2");
}

Rat weighted_degree(const Mono& m, const Weight& lam) {
  return lam.mu1 * (m.a1 + m.b1) + lam.mu2 * (m.a2 + m.b2) + m.cw + m.cwb + m.cu;
}

bool is_weighted_homogeneous(const MixedPoly& p, const Weight& lam, const Rat& d) {
  for (const auto& [m, c] : p.terms())
    if (weighted_degree(m, lam) != d) return false;
  return true;
}

namespace {

// Distinct exponent-sum rows (a1+b1, a2+b2) of P's support.
std::vector<std::pair<int, int>> support_rows(const MixedPoly& P) {
  std::set<std::pair<int, int>> rows;
  for (const auto& [m, c] : P.terms()) rows.insert({m.a1 + m.b1, m.a2 + m.b2});
  return {rows.begin(), rows.end()};
}

void check_model_input(const MixedPoly& P) {
  if (P.is_zero()) throw InputError("model polynomial is zero");
  if (!P.is_w_free()) throw InputError("model polynomial must not involve w or u");
  if (!P.is_real()) throw NonRealModel("model polynomial is not real-valued");
  for (const auto& [m, c] : P.terms())
    if (!m.is_mixed())
      throw PluriharmonicInput("model contains the pluriharmonic monomial " +
                               to_string(m));
}

}  // namespace

Weight infer_multitype_weights(const MixedPoly& P) {
  check_model_input(P);
  auto rows = support_rows(P);
  const auto [c1, c2] = rows.front();
  // Look for a rank-2 pair.
  for (size_t j = 1; j < rows.size(); ++j) {
    const auto [d1, d2] = rows[j];
    long det = (long)c1 * d2 - (long)c2 * d1;
    if (det == 0) continue;
    Rat mu1 = Rat(d2 - c2) / det, mu2 = Rat(c1 - d1) / det;
    for (const auto& [e1, e2] : rows)
      if (e1 * mu1 + e2 * mu2 != 1)
        throw NotHomogeneous("support admits no common weight of degree 1");
    if (!(mu2 > 0))
      throw NoFiniteMultitype("weight solution has mu2 <= 0");
    if (mu1 < mu2)
      throw NoFiniteMultitype(
          "weight solution has mu1 < mu2; variables are not in multitype order");
    if (mu1 > Rat(1, 2))
      throw NoFiniteMultitype("weight solution has mu1 > 1/2");
    return Weight(mu1, mu2);
  }
  // Rank 1: every row is the same (degree-1 condition rules out proper
  // multiples). Lexicographic minimum binds at mu1 = mu2.
  if (rows.size() > 1 || c1 < 0)
    throw NotHomogeneous("proportional support rows cannot all have degree 1");
  if (c1 == 0 || c2 == 0)
    throw NoFiniteMultitype("model does not involve both tangential variables");
  if (c1 + c2 < 2) throw NoFiniteMultitype("weight would exceed 1/2");
  Rat mu(1, c1 + c2);
  return Weight(mu, mu);
}

std::optional<Weight> infer_weights_bruteforce(const MixedPoly& P, long max_den) {
  check_model_input(P);
  auto rows = support_rows(P);
  std::optional<Weight> best;
  std::set<Rat> candidates;
  for (long d = 1; d <= max_den; ++d)
    for (long n = 1; 2 * n <= d; ++n) candidates.insert(Rat(n, d));
  for (const Rat& l1 : candidates)
    for (const Rat& l2 : candidates) {
      if (l2 > l1) continue;
      bool ok = true;
      for (const auto& [e1, e2] : rows)
        if (e1 * l1 + e2 * l2 != 1) { ok = false; break; }
      if (!ok) continue;
      if (!best || l1 < best->mu1 || (l1 == best->mu1 && l2 < best->mu2))
        best = Weight(l1, l2);
    }
  return best;
}

std::vector<Rat> admissible_field_weights(const Weight& lam, const Rat& cap) {
  std::set<Rat> vals;
  const Rat top = cap + 1;  // largest coefficient degree we ever need
  long c1max = rat_floor(top / lam.mu1) + 1;
  for (long c1 = 0; c1 <= c1max; ++c1) {
    Rat base1 = c1 * lam.mu1;
    if (base1 > top) break;
    long c2max = rat_floor((top - base1) / lam.mu2) + 1;
    for (long c2 = 0; c2 <= c2max; ++c2) {
      Rat base2 = base1 + c2 * lam.mu2;
      if (base2 > top) break;
      for (long c3 = 0; base2 + c3 <= top; ++c3) {
        Rat base = base2 + c3;
        for (const Rat& off : {lam.mu1, lam.mu2, Rat(1)}) {
          Rat v = base - off;
          if (v >= -1 && v <= cap) vals.insert(v);
        }
      }
    }
  }
  return {vals.begin(), vals.end()};
}

std::vector<Mono> enumerate_holo_monomials(const Rat& target, const Weight& lam,
                                           bool allow_w) {
  std::vector<Mono> out;
  if (target < 0) return out;
  long c3max = allow_w ? rat_floor(target) : 0;
  for (long c3 = 0; c3 <= c3max; ++c3) {
    Rat rem0 = target - c3;
    if (rem0 < 0) continue;
    long c1max = rat_floor(rem0 / lam.mu1);
    for (long c1 = 0; c1 <= c1max; ++c1) {
      Rat rem = rem0 - c1 * lam.mu1;
      Rat q = rem / lam.mu2;
      if (rat_den(q) == 1 && q >= 0)
        out.push_back(Mono{(int)c1, (int)rat_floor(q), 0, 0, (int)c3, 0, 0});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace crsym
