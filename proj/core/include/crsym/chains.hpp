#pragma once

#include <optional>
#include <string>

#include "crsym/field.hpp"

namespace crsym {

/// Chains longer than this are rejected outright; weighted homogeneity
/// bounds realistic lengths well below it.
inline constexpr int kMaxChainLength = 16;

/// An X-pair of chains of length m+1: holomorphic U_j, V_j with
/// X(U_m) = X(V_m) = 0, X(U_j) = A_j U_{j+1}, X(V_j) = B_j V_{j+1} and the
/// antihermitian matching A_j = -conj(B_{m-j-1}).
struct ChainPair {
  std::vector<MixedPoly> U, V;
  std::vector<GaussRat> A, B;  // m constants each

  int m() const { return (int)U.size() - 1; }
};

/// Parameters of a pure X-pair: Q = z1^p z2^q is the minimal monomial with
/// X(Q) = 0 and T = z1^alpha z2^beta the monomial factor of X.
struct PurePairParams {
  int p = 0, q = 0;
  int alpha = 0, beta = 0;
  int K = 1;
  int N = 0, m = 0;
  GaussRat tau{1};
};

/// The data of a monomial-diagonal field
///   X = i*theta * z1^alpha z2^beta (q z1 d1 - p z2 d2),
/// with p, q coprime nonnegative and alpha, beta >= -1 (boundary forms
/// i*theta*z2^beta d1 and i*theta*z1^alpha d2 correspond to alpha = -1 and
/// beta = -1 respectively).
struct MonoDiagForm {
  int p = 0, q = 0, alpha = 0, beta = 0;
  GaussRat theta;
};

/// Parse a field into monomial-diagonal form, if it has one.
std::optional<MonoDiagForm> monomial_diagonal_form(const HoloField& X);

/// The minimal monomial Q = z1^p z2^q annihilated by X. All annihilated
/// monomials z1^s z2^t are exactly those with qs - pt = 0.
Mono minimal_annihilated_monomial(const HoloField& X);

struct XPairCheck {
  bool ok = false;
  std::string message;  // first failing relation when !ok
  std::vector<GaussRat> A, B;
};

/// Check all chain relations of `pair` against X exactly and extract the
/// constants.
XPairCheck verify_xpair(const HoloField& X, const ChainPair& pair);

/// The pure X-pair: U_{m-j} = (1/j!) z1^{Kp-j*alpha} z2^{Kq-j*beta},
/// V_{m-j} = tau * U_{m-j} * Q^N.
ChainPair pure_pair(const PurePairParams& params);

/// Re(sum_j U_j * conj(V_{m-j})).
MixedPoly chain_sum(const ChainPair& pair);

/// Closed product form of the pure chain sum,
///   (2^m/m!) Re(tau Q^N) |z1|^{2(Kp-m*alpha)} |z2|^{2(Kq-m*beta)}
///   (Re z1^alpha z2^beta)^m,
/// expanded exactly.
MixedPoly pure_chain_sum_closed_form(const PurePairParams& params);

/// Rescale the pair so all constants equal `target` (a nonzero imaginary
/// number), folding the resulting tau back into V so the chain sum is
/// unchanged. The equality of chain sums is verified exactly.
ChainPair normalize_chains(const ChainPair& pair,
                           const GaussRat& target = GaussRat(0, 1));

/// Split a (possibly nonmonomial) X-pair for a monomial-diagonal X into
/// monomial X-pairs whose chain sums add up exactly to the original one.
std::vector<ChainPair> decompose_xpair(const HoloField& X,
                                       const ChainPair& pair);

}  // namespace crsym
