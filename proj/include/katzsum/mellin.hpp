#pragma once

// Mellin transforms of V and P on F_q*, their Gauss-sum evaluations, and the
// auxiliary character sums the evaluations are assembled from.
//
// *_direct functions sum the defining series against tabulated V/P values;
// *_closed functions evaluate Gauss/Jacobi-sum expressions only. Characters
// that enter "up to a factor of A4" are exposed through *_from_root variants
// so the choice of root can be varied by callers.

#include <array>
#include <span>

#include "katzsum/katz.hpp"

namespace katzsum {

// ---------------------------------------------------------------------------
// S(chi) = sum_{j != 0} chi(j) V(j)

Complex mellin_V_direct(const KatzContext& ctx, const KatzTables& tables, MultChar chi);

/// 0 unless chi is a fourth power; otherwise mellin_V_from_root at the canonical fourth root.
Complex mellin_V_closed(const KatzContext& ctx, MultChar chi);

/// tau^-1 conj(nu)(a) sum_m A4(a)^(1-m) G(nu A4^(m-1)) G(nu A4^m), for any nu with nu^4 = chi.
Complex mellin_V_from_root(const KatzContext& ctx, MultChar nu);

/// S(phi) through an octic character A8 with A8^2 = A4. Throws Error{BadArgument} if 8 does not divide q-1.
Complex mellin_V_octic(const KatzContext& ctx);

/// Y(lambda) = sum_x A4(x) conj(lambda)(x + a/x).
Complex Y(const KatzContext& ctx, MultChar lambda);

/// Jacobi-sum value of Y(nu^2 conj(A4)):
/// conj(nu)(a) {A4(a) J(nu, nu conj(A4)) + conj(A4)(a) J(nu phi, nu A4)}.
Complex Y_closed(const KatzContext& ctx, MultChar nu);

/// tau^-1 {G(lambda) Y(lambda) + G(lambda phi) Y(lambda phi)} with lambda = nu^2 conj(A4).
Complex mellin_V_assembled(const KatzContext& ctx, MultChar nu);

// ---------------------------------------------------------------------------
// T(chi) = sum_{j != 0} chi(j) P(j, 0)

Complex mellin_P0_direct(const KatzContext& ctx, const KatzTables& tables, MultChar chi);
Complex mellin_P0_closed(const KatzContext& ctx, MultChar chi);
Complex mellin_P0_from_root(const KatzContext& ctx, MultChar nu);

/// 2F1(nu^2, nu A4; nu conj(A4) | -1) by its defining sum.
Complex kummer_hyp(const KatzContext& ctx, MultChar nu);

/// A4(-1) G(nu A4) {G(nu) G(A4) + G(nu phi) G(conj A4)} / (q G(phi) G(nu^2)).
/// Throws Error{FourthPowerTrivial} when nu^4 is trivial.
Complex kummer_closed(const KatzContext& ctx, MultChar nu);

/// sum over x != 0 with x + a/x = 0 of phi(x - a/x) sum_{j != 0} (lambda A4 + lambda conj A4)(j).
Complex U(const KatzContext& ctx, MultChar lambda);

/// G(lambda A4) sum_x phi(x - a/x) conj(lambda A4)(x + a/x).
Complex W(const KatzContext& ctx, MultChar lambda);

/// Gauss-sum value of W(nu^2 conj(A4)) when nu^4 is nontrivial.
Complex W_closed(const KatzContext& ctx, MultChar nu);

/// Closed value of W(conj A4) + W(A4), the pair arising for trivial chi.
Complex W_trivial_pair_closed(const KatzContext& ctx);

/// {U(lambda) + W(lambda) + W(lambda phi)} / G(phi), equal to T((lambda A4)^2).
Complex mellin_P0_assembled(const KatzContext& ctx, MultChar lambda);

// ---------------------------------------------------------------------------
// Double transform T(chi1, chi2) = sum_{j,k != 0} chi1(j) chi2(k) P(j, k)

/// x (j+1)^2 + a (j-1)^2 / x. Throws Error{ZeroX}.
FieldElem alpha(const KatzContext& ctx, FieldElem j, FieldElem x);

/// h(D, j) = sum_x D(x) phi(1-x) (conj(D)^2 phi)(x (j+1)^2 + (j-1)^2). Throws Error{ZeroJ}.
Complex h(const KatzContext& ctx, MultChar d, FieldElem j);

/// Closed value of h: special values for D in {eps, A4, conj A4}, a 2F1 expression otherwise.
Complex h_closed(const KatzContext& ctx, MultChar d, FieldElem j);

/// sum over (j, x) with alpha(j, x) = 0 of (lambda1^2 phi)(j) phi(x - a/x).
Complex H_direct(const KatzContext& ctx, MultChar lambda1);

/// (A4(a) + conj A4(a)) sum_m J(nu1 A4^m, phi).
Complex H_closed(const KatzContext& ctx, MultChar nu1);

/// sum_{j,x} (lambda1^2 phi)(j) phi(x - a/x) conj(lambda1 lambda2)(alpha(j, x)).
Complex E(const KatzContext& ctx, MultChar lambda1, MultChar lambda2);

/// T(lambda1^2 phi, lambda2^2 phi) rebuilt from H and E.
Complex double_mellin_assembled(const KatzContext& ctx, MultChar lambda1, MultChar lambda2);

Complex double_mellin_direct(const KatzContext& ctx, const KatzTables& tables, MultChar chi1, MultChar chi2);

/// Gauss-sum evaluation for chi_i = nu_i^4 with mu = nu1 nu2:
/// (A4(-a)/q) sum_{m,n} (conj(mu) conj(A4)^(m+n))(a) G(nu1 A4^(n-1)) G(nu1 A4^n) G(nu2 A4^(m-1)) G(nu2 A4^m).
Complex double_mellin_closed(const KatzContext& ctx, MultChar nu1, MultChar nu2);

/// T(chi1, chi2) by closed forms: 0 unless both are fourth powers.
Complex double_mellin_evaluated(const KatzContext& ctx, MultChar chi1, MultChar chi2);

using RCoeffs = std::array<Complex, 4>;

/// R_0..R_3 in their Jacobi-sum form, for the branch where mu = nu1 nu2 is a power of A4.
/// T(nu1^4, nu2^4) = sum_k R_k A4^k(a). Throws Error{MuNotQuartic}.
RCoeffs r_coeffs(const KatzContext& ctx, MultChar nu1, MultChar nu2);

/// R_k = q^-1 A4(-1) sum_{m+n = 1-k mod 4} G(nu1 A4^(n-1)) G(nu1 A4^n) G(conj nu1 A4^(m-1)) G(conj nu1 A4^m).
RCoeffs r_coeffs_gauss(const KatzContext& ctx, MultChar nu1);

/// R_k from twisted sums of h over j.
RCoeffs r_coeffs_from_h(const KatzContext& ctx, MultChar nu1);

/// sum_k R_k A4^k(a).
Complex r_assemble(const KatzContext& ctx, const RCoeffs& r);

// ---------------------------------------------------------------------------

/// (1/(q-1)) sum_chi conj(chi)(j) values[chi]; values indexed by character exponent.
/// Throws Error{ZeroJ} for j = 0, Error{BadArgument} if values has the wrong length.
Complex inverse_mellin(const CharacterGroup& chars, std::span<const Complex> values, FieldElem j);

}  // namespace katzsum
