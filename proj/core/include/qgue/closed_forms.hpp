#pragma once

// Published closed-form moment formulas, transcribed verbatim with their
// sign and exponent conventions. Nothing here is assumed correct; the
// verification harness compares each one against an oracle.

#include "qgue/exactq.hpp"

namespace qgue {

/// Integral of s_mu for the hook mu = (l+1, 1^{2m-l-1}) at N variables:
/// (-1)^{m-f} q^{(m-f-1)(m-f-2)} [N+l, 2m]_q [m-1, f]_{q^2} M_q(2m-1), f = floor(l/2).
Scalar hook_moment_closed_form(int ell, int m, int n_vars);

/// sigma_{m,t} integral, final printed form:
/// (-1)^{m-t+1} q^{(m-t-1)(m-t-2)+(N+2t+1-2m)} M_q(2m-1) [m-1, t]_{q^2} [N+2t, 2m-1]_q
Scalar sigma_closed_form(int m, int t, int n_vars);

/// sigma_{m,t} integral, printed difference form before q-Pascal:
/// (-1)^{m-t} q^{(m-t-1)(m-t-2)} M_q(2m-1) [m-1, t]_{q^2} ([N+2t, 2m]_q - [N+2t+1, 2m]_q)
Scalar sigma_difference_form(int m, int t, int n_vars);

/// Integral of p_{2m}:
/// M_q(2m-1) q^{N+m^2-5m+3} sum_t (-1)^{m-t+1} q^{t^2+(5-2m)t} [m-1, t]_{q^2} [N+2t, 2m-1]_q
Scalar p2m_closed_form(int m, int n_vars);

/// Right-hand side of the printed x^{2m} H_s^2 identity. Throws
/// DegenerateDenominator when 1 - q^{s+2+2t-m} vanishes on a contributing term.
Scalar hermite_square_closed_form(int m, int s);
/// q^{s(s+1)/2} [s+1]!_q, the normalization printed with that identity.
Scalar hermite_square_printed_normalization(int s);

/// q-Harer-Zagier right-hand side with n := m:
/// sum_k q^{m(s-k)+k(k-1)/2} M_q(2m-1) [s, k]_q [m, k]_q prod_{i<=k} (1+q^{m+i})
Scalar q_harer_zagier_rhs(int m, int s);
/// q^{s(s-1)/2} [s]!_q
Scalar q_harer_zagier_normalization(int s);

/// Hook value Sigma_{(l+1,1^i)}(0) read off the truncated shadow polynomial:
/// (-1)^{N-1-i} times the coefficient of S_{N-1-i} in the part of S_{N+l}
/// of degree >= N.
Scalar hook_value_from_truncation(int n_vars, int ell, int i);

/// Printed finite q-binomial sum, both sides:
/// lhs = sum_{r<=s} q^{r(r-1)} [n, r]_{q^2} (-1)^r,
/// rhs = (-1)^s q^{s(s-1)} [n-1, s]_{q^2}.
Scalar q_binomial_partial_sum(int n, int s);
Scalar q_binomial_partial_sum_printed_rhs(int n, int s);

}  // namespace qgue
