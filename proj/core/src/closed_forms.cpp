#include "qgue/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "qgue/xpoly.hpp"

namespace qgue {

namespace {

Scalar signed_q_power(int sign_exponent, int q_exponent) {
  Scalar s = Scalar::q_power(q_exponent);
  return sign_exponent % 2 == 0 ? s : -s;
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Scalar hook_moment_closed_form(int ell, int m, int n_vars) {
  require(m >= 1 && ell >= 0 && 2 * m - ell - 1 >= 0 && n_vars >= 1,
          "hook_moment_closed_form: need m >= 1, 0 <= l <= 2m-1, N >= 1");
  const int f = ell / 2;
  return signed_q_power(m - f, (m - f - 1) * (m - f - 2)) * q_binomial(n_vars + ell, 2 * m) *
         q_binomial(m - 1, f, Base::squared) * m_q(2 * m - 1);
}

Scalar sigma_closed_form(int m, int t, int n_vars) {
  require(m >= 1 && t >= 0 && n_vars >= 1, "sigma_closed_form: need m >= 1, t >= 0, N >= 1");
  const Scalar binomials = q_binomial(m - 1, t, Base::squared) * q_binomial(n_vars + 2 * t, 2 * m - 1);
  if (binomials.is_zero()) return Scalar();
  return signed_q_power(m - t + 1, (m - t - 1) * (m - t - 2) + (n_vars + 2 * t + 1 - 2 * m)) * m_q(2 * m - 1) *
         binomials;
}

Scalar sigma_difference_form(int m, int t, int n_vars) {
  require(m >= 1 && t >= 0 && n_vars >= 1, "sigma_difference_form: need m >= 1, t >= 0, N >= 1");
  const Scalar difference = q_binomial(n_vars + 2 * t, 2 * m) - q_binomial(n_vars + 2 * t + 1, 2 * m);
  return signed_q_power(m - t, (m - t - 1) * (m - t - 2)) * m_q(2 * m - 1) * q_binomial(m - 1, t, Base::squared) *
         difference;
}

Scalar p2m_closed_form(int m, int n_vars) {
  require(m >= 1 && n_vars >= 1, "p2m_closed_form: need m >= 1, N >= 1");
  Scalar sum;
  for (int t = 0; t <= m; ++t) {
    const Scalar binomials = q_binomial(m - 1, t, Base::squared) * q_binomial(n_vars + 2 * t, 2 * m - 1);
    if (binomials.is_zero()) continue;
    sum += signed_q_power(m - t + 1, t * t + (5 - 2 * m) * t) * binomials;
  }
  return m_q(2 * m - 1) * Scalar::q_power(n_vars + m * m - 5 * m + 3) * sum;
}

Scalar hermite_square_closed_form(int m, int s) {
  require(m >= 1 && s >= 0, "hermite_square_closed_form: need m >= 1, s >= 0");
  Scalar sum;
  for (int t = 0; t <= m; ++t) {
    const Scalar binomials = q_binomial(m - 1, t, Base::squared) * q_binomial(s + 2 * t, 2 * m - 1);
    if (binomials.is_zero()) continue;
    const int den_exponent = s + 2 + 2 * t - m;
    if (den_exponent == 0)
      throw DegenerateDenominator("1 - q^(s+2+2t-m) vanishes at m = " + std::to_string(m) +
                                  ", s = " + std::to_string(s) + ", t = " + std::to_string(t));
    const Scalar ratio = Scalar::q() * (Scalar(1) - Scalar::q_power(s + 1 - 2 * t)) /
                         (Scalar(1) - Scalar::q_power(den_exponent));
    sum += signed_q_power(m - t + 1, t * t + (5 - 2 * m) * t + s) * binomials * (ratio - Scalar(1));
  }
  return m_q(2 * m - 1) * Scalar::q_power(m * m - 5 * m + 3) * sum;
}

Scalar hermite_square_printed_normalization(int s) {
  require(s >= 0, "normalization: need s >= 0");
  return Scalar::q_power(s * (s + 1) / 2) * q_factorial(s + 1);
}

Scalar q_harer_zagier_rhs(int m, int s) {
  require(m >= 1 && s >= 0, "q_harer_zagier_rhs: need m >= 1, s >= 0");
  Scalar sum;
  Scalar product(1);
  for (int k = 0; k <= s && k <= m; ++k) {
    if (k > 0) product *= Scalar(1) + Scalar::q_power(m + k);
    sum += Scalar::q_power(m * (s - k) + k * (k - 1) / 2) * q_binomial(s, k) * q_binomial(m, k) * product;
  }
  return m_q(2 * m - 1) * sum;
}

Scalar q_harer_zagier_normalization(int s) {
  require(s >= 0, "normalization: need s >= 0");
  return Scalar::q_power(s * (s - 1) / 2) * q_factorial(s);
}

Scalar hook_value_from_truncation(int n_vars, int ell, int i) {
  require(n_vars >= 1 && ell >= 0 && i >= 0 && i <= n_vars - 1,
          "hook_value_from_truncation: need N >= 1, l >= 0, 0 <= i <= N-1");
  const XPoly full = shadow_hermite(n_vars + ell);
  std::vector<Scalar> high(static_cast<std::size_t>(full.degree()) + 1);
  for (int d = n_vars; d <= full.degree(); ++d) high[static_cast<std::size_t>(d)] = full.coefficient(d);
  const DegreeMap expansion = shadow_expand(XPoly(std::move(high)));
  const int index = n_vars - 1 - i;
  auto it = expansion.find(index);
  if (it == expansion.end()) return Scalar();
  return index % 2 == 0 ? it->second : -it->second;
}

Scalar q_binomial_partial_sum(int n, int s) {
  require(n >= 0 && s >= 0, "q_binomial_partial_sum: need n, s >= 0");
  Scalar sum;
  for (int r = 0; r <= s; ++r) sum += signed_q_power(r, r * (r - 1)) * q_binomial(n, r, Base::squared);
  return sum;
}

Scalar q_binomial_partial_sum_printed_rhs(int n, int s) {
  require(n >= 1 && s >= 0, "q_binomial_partial_sum_printed_rhs: need n >= 1, s >= 0");
  return signed_q_power(s, s * (s - 1)) * q_binomial(n - 1, s, Base::squared);
}

}  // namespace qgue
