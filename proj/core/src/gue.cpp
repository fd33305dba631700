#include "qgue/gue.hpp"

#include <stdexcept>

#include "qgue/closed_forms.hpp"

namespace qgue {

std::string to_string(Method m) {
  switch (m) {
    case Method::fast: return "fast";
    case Method::oracle: return "oracle";
    case Method::closed_form: return "closed";
  }
  return "?";
}

Method parse_method(const std::string& text) {
  if (text == "fast") return Method::fast;
  if (text == "oracle") return Method::oracle;
  if (text == "closed" || text == "closed_form") return Method::closed_form;
  throw std::invalid_argument("unknown method '" + text + "' (expected fast, oracle or closed)");
}

Scalar normalization(int n_vars) {
  return apply_M2(MonomialMap::constant(n_vars, Scalar(1)), gaussian_functional());
}

Scalar normalization_formula(int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("normalization_formula: N must be positive");
  Scalar acc(1);
  for (int j = 1; j <= n_vars; ++j) acc *= Scalar(j);
  for (int j = 0; j < n_vars; ++j) acc *= Scalar::q_power(j * (j - 1) / 2) * q_factorial(j);
  return acc;
}

Scalar integrate_oracle(const MonomialMap& f) {
  return apply_M2(f, gaussian_functional()) / normalization(f.n_vars());
}

namespace {

// (l, m) with kappa = (l+1, 1^{2m-l-1}), if kappa is a hook of even weight.
std::pair<int, int> even_hook_parameters(const Partition& kappa) {
  if (kappa.empty() || kappa.weight() % 2 != 0)
    throw std::invalid_argument("closed form needs a hook of positive even weight, got " + kappa.to_string());
  for (int i = 1; i < kappa.length(); ++i)
    if (kappa[i] != 1) throw std::invalid_argument("closed form needs a hook partition, got " + kappa.to_string());
  return {kappa[0] - 1, kappa.weight() / 2};
}

}  // namespace

Scalar integrate_schur(const Partition& kappa, int n_vars, Method method) {
  switch (method) {
    case Method::fast:
      if (kappa.length() > n_vars) return Scalar();  // s_kappa vanishes in N variables
      return sigma_at_zero(kappa, n_vars);
    case Method::oracle:
      return integrate_oracle(schur_monomials(kappa, n_vars));
    case Method::closed_form: {
      auto [ell, m] = even_hook_parameters(kappa);
      return hook_moment_closed_form(ell, m, n_vars);
    }
  }
  throw std::logic_error("integrate_schur: unknown method");
}

Scalar integrate_symmetric(const SchurVector& f) {
  Scalar total;
  for (const auto& [lambda, c] : f.entries()) total += c * sigma_at_zero(lambda, f.n_vars());
  return total;
}

Scalar integrate_power_sum(int k, int n_vars, Method method) {
  if (k < 0) throw std::invalid_argument("integrate_power_sum: negative degree");
  if (n_vars < 1) throw std::invalid_argument("integrate_power_sum: N must be positive");
  switch (method) {
    case Method::fast:
      if (k == 0) return Scalar(n_vars);
      return integrate_symmetric(to_schur_vector(power_sum_hooks(k, n_vars), n_vars));
    case Method::oracle:
      return integrate_oracle(power_sum_monomials(k, n_vars));
    case Method::closed_form:
      if (k == 0 || k % 2 != 0) throw std::invalid_argument("closed form exists only for p_{2m}, m >= 1");
      return p2m_closed_form(k / 2, n_vars);
  }
  throw std::logic_error("integrate_power_sum: unknown method");
}

Scalar level_density_moment(const XPoly& p, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("level_density_moment: N must be positive");
  Scalar total;
  for (int j = 0; j < n_vars; ++j) {
    const XPoly h = hermite(j);
    const XPoly h2 = h * h;
    total += functional_L(p * h2) / functional_L(h2);
  }
  return total;
}

Scalar hermite_squared_moment(int m, int s) {
  if (m < 0 || s < 0) throw std::invalid_argument("hermite_squared_moment: m and s must be nonnegative");
  const XPoly h = hermite(s);
  return functional_L(XPoly::monomial(2 * m) * h * h);
}

Scalar hermite_squared_moment_by_extraction(int m, int s) {
  if (m < 0 || s < 0) throw std::invalid_argument("hermite_squared_moment: m and s must be nonnegative");
  const XPoly p = XPoly::monomial(2 * m) * hermite(s);
  const DegreeMap coeffs = hermite_expand(p);
  auto it = coeffs.find(s);
  if (it == coeffs.end()) return Scalar();
  return Scalar::q_power(s * (s - 1) / 2) * q_factorial(s) * it->second;
}

Scalar evaluate(const MomentQuery& query) {
  switch (query.kind) {
    case MomentQuery::Kind::schur:
      return integrate_schur(query.kappa, query.n_vars, query.method);
    case MomentQuery::Kind::power_sum:
      return integrate_power_sum(query.degree, query.n_vars, query.method);
    case MomentQuery::Kind::hermite_squared:
      switch (query.method) {
        case Method::fast: return hermite_squared_moment_by_extraction(query.m, query.s);
        case Method::oracle: return hermite_squared_moment(query.m, query.s);
        case Method::closed_form:
          if (query.m < 1) throw std::invalid_argument("closed form needs m >= 1");
          return q_harer_zagier_normalization(query.s) * q_harer_zagier_rhs(query.m, query.s);
      }
  }
  throw std::logic_error("evaluate: unknown query");
}

}  // namespace qgue
