#pragma once

// The q-GUE integral: fast determinantal evaluation and the definitional
// M^(2) oracle, plus univariate moment helpers.

#include <optional>
#include <string>

#include "qgue/exactq.hpp"
#include "qgue/symschur.hpp"
#include "qgue/xpoly.hpp"

namespace qgue {

enum class Method { fast, oracle, closed_form };

std::string to_string(Method m);
Method parse_method(const std::string& text);

/// L^(2)(1) computed by the oracle.
Scalar normalization(int n_vars);
/// N! prod_{j<N} q^{j(j-1)/2} [j]!_q
Scalar normalization_formula(int n_vars);

/// L^(2)(f) / L^(2)(1) for an explicit polynomial.
Scalar integrate_oracle(const MonomialMap& f);

/// Normalized integral of s_kappa. fast: Sigma_kappa(0); oracle: brute force;
/// closed_form: the transcribed hook formula (hooks of even weight only).
/// Zero when kappa has more than N parts.
Scalar integrate_schur(const Partition& kappa, int n_vars, Method method);

/// Linear extension of the fast Schur integral.
Scalar integrate_symmetric(const SchurVector& f);

/// Integral of the power sum p_k: fast through the hook expansion, oracle by
/// brute force, closed_form by the transcribed p_{2m} formula (even k only).
Scalar integrate_power_sum(int k, int n_vars, Method method);

/// sum_{j<N} L(p H_j^2) / L(H_j^2)
Scalar level_density_moment(const XPoly& p, int n_vars);

/// L(x^{2m} H_s^2), directly.
Scalar hermite_squared_moment(int m, int s);
/// The same quantity through the coefficient-extraction identity
/// L(p H_s) = q^{C(s,2)} [s]!_q [H_s] p with p = x^{2m} H_s.
Scalar hermite_squared_moment_by_extraction(int m, int s);

/// A single moment request, as issued by the CLI.
struct MomentQuery {
  enum class Kind { schur, power_sum, hermite_squared };
  Kind kind = Kind::schur;
  Partition kappa;  // schur
  int degree = 0;   // power_sum: the power k of p_k
  int m = 0;        // hermite_squared
  int s = 0;        // hermite_squared
  int n_vars = 1;
  Method method = Method::fast;
};

Scalar evaluate(const MomentQuery& query);

}  // namespace qgue
