#pragma once

// Partitions, Schur polynomials, determinantal families F_kappa built from a
// monic univariate family, and the brute-force multivariate functionals
// M^(0) / M^(2) that serve as the definitional oracle.

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qgue/exactq.hpp"
#include "qgue/xpoly.hpp"

namespace qgue {

/// Weakly decreasing nonnegative parts with trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  // (arm + 1, 1^legs)
  static Partition hook(int arm, int legs);
  // "3,1,1"; "" and "0" give the empty partition.
  static Partition parse(const std::string& text);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  // Zero past the last part.
  int operator[](int i) const;
  const std::vector<int>& parts() const { return parts_; }
  // Young diagram of *this contains that of other.
  bool contains(const Partition& other) const;

  // "3,1,1"; the empty partition renders as "0".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n with at most max_length parts, in decreasing lex order.
std::vector<Partition> partitions_of(int n, int max_length);
/// All partitions whose Young diagram lies inside kappa.
std::vector<Partition> partitions_inside(const Partition& kappa);

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial in N variables with Scalar coefficients.
class MonomialMap {
 public:
  explicit MonomialMap(int n_vars = 1);

  static MonomialMap constant(int n_vars, const Scalar& c);
  // p(x_var) viewed as a polynomial in n_vars variables.
  static MonomialMap from_univariate(const XPoly& p, int var, int n_vars);

  int n_vars() const { return n_vars_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Exponents& e) const;
  int total_degree() const;  // -1 for zero

  void add_term(const Exponents& e, const Scalar& c);

  MonomialMap& operator+=(const MonomialMap& rhs);
  MonomialMap& operator-=(const MonomialMap& rhs);
  MonomialMap& operator*=(const Scalar& c);
  friend MonomialMap operator+(MonomialMap a, const MonomialMap& b) { return a += b; }
  friend MonomialMap operator-(MonomialMap a, const MonomialMap& b) { return a -= b; }
  friend MonomialMap operator*(const MonomialMap& a, const MonomialMap& b);
  friend MonomialMap operator*(MonomialMap a, const Scalar& c) { return a *= c; }
  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

  // Exact quotient by lex-leading-term division; throws std::logic_error if
  // the divisor does not divide.
  static MonomialMap divide_exact(const MonomialMap& a, const MonomialMap& b);

  std::string to_string() const;

 private:
  int n_vars_;
  std::map<Exponents, Scalar> terms_;
};

/// prod_{i<j} (x_i - x_j) = det(x_i^{N-j}).
MonomialMap vandermonde(int n_vars);
/// Power sum x_1^k + ... + x_N^k.
MonomialMap power_sum_monomials(int k, int n_vars);

/// A monic univariate family g_0, g_1, ... with deg g_n = n.
struct PolyFamily {
  std::string name;
  std::function<XPoly(int)> generator;

  // Throws std::invalid_argument if g_n is not monic of degree n.
  XPoly operator()(int n) const;

  static PolyFamily monomials();
  static PolyFamily hermite();
  static PolyFamily shadow();
  static PolyFamily shifted_powers();  // (x+1)^n
};

/// A symmetric polynomial in N variables written in the Schur basis.
class SchurVector {
 public:
  explicit SchurVector(int n_vars) : n_vars_(n_vars) {}

  int n_vars() const { return n_vars_; }
  const std::map<Partition, Scalar>& entries() const { return entries_; }
  Scalar coefficient(const Partition& p) const;
  // Throws ShapeError if length(p) > N.
  void add(const Partition& p, const Scalar& c);

  friend bool operator==(const SchurVector&, const SchurVector&) = default;

  // {"3,1": "<scalar>", ...} in partition order.
  std::string to_json() const;

 private:
  int n_vars_;
  std::map<Partition, Scalar> entries_;
};

/// Determinant over Q(q), by fraction-free elimination with row pivoting.
Scalar determinant(std::vector<std::vector<Scalar>> m);

/// s_kappa(x_1..x_N) as a monomial map, by dividing a_{kappa+delta} by a_delta.
/// Zero when kappa has more than N parts.
MonomialMap schur_monomials(const Partition& kappa, int n_vars);

/// det(g_{kappa_j+N-j}(x_i)) / det(x_i^{N-j}) as a monomial map.
MonomialMap family_polynomial(const PolyFamily& family, const Partition& kappa, int n_vars);

/// [s_lambda] F_kappa = det(coefficient of x^{lambda_j+N-j} in g_{kappa_l+N-l}).
Scalar family_coefficient(const PolyFamily& family, const Partition& kappa, const Partition& lambda,
                          int n_vars);
/// The Schur expansion of F_kappa; only partitions inside kappa are visited.
SchurVector family_expand(const PolyFamily& family, const Partition& kappa, int n_vars);

/// Sigma_kappa(0): the empty-partition coefficient for the shadow family.
Scalar sigma_at_zero(const Partition& kappa, int n_vars);

struct SignedPartition {
  int sign;
  Partition partition;
  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

/// p_k = sum_i (-1)^i s_{(k-i, 1^i)}, dropping hooks longer than N.
std::vector<SignedPartition> power_sum_hooks(int k, int n_vars);
/// The hook expansion of p_{2m}.
std::vector<SignedPartition> hook_decomposition(int m, int n_vars);
SchurVector to_schur_vector(const std::vector<SignedPartition>& terms, int n_vars);

/// n -> M(x^n) for a univariate linear functional M.
using UnivariateFunctional = std::function<Scalar(int)>;

/// The q-Gaussian functional L on monomials.
UnivariateFunctional gaussian_functional();

/// M^(0): M applied in every coordinate.
Scalar apply_M0(const MonomialMap& f, const UnivariateFunctional& functional);

inline constexpr int kOracleMaxVars = 5;
inline constexpr int kOracleMaxDegree = 40;

/// M^(2)(f) = M^(0)(f V^2). Throws SizeError past the oracle guardrail.
Scalar apply_M2(const MonomialMap& f, const UnivariateFunctional& functional);

/// The kappa-coefficient of the (x+1)^n family polynomial indexed by lambda.
Scalar generalized_binomial(const Partition& lambda, const Partition& kappa, int n_vars);

}  // namespace qgue
