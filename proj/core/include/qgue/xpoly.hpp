#pragma once

// Univariate polynomials in x over Q(q): the q-derivative, the Gaussian
// operators, the Hermite / shadow Hermite families and the functional L.

#include <map>
#include <string>
#include <vector>

#include "qgue/exactq.hpp"

namespace qgue {

class XPoly {
 public:
  static constexpr int kZeroDegree = -1;

  XPoly() = default;
  explicit XPoly(std::vector<Scalar> coefficients);

  static XPoly monomial(int n, const Scalar& c = Scalar(1));
  static XPoly constant(const Scalar& c) { return monomial(0, c); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == Scalar(1); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(int power) const;
  // Multiplicity of x as a factor; kZeroDegree for the zero polynomial.
  int lowest_power() const;

  Scalar evaluate(const Scalar& at) const;

  XPoly& operator+=(const XPoly& rhs);
  XPoly& operator-=(const XPoly& rhs);
  XPoly& operator*=(const Scalar& c);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(XPoly a, const Scalar& c) { return a *= c; }
  friend XPoly operator*(const Scalar& c, XPoly a) { return a *= c; }
  XPoly operator-() const;
  friend bool operator==(const XPoly&, const XPoly&) = default;

  // Descending powers, e.g. "x^4 + (1+q+2*q^2+q^3+q^4)*x^2 + (1+q+q^2)".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Degree-indexed coefficients of an expansion in some polynomial basis.
using DegreeMap = std::map<int, Scalar>;

/// D_q: x^n -> [n]_q x^{n-1}.
XPoly q_derivative(const XPoly& p);

enum class GaussianDirection {
  forward,  // E(-D_q^2/(1+q), q^2): x^n -> H_n
  inverse,  // e(D_q^2/(1+q), q^2):  x^n -> S_n
};
XPoly gaussian_op(const XPoly& p, GaussianDirection direction);

/// q-Hermite polynomial. Built from the closed coefficient formula and from
/// the three-term recurrence; throws std::logic_error if they disagree.
XPoly hermite(int n);
XPoly hermite_from_coefficients(int n);
XPoly hermite_from_recurrence(int n);

XPoly shadow_hermite(int n);

/// The part of S_{N+l} made of powers x^N and above.
XPoly truncated_shadow(int n_vars, int ell);

struct ShadowBasisExpansion {
  DegreeMap closed_form;  // transcribed closed-form coefficients
  DegreeMap direct;       // basis conversion through gaussian_op
};
/// Coefficients of T_{N,l} in the basis {S_j}, computed both ways.
ShadowBasisExpansion truncated_in_shadow_basis(int n_vars, int ell);
DegreeMap truncated_shadow_basis_closed_form(int n_vars, int ell);
/// Coefficients c_j with p = sum_j c_j S_j.
DegreeMap shadow_expand(const XPoly& p);

/// L(p): constant term of e(D_q^2/(1+q), q^2) p.
Scalar functional_L(const XPoly& p);
/// L(x^n) = M_q(n-1) for even n, 0 for odd n.
Scalar gaussian_moment(int n);

/// Coefficients a_k with p = sum_k a_k H_k.
DegreeMap hermite_expand(const XPoly& p);

}  // namespace qgue
