#pragma once

// Exact arithmetic over the rational function field Q(q) and the
// q-combinatorial quantities built on it.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgue/errors.hpp"

namespace qgue {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Dense univariate polynomial with rational coefficients, indexed by power.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is
/// the empty vector and has degree -1.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigRat> coefficients);

  static QPolynomial constant(const BigRat& c);
  static QPolynomial monomial(const BigRat& c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  std::size_t term_count() const;

  const std::vector<BigRat>& coefficients() const { return coeffs_; }
  BigRat coefficient(int power) const;
  const BigRat& leading() const;
  // Smallest power with a nonzero coefficient; -1 for the zero polynomial.
  int lowest_power() const;

  BigRat evaluate(const BigRat& at) const;
  // p(q) -> p(q^k), k >= 1.
  QPolynomial substitute_power(int k) const;
  QPolynomial monic() const;
  QPolynomial shifted(int k) const;  // multiply by q^k, k >= 0

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  QPolynomial& operator*=(const BigRat& c);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(QPolynomial a, const BigRat& c) { return a *= c; }
  QPolynomial operator-() const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  // Euclidean division; throws std::domain_error on a zero divisor.
  static std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a,
                                                    const QPolynomial& b);
  // Quotient of an exact division; throws std::logic_error on a remainder.
  static QPolynomial divide_exact(const QPolynomial& a, const QPolynomial& b);

  std::string to_string(char var = 'q') const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
QPolynomial gcd(QPolynomial a, QPolynomial b);

/// ±q^j, the shape every printed-formula erratum is expected to take.
struct SignedQPower {
  int sign = 1;
  int power = 0;
  friend bool operator==(const SignedQPower&, const SignedQPower&) = default;
};

/// An element of Q(q) in canonical form: gcd(num, den) = 1 and den monic.
/// Equality of canonical forms is field equality.
class Scalar {
 public:
  Scalar() : den_(QPolynomial::constant(1)) {}
  Scalar(long long v);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const BigRat& v);
  explicit Scalar(QPolynomial num);
  Scalar(QPolynomial num, QPolynomial den);

  // q^j for any integer j.
  static Scalar q_power(int j);
  static Scalar q() { return q_power(1); }

  const QPolynomial& num() const { return num_; }
  const QPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }

  Scalar inverse() const;
  Scalar pow(int e) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

  // Some (sign, j) with *this == sign * q^j, if one exists.
  std::optional<SignedQPower> as_signed_q_power() const;

  // Ascending-power canonical string: "1+q+q^2", "q^2/(1+q^2)".
  std::string to_string() const;

 private:
  void canonicalize();
  QPolynomial num_;
  QPolynomial den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

/// Which base a q-analog is taken in: q or q^2.
enum class Base { plain, squared };

/// Which of the two exponential series: e (no q-power) or E (with q^{C(k,2)}).
enum class Series { e, E };

/// [n]_q or [n]_{q^2}.
Scalar q_integer(int n, Base base = Base::plain);
Scalar q_factorial(int n, Base base = Base::plain);
/// Gaussian binomial; zero outside 0 <= k <= n.
Scalar q_binomial(int n, int k, Base base = Base::plain);
/// [n]_q [n-2]_q [n-4]_q ... over positive factors; 1 for n <= 0.
Scalar m_q(int n);
/// Coefficient of x^k in e(x, base) or E(x, base).
Scalar series_coefficient(int k, Series which, Base base = Base::plain);

/// Specializes q := at. Throws PoleError when the reduced denominator
/// vanishes there.
BigRat evaluate_at(const Scalar& s, const BigRat& at);

// Parses "3", "-2/7"; throws std::invalid_argument otherwise.
BigRat parse_rational(const std::string& text);
std::string to_string(const BigRat& r);

}  // namespace qgue
