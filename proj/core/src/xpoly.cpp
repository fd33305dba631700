#include "qgue/xpoly.hpp"

#include <stdexcept>

namespace qgue {

XPoly::XPoly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

XPoly XPoly::monomial(int n, const Scalar& c) {
  if (n < 0) throw std::invalid_argument("XPoly::monomial: negative power");
  XPoly p;
  if (!c.is_zero()) {
    p.coeffs_.assign(static_cast<std::size_t>(n) + 1, Scalar());
    p.coeffs_.back() = c;
  }
  return p;
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar XPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) return Scalar();
  return coeffs_[static_cast<std::size_t>(power)];
}

int XPoly::lowest_power() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  return kZeroDegree;
}

Scalar XPoly::evaluate(const Scalar& at) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return XPoly(std::move(out));
}

XPoly XPoly::operator-() const {
  XPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string XPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    std::string power = d == 0 ? "" : (d == 1 ? "x" : "x^" + std::to_string(d));
    std::string cs = c.to_string();
    bool negative = false;
    if (c.is_constant() && cs.front() == '-') {
      negative = true;
      cs.erase(0, 1);
    }
    const bool compound = !c.is_constant();
    std::string term;
    if (d == 0) term = compound ? "(" + cs + ")" : cs;
    else if (cs == "1") term = power;
    else term = (compound ? "(" + cs + ")" : cs) + "*" + power;
    if (out.empty()) out = (negative ? "-" : "") + term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

XPoly q_derivative(const XPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Scalar> out(static_cast<std::size_t>(p.degree()));
  for (int n = 1; n <= p.degree(); ++n) out[static_cast<std::size_t>(n - 1)] = p.coefficient(n) * q_integer(n);
  return XPoly(std::move(out));
}

namespace {

// (D_q^2 / (1+q)) p
XPoly half_laplacian(const XPoly& p) {
  const Scalar inv = Scalar(1) / q_integer(2);
  return q_derivative(q_derivative(p)) * inv;
}

}  // namespace

XPoly gaussian_op(const XPoly& p, GaussianDirection direction) {
  XPoly result;
  XPoly power = p;
  for (int k = 0; !power.is_zero(); ++k) {
    Scalar c = direction == GaussianDirection::forward
                   ? series_coefficient(k, Series::E, Base::squared)
                   : series_coefficient(k, Series::e, Base::squared);
    if (direction == GaussianDirection::forward && k % 2 == 1) c = -c;
    result += power * c;
    power = half_laplacian(power);
  }
  return result;
}

XPoly hermite_from_coefficients(int n) {
  if (n < 0) throw std::invalid_argument("hermite: n must be nonnegative");
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; 2 * k <= n; ++k) {
    Scalar term = q_binomial(n, 2 * k) * m_q(2 * k - 1) * Scalar::q_power(k * (k - 1));
    c[static_cast<std::size_t>(n - 2 * k)] = k % 2 == 0 ? term : -term;
  }
  return XPoly(std::move(c));
}

XPoly hermite_from_recurrence(int n) {
  if (n < 0) throw std::invalid_argument("hermite: n must be nonnegative");
  XPoly prev;  // H_{-1} = 0
  XPoly cur = XPoly::constant(1);
  const XPoly x = XPoly::monomial(1);
  for (int k = 0; k < n; ++k) {
    // H_{k+1} = x H_k - q^{k-1} [k]_q H_{k-1}
    XPoly next = x * cur;
    if (k > 0) next -= prev * (Scalar::q_power(k - 1) * q_integer(k));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

XPoly hermite(int n) {
  XPoly by_formula = hermite_from_coefficients(n);
  if (by_formula != hermite_from_recurrence(n))
    throw std::logic_error("hermite: coefficient formula and recurrence disagree at n = " + std::to_string(n));
  return by_formula;
}

XPoly shadow_hermite(int n) {
  if (n < 0) throw std::invalid_argument("shadow_hermite: n must be nonnegative");
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; 2 * k <= n; ++k)
    c[static_cast<std::size_t>(n - 2 * k)] = q_binomial(n, 2 * k) * m_q(2 * k - 1);
  return XPoly(std::move(c));
}

XPoly truncated_shadow(int n_vars, int ell) {
  if (n_vars < 1 || ell < 1) throw std::invalid_argument("truncated_shadow: N and l must be positive");
  const int top = n_vars + ell;
  std::vector<Scalar> c(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= ell / 2; ++k)
    c[static_cast<std::size_t>(top - 2 * k)] = q_binomial(top, 2 * k) * m_q(2 * k - 1);
  return XPoly(std::move(c));
}

DegreeMap shadow_expand(const XPoly& p) {
  DegreeMap out;
  const XPoly converted = gaussian_op(p, GaussianDirection::forward);
  for (int d = 0; d <= converted.degree(); ++d)
    if (!converted.coefficient(d).is_zero()) out.emplace(d, converted.coefficient(d));
  return out;
}

DegreeMap truncated_shadow_basis_closed_form(int n_vars, int ell) {
  if (n_vars < 1 || ell < 1) throw std::invalid_argument("truncated_shadow: N and l must be positive");
  const int top = n_vars + ell;
  const int half = ell / 2;
  DegreeMap out;
  out.emplace(top, Scalar(1));
  // p runs over ceil((l+1)/2) .. floor((N+l)/2)
  for (int p = (ell + 2) / 2; 2 * p <= top; ++p) {
    const int shift = p - half;
    Scalar c = Scalar::q_power((shift - 1) * (shift - 2)) * q_binomial(top, 2 * p) *
               q_binomial(p - 1, p - half - 1, Base::squared) * m_q(2 * p - 1);
    if (shift % 2 != 0) c = -c;
    if (!c.is_zero()) out[top - 2 * p] += c;
  }
  return out;
}

ShadowBasisExpansion truncated_in_shadow_basis(int n_vars, int ell) {
  return {truncated_shadow_basis_closed_form(n_vars, ell), shadow_expand(truncated_shadow(n_vars, ell))};
}

Scalar functional_L(const XPoly& p) {
  return gaussian_op(p, GaussianDirection::inverse).coefficient(0);
}

Scalar gaussian_moment(int n) {
  if (n < 0) throw std::invalid_argument("gaussian_moment: n must be nonnegative");
  return functional_L(XPoly::monomial(n));
}

DegreeMap hermite_expand(const XPoly& p) {
  DegreeMap out;
  const XPoly converted = gaussian_op(p, GaussianDirection::inverse);
  for (int d = 0; d <= converted.degree(); ++d)
    if (!converted.coefficient(d).is_zero()) out.emplace(d, converted.coefficient(d));
  return out;
}

}  // namespace qgue
