#include "qgue/latex.hpp"

#include <map>
#include <sstream>

namespace qgue {

namespace {

std::string rational_latex(const BigRat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string power_latex(int j) {
  if (j == 0) return "";
  if (j == 1) return "q";
  return "q^{" + std::to_string(j) + "}";
}

QPolynomial q_integer_poly(int n) { return QPolynomial(std::vector<BigRat>(static_cast<std::size_t>(n), BigRat(1))); }

struct Factored {
  BigRat unit = 1;
  int q_exponent = 0;
  std::map<int, int, std::greater<>> brackets;  // n -> multiplicity
  QPolynomial rest = QPolynomial::constant(1);
};

Factored factor(QPolynomial p) {
  Factored f;
  f.q_exponent = p.lowest_power();
  QPolynomial body(std::vector<BigRat>(p.coefficients().begin() + f.q_exponent, p.coefficients().end()));
  f.unit = body.leading();
  body = body.monic();
  for (int n = body.degree() + 1; n >= 2; --n) {
    const QPolynomial qn = q_integer_poly(n);
    for (;;) {
      if (body.degree() < qn.degree()) break;
      auto [quot, rem] = QPolynomial::divmod(body, qn);
      if (!rem.is_zero()) break;
      body = quot;
      ++f.brackets[n];
    }
  }
  f.rest = body;
  return f;
}

// standalone: the result is not juxtaposed with anything, so a lone
// multi-term factor needs no parentheses.
std::string factors_latex(const Factored& f, bool standalone) {
  std::vector<std::string> parts;
  if (f.q_exponent) parts.push_back(power_latex(f.q_exponent));
  for (const auto& [n, mult] : f.brackets)
    parts.push_back("[" + std::to_string(n) + "]_q" + (mult > 1 ? "^{" + std::to_string(mult) + "}" : ""));
  if (!f.rest.is_one()) {
    const std::string r = to_latex(f.rest);
    const bool bare = parts.empty() && (standalone || f.rest.term_count() == 1);
    parts.push_back(bare ? r : "(" + r + ")");
  }
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " " + parts[i];
  return out;
}

}  // namespace

std::string to_latex(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigRat& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigRat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << rational_latex(mag);
    } else {
      if (mag != 1) os << rational_latex(mag);
      os << power_latex(k);
    }
  }
  return os.str();
}

std::string to_latex(const Scalar& s) {
  if (s.is_zero()) return "0";
  const Factored num = factor(s.num());
  const Factored den = factor(s.den());
  // den is monic, so den.unit is 1; the overall sign and magnitude live in num.unit.
  const BigRat unit = num.unit / den.unit;
  std::string sign = unit < 0 ? "-" : "";
  const BigRat mag = abs(unit);
  if (den.q_exponent == 0 && den.brackets.empty() && den.rest.is_one()) {
    std::string body = factors_latex(num, mag == 1 && unit > 0);
    if (mag != 1) body = rational_latex(mag) + (body == "1" ? "" : " " + body);
    return sign + body;
  }
  std::string numerator = factors_latex(num, mag.get_num() == 1);
  if (mag.get_num() != 1) numerator = mag.get_num().get_str() + (numerator == "1" ? "" : " " + numerator);
  std::string denominator = factors_latex(den, mag.get_den() == 1);
  if (mag.get_den() != 1) denominator = mag.get_den().get_str() + (denominator == "1" ? "" : " " + denominator);
  return sign + "\\frac{" + numerator + "}{" + denominator + "}";
}

}  // namespace qgue
