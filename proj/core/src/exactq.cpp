#include "qgue/exactq.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

namespace qgue {

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(std::vector<BigRat> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

QPolynomial QPolynomial::constant(const BigRat& c) { return monomial(c, 0); }

QPolynomial QPolynomial::monomial(const BigRat& c, int power) {
  if (power < 0) throw std::invalid_argument("QPolynomial::monomial: negative power");
  QPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(power) + 1, BigRat(0));
    p.coeffs_.back() = c;
  }
  return p;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t QPolynomial::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return c != 0; }));
}

BigRat QPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

const BigRat& QPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

int QPolynomial::lowest_power() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

BigRat QPolynomial::evaluate(const BigRat& at) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

QPolynomial QPolynomial::substitute_power(int k) const {
  if (k < 1) throw std::invalid_argument("substitute_power: k must be positive");
  if (is_zero()) return {};
  QPolynomial out;
  out.coeffs_.assign(static_cast<std::size_t>(degree()) * k + 1, BigRat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * k] = coeffs_[i];
  return out;
}

QPolynomial QPolynomial::monic() const {
  if (is_zero()) return {};
  QPolynomial out = *this;
  const BigRat inv = 1 / leading();
  return out *= inv;
}

QPolynomial QPolynomial::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  QPolynomial out;
  out.coeffs_.assign(static_cast<std::size_t>(k), BigRat(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

namespace {

// Common denominator of all coefficients.
BigInt denominator_lcm(const std::vector<BigRat>& c) {
  BigInt l = 1;
  for (const auto& v : c)
    if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

std::vector<BigInt> scaled_numerators(const std::vector<BigRat>& c, const BigInt& l) {
  std::vector<BigInt> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (l == 1) {
      out[i] = c[i].get_num();
    } else {
      mpz_divexact(out[i].get_mpz_t(), l.get_mpz_t(), c[i].get_den_mpz_t());
      out[i] *= c[i].get_num();
    }
  }
  return out;
}

}  // namespace

// Multiplies over Z after clearing denominators; mpq arithmetic would
// renormalize on every operation.
QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  const BigInt la = denominator_lcm(a.coeffs_);
  const BigInt lb = denominator_lcm(b.coeffs_);
  const std::vector<BigInt> za = scaled_numerators(a.coeffs_, la);
  const std::vector<BigInt> zb = scaled_numerators(b.coeffs_, lb);
  std::vector<BigInt> acc(za.size() + zb.size() - 1);
  for (std::size_t i = 0; i < za.size(); ++i) {
    if (za[i] == 0) continue;
    for (std::size_t j = 0; j < zb.size(); ++j) mpz_addmul(acc[i + j].get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
  }
  const BigInt l = la * lb;
  out.coeffs_.resize(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    out.coeffs_[k] = BigRat(acc[k], l);
    if (l != 1) out.coeffs_[k].canonicalize();
  }
  out.trim();
  return out;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) { return *this = *this * rhs; }

QPolynomial& QPolynomial::operator*=(const BigRat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("QPolynomial::divmod: division by zero");
  QPolynomial rem = a;
  QPolynomial quot;
  if (a.degree() < b.degree()) return {quot, rem};
  quot.coeffs_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigRat(0));
  const int db = b.degree();
  if (denominator_lcm(a.coeffs_) == 1 && denominator_lcm(b.coeffs_) == 1 &&
      (b.leading() == 1 || b.leading() == -1)) {
    // unit leading coefficient over Z: the whole division stays integral
    std::vector<BigInt> r = scaled_numerators(a.coeffs_, BigInt(1));
    const std::vector<BigInt> zb = scaled_numerators(b.coeffs_, BigInt(1));
    const bool negate = b.leading() == -1;
    BigInt c;
    for (int d = a.degree(); d >= db; --d) {
      c = r[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      if (negate) c = -c;
      quot.coeffs_[static_cast<std::size_t>(d - db)] = BigRat(c);
      for (int j = 0; j <= db; ++j)
        mpz_submul(r[static_cast<std::size_t>(d - db + j)].get_mpz_t(), c.get_mpz_t(),
                   zb[static_cast<std::size_t>(j)].get_mpz_t());
    }
    for (std::size_t k = 0; k < r.size(); ++k) rem.coeffs_[k] = BigRat(r[k]);
    rem.trim();
    quot.trim();
    return {quot, rem};
  }
  const BigRat inv_lead = 1 / b.leading();
  for (int d = rem.degree(); d >= db; --d) {
    const BigRat c = rem.coeffs_[static_cast<std::size_t>(d)] * inv_lead;
    if (c == 0) continue;
    quot.coeffs_[static_cast<std::size_t>(d - db)] = c;
    for (int j = 0; j <= db; ++j) rem.coeffs_[static_cast<std::size_t>(d - db + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
  }
  rem.trim();
  quot.trim();
  return {quot, rem};
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& a, const QPolynomial& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) throw std::logic_error("QPolynomial::divide_exact: nonzero remainder");
  return quot;
}

namespace {

std::string coefficient_text(const BigRat& c) { return c.get_str(); }

}  // namespace

std::string QPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigRat& c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = coefficient_text(c);
    } else {
      std::string power(1, var);
      if (i > 1) power += "^" + std::to_string(i);
      if (c == 1) term = power;
      else if (c == -1) term = "-" + power;
      else term = coefficient_text(c) + "*" + power;
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

namespace {

// Integer polynomials, ascending and trimmed, for the gcd.
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Primitive with positive leading coefficient.
void make_primitive(ZPoly& p) {
  trim(p);
  if (p.empty()) return;
  BigInt g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly primitive_integer_part(const QPolynomial& p) {
  BigInt l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c.get_num() * (l / c.get_den()));
  make_primitive(out);
  return out;
}

QPolynomial to_rational(const ZPoly& p) {
  std::vector<BigRat> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return QPolynomial(std::move(c));
}

// Exact division test over Z.
bool divides(const ZPoly& h, ZPoly a) {
  const std::size_t dh = h.size() - 1;
  BigInt quot;
  BigInt rem;
  while (!a.empty() && a.size() - 1 >= dh) {
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), a.back().get_mpz_t(), h.back().get_mpz_t());
    if (rem != 0) return false;
    const std::size_t shift = a.size() - 1 - dh;
    for (std::size_t i = 0; i <= dh; ++i) a[shift + i] -= quot * h[i];
    trim(a);
  }
  return a.empty();
}

BigInt max_norm(const ZPoly& p) {
  BigInt m = 0;
  for (const auto& c : p)
    if (abs(c) > m) m = abs(c);
  return m;
}

// Heuristic gcd: evaluate at a large integer, take the integer gcd and read
// the polynomial back off its balanced xi-adic digits; accepted only if it
// divides both inputs.
std::optional<ZPoly> heuristic_gcd(const ZPoly& a, const ZPoly& b) {
  BigInt xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    BigInt va = 0;
    BigInt vb = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) va = va * xi + *it;
    for (auto it = b.rbegin(); it != b.rend(); ++it) vb = vb * xi + *it;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    ZPoly h;
    const BigInt half = xi / 2;
    while (g != 0) {
      BigInt digit;
      mpz_fdiv_r(digit.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
      if (digit > half) digit -= xi;
      h.push_back(digit);
      g = (g - digit) / xi;
    }
    make_primitive(h);
    if (!h.empty() && divides(h, a) && divides(h, b)) return h;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), xi.get_mpz_t());
    mpz_sqrt(root.get_mpz_t(), root.get_mpz_t());
    xi = xi * root * 73794 / 27011;
  }
  return std::nullopt;
}

// Primitive polynomial remainder sequence.
ZPoly primitive_prs_gcd(ZPoly a, ZPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = a;
    const std::size_t db = b.size() - 1;
    while (!r.empty() && r.size() - 1 >= db) {
      const BigInt lead = r.back();
      const std::size_t shift = r.size() - 1 - db;
      for (auto& c : r) c *= b.back();
      for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= lead * b[i];
      trim(r);
    }
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return QPolynomial::constant(1);
  // common power of q first; it is cheap and common here
  const int shift = std::min(a.lowest_power(), b.lowest_power());
  ZPoly za = primitive_integer_part(a);
  ZPoly zb = primitive_integer_part(b);
  za.erase(za.begin(), za.begin() + shift);
  zb.erase(zb.begin(), zb.begin() + shift);
  ZPoly g;
  if (za.size() == 1 || zb.size() == 1) {
    g = {BigInt(1)};
  } else if (auto h = heuristic_gcd(za, zb)) {
    g = std::move(*h);
  } else {
    g = primitive_prs_gcd(std::move(za), std::move(zb));
  }
  return to_rational(g).monic().shifted(shift);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long long v) : num_(QPolynomial::constant(BigRat(static_cast<long>(v)))), den_(QPolynomial::constant(1)) {}

Scalar::Scalar(const BigRat& v) : num_(QPolynomial::constant(v)), den_(QPolynomial::constant(1)) {}

Scalar::Scalar(QPolynomial num) : num_(std::move(num)), den_(QPolynomial::constant(1)) {}

Scalar::Scalar(QPolynomial num, QPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPolynomial::constant(1);
    return;
  }
  if (!den_.is_constant()) {
    QPolynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = QPolynomial::divide_exact(num_, g);
      den_ = QPolynomial::divide_exact(den_, g);
    }
  }
  if (den_.leading() != 1) {
    const BigRat inv = 1 / den_.leading();
    num_ *= inv;
    den_ *= inv;
  }
}

Scalar Scalar::q_power(int j) {
  if (j >= 0) return Scalar(QPolynomial::monomial(1, j));
  Scalar s;
  s.num_ = QPolynomial::constant(1);
  s.den_ = QPolynomial::monomial(1, -j);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  Scalar s;
  s.num_ = den_;
  s.den_ = num_;
  s.canonicalize();
  return s;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = QPolynomial::constant(1);
    return *this;
  }
  const QPolynomial g = gcd(den_, rhs.den_);
  const QPolynomial da = QPolynomial::divide_exact(den_, g);
  const QPolynomial db = QPolynomial::divide_exact(rhs.den_, g);
  num_ = num_ * db + rhs.num_ * da;
  den_ = den_ * db;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = Scalar();
  if (is_polynomial() && rhs.is_polynomial()) {
    num_ *= rhs.num_;
    return *this;
  }
  // Cross-cancel so the product stays reduced without a full gcd.
  const QPolynomial g1 = gcd(num_, rhs.den_);
  const QPolynomial g2 = gcd(rhs.num_, den_);
  QPolynomial n = QPolynomial::divide_exact(num_, g1) * QPolynomial::divide_exact(rhs.num_, g2);
  QPolynomial d = QPolynomial::divide_exact(den_, g2) * QPolynomial::divide_exact(rhs.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

std::optional<SignedQPower> Scalar::as_signed_q_power() const {
  if (num_.term_count() != 1 || den_.term_count() != 1) return std::nullopt;
  const BigRat& c = num_.leading();
  if (c != 1 && c != -1) return std::nullopt;
  return SignedQPower{c > 0 ? 1 : -1, num_.degree() - den_.degree()};
}

std::string Scalar::to_string() const {
  if (is_polynomial()) return num_.to_string();
  auto wrap = [](const QPolynomial& p) {
    std::string s = p.to_string();
    if (p.term_count() > 1 || s.find('/') != std::string::npos) return "(" + s + ")";
    return s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// q-combinatorics

namespace {

QPolynomial q_integer_poly(int n, Base base) {
  if (n <= 0) return {};
  const int step = base == Base::squared ? 2 : 1;
  std::vector<BigRat> c(static_cast<std::size_t>((n - 1) * step + 1), BigRat(0));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i * step)] = 1;
  return QPolynomial(std::move(c));
}

// per-thread prefix products, one table per base
const QPolynomial& q_factorial_poly(int n, Base base) {
  thread_local std::vector<QPolynomial> cache[2];
  auto& table = cache[base == Base::plain ? 0 : 1];
  if (table.empty()) table.push_back(QPolynomial::constant(1));
  while (static_cast<int>(table.size()) <= n) {
    const int i = static_cast<int>(table.size());
    table.push_back(table.back() * q_integer_poly(i, base));
  }
  return table[static_cast<std::size_t>(n)];
}

}  // namespace

Scalar q_integer(int n, Base base) {
  if (n < 0) throw std::invalid_argument("q_integer: n must be nonnegative");
  return Scalar(q_integer_poly(n, base));
}

Scalar q_factorial(int n, Base base) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  return Scalar(q_factorial_poly(n, base));
}

Scalar q_binomial(int n, int k, Base base) {
  if (n < 0) throw std::invalid_argument("q_binomial: n must be nonnegative");
  if (k < 0 || k > n) return Scalar();
  k = std::min(k, n - k);
  // prod_{i=1..k} [n-k+i] / [k]!, kept polynomial by exact division.
  QPolynomial top = QPolynomial::constant(1);
  for (int i = 1; i <= k; ++i) top *= q_integer_poly(n - k + i, base);
  return Scalar(QPolynomial::divide_exact(top, q_factorial_poly(k, base)));
}

Scalar m_q(int n) {
  QPolynomial acc = QPolynomial::constant(1);
  for (int i = n; i > 0; i -= 2) acc *= q_integer_poly(i, Base::plain);
  return Scalar(std::move(acc));
}

Scalar series_coefficient(int k, Series which, Base base) {
  if (k < 0) throw std::invalid_argument("series_coefficient: k must be nonnegative");
  const Scalar inv_fact = Scalar(QPolynomial::constant(1), q_factorial_poly(k, base));
  if (which == Series::e) return inv_fact;
  const int half = k * (k - 1) / 2;
  return Scalar::q_power(base == Base::squared ? 2 * half : half) * inv_fact;
}

BigRat evaluate_at(const Scalar& s, const BigRat& at) {
  QPolynomial num = s.num();
  QPolynomial den = s.den();
  const QPolynomial linear({-at, BigRat(1)});
  while (!num.is_zero() && num.evaluate(at) == 0 && den.evaluate(at) == 0) {
    num = QPolynomial::divide_exact(num, linear);
    den = QPolynomial::divide_exact(den, linear);
  }
  const BigRat d = den.evaluate(at);
  if (d == 0) throw PoleError("pole at q = " + at.get_str() + " in " + s.to_string());
  BigRat r = num.evaluate(at) / d;
  r.canonicalize();
  return r;
}

BigRat parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = t.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string a = t.substr(0, slash);
  std::string b = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(a) || !valid_int(b)) throw std::invalid_argument("not a rational number: " + text);
  if (a[0] == '+') a.erase(0, 1);
  if (b[0] == '+') b.erase(0, 1);
  BigInt num(a), den(b);
  if (den == 0) throw std::invalid_argument("zero denominator in " + text);
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRat& r) { return r.get_str(); }

}  // namespace qgue
