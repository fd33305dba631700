#include "qgue/symschur.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "json.hpp"

namespace qgue {

// ---------------------------------------------------------------------------
// MonomialMap

MonomialMap::MonomialMap(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 1) throw std::invalid_argument("MonomialMap: need at least one variable");
}

MonomialMap MonomialMap::constant(int n_vars, const Scalar& c) {
  MonomialMap m(n_vars);
  m.add_term(Exponents(static_cast<std::size_t>(n_vars), 0), c);
  return m;
}

MonomialMap MonomialMap::from_univariate(const XPoly& p, int var, int n_vars) {
  if (var < 0 || var >= n_vars) throw std::out_of_range("MonomialMap::from_univariate: bad variable index");
  MonomialMap m(n_vars);
  Exponents e(static_cast<std::size_t>(n_vars), 0);
  for (int d = 0; d <= p.degree(); ++d) {
    e[static_cast<std::size_t>(var)] = d;
    m.add_term(e, p.coefficient(d));
  }
  return m;
}

Scalar MonomialMap::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

int MonomialMap::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

void MonomialMap::add_term(const Exponents& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != n_vars_) throw std::invalid_argument("MonomialMap: exponent tuple has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MonomialMap& MonomialMap::operator+=(const MonomialMap& rhs) {
  if (rhs.n_vars_ != n_vars_) throw std::invalid_argument("MonomialMap: variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MonomialMap& MonomialMap::operator-=(const MonomialMap& rhs) {
  if (rhs.n_vars_ != n_vars_) throw std::invalid_argument("MonomialMap: variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MonomialMap& MonomialMap::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MonomialMap operator*(const MonomialMap& a, const MonomialMap& b) {
  if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("MonomialMap: variable count mismatch");
  MonomialMap out(a.n_vars_);
  Exponents e(static_cast<std::size_t>(a.n_vars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MonomialMap MonomialMap::divide_exact(const MonomialMap& a, const MonomialMap& b) {
  if (b.is_zero()) throw std::domain_error("MonomialMap::divide_exact: division by zero");
  if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("MonomialMap: variable count mismatch");
  MonomialMap rem = a;
  MonomialMap quot(a.n_vars_);
  const auto& [lead_exp, lead_coeff] = *b.terms_.rbegin();
  const Scalar inv_lead = lead_coeff.inverse();
  Exponents shift(static_cast<std::size_t>(a.n_vars_));
  Exponents e(shift.size());
  while (!rem.is_zero()) {
    const auto [top_exp, top_coeff] = *rem.terms_.rbegin();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = top_exp[i] - lead_exp[i];
      if (shift[i] < 0) throw std::logic_error("MonomialMap::divide_exact: divisor does not divide");
    }
    const Scalar c = top_coeff * inv_lead;
    quot.add_term(shift, c);
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = eb[i] + shift[i];
      rem.add_term(e, -(c * cb));
    }
  }
  return quot;
}

std::string MonomialMap::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = c.is_constant() ? c.to_string() : "(" + c.to_string() + ")";
    std::string term;
    if (mono.empty()) term = cs;
    else if (cs == "1") term = mono;
    else if (cs == "-1") term = "-" + mono;
    else term = cs + "*" + mono;
    if (!out.empty()) out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out;
}

namespace {

// det(h_j(x_i)) where column j uses the univariate polynomial columns[j]:
// sum over permutations of sgn * prod_i columns[sigma(i)](x_i).
MonomialMap alternant(const std::vector<XPoly>& columns) {
  const int n = static_cast<int>(columns.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  MonomialMap total(n);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    MonomialMap term = MonomialMap::constant(n, Scalar(inversions % 2 == 0 ? 1 : -1));
    for (int i = 0; i < n; ++i)
      term = term * MonomialMap::from_univariate(columns[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])], i, n);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

void require_shape(const Partition& kappa, int n_vars, const char* who) {
  if (n_vars < 1) throw std::invalid_argument(std::string(who) + ": need at least one variable");
  if (kappa.length() > n_vars)
    throw ShapeError(std::string(who) + ": partition " + kappa.to_string() + " has more than " +
                     std::to_string(n_vars) + " parts");
}

}  // namespace

MonomialMap vandermonde(int n_vars) {
  std::vector<XPoly> columns;
  for (int j = 0; j < n_vars; ++j) columns.push_back(XPoly::monomial(n_vars - 1 - j));
  return alternant(columns);
}

MonomialMap power_sum_monomials(int k, int n_vars) {
  if (k < 0) throw std::invalid_argument("power_sum_monomials: negative degree");
  MonomialMap m(n_vars);
  for (int i = 0; i < n_vars; ++i) m += MonomialMap::from_univariate(XPoly::monomial(k), i, n_vars);
  return m;
}

// ---------------------------------------------------------------------------
// PolyFamily

XPoly PolyFamily::operator()(int n) const {
  XPoly p = generator(n);
  if (p.degree() != n || !p.is_monic())
    throw std::invalid_argument("PolyFamily " + name + ": member " + std::to_string(n) + " is not monic of degree " +
                                std::to_string(n));
  return p;
}

PolyFamily PolyFamily::monomials() {
  return {"monomial", [](int n) { return XPoly::monomial(n); }};
}

PolyFamily PolyFamily::hermite() {
  return {"hermite", [](int n) { return qgue::hermite(n); }};
}

PolyFamily PolyFamily::shadow() {
  return {"shadow", [](int n) { return shadow_hermite(n); }};
}

PolyFamily PolyFamily::shifted_powers() {
  return {"shifted_powers", [](int n) {
            XPoly p = XPoly::constant(1);
            const XPoly x_plus_one(std::vector<Scalar>{Scalar(1), Scalar(1)});
            for (int i = 0; i < n; ++i) p = p * x_plus_one;
            return p;
          }};
}

// ---------------------------------------------------------------------------
// SchurVector

Scalar SchurVector::coefficient(const Partition& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? Scalar() : it->second;
}

void SchurVector::add(const Partition& p, const Scalar& c) {
  if (p.length() > n_vars_)
    throw ShapeError("SchurVector: partition " + p.to_string() + " exceeds " + std::to_string(n_vars_) + " variables");
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

std::string SchurVector::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [p, c] : entries_) j[p.to_string()] = c.to_string();
  return j.dump();
}

// ---------------------------------------------------------------------------
// Determinants and the family expansion

Scalar determinant(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return Scalar(1);
  int sign = 1;
  Scalar prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return Scalar();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = Scalar();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

MonomialMap schur_monomials(const Partition& kappa, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("schur_monomials: N must be positive");
  if (kappa.length() > n_vars) return MonomialMap(n_vars);
  std::vector<XPoly> columns;
  for (int j = 0; j < n_vars; ++j) columns.push_back(XPoly::monomial(kappa[j] + n_vars - 1 - j));
  return MonomialMap::divide_exact(alternant(columns), vandermonde(n_vars));
}

MonomialMap family_polynomial(const PolyFamily& family, const Partition& kappa, int n_vars) {
  require_shape(kappa, n_vars, "family_polynomial");
  std::vector<XPoly> columns;
  for (int j = 0; j < n_vars; ++j) columns.push_back(family(kappa[j] + n_vars - 1 - j));
  return MonomialMap::divide_exact(alternant(columns), vandermonde(n_vars));
}

namespace {

Scalar coefficient_determinant(const std::vector<XPoly>& members, const Partition& kappa, const Partition& lambda,
                               int n_vars) {
  std::vector<std::vector<Scalar>> c(static_cast<std::size_t>(n_vars), std::vector<Scalar>(static_cast<std::size_t>(n_vars)));
  for (int j = 0; j < n_vars; ++j)
    for (int l = 0; l < n_vars; ++l)
      c[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] =
          members[static_cast<std::size_t>(kappa[l] + n_vars - 1 - l)].coefficient(lambda[j] + n_vars - 1 - j);
  return determinant(std::move(c));
}

std::vector<XPoly> family_members(const PolyFamily& family, int top) {
  std::vector<XPoly> members;
  for (int n = 0; n <= top; ++n) members.push_back(family(n));
  return members;
}

}  // namespace

Scalar family_coefficient(const PolyFamily& family, const Partition& kappa, const Partition& lambda, int n_vars) {
  require_shape(kappa, n_vars, "family_coefficient");
  require_shape(lambda, n_vars, "family_coefficient");
  return coefficient_determinant(family_members(family, kappa[0] + n_vars - 1), kappa, lambda, n_vars);
}

SchurVector family_expand(const PolyFamily& family, const Partition& kappa, int n_vars) {
  require_shape(kappa, n_vars, "family_expand");
  const auto members = family_members(family, kappa[0] + n_vars - 1);
  SchurVector out(n_vars);
  for (const Partition& lambda : partitions_inside(kappa))
    out.add(lambda, coefficient_determinant(members, kappa, lambda, n_vars));
  return out;
}

Scalar sigma_at_zero(const Partition& kappa, int n_vars) {
  return family_coefficient(PolyFamily::shadow(), kappa, Partition(), n_vars);
}

std::vector<SignedPartition> power_sum_hooks(int k, int n_vars) {
  if (k < 1) throw std::invalid_argument("power_sum_hooks: degree must be positive");
  std::vector<SignedPartition> out;
  for (int i = 0; i < k && i + 1 <= n_vars; ++i)
    out.push_back({i % 2 == 0 ? 1 : -1, Partition::hook(k - 1 - i, i)});
  return out;
}

std::vector<SignedPartition> hook_decomposition(int m, int n_vars) {
  if (m < 1) throw std::invalid_argument("hook_decomposition: m must be positive");
  return power_sum_hooks(2 * m, n_vars);
}

SchurVector to_schur_vector(const std::vector<SignedPartition>& terms, int n_vars) {
  SchurVector v(n_vars);
  for (const auto& t : terms) v.add(t.partition, Scalar(t.sign));
  return v;
}

// ---------------------------------------------------------------------------
// Oracle functionals

UnivariateFunctional gaussian_functional() {
  return [](int n) { return gaussian_moment(n); };
}

Scalar apply_M0(const MonomialMap& f, const UnivariateFunctional& functional) {
  // The same functional acts in every coordinate, so monomials that differ by
  // a permutation of exponents contribute the same product.
  std::map<Exponents, Scalar> grouped;
  int max_exp = 0;
  for (const auto& [e, c] : f.terms()) {
    Exponents sorted = e;
    std::sort(sorted.begin(), sorted.end());
    max_exp = std::max(max_exp, sorted.back());
    auto [it, inserted] = grouped.try_emplace(std::move(sorted), c);
    if (!inserted) it->second += c;
  }
  std::vector<std::optional<Scalar>> moments(static_cast<std::size_t>(max_exp) + 1);
  auto moment = [&](int n) -> const Scalar& {
    auto& slot = moments[static_cast<std::size_t>(n)];
    if (!slot) slot = functional(n);
    return *slot;
  };
  Scalar total;
  for (const auto& [e, c] : grouped) {
    if (c.is_zero()) continue;
    Scalar term = c;
    for (int n : e) {
      const Scalar& mo = moment(n);
      if (mo.is_zero()) {
        term = Scalar();
        break;
      }
      term *= mo;
    }
    total += term;
  }
  return total;
}

Scalar apply_M2(const MonomialMap& f, const UnivariateFunctional& functional) {
  const int n = f.n_vars();
  if (n > kOracleMaxVars)
    throw SizeError("oracle guardrail: N = " + std::to_string(n) + " exceeds the limit of " +
                    std::to_string(kOracleMaxVars) + " variables");
  const int degree = f.total_degree() + n * (n - 1);
  if (degree > kOracleMaxDegree)
    throw SizeError("oracle guardrail: total degree of f*V^2 is " + std::to_string(degree) + ", limit is " +
                    std::to_string(kOracleMaxDegree));
  if (f.is_zero()) return Scalar();
  const MonomialMap v = vandermonde(n);
  return apply_M0(f * (v * v), functional);
}

Scalar generalized_binomial(const Partition& lambda, const Partition& kappa, int n_vars) {
  return family_coefficient(PolyFamily::shifted_powers(), lambda, kappa, n_vars);
}

}  // namespace qgue
