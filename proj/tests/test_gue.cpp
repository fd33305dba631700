#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qgue/closed_forms.hpp"
#include "qgue/genus.hpp"
#include "qgue/gue.hpp"

using namespace qgue;
using qgue::testing::P;
using qgue::testing::qi;

namespace {

Partition part(std::vector<int> p) { return Partition(std::move(p)); }

BigInt binomial(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt double_factorial(int n) {
  BigInt r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

BigInt classical_harer_zagier(int m, int s) {
  BigInt sum = 0;
  for (int k = 0; k <= std::min(m, s); ++k) sum += binomial(m, k) * binomial(s, k) * (BigInt(1) << k);
  return double_factorial(2 * m - 1) * sum;
}

}  // namespace

TEST(Normalization, Examples) {
  EXPECT_EQ(normalization(1), Scalar(1));
  EXPECT_EQ(normalization(2), Scalar(2));
  EXPECT_EQ(normalization(3), Scalar(6) * P({0, 1, 1}));
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(normalization(n), normalization_formula(n)) << n;
}

TEST(IntegrateSchur, Examples) {
  EXPECT_EQ(integrate_schur(part({2}), 1, Method::fast), Scalar(1));
  EXPECT_EQ(integrate_schur(part({2}), 1, Method::oracle), Scalar(1));
  EXPECT_EQ(integrate_schur(part({1, 1}), 2, Method::oracle), Scalar(-1));
  EXPECT_EQ(integrate_schur(part({1, 1}), 2, Method::fast), Scalar(-1));
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(integrate_schur(part({1}), n, Method::fast), Scalar()) << n;
}

TEST(IntegrateSchur, FastMatchesOracle) {
  for (int n = 1; n <= 3; ++n)
    for (int w = 0; w <= 6; ++w)
      for (const auto& kappa : partitions_of(w, n))
        EXPECT_EQ(integrate_schur(kappa, n, Method::fast), integrate_schur(kappa, n, Method::oracle))
            << kappa.to_string() << " N=" << n;
}

TEST(IntegrateSchur, OddWeightVanishes) {
  for (int n = 1; n <= 3; ++n)
    for (int w = 1; w <= 7; w += 2)
      for (const auto& kappa : partitions_of(w, n))
        EXPECT_EQ(integrate_schur(kappa, n, Method::fast), Scalar()) << kappa.to_string() << " N=" << n;
}

TEST(IntegrateSchur, ClosedFormNeedsEvenHook) {
  EXPECT_THROW(integrate_schur(part({2, 2}), 2, Method::closed_form), std::invalid_argument);
  EXPECT_THROW(integrate_schur(part({2, 1}), 2, Method::closed_form), std::invalid_argument);
  EXPECT_EQ(integrate_schur(part({1, 1}), 2, Method::closed_form), Scalar(-1));
}

TEST(IntegrateSymmetric, Examples) {
  SchurVector c(3);
  c.add(Partition(), P({2, 5}));
  EXPECT_EQ(integrate_symmetric(c), P({2, 5}));
  EXPECT_EQ(integrate_power_sum(2, 2, Method::fast), Scalar(1) + qi(3));
  EXPECT_EQ(integrate_power_sum(4, 2, Method::fast), qi(3) * (Scalar(1) + qi(5)));
  EXPECT_EQ(integrate_power_sum(4, 2, Method::oracle), qi(3) * (Scalar(1) + qi(5)));
}

TEST(IntegrateSymmetric, QEqualsOneLimits) {
  for (int n = 1; n <= 4; ++n) {
    const BigRat nn(n);
    EXPECT_EQ(evaluate_at(integrate_power_sum(2, n, Method::fast), BigRat(1)), nn * nn);
    EXPECT_EQ(evaluate_at(integrate_power_sum(4, n, Method::fast), BigRat(1)), 2 * nn * nn * nn + nn);
  }
}

TEST(LevelDensity, Examples) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(level_density_moment(XPoly::constant(Scalar(1)), n), Scalar(n));
  EXPECT_EQ(level_density_moment(XPoly::monomial(2), 2), Scalar(1) + qi(3));
  EXPECT_EQ(level_density_moment(XPoly::monomial(4), 2), qi(3) * (Scalar(1) + qi(5)));
}

TEST(LevelDensity, MatchesSchurRoute) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      EXPECT_EQ(level_density_moment(XPoly::monomial(2 * m), n),
                integrate_symmetric(to_schur_vector(hook_decomposition(m, n), n)))
          << m << " N=" << n;
}

TEST(HermiteSquared, Examples) {
  EXPECT_EQ(hermite_squared_moment(1, 1), qi(3));
  for (int s = 0; s <= 5; ++s)
    EXPECT_EQ(hermite_squared_moment(0, s), Scalar::q_power(s * (s - 1) / 2) * q_factorial(s)) << s;
  EXPECT_EQ(hermite_squared_moment(1, 2), qi(5) * qi(3) - Scalar(2) * qi(3) + Scalar(1));
}

TEST(HermiteSquared, ExtractionRouteAgrees) {
  for (int m = 0; m <= 4; ++m)
    for (int s = 0; s <= 4; ++s)
      EXPECT_EQ(hermite_squared_moment(m, s), hermite_squared_moment_by_extraction(m, s)) << m << "," << s;
}

TEST(HermiteSquared, ClassicalLimit) {
  for (int m = 0; m <= 6; ++m)
    for (int s = 0; s <= 6; ++s) {
      BigRat lhs = evaluate_at(hermite_squared_moment(m, s), BigRat(1));
      BigInt s_factorial = 1;
      for (int k = 2; k <= s; ++k) s_factorial *= k;
      lhs /= BigRat(s_factorial);
      EXPECT_EQ(lhs, BigRat(classical_harer_zagier(m, s))) << m << "," << s;
      if (m >= 1) EXPECT_EQ(evaluate_at(q_harer_zagier_rhs(m, s), BigRat(1)), lhs) << m << "," << s;
    }
}

TEST(ClosedForms, HookMomentTranscription) {
  EXPECT_EQ(hook_moment_closed_form(0, 1, 2), Scalar(-1));
  EXPECT_EQ(hook_moment_closed_form(1, 1, 1), Scalar(-1));
  EXPECT_EQ(hook_moment_closed_form(3, 2, 1), -m_q(3));
  EXPECT_THROW(hook_moment_closed_form(2, 1, 1), std::invalid_argument);
}

TEST(ClosedForms, SigmaAndP2mTranscription) {
  EXPECT_EQ(p2m_closed_form(1, 1), Scalar(1));
  EXPECT_EQ(p2m_closed_form(1, 2), P({0, 1, 1}));
  EXPECT_EQ(sigma_closed_form(1, 1, 1), Scalar());
  for (int m = 1; m <= 3; ++m)
    for (int t = 0; t <= m; ++t)
      for (int n = 1; n <= 4; ++n) EXPECT_EQ(sigma_closed_form(m, t, n), sigma_difference_form(m, t, n));
}

TEST(ClosedForms, HermiteSquareTranscription) {
  EXPECT_EQ(hermite_square_closed_form(1, 1), P({-1, 1}));
  EXPECT_EQ(hermite_square_closed_form(1, 0), Scalar());  // [0, 1]_q kills the only term
  EXPECT_EQ(hermite_squared_moment(1, 1) / hermite_square_printed_normalization(1), qi(3) / P({0, 1, 1}));
  // s + 2 + 2t = m only where [s+2t, 2m-1]_q already vanishes
  for (int m = 1; m <= 8; ++m)
    for (int s = 0; s <= 8; ++s) EXPECT_NO_THROW(hermite_square_closed_form(m, s)) << m << "," << s;
}

TEST(ClosedForms, QHarerZagier) {
  EXPECT_EQ(evaluate_at(q_harer_zagier_rhs(1, 1), BigRat(1)), BigRat(3));
  EXPECT_EQ(evaluate_at(q_harer_zagier_rhs(2, 1), BigRat(1)), BigRat(15));
  for (int m = 1; m <= 4; ++m) {
    EXPECT_EQ(q_harer_zagier_rhs(m, 0), m_q(2 * m - 1));
    EXPECT_EQ(q_harer_zagier_rhs(m, 0), hermite_squared_moment(m, 0));
  }
  for (int m = 1; m <= 3; ++m)
    for (int s = 0; s <= 3; ++s)
      EXPECT_EQ(q_harer_zagier_normalization(s) * q_harer_zagier_rhs(m, s), hermite_squared_moment(m, s));
}

TEST(ClosedForms, HookValueFromTruncationUpToSign) {
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i < n; ++i)
      for (int ell = 0; ell + 1 + i <= 6; ++ell) {
        const Scalar a = hook_value_from_truncation(n, ell, i);
        const Scalar b = sigma_at_zero(Partition::hook(ell, i), n);
        EXPECT_TRUE(a == b || a == -b) << n << "," << ell << "," << i;
      }
}

TEST(MomentQuery, Dispatch) {
  MomentQuery q;
  q.kind = MomentQuery::Kind::power_sum;
  q.degree = 2;
  q.n_vars = 2;
  EXPECT_EQ(evaluate(q), P({2, 1, 1}));
  q.method = Method::closed_form;
  EXPECT_EQ(evaluate(q), P({0, 1, 1}));
  q.kind = MomentQuery::Kind::hermite_squared;
  q.m = 2;
  q.s = 2;
  for (Method m : {Method::fast, Method::oracle, Method::closed_form}) {
    q.method = m;
    EXPECT_EQ(evaluate(q), hermite_squared_moment(2, 2));
  }
  EXPECT_EQ(parse_method("closed"), Method::closed_form);
  EXPECT_THROW(parse_method("slow"), std::invalid_argument);
}

TEST(Genus, Interpolation) {
  const QPolynomial p = interpolate({BigRat(1), BigRat(2), BigRat(3)}, {BigRat(1), BigRat(4), BigRat(9)});
  EXPECT_EQ(p, QPolynomial::monomial(BigRat(1), 2));
}

TEST(Genus, CountsAndPairingOracle) {
  EXPECT_EQ(genus_counts_from_moments(1), (std::vector<BigInt>{1}));
  EXPECT_EQ(genus_counts_from_moments(2), (std::vector<BigInt>{2, 1}));
  EXPECT_EQ(genus_counts_from_moments(3), (std::vector<BigInt>{5, 10}));
  for (int m = 1; m <= 5; ++m) {
    const auto counts = genus_counts_from_pairings(m);
    EXPECT_EQ(counts, genus_counts_from_moments(m)) << m;
    BigInt total = 0;
    for (const auto& c : counts) total += c;
    EXPECT_EQ(total, double_factorial(2 * m - 1));
  }
}

TEST(Genus, TableBounds) {
  EXPECT_EQ(genus_table(3).size(), 3u);
  EXPECT_THROW(genus_table(7), std::invalid_argument);
  EXPECT_THROW(genus_table(0), std::invalid_argument);
}
