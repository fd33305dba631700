#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "qgue/xpoly.hpp"

using namespace qgue;
using qgue::testing::P;
using qgue::testing::qi;

namespace {

XPoly x(int n, const Scalar& c = Scalar(1)) { return XPoly::monomial(n, c); }

XPoly random_xpoly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Scalar> c;
  for (int k = 0; k <= max_degree; ++k) c.push_back(P({coef(rng), coef(rng)}));
  return XPoly(std::move(c));
}

}  // namespace

TEST(XPoly, ArithmeticAndString) {
  const XPoly p = x(2) + x(1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ((p - p).degree(), XPoly::kZeroDegree);
  EXPECT_EQ((x(1) * x(2)), x(3));
  EXPECT_EQ(shadow_hermite(4).to_string(), "x^4 + (1+q+2*q^2+q^3+q^4)*x^2 + (1+q+q^2)");
  EXPECT_EQ(hermite(2).to_string(), "x^2 - 1");
  EXPECT_EQ(x(3).lowest_power(), 3);
  EXPECT_EQ((x(2) + x(1)).evaluate(Scalar(2)), Scalar(6));
}

TEST(QDerivative, Examples) {
  EXPECT_EQ(q_derivative(x(3)), x(2, qi(3)));
  EXPECT_TRUE(q_derivative(x(0)).is_zero());
  EXPECT_EQ(q_derivative(x(2) + x(1)), x(1, qi(2)) + x(0));
}

TEST(GaussianOp, Examples) {
  EXPECT_EQ(gaussian_op(x(2), GaussianDirection::forward), x(2) - x(0));
  EXPECT_EQ(gaussian_op(x(2), GaussianDirection::inverse), x(2) + x(0));
  EXPECT_EQ(gaussian_op(gaussian_op(x(5), GaussianDirection::forward), GaussianDirection::inverse), x(5));
}

TEST(GaussianOp, InverseUndoesForward) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const XPoly p = random_xpoly(rng, 20);
    EXPECT_EQ(gaussian_op(gaussian_op(p, GaussianDirection::forward), GaussianDirection::inverse), p);
    EXPECT_EQ(gaussian_op(gaussian_op(p, GaussianDirection::inverse), GaussianDirection::forward), p);
  }
}

TEST(Hermite, Examples) {
  EXPECT_EQ(hermite(0), x(0));
  EXPECT_EQ(hermite(2), x(2) - x(0));
  EXPECT_EQ(hermite(3), x(3) - x(1, qi(3)));
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(hermite(n), gaussian_op(x(n), GaussianDirection::forward));
}

TEST(Hermite, CoefficientFormulaMatchesRecurrence) {
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(hermite_from_coefficients(n), hermite_from_recurrence(n)) << n;
}

TEST(Hermite, QDerivativeLowersIndex) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(q_derivative(hermite(n)), hermite(n - 1) * qi(n)) << n;
    EXPECT_EQ(q_derivative(shadow_hermite(n)), shadow_hermite(n - 1) * qi(n)) << n;
  }
}

TEST(ShadowHermite, Examples) {
  EXPECT_EQ(shadow_hermite(0), x(0));
  EXPECT_EQ(shadow_hermite(2), x(2) + x(0));
  EXPECT_EQ(shadow_hermite(4), x(4) + x(2, P({1, 0, 1}) * qi(3)) + x(0, qi(3)));
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(shadow_hermite(n).coefficient(0), n % 2 ? Scalar() : m_q(n - 1));
}

TEST(TruncatedShadow, Examples) {
  EXPECT_EQ(truncated_shadow(1, 1), x(2));
  EXPECT_EQ(truncated_shadow(2, 2), x(4) + x(2, P({1, 0, 1}) * qi(3)));
  EXPECT_EQ(truncated_shadow(3, 1), x(4));
}

TEST(TruncatedShadow, DivisibleByXToTheN) {
  for (int n = 1; n <= 8; ++n) {
    for (int ell = 1; ell <= 6; ++ell) {
      const XPoly t = truncated_shadow(n, ell);
      EXPECT_GE(t.lowest_power(), n) << n << "," << ell;
      EXPECT_LE((shadow_hermite(n + ell) - t).degree(), n - 1) << n << "," << ell;
    }
  }
}

TEST(TruncatedShadow, ShadowBasisExamples) {
  const auto e11 = truncated_in_shadow_basis(1, 1);
  EXPECT_EQ(e11.direct, (DegreeMap{{2, Scalar(1)}, {0, Scalar(-1)}}));
  EXPECT_EQ(e11.closed_form, e11.direct);
  const auto e21 = truncated_in_shadow_basis(2, 1);
  EXPECT_EQ(e21.direct, (DegreeMap{{3, Scalar(1)}, {1, -qi(3)}}));
  const auto e22 = truncated_in_shadow_basis(2, 2);
  EXPECT_EQ(e22.direct.at(4), Scalar(1));
  EXPECT_EQ(e22.closed_form, e22.direct);
}

// The closed-form S-basis expansion holds for N <= 2 and is off by a power of
// q from N = 3 on; the harness records that.
TEST(TruncatedShadow, ClosedFormAgreesForSmallN) {
  for (int n = 1; n <= 2; ++n)
    for (int ell = 1; n + ell <= 10; ++ell) {
      const auto e = truncated_in_shadow_basis(n, ell);
      EXPECT_EQ(e.closed_form, e.direct) << n << "," << ell;
    }
}

TEST(ShadowExpand, RoundTrip) {
  const XPoly p = x(5) + x(2, P({0, 3})) + x(0, Scalar(7));
  XPoly back;
  for (const auto& [d, c] : shadow_expand(p)) back += shadow_hermite(d) * c;
  EXPECT_EQ(back, p);
}

TEST(FunctionalL, Examples) {
  EXPECT_EQ(functional_L(x(0)), Scalar(1));
  EXPECT_EQ(functional_L(x(4)), qi(3));
  EXPECT_EQ(functional_L(hermite(2) * hermite(2)), P({0, 1, 1}));
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(functional_L(x(n)), gaussian_moment(n)) << n;
}

TEST(FunctionalL, Orthogonality) {
  std::vector<XPoly> h;
  for (int n = 0; n <= 10; ++n) h.push_back(hermite(n));
  for (int n = 0; n <= 10; ++n)
    for (int m = 0; m <= 10; ++m) {
      const Scalar expect = n == m ? Scalar::q_power(n * (n - 1) / 2) * q_factorial(n) : Scalar();
      EXPECT_EQ(functional_L(h[static_cast<std::size_t>(n)] * h[static_cast<std::size_t>(m)]), expect) << n << "," << m;
    }
}

TEST(HermiteExpand, Examples) {
  EXPECT_EQ(hermite_expand(x(2)), (DegreeMap{{2, Scalar(1)}, {0, Scalar(1)}}));
  EXPECT_EQ(hermite_expand(hermite(5)), (DegreeMap{{5, Scalar(1)}}));
  EXPECT_EQ(hermite_expand(x(3)), (DegreeMap{{3, Scalar(1)}, {1, qi(3)}}));
}

TEST(HermiteExpand, CoefficientExtraction) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 4; ++trial) {
    const XPoly p = random_xpoly(rng, 8);
    const DegreeMap a = hermite_expand(p);
    for (int k = 0; k <= 8; ++k) {
      const auto it = a.find(k);
      const Scalar ak = it == a.end() ? Scalar() : it->second;
      EXPECT_EQ(functional_L(p * hermite(k)), Scalar::q_power(k * (k - 1) / 2) * q_factorial(k) * ak) << k;
    }
  }
}
