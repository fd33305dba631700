#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "qgue/exactq.hpp"

namespace qgue::testing {

// Polynomial in q from ascending integer coefficients.
inline Scalar P(std::initializer_list<long long> coeffs) {
  std::vector<BigRat> c;
  for (long long v : coeffs) c.emplace_back(static_cast<long>(v));
  return Scalar(QPolynomial(std::move(c)));
}

inline Scalar qi(int n) { return q_integer(n); }

// Random element of Q(q) with small coefficients and degrees.
inline Scalar random_scalar(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, 3);
  auto poly = [&](bool force_nonzero) {
    for (;;) {
      std::vector<BigRat> c;
      const int d = deg(rng);
      for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng), 1 + (coef(rng) + 4) % 3);
      QPolynomial p(std::move(c));
      if (!force_nonzero || !p.is_zero()) return p;
    }
  };
  return Scalar(poly(nonzero), poly(true));
}

}  // namespace qgue::testing
