#pragma once

// LaTeX rendering of Q(q) scalars with q-integer factors pulled out as [n]_q.

#include <string>

#include "qgue/exactq.hpp"

namespace qgue {

/// Ascending-power LaTeX for a polynomial: "1 + q + 2q^{3}".
std::string to_latex(const QPolynomial& p);

/// Factors numerator and denominator greedily into +-q^j, powers of [n]_q
/// (largest n first) and a leftover polynomial, then renders \frac{..}{..}.
std::string to_latex(const Scalar& s);

}  // namespace qgue
