#include "qgue/genus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qgue/gue.hpp"

namespace qgue {

QPolynomial interpolate(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  QPolynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPolynomial basis = QPolynomial::constant(1);
    BigRat scale = ys[i];
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw std::invalid_argument("interpolate: repeated node");
      basis *= QPolynomial({-xs[j], BigRat(1)});
      scale /= xs[i] - xs[j];
    }
    result += basis * scale;
  }
  return result;
}

std::vector<BigInt> genus_counts_from_moments(int m) {
  if (m < 1) throw std::invalid_argument("genus_counts_from_moments: m must be positive");
  std::vector<BigRat> xs, ys;
  for (int n = 1; n <= m + 2; ++n) {
    xs.emplace_back(n);
    ys.push_back(evaluate_at(integrate_power_sum(2 * m, n, Method::fast), BigRat(1)));
  }
  const QPolynomial poly = interpolate(xs, ys);
  std::vector<BigInt> counts;
  for (int d = 0; d <= poly.degree(); ++d) {
    const BigRat c = poly.coefficient(d);
    const bool expected = d >= 1 && (m + 1 - d) % 2 == 0;
    if (!expected && c != 0)
      throw std::logic_error("genus_counts_from_moments: unexpected N^" + std::to_string(d) + " term at m = " +
                             std::to_string(m));
    if (c.get_den() != 1) throw std::logic_error("genus_counts_from_moments: non-integral count");
  }
  for (int g = 0; 2 * g <= m; ++g) counts.push_back(poly.coefficient(m + 1 - 2 * g).get_num());
  return counts;
}

namespace {

int cycle_count(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

}  // namespace

std::vector<BigInt> genus_counts_from_pairings(int m) {
  if (m < 1) throw std::invalid_argument("genus_counts_from_pairings: m must be positive");
  const int sides = 2 * m;
  std::vector<BigInt> counts(static_cast<std::size_t>(m / 2) + 1, BigInt(0));
  std::vector<int> pairing(static_cast<std::size_t>(sides), -1);
  // Vertices of the glued surface are the cycles of (side rotation) o (pairing).
  std::function<void()> recurse = [&]() {
    auto free_side = std::find(pairing.begin(), pairing.end(), -1);
    if (free_side == pairing.end()) {
      std::vector<int> walk(static_cast<std::size_t>(sides));
      for (int i = 0; i < sides; ++i) walk[static_cast<std::size_t>(i)] = (pairing[static_cast<std::size_t>(i)] + 1) % sides;
      const int vertices = cycle_count(walk);
      // V - E + F = 2 - 2g with E = m, F = 1
      const int genus = (1 + m - vertices) / 2;
      counts.at(static_cast<std::size_t>(genus)) += 1;
      return;
    }
    const int a = static_cast<int>(free_side - pairing.begin());
    for (int b = a + 1; b < sides; ++b) {
      if (pairing[static_cast<std::size_t>(b)] != -1) continue;
      pairing[static_cast<std::size_t>(a)] = b;
      pairing[static_cast<std::size_t>(b)] = a;
      recurse();
      pairing[static_cast<std::size_t>(a)] = -1;
      pairing[static_cast<std::size_t>(b)] = -1;
    }
  };
  recurse();
  return counts;
}

std::vector<GenusRow> genus_table(int max_m) {
  if (max_m < 1 || max_m > kGenusTableMaxM)
    throw std::invalid_argument("genus_table: max-m must be between 1 and " + std::to_string(kGenusTableMaxM));
  std::vector<GenusRow> rows;
  for (int m = 1; m <= max_m; ++m) {
    GenusRow row;
    row.m = m;
    row.moments = genus_counts_from_moments(m);
    row.pairings = genus_counts_from_pairings(m);
    row.match = row.moments == row.pairings;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qgue
