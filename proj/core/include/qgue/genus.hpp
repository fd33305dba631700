#pragma once

// q = 1 map enumeration: genus counts of one-face maps from the engine's
// power-sum moments, and from direct enumeration of polygon gluings.

#include <vector>

#include "qgue/exactq.hpp"

namespace qgue {

inline constexpr int kGenusTableMaxM = 6;

/// The unique polynomial of degree < xs.size() through (xs[i], ys[i]),
/// as a coefficient vector in the interpolation variable.
QPolynomial interpolate(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys);

/// epsilon_g(m) for g = 0..floor(m/2): coefficients of N^{m+1-2g} in the
/// q = 1 integral of p_{2m}, recovered by interpolating over N = 1..m+2.
/// Throws std::logic_error if the interpolant has terms of the wrong parity.
std::vector<BigInt> genus_counts_from_moments(int m);

/// The same counts from all (2m-1)!! side pairings of a 2m-gon, with the
/// genus of each gluing read off V - E + F = 2 - 2g.
std::vector<BigInt> genus_counts_from_pairings(int m);

struct GenusRow {
  int m = 0;
  std::vector<BigInt> moments;
  std::vector<BigInt> pairings;
  bool match = false;
};

/// Rows m = 1..max_m; max_m must lie in [1, kGenusTableMaxM].
std::vector<GenusRow> genus_table(int max_m);

}  // namespace qgue
