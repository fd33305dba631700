#pragma once

#include <stdexcept>
#include <string>

namespace qgue {

// A rational function was specialized at a root of its reduced denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A partition has more parts than there are variables.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force expansion would exceed the oracle guardrail.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A printed closed form divides by a polynomial that vanishes identically.
class DegenerateDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qgue
