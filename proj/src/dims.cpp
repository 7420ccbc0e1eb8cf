#include "supercontact/dims.hpp"

namespace supercontact {

Dims Dims::make(int l, int n) {
  if (l < 0) throw std::invalid_argument("l must be nonnegative, got " + std::to_string(l));
  if (n < 1 || n > kMaxOdd)
    throw std::invalid_argument("n must lie in [1, 64], got " + std::to_string(n));
  return Dims{l, n};
}

std::string to_string(const Dims& d) {
  return "(l=" + std::to_string(d.l) + ", n=" + std::to_string(d.n) + ")";
}

DimensionMismatch::DimensionMismatch(const Dims& a, const Dims& b)
    : std::invalid_argument("dimension mismatch: " + to_string(a) + " vs " + to_string(b)) {}

}  // namespace supercontact
