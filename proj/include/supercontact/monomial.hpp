#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "supercontact/coord.hpp"
#include "supercontact/dims.hpp"

namespace supercontact {

/// z^a x^b y^c times the Grassmann word th_{i_1}...th_{i_p}, i_1 < ... < i_p.
/// Bit j-1 of `odd` marks th_j; the ascending order is implicit, so every
/// Grassmann sign lives in the coefficient of the owning Superfunction.
struct Monomial {
  std::vector<std::uint32_t> even;  // z, x_1..x_l, y_1..y_l
  std::uint64_t odd = 0;

  static Monomial one(const Dims& d) { return Monomial{std::vector<std::uint32_t>(d.even_count(), 0), 0}; }
  static Monomial of(const Dims& d, CoordId c);

  int even_degree() const;
  int odd_degree() const { return std::popcount(odd); }
  int degree() const { return even_degree() + odd_degree(); }
  int parity() const { return odd_degree() & 1; }
  bool has_theta(int j) const { return (odd >> (j - 1)) & 1U; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: ascending total degree, then lexicographic with the
/// larger exponent of the earliest variable (z < x1 < .. < y1 < .. < th1 < ..)
/// first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sign of th_A * th_B brought to ascending order, or nullopt if the words
/// share an index (the product vanishes).
std::optional<int> grassmann_product_sign(std::uint64_t a, std::uint64_t b);

/// Product of two monomials with its Grassmann sign; nullopt if it vanishes.
std::optional<std::pair<Monomial, int>> multiply(const Monomial& a, const Monomial& b);

}  // namespace supercontact
