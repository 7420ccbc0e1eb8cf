#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "supercontact/graded_matrix.hpp"
#include "supercontact/vector_field.hpp"

namespace supercontact {

/// Seeded generator of small random algebraic objects. Draws use plain
/// modular reduction on mt19937_64 output, so a seed gives the same objects
/// on every standard library.
class RandomAlgebra {
 public:
  explicit RandomAlgebra(Dims dims, std::uint64_t seed = 0) : dims_(dims), rng_(seed) {}

  const Dims& dims() const { return dims_; }

  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);

  /// Nonzero p/q with |p| <= 5, 1 <= q <= 3.
  Rat rational();

  /// Nonzero monomial of total degree <= max_degree, optionally of fixed parity.
  Monomial monomial(int max_degree, std::optional<int> parity = std::nullopt);

  /// Up to max_terms random terms of degree <= max_degree. May be zero only
  /// when max_terms is 0.
  Superfunction superfunction(int max_degree, int max_terms, std::optional<int> parity = std::nullopt);

  /// Homogeneous field with coefficient degree <= max_degree.
  SuperVectorField field(int parity, int max_degree, int max_terms);

  /// Random homogeneous graded matrix with entries in [-3, 3].
  GradedMatrix graded_matrix(std::optional<int> parity = std::nullopt);

 private:
  Dims dims_;
  std::mt19937_64 rng_;
};

}  // namespace supercontact
