#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace supercontact {

/// Superdimension data for R^{2l+1|n}.
struct Dims {
  int l = 0;
  int n = 1;

  static constexpr int kMaxOdd = 64;

  /// Validating constructor; l >= 0 and 1 <= n <= 64.
  static Dims make(int l, int n);

  int even_count() const { return 2 * l + 1; }
  int odd_count() const { return n; }
  /// Generalized coordinates q^1..q^{2l+n} (z excluded).
  int generalized_count() const { return 2 * l + n; }
  /// Size of the graded matrices in gl(2l+2|n).
  int matrix_size() const { return 2 * l + 2 + n; }

  friend auto operator<=>(const Dims&, const Dims&) = default;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(const Dims& a, const Dims& b);
};

inline void require_same_dims(const Dims& a, const Dims& b) {
  if (a != b) throw DimensionMismatch(a, b);
}

std::string to_string(const Dims& d);

}  // namespace supercontact
