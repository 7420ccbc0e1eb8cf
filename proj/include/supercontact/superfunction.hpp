#pragma once

#include <climits>
#include <map>
#include <optional>
#include <utility>

#include "supercontact/coord.hpp"
#include "supercontact/dims.hpp"
#include "supercontact/monomial.hpp"
#include "supercontact/rational.hpp"

namespace supercontact {

/// Degree reported for the zero superfunction. Acts as minus infinity, so
/// `degree() <= k` holds for 0 and every k.
inline constexpr int kZeroDegree = INT_MIN;

/// Polynomial superfunction on R^{2l+1|n}: a sparse sum of rational multiples
/// of canonical monomials. Zero coefficients are never stored, so equality of
/// term maps is equality of superfunctions.
class Superfunction {
 public:
  using TermMap = std::map<Monomial, Rat, MonomialOrder>;

  explicit Superfunction(Dims dims) : dims_(dims) {}

  static Superfunction constant(Dims dims, const Rat& c);
  static Superfunction variable(Dims dims, CoordId c);
  static Superfunction term(Dims dims, Monomial m, const Rat& c);

  const Dims& dims() const { return dims_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree in z, x_i, y_i, th_j jointly (z has weight 1).
  int degree() const;

  /// (even part, odd part); they sum to *this.
  std::pair<Superfunction, Superfunction> parity_parts() const;

  /// Parity if homogeneous (0 counts as even), nullopt otherwise.
  std::optional<int> parity() const;

  /// Coefficient of m (0 if absent).
  Rat coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rat& c);

  Superfunction& operator+=(const Superfunction& g);
  Superfunction& operator-=(const Superfunction& g);
  Superfunction& operator*=(const Rat& c);

  friend Superfunction operator+(Superfunction f, const Superfunction& g) { return f += g; }
  friend Superfunction operator-(Superfunction f, const Superfunction& g) { return f -= g; }
  friend Superfunction operator-(Superfunction f) { return f *= Rat(-1); }
  friend Superfunction operator*(Superfunction f, const Rat& c) { return f *= c; }
  friend Superfunction operator*(const Rat& c, Superfunction f) { return f *= c; }
  friend Superfunction operator*(const Superfunction& f, const Superfunction& g);

  friend bool operator==(const Superfunction& f, const Superfunction& g) {
    return f.dims_ == g.dims_ && f.terms_ == g.terms_;
  }

 private:
  Dims dims_;
  TermMap terms_;
};

/// Ordinary partial derivative along z, x_k or y_k.
Superfunction partial_even(const Superfunction& f, CoordId c);

/// Left Grassmann derivative along th_j.
Superfunction partial_odd(const Superfunction& f, int j);

/// Dispatches on the coordinate's parity.
Superfunction partial(const Superfunction& f, CoordId c);

}  // namespace supercontact
