#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "supercontact/coord.hpp"
#include "supercontact/superfunction.hpp"

namespace supercontact {

/// X = sum_i X^i d/dz_i, a superderivation of the polynomial superfunctions.
/// Coefficients sit to the left of the partials; zero coefficients are not
/// stored.
class SuperVectorField {
 public:
  using CoeffMap = std::map<CoordId, Superfunction>;

  explicit SuperVectorField(Dims dims) : dims_(dims) {}

  /// The coordinate field d/dc.
  static SuperVectorField partial(Dims dims, CoordId c);

  const Dims& dims() const { return dims_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Superfunction component(CoordId c) const;
  void add_component(CoordId c, const Superfunction& f);

  /// Split by parity of X^i plus parity of the coordinate.
  std::pair<SuperVectorField, SuperVectorField> parity_parts() const;
  std::optional<int> parity() const;

  SuperVectorField& operator+=(const SuperVectorField& y);
  SuperVectorField& operator-=(const SuperVectorField& y);
  SuperVectorField& operator*=(const Rat& c);

  friend SuperVectorField operator+(SuperVectorField x, const SuperVectorField& y) { return x += y; }
  friend SuperVectorField operator-(SuperVectorField x, const SuperVectorField& y) { return x -= y; }
  friend SuperVectorField operator-(SuperVectorField x) { return x *= Rat(-1); }
  friend SuperVectorField operator*(const Rat& c, SuperVectorField x) { return x *= c; }
  /// f X, f multiplied on the left of every coefficient.
  friend SuperVectorField operator*(const Superfunction& f, const SuperVectorField& x);

  friend bool operator==(const SuperVectorField& a, const SuperVectorField& b) {
    return a.dims_ == b.dims_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Dims dims_;
  CoeffMap coeffs_;
};

/// X(f) = sum_i X^i d_i f.
Superfunction apply(const SuperVectorField& x, const Superfunction& f);

/// [X, Y]^i = X(Y^i) - (-1)^{XY} Y(X^i), extended bilinearly over parity parts.
SuperVectorField bracket(const SuperVectorField& x, const SuperVectorField& y);

/// "(<expr>)*d/d<coord> + ..." in canonical coordinate order; "0" for the zero field.
std::string format_field(const SuperVectorField& x);

}  // namespace supercontact
