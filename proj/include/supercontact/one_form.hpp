#pragma once

#include <map>
#include <utility>

#include "supercontact/vector_field.hpp"

namespace supercontact {

/// alpha = sum_j alpha_j dz_j with coefficients on the left of dz_j.
class SuperOneForm {
 public:
  using CoeffMap = std::map<CoordId, Superfunction>;

  explicit SuperOneForm(Dims dims) : dims_(dims) {}

  const Dims& dims() const { return dims_; }
  const CoeffMap& coeffs() const { return coeffs_; }

  Superfunction component(CoordId c) const;
  void add_component(CoordId c, const Superfunction& f);

  /// A term alpha_j dz_j has parity p(alpha_j) + p(z_j).
  std::pair<SuperOneForm, SuperOneForm> parity_parts() const;

  friend bool operator==(const SuperOneForm&, const SuperOneForm&) = default;

 private:
  Dims dims_;
  CoeffMap coeffs_;
};

/// <X, alpha> = sum_i (-1)^{p(i)(p(alpha_i) + p(i))} X^i alpha_i. This is i(X)alpha.
Superfunction pairing(const SuperVectorField& x, const SuperOneForm& alpha);

/// alpha(X) = (-1)^{p(X) p(alpha)} <X, alpha>, summed over parity parts.
Superfunction form_eval(const SuperOneForm& alpha, const SuperVectorField& x);

}  // namespace supercontact
