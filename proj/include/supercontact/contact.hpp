#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "supercontact/linalg.hpp"
#include "supercontact/one_form.hpp"

namespace supercontact {

/// Standard contact structure on R^{2l+1|n} in Darboux coordinates.
///
/// Generalized indices r, s run over 1..2l+n (see generalized_coord); the
/// omega matrices are stored 0-based, so omega_lower(r-1, s-1) is w_{rs}.
struct ContactContext {
  struct OmegaEntry {
    int r;
    int s;
    Rat value;
  };

  Dims dims;
  SuperOneForm alpha;                   // dz + sum(x_i dy_i - y_i dx_i) + sum th_i dth_i
  std::vector<SuperVectorField> frame;  // T_1..T_{2l+n}, frame[r-1] = T_r
  RatMatrix omega_lower;                // w_{rs}
  RatMatrix omega_upper;                // w^{rs}, the inverse of w_{rs}
  std::vector<OmegaEntry> upper_nonzero;
  SuperVectorField reeb;                // d/dz

  const SuperVectorField& t(int r) const { return frame.at(r - 1); }
  /// Parity of T_r, i.e. of q^r.
  int t_parity(int r) const { return generalized_coord(dims, r).parity(); }
};

/// Builds the context and checks its invariants; throws std::logic_error if
/// any of them fails.
ContactContext make_context(const Dims& dims);

/// Raised when an operation requires a contact vector field.
class NotContactError : public std::invalid_argument {
 public:
  NotContactError(int frame_index, const std::string& detail);
  /// Generalized index r of the first T_r with [X, T_r] not tangent.
  int frame_index() const { return frame_index_; }

 private:
  int frame_index_;
};

/// alpha(X) == 0.
bool is_tangent(const ContactContext& ctx, const SuperVectorField& x);

/// First r with [X, T_r] outside ker alpha, or nullopt if X is contact.
std::optional<int> contact_violation(const ContactContext& ctx, const SuperVectorField& x);

inline bool is_contact(const ContactContext& ctx, const SuperVectorField& x) {
  return !contact_violation(ctx, x).has_value();
}

/// X_f = f d/dz - 1/2 sum_{r,s} (-1)^{p(f) p(T_r)} w^{rs} T_r(f) T_s.
SuperVectorField contact_field(const ContactContext& ctx, const Superfunction& f);

/// alpha(X), after checking X is contact. Inverse of contact_field.
Superfunction hamiltonian_of(const ContactContext& ctx, const SuperVectorField& x);

/// {f, g} = f g' - f' g - 1/2 sum_{r,s} (-1)^{p(T_r) p(f)} w^{rs} T_r(f) T_s(g), h' = dh/dz.
Superfunction lagrange_bracket(const ContactContext& ctx, const Superfunction& f, const Superfunction& g);

/// All monomials of total degree <= 2 in canonical order.
std::vector<Monomial> quadratic_monomials(const Dims& dims);

/// 1 + (2l+1+n) + (2l+1)(2l+2)/2 + (2l+1)n + n(n-1)/2.
long long quadratic_dimension(const Dims& dims);

}  // namespace supercontact
