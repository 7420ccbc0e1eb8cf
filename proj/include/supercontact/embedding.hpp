#pragma once

#include <stdexcept>
#include <vector>

#include "supercontact/contact.hpp"
#include "supercontact/spo.hpp"

namespace supercontact {

/// Representative of a class in pgl(2l+2|n) with entry (1,1) equal to 0.
struct PglRep {
  GradedMatrix matrix;
};

/// Matrix index k >= 2 carries the projective coordinate t^{k-1}:
/// t^1..t^l = x_1..x_l, t^{l+1} = z, t^{l+2}..t^{2l+1} = y_1..y_l, then th_1..th_n.
class CoordMap {
 public:
  explicit CoordMap(const Dims& dims);

  int size() const { return static_cast<int>(table_.size()); }
  /// Coordinate of t^i, 1-based.
  CoordId coord(int i) const { return table_.at(i - 1); }
  int parity(int i) const { return coord(i).parity(); }

 private:
  std::vector<CoordId> table_;
};

/// A - A_{11} Id.
PglRep normalize_rep(const GradedMatrix& a);

/// [[0, xi], [v, B]] -> -v^i d_i - (-1)^{p(j)(p(i)+p(j))} B^i_j t^j d_i + (-1)^{p(j)} xi_j t^j t^i d_i.
SuperVectorField projective_embed(const PglRep& rep, const CoordMap& cmap);

class NotInSpoError : public std::invalid_argument {
 public:
  NotInSpoError() : std::invalid_argument("matrix does not satisfy the spo block conditions") {}
};

/// projective_embed(normalize_rep(A)) for A in spo.
SuperVectorField embed_spo(const ContactContext& ctx, const GradedMatrix& a);

struct CorrespondenceRow {
  SpoBasisLabel label;
  SuperVectorField field;
  Superfunction hamiltonian;
};

/// (label, embedded field, recovered Hamiltonian) for every spo basis element.
std::vector<CorrespondenceRow> correspondence_table(const ContactContext& ctx);

/// Array of {"family", "i", "j", "field", "hamiltonian"}.
nlohmann::json table_to_json(const std::vector<CorrespondenceRow>& rows);

}  // namespace supercontact
