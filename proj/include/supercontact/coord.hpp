#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "supercontact/dims.hpp"

namespace supercontact {

/// A coordinate of R^{2l+1|n}. Ordering is the canonical one:
/// z < x_1 < ... < x_l < y_1 < ... < y_l < th_1 < ... < th_n.
struct CoordId {
  enum class Kind { Z = 0, X = 1, Y = 2, Theta = 3 };

  Kind kind = Kind::Z;
  int index = 0;  // 1-based for X, Y, Theta; 0 for Z

  static CoordId z() { return {Kind::Z, 0}; }
  static CoordId x(int k) { return {Kind::X, k}; }
  static CoordId y(int k) { return {Kind::Y, k}; }
  static CoordId theta(int j) { return {Kind::Theta, j}; }

  int parity() const { return kind == Kind::Theta ? 1 : 0; }
  bool is_odd() const { return kind == Kind::Theta; }

  /// Position among z, x_1..x_l, y_1..y_l; only meaningful for even coordinates.
  int even_slot(const Dims& d) const;

  bool valid_for(const Dims& d) const;

  friend auto operator<=>(const CoordId&, const CoordId&) = default;
};

/// The generalized coordinate q^r, r in [1, 2l+n]: x_r, then y_{r-l}, then th_{r-2l}.
CoordId generalized_coord(const Dims& d, int r);

/// Inverse of generalized_coord; z has no generalized index and throws.
int generalized_index(const Dims& d, CoordId c);

/// All coordinates in canonical order.
std::vector<CoordId> all_coords(const Dims& d);

/// "z", "x1", "y2", "th3".
std::string to_string(CoordId c);

}  // namespace supercontact
