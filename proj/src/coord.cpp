#include "supercontact/coord.hpp"

#include <stdexcept>

namespace supercontact {

int CoordId::even_slot(const Dims& d) const {
  switch (kind) {
    case Kind::Z: return 0;
    case Kind::X: return index;
    case Kind::Y: return d.l + index;
    case Kind::Theta: break;
  }
  throw std::invalid_argument("even_slot of odd coordinate " + to_string(*this));
}

bool CoordId::valid_for(const Dims& d) const {
  switch (kind) {
    case Kind::Z: return index == 0;
    case Kind::X:
    case Kind::Y: return index >= 1 && index <= d.l;
    case Kind::Theta: return index >= 1 && index <= d.n;
  }
  return false;
}

CoordId generalized_coord(const Dims& d, int r) {
  if (r < 1 || r > d.generalized_count())
    throw std::out_of_range("generalized index " + std::to_string(r) + " out of range");
  if (r <= d.l) return CoordId::x(r);
  if (r <= 2 * d.l) return CoordId::y(r - d.l);
  return CoordId::theta(r - 2 * d.l);
}

int generalized_index(const Dims& d, CoordId c) {
  switch (c.kind) {
    case CoordId::Kind::X: return c.index;
    case CoordId::Kind::Y: return d.l + c.index;
    case CoordId::Kind::Theta: return 2 * d.l + c.index;
    case CoordId::Kind::Z: break;
  }
  throw std::invalid_argument("z has no generalized index");
}

std::vector<CoordId> all_coords(const Dims& d) {
  std::vector<CoordId> out;
  out.reserve(d.even_count() + d.n);
  out.push_back(CoordId::z());
  for (int k = 1; k <= d.l; ++k) out.push_back(CoordId::x(k));
  for (int k = 1; k <= d.l; ++k) out.push_back(CoordId::y(k));
  for (int j = 1; j <= d.n; ++j) out.push_back(CoordId::theta(j));
  return out;
}

std::string to_string(CoordId c) {
  switch (c.kind) {
    case CoordId::Kind::Z: return "z";
    case CoordId::Kind::X: return "x" + std::to_string(c.index);
    case CoordId::Kind::Y: return "y" + std::to_string(c.index);
    case CoordId::Kind::Theta: return "th" + std::to_string(c.index);
  }
  return "?";
}

}  // namespace supercontact
