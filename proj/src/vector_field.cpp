#include "supercontact/vector_field.hpp"

#include <set>
#include <stdexcept>

#include "supercontact/expr.hpp"

namespace supercontact {

SuperVectorField SuperVectorField::partial(Dims dims, CoordId c) {
  SuperVectorField x(dims);
  x.add_component(c, Superfunction::constant(dims, Rat(1)));
  return x;
}

Superfunction SuperVectorField::component(CoordId c) const {
  const auto it = coeffs_.find(c);
  return it == coeffs_.end() ? Superfunction(dims_) : it->second;
}

void SuperVectorField::add_component(CoordId c, const Superfunction& f) {
  require_same_dims(dims_, f.dims());
  if (!c.valid_for(dims_)) throw std::invalid_argument("coordinate " + to_string(c) + " not valid for " + to_string(dims_));
  if (f.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(c, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

std::pair<SuperVectorField, SuperVectorField> SuperVectorField::parity_parts() const {
  std::pair<SuperVectorField, SuperVectorField> parts{SuperVectorField(dims_), SuperVectorField(dims_)};
  for (const auto& [c, f] : coeffs_) {
    auto [even, odd] = f.parity_parts();
    // An odd coordinate flips which part a coefficient lands in.
    if (c.is_odd()) std::swap(even, odd);
    parts.first.add_component(c, even);
    parts.second.add_component(c, odd);
  }
  return parts;
}

std::optional<int> SuperVectorField::parity() const {
  const auto [even, odd] = parity_parts();
  if (odd.is_zero()) return 0;
  if (even.is_zero()) return 1;
  return std::nullopt;
}

SuperVectorField& SuperVectorField::operator+=(const SuperVectorField& y) {
  require_same_dims(dims_, y.dims_);
  for (const auto& [c, f] : y.coeffs_) add_component(c, f);
  return *this;
}

SuperVectorField& SuperVectorField::operator-=(const SuperVectorField& y) {
  require_same_dims(dims_, y.dims_);
  for (const auto& [c, f] : y.coeffs_) add_component(c, -f);
  return *this;
}

SuperVectorField& SuperVectorField::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, f] : coeffs_) f *= c;
  return *this;
}

SuperVectorField operator*(const Superfunction& f, const SuperVectorField& x) {
  SuperVectorField out(x.dims());
  for (const auto& [c, g] : x.coeffs()) out.add_component(c, f * g);
  return out;
}

Superfunction apply(const SuperVectorField& x, const Superfunction& f) {
  require_same_dims(x.dims(), f.dims());
  Superfunction out(f.dims());
  for (const auto& [c, coeff] : x.coeffs()) {
    const Superfunction d = partial(f, c);
    if (!d.is_zero()) out += coeff * d;
  }
  return out;
}

namespace {

SuperVectorField bracket_homogeneous(const SuperVectorField& x, int px, const SuperVectorField& y, int py) {
  std::set<CoordId> keys;
  for (const auto& [c, f] : x.coeffs()) keys.insert(c);
  for (const auto& [c, f] : y.coeffs()) keys.insert(c);
  const bool anti = (px & py) != 0;
  SuperVectorField out(x.dims());
  for (CoordId c : keys) {
    Superfunction v = apply(x, y.component(c));
    const Superfunction w = apply(y, x.component(c));
    if (anti)
      v += w;
    else
      v -= w;
    out.add_component(c, v);
  }
  return out;
}

}  // namespace

SuperVectorField bracket(const SuperVectorField& x, const SuperVectorField& y) {
  require_same_dims(x.dims(), y.dims());
  const auto xs = x.parity_parts();
  const auto ys = y.parity_parts();
  const SuperVectorField* xp[2] = {&xs.first, &xs.second};
  const SuperVectorField* yp[2] = {&ys.first, &ys.second};
  SuperVectorField out(x.dims());
  for (int a = 0; a < 2; ++a) {
    if (xp[a]->is_zero()) continue;
    for (int b = 0; b < 2; ++b) {
      if (yp[b]->is_zero()) continue;
      out += bracket_homogeneous(*xp[a], a, *yp[b], b);
    }
  }
  return out;
}

std::string format_field(const SuperVectorField& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [c, f] : x.coeffs()) {
    if (!out.empty()) out += " + ";
    out += "(" + format_expr(f) + ")*d/d" + to_string(c);
  }
  return out;
}

}  // namespace supercontact
