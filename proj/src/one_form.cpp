#include "supercontact/one_form.hpp"

#include <stdexcept>

namespace supercontact {

Superfunction SuperOneForm::component(CoordId c) const {
  const auto it = coeffs_.find(c);
  return it == coeffs_.end() ? Superfunction(dims_) : it->second;
}

void SuperOneForm::add_component(CoordId c, const Superfunction& f) {
  require_same_dims(dims_, f.dims());
  if (!c.valid_for(dims_)) throw std::invalid_argument("coordinate " + to_string(c) + " not valid for " + to_string(dims_));
  if (f.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(c, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

std::pair<SuperOneForm, SuperOneForm> SuperOneForm::parity_parts() const {
  std::pair<SuperOneForm, SuperOneForm> parts{SuperOneForm(dims_), SuperOneForm(dims_)};
  for (const auto& [c, f] : coeffs_) {
    auto [even, odd] = f.parity_parts();
    if (c.is_odd()) std::swap(even, odd);
    parts.first.add_component(c, even);
    parts.second.add_component(c, odd);
  }
  return parts;
}

Superfunction pairing(const SuperVectorField& x, const SuperOneForm& alpha) {
  require_same_dims(x.dims(), alpha.dims());
  Superfunction out(x.dims());
  for (const auto& [c, a] : alpha.coeffs()) {
    const auto xi = x.coeffs().find(c);
    if (xi == x.coeffs().end()) continue;
    if (!c.is_odd()) {
      out += xi->second * a;
      continue;
    }
    // Odd coordinate: sign (-1)^{p(alpha_i) + 1}.
    const auto [a_even, a_odd] = a.parity_parts();
    out -= xi->second * a_even;
    out += xi->second * a_odd;
  }
  return out;
}

Superfunction form_eval(const SuperOneForm& alpha, const SuperVectorField& x) {
  require_same_dims(x.dims(), alpha.dims());
  const auto [x_even, x_odd] = x.parity_parts();
  const auto [a_even, a_odd] = alpha.parity_parts();
  Superfunction out = pairing(x_even, a_even);
  out += pairing(x_even, a_odd);
  out += pairing(x_odd, a_even);
  out -= pairing(x_odd, a_odd);
  return out;
}

}  // namespace supercontact
