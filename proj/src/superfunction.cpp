#include "supercontact/superfunction.hpp"

#include <algorithm>
#include <stdexcept>

namespace supercontact {

Superfunction Superfunction::constant(Dims dims, const Rat& c) {
  return term(dims, Monomial::one(dims), c);
}

Superfunction Superfunction::variable(Dims dims, CoordId c) {
  return term(dims, Monomial::of(dims, c), Rat(1));
}

Superfunction Superfunction::term(Dims dims, Monomial m, const Rat& c) {
  Superfunction f(dims);
  f.add_term(m, c);
  return f;
}

int Superfunction::degree() const {
  int best = kZeroDegree;
  for (const auto& [m, c] : terms_) best = std::max(best, m.degree());
  return best;
}

std::pair<Superfunction, Superfunction> Superfunction::parity_parts() const {
  std::pair<Superfunction, Superfunction> parts{Superfunction(dims_), Superfunction(dims_)};
  for (const auto& [m, c] : terms_) {
    auto& target = m.parity() == 0 ? parts.first : parts.second;
    target.terms_.emplace_hint(target.terms_.end(), m, c);
  }
  return parts;
}

std::optional<int> Superfunction::parity() const {
  if (terms_.empty()) return 0;
  const int p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return std::nullopt;
  return p;
}

Rat Superfunction::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Superfunction::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  if (m.even.size() != static_cast<std::size_t>(dims_.even_count()))
    throw std::invalid_argument("monomial shape does not match " + to_string(dims_));
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Superfunction& Superfunction::operator+=(const Superfunction& g) {
  require_same_dims(dims_, g.dims_);
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Superfunction& Superfunction::operator-=(const Superfunction& g) {
  require_same_dims(dims_, g.dims_);
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

Superfunction& Superfunction::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Superfunction operator*(const Superfunction& f, const Superfunction& g) {
  require_same_dims(f.dims_, g.dims_);
  Superfunction out(f.dims_);
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) {
      auto prod = multiply(mf, mg);
      if (!prod) continue;
      Rat c = cf * cg;
      if (prod->second < 0) c = -c;
      out.add_term(prod->first, c);
    }
  }
  return out;
}

Superfunction partial_even(const Superfunction& f, CoordId c) {
  if (c.is_odd() || !c.valid_for(f.dims()))
    throw std::invalid_argument("partial_even: unknown even coordinate " + to_string(c));
  const int slot = c.even_slot(f.dims());
  Superfunction out(f.dims());
  for (const auto& [m, coeff] : f.terms()) {
    const auto e = m.even[slot];
    if (e == 0) continue;
    Monomial d = m;
    d.even[slot] = e - 1;
    out.add_term(d, coeff * e);
  }
  return out;
}

Superfunction partial_odd(const Superfunction& f, int j) {
  if (j < 1 || j > f.dims().n)
    throw std::out_of_range("partial_odd: odd index " + std::to_string(j) + " out of range");
  const std::uint64_t bit = std::uint64_t{1} << (j - 1);
  Superfunction out(f.dims());
  for (const auto& [m, coeff] : f.terms()) {
    if (!(m.odd & bit)) continue;
    // th_j must first move to the front past every smaller index.
    const int before = std::popcount(m.odd & (bit - 1));
    Monomial d = m;
    d.odd &= ~bit;
    out.add_term(d, (before & 1) ? Rat(-coeff) : coeff);
  }
  return out;
}

Superfunction partial(const Superfunction& f, CoordId c) {
  return c.is_odd() ? partial_odd(f, c.index) : partial_even(f, c);
}

}  // namespace supercontact
