#include "supercontact/random.hpp"

#include "supercontact/coord.hpp"

namespace supercontact {

int RandomAlgebra::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

Rat RandomAlgebra::rational() {
  int p = 0;
  while (p == 0) p = uniform(-5, 5);
  Rat r(p, uniform(1, 3));
  r.canonicalize();
  return r;
}

Monomial RandomAlgebra::monomial(int max_degree, std::optional<int> parity) {
  const auto coords = all_coords(dims_);
  for (;;) {
    const int deg = uniform(0, max_degree);
    Monomial m = Monomial::one(dims_);
    bool dead = false;
    for (int k = 0; k < deg && !dead; ++k) {
      const CoordId c = coords[uniform(0, static_cast<int>(coords.size()) - 1)];
      auto prod = multiply(m, Monomial::of(dims_, c));
      if (!prod)
        dead = true;
      else
        m = std::move(prod->first);
    }
    if (dead) continue;
    if (parity && m.parity() != *parity) continue;
    return m;
  }
}

Superfunction RandomAlgebra::superfunction(int max_degree, int max_terms, std::optional<int> parity) {
  Superfunction f(dims_);
  if (max_terms <= 0) return f;
  while (f.is_zero()) {
    const int terms = uniform(1, max_terms);
    for (int k = 0; k < terms; ++k) f.add_term(monomial(max_degree, parity), rational());
  }
  return f;
}

SuperVectorField RandomAlgebra::field(int parity, int max_degree, int max_terms) {
  const auto coords = all_coords(dims_);
  SuperVectorField x(dims_);
  while (x.is_zero()) {
    const int terms = uniform(1, max_terms);
    for (int k = 0; k < terms; ++k) {
      const CoordId c = coords[uniform(0, static_cast<int>(coords.size()) - 1)];
      const int coeff_parity = (parity + c.parity()) & 1;
      x.add_component(c, Superfunction::term(dims_, monomial(max_degree, coeff_parity), rational()));
    }
  }
  return x;
}

GradedMatrix RandomAlgebra::graded_matrix(std::optional<int> parity) {
  GradedMatrix m(dims_);
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) {
      const int p = m.index_parity(i) ^ m.index_parity(j);
      if (parity && p != *parity) continue;
      if (uniform(0, 2) == 0) m.set(i, j, Rat(uniform(-3, 3)));
    }
  return m;
}

}  // namespace supercontact
