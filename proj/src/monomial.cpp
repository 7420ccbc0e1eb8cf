#include "supercontact/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace supercontact {

Monomial Monomial::of(const Dims& d, CoordId c) {
  if (!c.valid_for(d)) throw std::invalid_argument("coordinate " + to_string(c) + " not valid for " + to_string(d));
  Monomial m = one(d);
  if (c.is_odd())
    m.odd = std::uint64_t{1} << (c.index - 1);
  else
    m.even[c.even_slot(d)] = 1;
  return m;
}

int Monomial::even_degree() const {
  return static_cast<int>(std::accumulate(even.begin(), even.end(), std::uint64_t{0}));
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  for (std::size_t k = 0; k < a.even.size(); ++k)
    if (a.even[k] != b.even[k]) return a.even[k] > b.even[k];
  if (a.odd == b.odd) return false;
  // Lowest differing bit decides: the word containing the earlier th comes first.
  const std::uint64_t diff = a.odd ^ b.odd;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.odd & lowest) != 0;
}

std::optional<int> grassmann_product_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return std::nullopt;
  // Each th_b in the right word must pass every th_a with a > b.
  int transpositions = 0;
  for (std::uint64_t rest = b; rest != 0; rest &= rest - 1) {
    const int pos = std::countr_zero(rest);
    const std::uint64_t above = pos == 63 ? 0 : (~std::uint64_t{0} << (pos + 1));
    transpositions += std::popcount(a & above);
  }
  return (transpositions & 1) ? -1 : 1;
}

std::optional<std::pair<Monomial, int>> multiply(const Monomial& a, const Monomial& b) {
  const auto sign = grassmann_product_sign(a.odd, b.odd);
  if (!sign) return std::nullopt;
  Monomial m{a.even, a.odd | b.odd};
  for (std::size_t k = 0; k < m.even.size(); ++k) m.even[k] += b.even[k];
  return std::make_pair(std::move(m), *sign);
}

}  // namespace supercontact
