#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "supercontact/random.hpp"

using namespace testing;

namespace {

// Independent oracle: multiply Grassmann words as index lists, sorting by
// adjacent transpositions and counting them.
Superfunction word_product_by_transpositions(const Dims& d, std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  int sign = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < a.size() - i; ++j) {
      if (a[j] == a[j + 1]) return Superfunction(d);
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t j = 0; j + 1 < a.size(); ++j)
    if (a[j] == a[j + 1]) return Superfunction(d);
  Superfunction out = Superfunction::constant(d, Rat(sign));
  for (int idx : a) {
    Monomial m = Monomial::one(d);
    m.odd = std::uint64_t{1} << (idx - 1);
    // multiplying in ascending order introduces no further sign
    out = out * Superfunction::term(d, m, Rat(1));
  }
  return out;
}

Superfunction word(const Dims& d, const std::vector<int>& w) {
  Superfunction out = Superfunction::constant(d, Rat(1));
  for (int idx : w) out = out * Superfunction::variable(d, CoordId::theta(idx));
  return out;
}

}  // namespace

TEST_CASE("addition cancels, has identity, doubles") {
  const Dims d = Dims::make(1, 2);
  CHECK(sf(d, "z + th1") + sf(d, "-th1") == sf(d, "z"));
  const Superfunction f = sf(d, "z^2 - 3/2*x1*th2");
  CHECK(f + Superfunction(d) == f);
  const Superfunction doubled = sf(d, "x1*y1") + sf(d, "x1*y1");
  CHECK(doubled.terms().size() == 1);
  CHECK(doubled.terms().begin()->second == Rat(2));
  CHECK_THROWS_AS(sf(d, "z") + sf(Dims::make(1, 1), "z"), DimensionMismatch);
}

TEST_CASE("Grassmann products") {
  const Dims d = Dims::make(1, 2);
  const auto th1 = Superfunction::variable(d, CoordId::theta(1));
  const auto th2 = Superfunction::variable(d, CoordId::theta(2));
  CHECK(format_expr(th1 * th2) == "th1*th2");
  CHECK(th2 * th1 == -(th1 * th2));
  CHECK((th1 * th1).is_zero());
  CHECK(sf(d, "(z + th1*th2)*(z - th1*th2)") == sf(d, "z^2"));
}

TEST_CASE("parity parts and degree") {
  const Dims d = Dims::make(1, 2);
  auto [e1, o1] = sf(d, "z + th1").parity_parts();
  CHECK(e1 == sf(d, "z"));
  CHECK(o1 == sf(d, "th1"));
  auto [e2, o2] = sf(d, "th1*th2").parity_parts();
  CHECK(e2 == sf(d, "th1*th2"));
  CHECK(o2.is_zero());
  auto [e3, o3] = Superfunction(d).parity_parts();
  CHECK(e3.is_zero());
  CHECK(o3.is_zero());
  CHECK(sf(d, "z + th1").parity() == std::nullopt);
  CHECK(sf(d, "x1*th2").parity() == 1);

  CHECK(sf(d, "z*x1").degree() == 2);
  CHECK(sf(d, "x1*th1*th2").degree() == 3);
  CHECK(sf(d, "5").degree() == 0);
  CHECK(Superfunction(d).degree() == kZeroDegree);
  CHECK(Superfunction(d).degree() <= 2);
}

TEST_CASE("partial derivatives") {
  const Dims d = Dims::make(1, 2);
  CHECK(partial_even(sf(d, "z^2"), CoordId::z()) == sf(d, "2*z"));
  CHECK(partial_even(sf(d, "x1*th1"), CoordId::x(1)) == sf(d, "th1"));
  CHECK(partial_even(sf(d, "x1"), CoordId::y(1)).is_zero());
  CHECK(partial_odd(sf(d, "th1*th2"), 1) == sf(d, "th2"));
  CHECK(partial_odd(sf(d, "th1*th2"), 2) == sf(d, "-th1"));
  CHECK(partial_odd(sf(d, "z"), 1).is_zero());
  CHECK_THROWS_AS(partial_odd(sf(d, "z"), 3), std::out_of_range);
  CHECK_THROWS_AS(partial_even(sf(d, "z"), CoordId::x(2)), std::invalid_argument);
  CHECK_THROWS_AS(partial_even(sf(d, "z"), CoordId::theta(1)), std::invalid_argument);
}

TEST_CASE("word products agree with the transposition-counting oracle") {
  for (int n = 1; n <= 3; ++n) {
    const Dims d = Dims::make(1, n);
    for (unsigned a = 0; a < (1U << n); ++a)
      for (unsigned b = 0; b < (1U << n); ++b) {
        std::vector<int> wa, wb;
        for (int j = 1; j <= n; ++j) {
          if (a >> (j - 1) & 1U) wa.push_back(j);
          if (b >> (j - 1) & 1U) wb.push_back(j);
        }
        CHECK(word(d, wa) * word(d, wb) == word_product_by_transpositions(d, wa, wb));
      }
  }
  // unsorted input words too
  const Dims d = Dims::make(0, 3);
  CHECK(word(d, {3, 1}) * word(d, {2}) == word_product_by_transpositions(d, {3, 1}, {2}));
  CHECK(word(d, {3, 1}) == -word(d, {1, 3}));
}

TEST_CASE("supercommutativity and associativity on random superfunctions") {
  for_dims(2, 3, [](const Dims& d) {
    RandomAlgebra r(d, 17);
    for (int k = 0; k < 40; ++k) {
      const int p = r.uniform(0, 1);
      const int q = r.uniform(0, 1);
      const Superfunction f = r.superfunction(3, 3, p);
      const Superfunction g = r.superfunction(3, 3, q);
      CHECK(f * g == Rat(sign_of(p * q)) * (g * f));
      const Superfunction h = r.superfunction(3, 3);
      CHECK((f * g) * h == f * (g * h));
    }
  });
}

TEST_CASE("odd derivatives anticommute, even ones commute") {
  for_dims(2, 3, [](const Dims& d) {
    RandomAlgebra r(d, 23);
    const auto coords = all_coords(d);
    for (int k = 0; k < 20; ++k) {
      const Superfunction f = r.superfunction(4, 5);
      for (CoordId a : coords)
        for (CoordId b : coords) {
          const Superfunction ab = partial(partial(f, a), b);
          const Superfunction ba = partial(partial(f, b), a);
          if (a.is_odd() && b.is_odd())
            CHECK(ab == -ba);
          else
            CHECK(ab == ba);
        }
    }
  });
}

TEST_CASE("canonical term order") {
  const Dims d = Dims::make(1, 2);
  const Superfunction f = sf(d, "th1*th2 + y1 + 3 + z*th1 + x1 + z + z^2");
  std::vector<std::string> seen;
  for (const auto& [m, c] : f.terms()) seen.push_back(format_monomial(m, d));
  CHECK(seen == std::vector<std::string>{"1", "z", "x1", "y1", "z^2", "z*th1", "th1*th2"});
}

TEST_CASE("dims validation") {
  CHECK_THROWS_AS(Dims::make(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Dims::make(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Dims::make(0, 65), std::invalid_argument);
  CHECK(Dims::make(0, 64).n == 64);
  // top bit of the odd mask
  const Dims wide = Dims::make(0, 64);
  const auto a = Superfunction::variable(wide, CoordId::theta(64));
  const auto b = Superfunction::variable(wide, CoordId::theta(1));
  CHECK(a * b == -(b * a));
  CHECK(partial_odd(b * a, 64) == -b);
}
