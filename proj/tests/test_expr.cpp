#include "doctest.h"
#include "helpers.hpp"
#include "supercontact/random.hpp"

using namespace testing;

TEST_CASE("parse examples") {
  const Dims d = Dims::make(1, 2);
  const Superfunction f = sf(d, "z^2 + 2*x1*y1");
  CHECK(f.terms().size() == 2);
  CHECK(f.coefficient(Monomial::of(d, CoordId::z())) == 0);
  CHECK(format_expr(f) == "z^2 + 2*x1*y1");
  CHECK(format_expr(sf(d, "th2*th1")) == "-th1*th2");
  CHECK(sf(d, "th1*th1").is_zero());
  CHECK(sf(d, "th1^2").is_zero());
  CHECK(sf(d, "th1^1") == sf(d, "th1"));
  CHECK(sf(d, "z^0") == sf(d, "1"));
}

TEST_CASE("precedence and unary minus") {
  const Dims d = Dims::make(1, 1);
  CHECK(sf(d, "-x1^2") == Rat(-1) * sf(d, "x1*x1"));
  CHECK(sf(d, "2*z^2") == Rat(2) * sf(d, "z*z"));
  CHECK(sf(d, "(z + 1)^2") == sf(d, "z^2 + 2*z + 1"));
  CHECK(sf(d, "1 - - z") == sf(d, "1 + z"));
  CHECK(sf(d, " 1/2 * th1 ") == Rat(1, 2) * sf(d, "th1"));
  CHECK(sf(d, "4/6") == sf(d, "2/3"));
  CHECK(sf(d, "x1 - x1").is_zero());
}

TEST_CASE("format examples") {
  const Dims d = Dims::make(1, 2);
  CHECK(format_expr(sf(d, "z")) == "z");
  CHECK(format_expr(Superfunction(d)) == "0");
  CHECK(format_expr(sf(d, "-1/2*th1 + 3 - z*x1")) == "3 - 1/2*th1 - z*x1");
  CHECK(format_expr(sf(d, "-1")) == "-1");
}

TEST_CASE("parse errors carry positions") {
  const Dims d = Dims::make(1, 2);
  auto position_of = [&](const char* text) -> std::size_t {
    try {
      parse_expr(text, d);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error for " << text);
    return 0;
  };
  CHECK(position_of("z +") == 3);
  CHECK(position_of("z * ) ") == 4);
  CHECK(position_of("x2") == 0);
  CHECK(position_of("1 + th3") == 4);
  CHECK(position_of("w") == 0);
  CHECK(position_of("z^x1") == 2);
  CHECK(position_of("1/0") == 2);
  CHECK(position_of("(z") == 2);
  CHECK(position_of("z z") == 2);
  CHECK(position_of("x01") == 0);
}

TEST_CASE("format then parse is the identity") {
  for_dims(2, 3, [](const Dims& d) {
    RandomAlgebra r(d, 5);
    for (int k = 0; k < 50; ++k) {
      const Superfunction f = r.superfunction(4, 6);
      CHECK(parse_expr(format_expr(f), d) == f);
    }
  });
}
