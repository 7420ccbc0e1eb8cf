#pragma once

#include <string>

#include "supercontact/expr.hpp"
#include "supercontact/vector_field.hpp"

namespace testing {

using namespace supercontact;

inline Superfunction sf(const Dims& d, const std::string& text) { return parse_expr(text, d); }

inline SuperVectorField del(const Dims& d, CoordId c) { return SuperVectorField::partial(d, c); }

/// Runs `body(dims)` for every (l, n) with l <= max_l, 1 <= n <= max_n.
template <class F>
void for_dims(int max_l, int max_n, F&& body) {
  for (int l = 0; l <= max_l; ++l)
    for (int n = 1; n <= max_n; ++n) body(Dims::make(l, n));
}

}  // namespace testing
