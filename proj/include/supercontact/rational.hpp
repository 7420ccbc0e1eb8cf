#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace supercontact {

/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rat = mpq_class;

/// "p/q" form, always with an explicit denominator ("0/1", "-3/2", "5/1").
std::string to_pq_string(const Rat& r);

/// Short form used inside expressions: "5", "-3/2".
std::string to_short_string(const Rat& r);

/// Accepts "p" or "p/q" with an optional leading '-'. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rat parse_rational(std::string_view text);

inline int sign_of(int parity) { return (parity & 1) ? -1 : 1; }

}  // namespace supercontact
