#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liecohom {

/// Exact rational number. GMP keeps it canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Parses "p" or "p/q" (optional leading '-', decimal digits only).
/// Throws std::invalid_argument on anything else or on q == 0.
Scalar parse_rational(std::string_view text);

/// Canonical string: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

}  // namespace liecohom
