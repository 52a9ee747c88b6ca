#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tadpole {

/// Exact arbitrary-precision rational; every weight and cost in the library uses it.
using Rational = mpq_class;

/// num/den in lowest terms.
Rational make_rational(long num, long den);

/// Renders as `p/q`, always with an explicit denominator.
std::string format_rational(const Rational& r);

/// Accepts `p/q` or a bare integer `p`. Throws Error(MalformedLine) on bad syntax.
Rational parse_rational(std::string_view text);

/// Fixed-point rendering for display only; never used for comparisons.
std::string format_decimal(const Rational& r, int places = 6);

}  // namespace tadpole
