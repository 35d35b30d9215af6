#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace mopf {

/// Exact arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses "n" or "n/d" (optional leading '-'); returns nullopt on malformed
/// input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string format_rational(const Rational& q);

}  // namespace mopf
