#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace qdl {

/** Exact rational number.
 *
 * All verdicts in this library are decided with exact arithmetic; no
 * floating point is used anywhere on a decision path. Values are kept in
 * canonical reduced form (positive denominator, gcd 1) by the backend.
 */
using Rat = boost::multiprecision::mpq_rational;

/// Parse "p/q" or "p" (q > 0 after normalization). Throws Error{ParseError}.
Rat parse_rat(const std::string& text);

/// Canonical rendering: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& value);

inline bool in_unit_interval(const Rat& value) { return value >= 0 && value <= 1; }

/// Throws Error{OutOfRange} mentioning `what` unless value is in [0,1].
void require_unit_interval(const Rat& value, const char* what);

}  // namespace qdl
