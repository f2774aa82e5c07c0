#pragma once
/* Exact rationals via GMP. All arithmetic in the library is exact; no floats. */

#include <gmpxx.h>

#include <string>

namespace ncx {

using Q = mpq_class;

// Parses "n" or "n/d" (optional leading '-'); canonicalizes to lowest terms,
// denominator positive. Throws precondition_error on malformed input or d = 0.
Q parse_q(const std::string& s);

// Canonical rendering: "n" when the denominator is 1, else "n/d" in lowest terms.
std::string q_str(const Q& q);

}  // namespace ncx
