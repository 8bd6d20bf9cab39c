#pragma once

#include <gmpxx.h>

#include <string>

namespace linelab {

// Exact rational arithmetic for every distance computation; no floating point
// anywhere in the library.
using Rat = mpq_class;

// Parses "p" or "p/q" (q > 0 after canonicalization). Throws std::runtime_error
// on malformed input or a zero denominator.
Rat rat_parse(const std::string& s);

// Renders canonically: "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& q);

}  // namespace linelab
