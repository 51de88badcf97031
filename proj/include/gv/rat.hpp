#pragma once

#include <gmpxx.h>
#include <string>

namespace gv {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator), which is exactly the invariant we need: every
// effectivity/extremality decision below is a sign test.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "3/2", "-7", "0". Throws std::invalid_argument on malformed input
// or zero denominator.
Rat rat_parse(const std::string& s);

// "p/q" when q != 1, else "p".
std::string rat_str(const Rat& r);

}  // namespace gv
