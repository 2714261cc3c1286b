#pragma once

#include <collatz/dyadic.hpp>
#include <collatz/natural.hpp>

namespace collatz {

// Bit-reversal coding between nonnegative integers and dyadic points:
// fraction digit j of encode(m) is bit j-1 of m, so the low bit of m becomes
// the leading fraction digit. encode(0) == 0, and every positive m maps to a
// canonical point in (0, 1) whose expansion ends in 1.
Dyadic encode(const Natural& m);

// Inverse of encode on its image. Any representation of a value in [0, 1) is
// accepted (the canonical form is what gets reversed); the value 1 is the one
// point of [0, 1] with no preimage and is rejected with std::domain_error.
Natural decode(const Dyadic& x);

} // namespace collatz
