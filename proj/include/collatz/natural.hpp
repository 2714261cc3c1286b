#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace collatz {

// Arbitrary-precision nonnegative integer. Signed under the hood, but every
// public operation in this library keeps its values >= 0.
using Natural = boost::multiprecision::cpp_int;

// Number of bits needed to write n in binary; bit_length(0) == 0.
inline unsigned bit_length(const Natural& n) {
    if (n.is_zero()) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
}

namespace detail {

// Reverse the low 64 bits of x (classic swap cascade).
inline std::uint64_t reverse_u64(std::uint64_t x) {
    x = ((x & 0x5555555555555555ULL) << 1) | ((x >> 1) & 0x5555555555555555ULL);
    x = ((x & 0x3333333333333333ULL) << 2) | ((x >> 2) & 0x3333333333333333ULL);
    x = ((x & 0x0F0F0F0F0F0F0F0FULL) << 4) | ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL);
    x = ((x & 0x00FF00FF00FF00FFULL) << 8) | ((x >> 8) & 0x00FF00FF00FF00FFULL);
    x = ((x & 0x0000FFFF0000FFFFULL) << 16) | ((x >> 16) & 0x0000FFFF0000FFFFULL);
    return (x << 32) | (x >> 32);
}

} // namespace detail

// Mirror the low `width` bits of n: bit i of the result is bit width-1-i of n.
// Requires bit_length(n) <= width.
inline Natural reverse_bits(const Natural& n, unsigned width) {
    if (bit_length(n) > width)
        throw std::invalid_argument("reverse_bits: value wider than the requested width");
    if (width == 0) return Natural(0);
    if (width <= 64) {
        auto v = n.convert_to<std::uint64_t>();
        return Natural(detail::reverse_u64(v) >> (64 - width));
    }
    Natural out(0);
    for (unsigned i = 0; i < width; ++i)
        if (boost::multiprecision::bit_test(n, i))
            boost::multiprecision::bit_set(out, width - 1 - i);
    return out;
}

} // namespace collatz
