#include <collatz/coding.hpp>

#include <stdexcept>

namespace collatz {

Dyadic encode(const Natural& m) {
    if (m.sign() < 0)
        throw std::invalid_argument("encode: negative input");
    unsigned width = bit_length(m);
    return Dyadic(reverse_bits(m, width), width);
}

Natural decode(const Dyadic& x) {
    if (x.is_one())
        throw std::domain_error("decode: 1 is not a coded point");
    Dyadic c = x.canonical();
    return reverse_bits(c.numerator(), c.depth());
}

} // namespace collatz
