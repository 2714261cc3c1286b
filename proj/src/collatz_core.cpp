#include <collatz/collatz_core.hpp>

#include <stdexcept>

namespace collatz {

QMap::QMap(unsigned q) : q_(q) {
    if (q < 3 || q % 2 == 0)
        throw std::invalid_argument("QMap: q must be odd and >= 3");
}

Natural step(const Natural& m, QMap q) {
    if (m.sign() < 0)
        throw std::invalid_argument("step: negative input");
    if (boost::multiprecision::bit_test(m, 0))
        return (m * q.value() + 1) >> 1;
    return m >> 1;
}

Natural halving_shift(const Natural& m) {
    if (m.sign() < 0)
        throw std::invalid_argument("halving_shift: negative input");
    return m >> 1;
}

OrbitRecord<Natural> orbit(const Natural& start, QMap q, const OrbitOptions& opts) {
    if (start.sign() < 0)
        throw std::invalid_argument("orbit: negative start");
    auto step_fn = [q](const Natural& v) { return step(v, q); };
    auto out_of_bounds = [&opts](const Natural& v) {
        return !opts.magnitude_bound.is_zero() && v > opts.magnitude_bound;
    };
    auto rec = detail::walk_orbit<Natural>(start, step_fn, out_of_bounds,
                                           opts.max_steps, opts.full_trajectory_limit,
                                           opts.checkpoint_stride);
    for (const auto& v : rec.cycle)
        if (v == 1) {
            rec.reached_primary_cycle = true;
            break;
        }
    return rec;
}

} // namespace collatz
