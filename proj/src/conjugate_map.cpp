#include <collatz/conjugate_map.hpp>

#include <climits>
#include <stdexcept>

namespace collatz {

namespace mp = boost::multiprecision;

namespace {

// Value >= 1/2? Works for any representation of a value in [0, 1].
bool in_odd_branch(const Dyadic& x) {
    if (x.is_one()) return true;
    unsigned d = x.depth();
    return d > 0 && mp::bit_test(x.numerator(), d - 1);
}

} // namespace

Dyadic interval_step(const Dyadic& x, QMap q) {
    if (x.is_one())
        throw std::domain_error("interval_step: 1 is outside the domain");
    if (!in_odd_branch(x)) {
        if (x.is_zero()) return Dyadic();
        // x < 1/2 so the numerator fits one level up: doubling is a re-depth.
        return Dyadic(x.numerator(), x.depth() - 1).canonical();
    }
    return encode(step(decode(x), q));
}

Dyadic odd_branch_symbolic(const Dyadic& x) {
    Dyadic c = x.canonical();
    if (c.is_one() || !in_odd_branch(c))
        throw std::domain_error("odd_branch_symbolic: input must lie in [1/2, 1)");
    // Fraction digits of c are 1, a_1, ..., a_n (leading digit 1, trailing 1).
    const unsigned n = c.depth() - 1;
    auto a = [&](unsigned i) -> int {  // 1-based; 0 outside 1..n
        if (i < 1 || i > n) return 0;
        return mp::bit_test(c.numerator(), c.depth() - (i + 1)) ? 1 : 0;
    };
    // Generalized digits: a_0+a_1, a_1+a_2+1, a_2+a_3, ..., a_{n-1}+a_n, a_n.
    // Position 2 carries the +1; individual entries may reach 3 transiently.
    const unsigned width = std::max(n + 1, 2u);
    std::vector<int> gen(width);
    for (unsigned j = 1; j <= width; ++j)
        gen[j - 1] = a(j - 1) + a(j) + (j == 2 ? 1 : 0);
    // Resolve carries left to right: fraction position j is bit j-1 of the
    // reversed integer, so integer carries travel toward deeper positions.
    std::vector<int> digits;
    digits.reserve(width + 4);
    int carry = 0;
    for (std::size_t j = 0; j < gen.size() || carry; ++j) {
        int total = carry + (j < gen.size() ? gen[j] : 0);
        digits.push_back(total & 1);
        carry = total >> 1;
    }
    Natural num(0);
    for (int d : digits) {
        num <<= 1;
        if (d) num += 1;
    }
    return Dyadic(std::move(num), static_cast<unsigned>(digits.size())).canonical();
}

Dyadic bernoulli_shift(const Dyadic& x) {
    if (x.is_one())
        throw std::domain_error("bernoulli_shift: 1 is outside the domain");
    if (x.depth() == 0) return Dyadic();  // only 0 remains at depth 0
    Natural mask = (Natural(1) << (x.depth() - 1)) - 1;
    return Dyadic(x.numerator() & mask, x.depth() - 1).canonical();
}

OrbitRecord<Dyadic> interval_orbit(const Dyadic& start, QMap q,
                                   const IntervalOrbitOptions& opts) {
    Dyadic s = start.canonical();
    if (s.is_zero() || s.is_one())
        throw std::invalid_argument("interval_orbit: start must lie in (0, 1)");
    auto step_fn = [q](const Dyadic& v) { return interval_step(v, q); };
    auto too_deep = [&opts](const Dyadic& v) { return v.depth() > opts.max_depth; };
    auto rec = detail::walk_orbit<Dyadic>(s, step_fn, too_deep, opts.max_steps,
                                          opts.full_trajectory_limit,
                                          opts.checkpoint_stride);
    // Depth overflow is a resource cutoff, not a mathematical verdict.
    if (rec.verdict == OrbitVerdict::bound_exceeded)
        rec.verdict = OrbitVerdict::cutoff;
    if (!rec.cycle.empty()) {
        // Rotate to put the smallest decoded integer first, so the cycle
        // prints as the coded image of the integer-orbit cycle.
        std::size_t best = 0;
        Natural best_m = decode(rec.cycle[0]);
        for (std::size_t i = 1; i < rec.cycle.size(); ++i) {
            Natural mi = decode(rec.cycle[i]);
            if (mi < best_m) {
                best_m = std::move(mi);
                best = i;
            }
        }
        std::rotate(rec.cycle.begin(), rec.cycle.begin() + best, rec.cycle.end());
        for (const auto& v : rec.cycle)
            if (v == Dyadic(1, 1)) {
                rec.reached_primary_cycle = true;
                break;
            }
    }
    return rec;
}

namespace {

template <class Pred>
ScanReport scan_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t stride,
                      Exec exec, Pred ok) {
    ScanReport rep;
    if (hi < lo) return rep;
    unsigned long long failures = 0, checked = 0;
    unsigned long long first = ULLONG_MAX;
    const std::int64_t slo = static_cast<std::int64_t>(lo);
    const std::int64_t shi = static_cast<std::int64_t>(hi);
    const std::int64_t sstride = static_cast<std::int64_t>(stride);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for if (par) schedule(static) \
    reduction(+ : failures, checked) reduction(min : first)
    for (std::int64_t m = slo; m <= shi; m += sstride) {
        ++checked;
        if (!ok(static_cast<std::uint64_t>(m))) {
            ++failures;
            if (static_cast<unsigned long long>(m) < first)
                first = static_cast<unsigned long long>(m);
        }
    }
    rep.checked = checked;
    rep.failures = failures;
    rep.has_failure = failures != 0;
    if (rep.has_failure) rep.first_failure = Natural(first);
    return rep;
}

} // namespace

ScanReport scan_conjugacy(std::uint64_t m_max, QMap q, Exec exec) {
    return scan_range(1, m_max, 1, exec, [q](std::uint64_t m) {
        Natural big(m);
        return encode(step(big, q)) == interval_step(encode(big), q);
    });
}

ScanReport scan_symbolic(std::uint64_t m_max, Exec exec) {
    if (m_max < 2) return ScanReport();
    return scan_range(1, m_max - 1, 2, exec, [](std::uint64_t m) {
        Dyadic x = encode(Natural(m));
        return odd_branch_symbolic(x) == interval_step(x, QMap(3));
    });
}

ScanReport scan_bernoulli(std::uint64_t m_max, Exec exec) {
    return scan_range(1, m_max, 1, exec, [](std::uint64_t m) {
        Natural big(m);
        return encode(halving_shift(big)) == bernoulli_shift(encode(big));
    });
}

QuotientScan quotient_scan(unsigned depth, QMap q) {
    if (depth < 2)
        throw std::invalid_argument("quotient_scan: depth must be >= 2");
    if (depth > 24)
        throw std::invalid_argument("quotient_scan: depth too large to enumerate");
    QuotientScan rep;
    rep.depth = depth;
    rep.q = q;
    const std::uint64_t half = std::uint64_t(1) << (depth - 1);
    const std::uint64_t full = std::uint64_t(1) << depth;

    auto consider = [&](std::uint64_t nlo, bool odd_side) {
        Dyadic x1(Natural(nlo), depth);
        Dyadic x2(Natural(nlo + 2), depth);
        ExactRatio r = exact_quotient(interval_step(x1, q), interval_step(x2, q), x1, x2);
        ExactRatio ra = r.abs();
        if (!odd_side) {
            if (rep.even_pairs == 0 || ra < rep.even_min_abs) rep.even_min_abs = ra;
            if (rep.even_pairs == 0 || ra > rep.even_max_abs) rep.even_max_abs = ra;
            ++rep.even_pairs;
        } else {
            if (rep.odd_pairs == 0 || ra < rep.odd_min_abs) {
                rep.odd_min_abs = ra;
                rep.odd_min_signed = r;
                rep.odd_argmin_left = x1;
            }
            ++rep.odd_pairs;
        }
        if (rep.even_pairs + rep.odd_pairs == 1 || ra < rep.min_abs) rep.min_abs = ra;
    };

    for (std::uint64_t nlo = 1; nlo + 2 < half; nlo += 2) consider(nlo, false);
    for (std::uint64_t nlo = half + 1; nlo + 2 < full; nlo += 2) consider(nlo, true);
    return rep;
}

ExactRatio cycle_expansion_product(unsigned depth) {
    if (depth < 3)
        throw std::invalid_argument("cycle_expansion_product: depth must be >= 3");
    QMap q3;
    Natural quarter_num = Natural(1) << (depth - 2);
    Natural half_num = Natural(1) << (depth - 1);
    Dyadic quarter(quarter_num, depth);
    Dyadic quarter_r(quarter_num + 1, depth);
    Dyadic half(half_num, depth);
    Dyadic half_r(half_num + 1, depth);
    ExactRatio at_quarter = exact_quotient(interval_step(quarter, q3), interval_step(quarter_r, q3),
                                           quarter, quarter_r);
    ExactRatio at_half = exact_quotient(interval_step(half, q3), interval_step(half_r, q3),
                                        half, half_r);
    return at_quarter * at_half;
}

ProbeReport left_limit_probe(const Dyadic& x0, unsigned k_max, QMap q) {
    Dyadic c = x0.canonical();
    if (c.is_zero() || c.is_one())
        throw std::invalid_argument("left_limit_probe: x0 must lie in (0, 1)");
    ProbeReport rep;
    rep.x0 = c;
    rep.x0_odd_branch = in_odd_branch(c);
    rep.value_at_x0 = interval_step(c, q);
    rep.steps.reserve(k_max);
    for (unsigned k = 1; k <= k_max; ++k) {
        // Replace the final 1 digit with 0 and append k ones: x0 - 2^-(d+k).
        Dyadic xk((c.numerator() << k) - 1, c.depth() + k);
        ProbeStep st;
        st.k = k;
        st.odd_branch = in_odd_branch(xk);
        st.value = interval_step(xk, q);
        st.x = std::move(xk);
        if (st.odd_branch != rep.x0_odd_branch) rep.branch_changed = true;
        rep.steps.push_back(std::move(st));
    }
    return rep;
}

DiagonalScan below_diagonal_scan(unsigned depth, QMap q, Exec exec) {
    if (depth < 1 || depth > 24)
        throw std::invalid_argument("below_diagonal_scan: depth out of range");
    DiagonalScan rep;
    rep.depth = depth;
    rep.q = q;
    unsigned long long above = 0, on = 0, below = 0, checked = 0;
    unsigned long long min_above = ULLONG_MAX;
    const std::int64_t hi = (std::int64_t(1) << depth) - 1;
    const bool par = exec == Exec::parallel;
#pragma omp parallel for if (par) schedule(static) \
    reduction(+ : above, on, below, checked) reduction(min : min_above)
    for (std::int64_t m = 1; m <= hi; m += 2) {
        Dyadic x = encode(Natural(m));
        Dyadic y = interval_step(x, q);
        ++checked;
        if (y > x) {
            ++above;
            if (static_cast<unsigned long long>(m) < min_above)
                min_above = static_cast<unsigned long long>(m);
        } else if (y == x) {
            ++on;
        } else {
            ++below;
        }
    }
    rep.checked = checked;
    rep.above = above;
    rep.on = on;
    rep.below = below;
    if (min_above != ULLONG_MAX) {
        rep.has_above = true;
        rep.min_above_m = Natural(min_above);
        rep.min_above_x = encode(rep.min_above_m);
    }
    return rep;
}

} // namespace collatz
