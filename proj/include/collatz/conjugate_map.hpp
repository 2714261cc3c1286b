#pragma once

#include <collatz/coding.hpp>
#include <collatz/collatz_core.hpp>
#include <collatz/dyadic.hpp>
#include <collatz/exec.hpp>

#include <cstdint>
#include <vector>

namespace collatz {

// The interval map conjugate to the integer step under the bit-reversal
// coding: doubling on [0, 1/2), and code(step(decode(x))) on [1/2, 1).
// Input may be any representation of a value in [0, 1); 1 is rejected.
// Output is canonical.
Dyadic interval_step(const Dyadic& x, QMap q = QMap());

// Independent digit-algebra route for the odd branch, q = 3 only: builds the
// generalized digit string and resolves carries left to right (fraction
// position j spills into position j+1). Never calls decode/step/encode, so it
// can cross-check interval_step. Input value must lie in [1/2, 1).
Dyadic odd_branch_symbolic(const Dyadic& x);

// Doubling map 2x mod 1: drops the leading fraction digit. Rejects 1.
Dyadic bernoulli_shift(const Dyadic& x);

struct IntervalOrbitOptions {
    std::uint64_t max_steps = 100000;
    // Iterates whose canonical depth exceeds this end the walk with a cutoff
    // verdict (the value is exact but too deep to keep expanding).
    unsigned max_depth = 4096;
    std::uint64_t full_trajectory_limit = 10000;
    std::uint64_t checkpoint_stride = 1024;
};

// Orbit of x under interval_step; start must be a value in (0, 1). The cycle,
// when found, is rotated so the member with the smallest decoded integer
// comes first (mirroring the integer-orbit rotation through the coding).
OrbitRecord<Dyadic> interval_orbit(const Dyadic& start, QMap q = QMap(),
                                   const IntervalOrbitOptions& opts = IntervalOrbitOptions());

// Bulk equality scans. All three compare two independently computed routes
// exactly; `first_failure` is the smallest failing m.
struct ScanReport {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    bool has_failure = false;
    Natural first_failure;
};

// encode(step(m, q)) == interval_step(encode(m), q) for m in 1..m_max.
ScanReport scan_conjugacy(std::uint64_t m_max, QMap q, Exec exec);
// odd_branch_symbolic(encode(m)) == interval_step(encode(m)) for odd m < m_max.
ScanReport scan_symbolic(std::uint64_t m_max, Exec exec);
// encode(halving_shift(m)) == bernoulli_shift(encode(m)) for m in 1..m_max.
ScanReport scan_bernoulli(std::uint64_t m_max, Exec exec);

// Difference quotients of neighbouring canonical points at one resolution:
// pairs ((2j+1)/2^d, (2j+3)/2^d) that lie in the same branch. Minima are by
// absolute value; ties resolve to the smaller left endpoint.
struct QuotientScan {
    unsigned depth = 0;
    QMap q;
    std::uint64_t even_pairs = 0;
    std::uint64_t odd_pairs = 0;
    // Doubling branch: expected constant 2, but measured, not assumed.
    ExactRatio even_min_abs;
    ExactRatio even_max_abs;
    // Odd branch extrema with the attaining pair's left endpoint.
    ExactRatio odd_min_abs;
    ExactRatio odd_min_signed;
    Dyadic odd_argmin_left;
    ExactRatio min_abs;  // over both branches
};
QuotientScan quotient_scan(unsigned depth, QMap q = QMap());

// Product of the one-sided difference quotients at the 2-cycle points 1/4 and
// 1/2 (right-hand neighbours at the given resolution), for the q=3 map.
ExactRatio cycle_expansion_product(unsigned depth);

// Left-limit probe: x_k keeps x0's digits but replaces the final 1 with 0 and
// appends k ones, i.e. x_k = x0 - 2^-(depth(x0)+k). Records the map value at
// each x_k and whether any probe point fell into the other branch.
struct ProbeStep {
    unsigned k = 0;
    Dyadic x;
    Dyadic value;
    bool odd_branch = false;
};
struct ProbeReport {
    Dyadic x0;
    Dyadic value_at_x0;
    bool x0_odd_branch = false;
    std::vector<ProbeStep> steps;
    bool branch_changed = false;
};
ProbeReport left_limit_probe(const Dyadic& x0, unsigned k_max, QMap q = QMap());

// Classifies every canonical point of depth <= depth in [1/2, 1) against the
// diagonal y = x. The witness is the smallest decoded integer found above.
struct DiagonalScan {
    unsigned depth = 0;
    QMap q;
    std::uint64_t checked = 0;
    std::uint64_t above = 0;
    std::uint64_t on = 0;
    std::uint64_t below = 0;
    bool has_above = false;
    Natural min_above_m;
    Dyadic min_above_x;
};
DiagonalScan below_diagonal_scan(unsigned depth, QMap q = QMap(), Exec exec = Exec::serial);

} // namespace collatz
