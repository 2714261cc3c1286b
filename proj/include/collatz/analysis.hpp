#pragma once

#include <collatz/interval_dynamics.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace collatz {

// Scan sizes for one verification run. A zero bound skips its check.
struct VerifyBounds {
    std::uint64_t coding_m_max = 0;
    unsigned coding_depth_max = 0;
    std::uint64_t conjugacy_m_max = 0;
    std::uint64_t symbolic_m_max = 0;
    std::uint64_t bernoulli_m_max = 0;
    unsigned quotient_depth = 0;
    unsigned diagonal_depth = 0;
    unsigned graph_depth_max = 0;
    unsigned span_depth_max = 0;
    unsigned probe_k_max = 0;

    static VerifyBounds small_scale();  // seconds
    static VerifyBounds full_scale();   // tens of seconds
    static VerifyBounds none();         // everything skipped
};

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string name;
    // Stable identifier of the mathematical claim the check exercises.
    std::string claim;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;  // deterministic key=value text, no timings
};

struct VerificationReport {
    QMap q;
    std::string scale;
    VerifyBounds bounds;
    std::vector<CheckResult> checks;

    bool all_passed() const;  // no FAIL; SKIPPED does not count against
    std::string to_text() const;
};

// Runs the fixed check sequence at the given bounds. Failures become report
// entries, never exceptions. Byte-identical output for identical inputs.
VerificationReport verify_all(QMap q, const VerifyBounds& bounds,
                              const std::string& scale_name, Exec exec = Exec::serial);

// Exact graph points of the odd branch restricted to [lo, hi), for every
// canonical x of depth <= sample_depth. Window must satisfy 1/2 <= lo < hi <= 1.
struct WindowPoint {
    Dyadic x;
    Dyadic y;
};
std::vector<WindowPoint> window_extract(const Dyadic& lo, const Dyadic& hi,
                                        unsigned sample_depth, QMap q = QMap());

// Affine-normalizes both point sets (x-range to [0,1], y scaled by the same
// factor from its minimum) and returns the symmetric maximum nearest-neighbour
// distance. A measurement, not an assertion; 0 for identical windows.
double window_compare(const std::vector<WindowPoint>& w1,
                      const std::vector<WindowPoint>& w2);

enum class DiagonalClass { strictly_below, touches_diagonal, rises_above };

struct DiagonalReport {
    DiagonalScan scan;
    DiagonalClass classification = DiagonalClass::strictly_below;
};
DiagonalReport diagonal_classification(QMap q, unsigned depth, Exec exec = Exec::serial);

} // namespace collatz
