// Times each OpenMP scan kernel against its serial reference and checks that
// both modes agree. Optional argv[1] scales the default workload.

#include <collatz/analysis.hpp>

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <string>

using namespace collatz;

namespace {

struct Timing {
    double serial = 0.0;
    double parallel = 0.0;
    bool agree = false;
};

template <class Fn>
Timing time_modes(Fn&& fn) {
    Timing t;
    double t0 = omp_get_wtime();
    auto serial_result = fn(Exec::serial);
    double t1 = omp_get_wtime();
    auto parallel_result = fn(Exec::parallel);
    double t2 = omp_get_wtime();
    t.serial = t1 - t0;
    t.parallel = t2 - t1;
    t.agree = serial_result == parallel_result;
    return t;
}

void report(const char* name, const Timing& t) {
    double speedup = t.parallel > 0.0 ? t.serial / t.parallel : 0.0;
    std::printf("%-20s %10.3fs %10.3fs %8.2fx   %s\n", name, t.serial, t.parallel,
                speedup, t.agree ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    double scale = 1.0;
    if (argc > 1) scale = std::atof(argv[1]);
    if (scale <= 0.0) {
        std::fprintf(stderr, "usage: %s [scale>0]\n", argv[0]);
        return 2;
    }

    const auto m_max = static_cast<std::uint64_t>(500000 * scale);
    const unsigned diag_depth = 14;
    const auto residue_m_max = static_cast<std::uint64_t>(200000 * scale);
    QMap q3(3);

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-20s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    report("conjugacy_scan", time_modes([&](Exec e) {
        auto r = scan_conjugacy(m_max, q3, e);
        return std::pair(r.checked, r.failures);
    }));
    report("symbolic_scan", time_modes([&](Exec e) {
        auto r = scan_symbolic(m_max, e);
        return std::pair(r.checked, r.failures);
    }));
    report("bernoulli_scan", time_modes([&](Exec e) {
        auto r = scan_bernoulli(m_max, e);
        return std::pair(r.checked, r.failures);
    }));
    report("diagonal_scan", time_modes([&](Exec e) {
        auto r = below_diagonal_scan(diag_depth, q3, e);
        return std::tuple(r.above, r.on, r.below);
    }));
    report("residue_scan", time_modes([&](Exec e) {
        auto r = scan_residue_soundness(residue_m_max, 8, q3, e);
        return std::pair(r.checked, r.failures);
    }));
    return 0;
}
