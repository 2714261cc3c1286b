#include <doctest.h>

#include <collatz/collatz_core.hpp>

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

using namespace collatz;

namespace {

// Plain uint64 reference walker, kept deliberately separate from the library
// code: one accelerated step is (q*m + 1)/2 on odd, m/2 on even. Safe for
// q = 3 and m well below 2^62.
struct RefOrbit {
    std::vector<std::uint64_t> trajectory;
    std::vector<std::uint64_t> cycle;
    std::uint64_t steps = 0;
};

RefOrbit ref_orbit(std::uint64_t start, std::uint64_t q) {
    RefOrbit out;
    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    std::uint64_t cur = start, pos = 0;
    seen[cur] = 0;
    out.trajectory.push_back(cur);
    for (;;) {
        std::uint64_t next = (cur % 2 == 0) ? cur / 2 : (q * cur + 1) / 2;
        ++pos;
        auto it = seen.find(next);
        if (it != seen.end()) {
            out.steps = pos;
            std::uint64_t len = pos - it->second;
            std::uint64_t c = next;
            for (std::uint64_t i = 0; i < len; ++i) {
                out.cycle.push_back(c);
                c = (c % 2 == 0) ? c / 2 : (q * c + 1) / 2;
            }
            std::rotate(out.cycle.begin(),
                        std::min_element(out.cycle.begin(), out.cycle.end()),
                        out.cycle.end());
            return out;
        }
        seen[next] = pos;
        out.trajectory.push_back(next);
        cur = next;
    }
}

} // namespace

TEST_CASE("q parameter must be odd and at least 3") {
    CHECK(QMap(3).value() == 3);
    CHECK(QMap(9).value() == 9);
    CHECK_THROWS_AS(QMap(2), std::invalid_argument);
    CHECK_THROWS_AS(QMap(1), std::invalid_argument);
    CHECK_THROWS_AS(QMap(0), std::invalid_argument);
}

TEST_CASE("single steps") {
    QMap q3(3), q5(5), q7(7);
    CHECK(step(3, q3) == 5);
    CHECK(step(5, q3) == 8);
    CHECK(step(8, q3) == 4);
    CHECK(step(0, q3) == 0);
    CHECK(step(1, q5) == 3);
    CHECK(step(7, q5) == 18);
    CHECK(step(1, q7) == 4);
    CHECK(step(3, q7) == 11);
    CHECK(halving_shift(10) == 5);
    CHECK(halving_shift(11) == 5);
    CHECK(halving_shift(1) == 0);
    CHECK(halving_shift(0) == 0);
}

TEST_CASE("orbit of 3 matches the worked example") {
    auto rec = orbit(3);
    REQUIRE(rec.verdict == OrbitVerdict::reached_cycle);
    CHECK(rec.trajectory == std::vector<Natural>{3, 5, 8, 4, 2, 1});
    CHECK(rec.steps == 6);
    CHECK(rec.cycle == std::vector<Natural>{1, 2});
    CHECK(rec.peak == 8);
    CHECK(rec.reached_primary_cycle);
    CHECK_FALSE(rec.truncated);
}

TEST_CASE("orbit from inside the cycle") {
    auto rec = orbit(1);
    CHECK(rec.steps == 2);
    CHECK(rec.cycle == std::vector<Natural>{1, 2});
    CHECK(rec.trajectory == std::vector<Natural>{1, 2});
}

TEST_CASE("orbit of 0 is a fixed point") {
    auto rec = orbit(0);
    REQUIRE(rec.verdict == OrbitVerdict::reached_cycle);
    CHECK(rec.steps == 1);
    CHECK(rec.cycle == std::vector<Natural>{0});
}

TEST_CASE("q=5 finds the short cycle through 1") {
    auto rec = orbit(1, QMap(5));
    REQUIRE(rec.verdict == OrbitVerdict::reached_cycle);
    CHECK(rec.steps == 5);
    CHECK(rec.cycle == std::vector<Natural>{1, 3, 8, 4, 2});
}

TEST_CASE("step budget produces a cutoff verdict") {
    OrbitOptions opts;
    opts.max_steps = 3;
    auto rec = orbit(7, QMap(3), opts);
    CHECK(rec.verdict == OrbitVerdict::cutoff);
    CHECK(rec.steps == 3);
    CHECK(rec.trajectory == std::vector<Natural>{7, 11, 17, 26});
    CHECK(rec.peak == 26);
}

TEST_CASE("magnitude bound aborts the walk") {
    OrbitOptions opts;
    opts.magnitude_bound = 100;
    auto rec = orbit(27, QMap(3), opts);
    CHECK(rec.verdict == OrbitVerdict::bound_exceeded);
    CHECK(rec.steps == 6);
    CHECK(rec.peak == 107);  // 27 41 62 31 47 71 107
    CHECK(rec.trajectory == std::vector<Natural>{27, 41, 62, 31, 47, 71});
}

TEST_CASE("zero bound disables the abort") {
    OrbitOptions opts;
    opts.magnitude_bound = 0;
    auto rec = orbit(27, QMap(3), opts);
    CHECK(rec.verdict == OrbitVerdict::reached_cycle);
    CHECK(rec.peak == 4616);
}

TEST_CASE("trajectory cap and checkpoints") {
    OrbitOptions opts;
    opts.full_trajectory_limit = 4;
    opts.checkpoint_stride = 2;
    auto rec = orbit(3, QMap(3), opts);
    CHECK(rec.truncated);
    CHECK(rec.trajectory == std::vector<Natural>{3, 5, 8, 4});
    CHECK(rec.steps == 6);  // the walk itself is not cut short
    CHECK(rec.cycle == std::vector<Natural>{1, 2});
    REQUIRE(rec.checkpoints.size() == 3);
    CHECK(rec.checkpoints[0] == std::pair<std::uint64_t, Natural>{0, 3});
    CHECK(rec.checkpoints[1] == std::pair<std::uint64_t, Natural>{2, 8});
    CHECK(rec.checkpoints[2] == std::pair<std::uint64_t, Natural>{4, 2});
}

TEST_CASE("agrees with the uint64 reference walker") {
    for (std::uint64_t m = 1; m <= 2000; ++m) {
        auto ref = ref_orbit(m, 3);
        auto rec = orbit(Natural(m));
        REQUIRE(rec.verdict == OrbitVerdict::reached_cycle);
        CHECK(rec.steps == ref.steps);
        REQUIRE(rec.cycle.size() == ref.cycle.size());
        for (std::size_t i = 0; i < ref.cycle.size(); ++i)
            CHECK(rec.cycle[i] == ref.cycle[i]);
    }
    // spot-check a q=5 start that settles in a cycle away from 1
    auto ref = ref_orbit(13, 5);
    auto rec = orbit(13, QMap(5));
    CHECK(rec.steps == ref.steps);
    CHECK(rec.cycle.size() == ref.cycle.size());
    CHECK_FALSE(rec.reached_primary_cycle);
}
