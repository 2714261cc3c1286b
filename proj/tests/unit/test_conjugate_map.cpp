#include <doctest.h>

#include <collatz/conjugate_map.hpp>

#include <stdexcept>
#include <vector>

using namespace collatz;

TEST_CASE("interval map values at small points") {
    CHECK(interval_step(Dyadic(1, 2)) == Dyadic(1, 1));   // doubling branch
    CHECK(interval_step(Dyadic(1, 1)) == Dyadic(1, 2));
    CHECK(interval_step(Dyadic(3, 2)) == Dyadic(5, 3));
    CHECK(interval_step(Dyadic(5, 3)) == Dyadic(1, 4));
    CHECK(interval_step(Dyadic(7, 3)) == Dyadic(13, 4));
    CHECK(interval_step(Dyadic(9, 4)) == Dyadic(7, 4));
    CHECK(interval_step(Dyadic(11, 4)) == Dyadic(5, 5));
    CHECK(interval_step(Dyadic(0, 0)) == Dyadic(0, 0));
    // representation-independent
    CHECK(interval_step(Dyadic(6, 3)) == Dyadic(5, 3));
    CHECK_THROWS_AS(interval_step(Dyadic(1, 0)), std::domain_error);
}

TEST_CASE("other multipliers move the odd branch") {
    CHECK(interval_step(Dyadic(1, 1), QMap(5)) == Dyadic(3, 2));
    CHECK(interval_step(Dyadic(3, 2), QMap(7)) == Dyadic(13, 4));
    // doubling branch ignores q
    CHECK(interval_step(Dyadic(1, 2), QMap(7)) == Dyadic(1, 1));
}

TEST_CASE("digit route matches the worked cases") {
    CHECK(odd_branch_symbolic(parse_dyadic("0.11b")) == parse_dyadic("0.101b"));
    CHECK(odd_branch_symbolic(parse_dyadic("0.101b")) == parse_dyadic("0.0001b"));
    CHECK(odd_branch_symbolic(parse_dyadic("0.1b")) == parse_dyadic("0.01b"));
    CHECK(odd_branch_symbolic(parse_dyadic("0.111b")) == parse_dyadic("0.1101b"));
    CHECK(odd_branch_symbolic(parse_dyadic("0.1001b")) == parse_dyadic("0.0111b"));
    CHECK_THROWS_AS(odd_branch_symbolic(Dyadic(1, 2)), std::domain_error);
    CHECK_THROWS_AS(odd_branch_symbolic(Dyadic(1, 0)), std::domain_error);
}

TEST_CASE("digit route equals the conjugation route on odd codes") {
    QMap q3;
    for (std::uint64_t m = 1; m < 2000; m += 2) {
        Dyadic x = encode(Natural(m));
        CHECK(odd_branch_symbolic(x) == interval_step(x, q3));
    }
}

TEST_CASE("digit shift drops the leading fraction digit") {
    CHECK(bernoulli_shift(Dyadic(13, 4)) == Dyadic(5, 3));
    CHECK(bernoulli_shift(Dyadic(1, 1)) == Dyadic(0, 0));
    CHECK(bernoulli_shift(Dyadic(3, 2)) == Dyadic(1, 1));
    CHECK(bernoulli_shift(Dyadic(0, 0)) == Dyadic(0, 0));
    CHECK(bernoulli_shift(Dyadic(1, 4)) == Dyadic(1, 3));
    CHECK_THROWS_AS(bernoulli_shift(Dyadic(1, 0)), std::domain_error);
    for (std::uint64_t m = 0; m <= 500; ++m)
        CHECK(encode(halving_shift(Natural(m))) == bernoulli_shift(encode(Natural(m))));
}

TEST_CASE("interval orbit mirrors the integer orbit") {
    auto rec = interval_orbit(encode(3));
    REQUIRE(rec.verdict == OrbitVerdict::reached_cycle);
    CHECK(rec.steps == 6);
    std::vector<Dyadic> want{Dyadic(3, 2), Dyadic(5, 3), Dyadic(1, 4),
                             Dyadic(1, 3), Dyadic(1, 2), Dyadic(1, 1)};
    CHECK(rec.trajectory == want);
    // cycle leads with the code of the smallest integer: 0.5 = code of 1
    REQUIRE(rec.cycle.size() == 2);
    CHECK(rec.cycle[0] == Dyadic(1, 1));
    CHECK(rec.cycle[1] == Dyadic(1, 2));
    CHECK(rec.reached_primary_cycle);
    CHECK_THROWS_AS(interval_orbit(Dyadic(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(interval_orbit(Dyadic(1, 0)), std::invalid_argument);
}

TEST_CASE("bulk scans find no disagreements") {
    auto conj = scan_conjugacy(3000, QMap(3), Exec::serial);
    CHECK(conj.checked == 3000);
    CHECK(conj.failures == 0);
    CHECK_FALSE(conj.has_failure);

    auto sym = scan_symbolic(3000, Exec::serial);
    CHECK(sym.failures == 0);
    auto ber = scan_bernoulli(3000, Exec::serial);
    CHECK(ber.failures == 0);

    // parallel mode is a pure re-execution of the same predicate
    auto conj_p = scan_conjugacy(3000, QMap(3), Exec::parallel);
    CHECK(conj_p.checked == conj.checked);
    CHECK(conj_p.failures == conj.failures);
}

TEST_CASE("difference quotient scan at small depths") {
    auto d3 = quotient_scan(3);
    CHECK(d3.even_pairs == 1);
    CHECK(d3.odd_pairs == 1);
    CHECK(d3.even_min_abs == ExactRatio(2, 1));
    CHECK(d3.even_max_abs == ExactRatio(2, 1));
    CHECK(d3.odd_min_abs == ExactRatio(3, 1));  // (5/8, 7/8): 1/16 -> 13/16
    CHECK(d3.odd_min_signed == ExactRatio(3, 1));
    CHECK(d3.odd_argmin_left == Dyadic(5, 3));
    CHECK(d3.min_abs == ExactRatio(2, 1));

    auto d4 = quotient_scan(4);
    CHECK(d4.even_min_abs == ExactRatio(2, 1));
    CHECK(d4.odd_min_abs == ExactRatio(9, 4));
    CHECK(d4.odd_min_signed == ExactRatio(-9, 4));
    CHECK(d4.odd_argmin_left == Dyadic(9, 4));  // pair (9/16, 11/16)
    CHECK(d4.min_abs == ExactRatio(2, 1));

    // depth 5 is where the odd branch dips below the doubling slope
    auto d5 = quotient_scan(5);
    CHECK(d5.odd_min_abs == ExactRatio(3, 4));
    CHECK(d5.odd_argmin_left == Dyadic(17, 5));  // (17/32, 19/32)
    CHECK(d5.min_abs == ExactRatio(3, 4));
    CHECK_THROWS_AS(quotient_scan(1), std::invalid_argument);
}

TEST_CASE("expansion product at the 2-cycle") {
    CHECK(cycle_expansion_product(12) == ExactRatio(6, 1));
    CHECK(cycle_expansion_product(4) == ExactRatio(6, 1));
    CHECK(cycle_expansion_product(8) == ExactRatio(6, 1));
    // at depth 3 the right neighbour of 1/2 is 5/8, whose value drops
    CHECK(cycle_expansion_product(3) == ExactRatio(-3, 1));
    CHECK_THROWS_AS(cycle_expansion_product(2), std::invalid_argument);
}

TEST_CASE("left limit probe at 3/4") {
    auto rep = left_limit_probe(Dyadic(3, 2), 12);
    CHECK(rep.x0 == Dyadic(3, 2));
    CHECK(rep.value_at_x0 == Dyadic(5, 3));
    CHECK(rep.x0_odd_branch);
    CHECK_FALSE(rep.branch_changed);
    REQUIRE(rep.steps.size() == 12);
    for (const auto& s : rep.steps) {
        CHECK(s.x == dyadic_sub(Dyadic(3, 2), Dyadic(1, 2 + s.k)));
        CHECK(s.odd_branch);
        // g(x_k) = 1/4 - 3*2^-(k+3), exactly
        Natural num = (Natural(1) << (s.k + 1)) - 3;
        CHECK(s.value == Dyadic(num, s.k + 3));
    }
}

TEST_CASE("probe points can slip into the other branch") {
    auto rep = left_limit_probe(Dyadic(1, 1), 6);
    CHECK(rep.value_at_x0 == Dyadic(1, 2));
    CHECK(rep.branch_changed);  // everything left of 1/2 doubles instead
    for (const auto& s : rep.steps) CHECK_FALSE(s.odd_branch);
}

TEST_CASE("diagonal census") {
    auto q3 = below_diagonal_scan(10, QMap(3), Exec::serial);
    CHECK(q3.checked == 512);  // odd m < 2^10
    CHECK(q3.above == 0);
    CHECK(q3.on == 0);  // q*m+1 = 2m has no odd solution, so no fixed points
    CHECK(q3.below == 512);
    CHECK_FALSE(q3.has_above);

    auto q5 = below_diagonal_scan(10, QMap(5), Exec::serial);
    CHECK(q5.has_above);
    CHECK(q5.min_above_m == 1);
    CHECK(q5.min_above_x == Dyadic(1, 1));

    auto q7 = below_diagonal_scan(10, QMap(7), Exec::serial);
    CHECK(q7.has_above);
    CHECK(q7.min_above_m == 3);
    CHECK(q7.min_above_x == Dyadic(3, 2));

    auto q3p = below_diagonal_scan(10, QMap(3), Exec::parallel);
    CHECK(q3p.above == q3.above);
    CHECK(q3p.on == q3.on);
    CHECK(q3p.below == q3.below);
}
