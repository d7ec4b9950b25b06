#include "doctest.h"

#include "kham/arithmetic.hpp"
#include "kham/error.hpp"

using namespace kham;

namespace {

// Brute-force reference: floors and ceilings by repeated subtraction on small ints.
Int slow_floor_div(Int a, Int b) {
    Int q = 0;
    while ((q + 1) * b <= a) ++q;
    return q;
}

Int slow_threshold(Int n, Int k) {
    Int half_parts = 1;
    while (2 * half_parts < k + 1) ++half_parts;  // ceil((k+1)/2)
    Int ceil_half = 0;
    while (2 * ceil_half < n) ++ceil_half;
    return ceil_half + slow_floor_div(n + 2, 2 * half_parts) - n / k;
}

}  // namespace

TEST_CASE("threshold anchors") {
    CHECK(theorem_threshold(8, 4) == 3);
    CHECK(theorem_threshold(7, 7) == 4);
    CHECK(theorem_threshold(8, 2) == 2);
    CHECK(theorem_threshold(12, 4) == 5);
    CHECK(theorem_threshold(6, 3) == 3);
    CHECK(theorem_threshold(16, 8) == 7);
}

TEST_CASE("threshold matches a slow reference and the parity forms") {
    for (Int k = 2; k <= 30; ++k)
        for (Int m = 1; m <= 12; ++m) {
            const Int n = m * k;
            if (n < 3) continue;
            const Int d = theorem_threshold(n, k);
            CHECK(d == slow_threshold(n, k));
            if (k % 2 == 0) CHECK(d == n / 2 + (n + 2) / (k + 2) - n / k);
            else CHECK(d == (n + 1) / 2 + (n + 2) / (k + 1) - n / k);
        }
}

TEST_CASE("reductions to the classical thresholds") {
    for (Int n = 3; n <= 200; ++n) {
        CHECK(theorem_threshold(n, n) == (n + 1) / 2);
        if (n % 2 == 0) CHECK(theorem_threshold(n, 2) == (n + 2) / 4);
    }
}

TEST_CASE("parameter validation rejects instead of clamping") {
    CHECK_THROWS_AS(theorem_threshold(7, 2), InvalidArgument);
    CHECK_THROWS_AS(theorem_threshold(2, 2), InvalidArgument);
    CHECK_THROWS_AS(theorem_threshold(6, 1), InvalidArgument);
    CHECK_THROWS_AS(theorem_threshold(6, 12), InvalidArgument);
    CHECK_THROWS_AS(cfgjl_bound(9, 2), InvalidArgument);
}

TEST_CASE("cfgjl bound is exact") {
    CHECK(cfgjl_bound(8, 4) == Rational(10, 3));
    CHECK(cfgjl_bound(6, 6) == Rational(11, 4));
    CHECK(cfgjl_bound(8, 2) == Rational(2));
    CHECK(to_string(cfgjl_bound(8, 4)) == "10/3");
    CHECK(to_string(cfgjl_bound(8, 2)) == "2");
}

TEST_CASE("threshold is a rounding of the cfgjl bound") {
    for (Int k = 2; k <= 60; ++k)
        for (Int m = 1; m <= 20; ++m) {
            const Int n = m * k;
            if (n < 3) continue;
            const Int d = theorem_threshold(n, k);
            const auto b = cfgjl_bound(n, k);
            CHECK((d == ceil(b) || d == floor(b)));
        }
}

TEST_CASE("rounding classification") {
    CHECK(classify_rounding(12, 4) == Rounding::FloorCase);
    CHECK(classify_rounding(9, 3) == Rounding::CeilCase);
    // Integral bound: both roundings agree and the congruence decides (8 mod 4 = 0, not k).
    CHECK(classify_rounding(8, 2) == Rounding::FloorCase);
    CHECK(theorem_threshold(8, 2) == ceil(cfgjl_bound(8, 2)));
    CHECK(theorem_threshold(8, 2) == floor(cfgjl_bound(8, 2)));
}

TEST_CASE("printed odd residue set misclassifies (3,3)") {
    // D(3,3) = 2 = ceil(5/4), the ceiling case, but 3 mod 4 = 3 is missing from {k-1, 1}.
    CHECK(theorem_threshold(3, 3) == 2);
    CHECK(theorem_threshold(3, 3) == ceil(cfgjl_bound(3, 3)));
    CHECK(theorem_threshold(3, 3) != floor(cfgjl_bound(3, 3)));
    CHECK(ceil_congruence(3, 3));
    CHECK_FALSE(ceil_congruence_as_printed(3, 3));
}

TEST_CASE("congruence agrees with direct rounding comparison") {
    for (Int k = 2; k <= 80; ++k)
        for (Int m = 1; m <= 25; ++m) {
            const Int n = m * k;
            if (n < 3) continue;
            const auto b = cfgjl_bound(n, k);
            const Int d = theorem_threshold(n, k);
            if (ceil(b) != floor(b)) CHECK(ceil_congruence(n, k) == (d == ceil(b)));
            CHECK_NOTHROW(classify_rounding(n, k));
        }
}

TEST_CASE("exception regime and required degree") {
    CHECK(is_exception(8, 2));
    CHECK(is_exception(8, 4));
    CHECK_FALSE(is_exception(6, 3));
    CHECK_FALSE(is_exception(6, 2));
    CHECK(is_exception(12, 2));
    CHECK_FALSE(is_exception(12, 4));
    CHECK(required_degree(8, 4) == 4);
    CHECK(required_degree(6, 3) == 3);
    CHECK(required_degree(16, 8) == 8);
}

TEST_CASE("floor identity") {
    CHECK(check_eq4_identity(9, 3));
    CHECK(check_eq4_identity(8, 4));
    CHECK(check_eq4_identity(2, 2));
    const auto scan = scan_eq4_identity(500, 100);
    CHECK(scan.evaluated > 0);
    CHECK(scan.failures.empty());
}

TEST_CASE("domcycle threshold comparison") {
    CHECK_FALSE(check_domcycle_threshold(8, 4));
    CHECK(check_domcycle_threshold(6, 3));
    CHECK(check_domcycle_threshold(12, 4));
    CHECK_THROWS_AS(check_domcycle_threshold(6, 2), InvalidArgument);
    const auto scan = scan_domcycle_threshold(200, 50);
    REQUIRE(scan.failures.size() == 1);
    CHECK(scan.failures[0] == std::pair<Int, Int>{8, 4});
}

TEST_CASE("threshold facts hold over the default range") {
    const auto report = check_threshold_facts(200, 50);
    CHECK(report.ok());
    CHECK(report.tallies.size() >= 10);
    for (const auto& t : report.tallies) {
        CAPTURE(t.fact);
        CHECK(t.evaluated > 0);
        CHECK(t.violated == 0);
    }
}

TEST_CASE("threshold profile") {
    const auto p = threshold_profile(8, 4);
    CHECK(p.m == 2);
    CHECK(p.theorem_threshold == 3);
    CHECK(p.is_exception);
    CHECK(p.required_degree == 4);
    CHECK(p.cfgjl_bound == Rational(10, 3));
    CHECK(p.rounding == Rounding::FloorCase);
}
