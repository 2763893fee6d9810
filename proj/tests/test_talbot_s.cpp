#include <doctest.h>

#include <array>

#include "talbot/talbot_s.hpp"
#include "talbot/verify.hpp"

using namespace talbot;
using nt::Int;

namespace {

// Reference values of s for q = 2..11, p = 1..10 (0 marks a non-coprime
// cell). The q = 2 row carries the corrected values 1,3,1,3,1.
constexpr std::array<std::array<Int, 10>, 10> kReferenceTable = {{
    {1, 0, 3, 0, 1, 0, 3, 0, 1, 0},     // q = 2
    {4, 2, 0, 4, 2, 0, 4, 2, 0, 4},     // q = 3
    {1, 0, 3, 0, 5, 0, 7, 0, 1, 0},     // q = 4
    {6, 8, 2, 4, 0, 6, 8, 2, 4, 0},     // q = 5
    {1, 0, 0, 0, 5, 0, 7, 0, 0, 0},     // q = 6
    {8, 4, 12, 2, 10, 6, 0, 8, 4, 12},  // q = 7
    {1, 0, 11, 0, 13, 0, 7, 0, 9, 0},   // q = 8
    {10, 14, 0, 16, 2, 0, 4, 8, 0, 10}, // q = 9
    {1, 0, 7, 0, 0, 0, 3, 0, 9, 0},     // q = 10
    {12, 6, 4, 14, 20, 2, 8, 18, 16, 10} // q = 11
}};

} // namespace

TEST_CASE("TalbotOrder validation") {
    CHECK_THROWS_AS(TalbotOrder(2, 4), std::domain_error);
    CHECK_THROWS_AS(TalbotOrder(0, 3), std::domain_error);
    CHECK_THROWS_AS(TalbotOrder(3, 0), std::domain_error);
    CHECK_THROWS_AS(TalbotOrder(1, 2, 2), std::domain_error);
    CHECK_NOTHROW(TalbotOrder(7, 4, -1));
}

TEST_CASE("compute_s known values") {
    CHECK(compute_s(TalbotOrder(1, 2)).s == 1);
    CHECK(compute_s(TalbotOrder(3, 2)).s == 3);
    CHECK(compute_s(TalbotOrder(2, 3)).s == 2);
    CHECK(compute_s(TalbotOrder(5, 8)).s == 13);
    CHECK(compute_s(TalbotOrder(7, 9)).s == 4);
}

TEST_CASE("verify_s conditions") {
    CHECK(verify_s(TalbotOrder(2, 3), 2));
    CHECK_FALSE(verify_s(TalbotOrder(2, 3), 5));  // parity matches q
    CHECK_FALSE(verify_s(TalbotOrder(1, 2), 7));  // out of range
    CHECK_FALSE(verify_s(TalbotOrder(1, 2), 0));
    // s = 0 never satisfies the modular equation, so the range starts at 1
    for (Int q = 2; q <= 12; ++q)
        for (Int p = 1; p <= 2 * q; ++p)
            if (nt::gcd(p, q) == 1) CHECK_FALSE(verify_s(TalbotOrder(p, q), 0));
}

TEST_CASE("exactly one s per coprime pair") {
    const auto report = verify::uniqueness_of_s(60);
    INFO(report.detail);
    CHECK(report.pass);
    CHECK(report.cases > 0);
}

TEST_CASE("s is periodic in p") {
    const auto report = verify::s_periodicity(50);
    INFO(report.detail);
    CHECK(report.pass);
}

TEST_CASE("squared-inverse construction") {
    CHECK(compute_s_alt(TalbotOrder(1, 3)) == 4);
    CHECK(compute_s_alt(TalbotOrder(1, 2)) == 1);
    CHECK(compute_s_alt(TalbotOrder(2, 3)) == 2);
    CHECK_THROWS_AS(compute_s_alt(TalbotOrder(3, 1)), std::domain_error);
    const auto report = verify::alt_s_equivalence(50, 50);
    INFO(report.detail);
    CHECK(report.pass);
}

TEST_CASE("closed-form series") {
    CHECK(closed_form_s(TalbotOrder(1, 5)) == 6);
    CHECK(closed_form_s(TalbotOrder(3, 4)) == 3);   // p = q-1, self-dual
    CHECK(closed_form_s(TalbotOrder(5, 11)) == 20); // q = 1 + 2*1*5
    CHECK(closed_form_s(TalbotOrder(3, 5)) == 2);   // q = -1 + 2*1*3
    CHECK_FALSE(closed_form_s(TalbotOrder(3, 8)).has_value());
    const auto report = verify::closed_form_series(100);
    INFO(report.detail);
    CHECK(report.pass);
    CHECK(report.cases > 0);
}

TEST_CASE("complementary orders") {
    CHECK(complement_s(TalbotOrder(1, 5)) == 4);
    CHECK(complement_s(TalbotOrder(1, 8)) == 7);
    CHECK(complement_s(TalbotOrder(3, 8)) == 13);
    CHECK_THROWS_AS(complement_s(TalbotOrder(7, 5)), std::domain_error);
    const auto report = verify::complementary_orders(100);
    INFO(report.detail);
    CHECK(report.pass);
}

TEST_CASE("self-dual orders have s = p") {
    const auto report = verify::s_self_duality(100);
    INFO(report.detail);
    CHECK(report.pass);
}

TEST_CASE("s table matches the reference block") {
    const STable table = s_table(11, 10);
    for (Int q = 2; q <= 11; ++q) {
        for (Int p = 1; p <= 10; ++p) {
            const Int want = kReferenceTable[static_cast<std::size_t>(q - 2)]
                                            [static_cast<std::size_t>(p - 1)];
            const auto& cell = table.at(q, p);
            INFO("q=" << q << " p=" << p);
            if (want == 0)
                CHECK_FALSE(cell.has_value());
            else
                CHECK(cell == want);
        }
    }
    CHECK_FALSE(table.at(2, 2).has_value());
    CHECK(table.at(7, 5) == 10);
    CHECK_THROWS_AS(s_table(1, 10), std::domain_error);
    CHECK_THROWS_AS(table.at(12, 1), std::out_of_range);
}
