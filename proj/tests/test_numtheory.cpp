#include <doctest.h>

#include <cstdlib>
#include <random>

#include "talbot/numtheory.hpp"

using namespace talbot;
using nt::Int;

TEST_CASE("gcd basics") {
    CHECK(nt::gcd(6, 4) == 2);
    CHECK(nt::gcd(5, 8) == 1);
    for (Int q : {2, 3, 7, 100, 9973}) CHECK(nt::gcd(1, q) == 1);
    CHECK(nt::gcd(0, 5) == 5);
    CHECK(nt::gcd(-6, 4) == 2);
    CHECK(nt::gcd(-6, -4) == 2);
    CHECK_THROWS_AS(nt::gcd(0, 0), std::domain_error);
}

TEST_CASE("bezout identity") {
    SUBCASE("small cases verified by substitution") {
        auto t = nt::bezout(3, 5);
        CHECK(t.d == 1);
        CHECK(3 * t.x + 5 * t.y == 1);
        t = nt::bezout(2, 7);
        CHECK(t.d == 1);
        CHECK(2 * t.x + 7 * t.y == 1);
    }
    SUBCASE("identity case") {
        auto t = nt::bezout(1, 9);
        CHECK(t.d == 1);
        CHECK(t.x == 1);
        CHECK(t.y == 0);
    }
    SUBCASE("random samples satisfy the defining identity exactly") {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<Int> dist(-10000, 10000);
        int done = 0;
        while (done < 10000) {
            const Int a = dist(rng), b = dist(rng);
            if (a == 0 && b == 0) continue;
            const auto t = nt::bezout(a, b);
            CHECK(t.d == nt::gcd(a, b));
            CHECK(a * t.x + b * t.y == t.d);
            ++done;
        }
    }
    CHECK_THROWS_AS(nt::bezout(0, 0), std::domain_error);
}

TEST_CASE("mod_inverse known values") {
    CHECK(nt::mod_inverse(5, 8) == 5);
    CHECK(nt::mod_inverse(5, 16) == 13);
    CHECK(nt::mod_inverse(2, 7) == 4);
    for (Int b : {2, 3, 10, 97}) CHECK(nt::mod_inverse(1, b) == 1);
    CHECK(nt::mod_inverse(-3, 7) == nt::mod_inverse(4, 7));
    CHECK_THROWS_AS(nt::mod_inverse(2, 4), std::domain_error);
    CHECK_THROWS_AS(nt::mod_inverse(3, 1), std::domain_error);
    CHECK_THROWS_AS(nt::mod_inverse(3, 0), std::domain_error);
}

TEST_CASE("mod_inverse exhaustive up to 200") {
    for (Int b = 2; b <= 200; ++b) {
        for (Int a = 1; a <= 200; ++a) {
            if (nt::gcd(a, b) != 1) continue;
            const Int inv = nt::mod_inverse(a, b);
            CHECK(inv >= 1);
            CHECK(inv <= b - 1);
            CHECK(nt::mul_mod(a, inv, b) == 1 % b);
        }
    }
}

namespace {

// Brute-force Legendre symbol for odd prime p: scan the squares mod p.
int legendre_bruteforce(Int a, Int p) {
    const Int r = nt::mod_floor(a, p);
    if (r == 0) return 0;
    for (Int x = 1; x < p; ++x)
        if (nt::mul_mod(x, x, p) == r) return 1;
    return -1;
}

} // namespace

TEST_CASE("jacobi against brute-force Legendre") {
    const Int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                          43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (Int p : primes)
        for (Int a = 0; a <= 2 * p; ++a)
            CHECK(nt::jacobi(a, p) == legendre_bruteforce(a, p));
}

TEST_CASE("jacobi basics and properties") {
    for (Int b = 1; b <= 99; b += 2) CHECK(nt::jacobi(1, b) == 1);
    CHECK(nt::jacobi(2, 3) == -1);
    CHECK(nt::jacobi(2, 7) == 1);
    CHECK_THROWS_AS(nt::jacobi(3, 4), std::domain_error);
    CHECK_THROWS_AS(nt::jacobi(3, -5), std::domain_error);
    CHECK(nt::jacobi(10, 5) == 0);  // shared factor

    SUBCASE("multiplicative in the numerator") {
        for (Int b = 1; b <= 99; b += 2)
            for (Int a1 = 1; a1 <= 20; ++a1)
                for (Int a2 = 1; a2 <= 20; ++a2)
                    CHECK(nt::jacobi(a1 * a2, b) == nt::jacobi(a1, b) * nt::jacobi(a2, b));
    }
    SUBCASE("depends only on the residue") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<Int> adist(-5000, 5000);
        for (int i = 0; i < 2000; ++i) {
            const Int b = 2 * std::uniform_int_distribution<Int>(1, 200)(rng) + 1;
            const Int a = adist(rng);
            CHECK(nt::jacobi(a, b) == nt::jacobi(nt::mod_floor(a, b), b));
        }
    }
    SUBCASE("eighth-root evaluation of (2/q)") {
        // (2/q) = (-1)^((q^2-1)/8) for odd q
        for (Int q = 1; q <= 99; q += 2) {
            const Int k = (q * q - 1) / 8;
            CHECK(nt::jacobi(2, q) == (k % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("jacobi(3, 4) style domain errors do not abort before throwing") {
    CHECK_THROWS(nt::jacobi(1, 0));
}

TEST_CASE("parity") {
    CHECK(nt::parity(4) == 0);
    CHECK(nt::parity(7) == 1);
    CHECK(nt::parity(-3) == 1);
    CHECK(nt::parity(-4) == 0);
    CHECK(nt::parity(0) == 0);
}

TEST_CASE("checked arithmetic flags overflow instead of wrapping") {
    CHECK(nt::checked_mul(1LL << 31, 1LL << 31) == (1LL << 62));
    CHECK_THROWS_AS(nt::checked_mul(INT64_MAX, 2), std::overflow_error);
    CHECK_THROWS_AS(nt::checked_add(INT64_MAX, 1), std::overflow_error);
    CHECK_THROWS_AS(nt::gcd(INT64_MIN, 0), std::overflow_error);
}

TEST_CASE("mod helpers") {
    CHECK(nt::mod_floor(-1, 8) == 7);
    CHECK(nt::mod_floor(17, 8) == 1);
    CHECK(nt::mul_mod(1000000007LL, 998244353LL, 1000000009LL) ==
          static_cast<Int>((__int128)1000000007 * 998244353 % 1000000009));
}
