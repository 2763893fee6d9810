#include "talbot/numtheory.hpp"

#include <limits>
#include <utility>

namespace talbot::nt {

namespace {

using i128 = __int128;

Int narrow(i128 v, const char* what) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw std::overflow_error(what);
    return static_cast<Int>(v);
}

} // namespace

Int checked_mul(Int a, Int b) {
    return narrow(i128(a) * i128(b), "integer overflow in multiplication");
}

Int checked_add(Int a, Int b) {
    return narrow(i128(a) + i128(b), "integer overflow in addition");
}

Int mod_floor(Int a, Int m) {
    if (m < 1) throw std::domain_error("mod_floor: modulus must be positive");
    Int r = a % m;
    return r < 0 ? r + m : r;
}

Int mul_mod(Int a, Int b, Int m) {
    if (m < 1) throw std::domain_error("mul_mod: modulus must be positive");
    i128 r = i128(mod_floor(a, m)) * i128(mod_floor(b, m)) % m;
    return static_cast<Int>(r);
}

Int gcd(Int a, Int b) {
    if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
    // Magnitudes in unsigned space so INT64_MIN cannot trip UB.
    unsigned long long x = a < 0 ? 0ULL - static_cast<unsigned long long>(a)
                                 : static_cast<unsigned long long>(a);
    unsigned long long y = b < 0 ? 0ULL - static_cast<unsigned long long>(b)
                                 : static_cast<unsigned long long>(b);
    while (y != 0) {
        unsigned long long t = x % y;
        x = y;
        y = t;
    }
    if (x > static_cast<unsigned long long>(std::numeric_limits<Int>::max()))
        throw std::overflow_error("gcd does not fit in 64 bits");
    return static_cast<Int>(x);
}

BezoutTriple bezout(Int a, Int b) {
    if (a == 0 && b == 0) throw std::domain_error("bezout(0, 0) is undefined");
    i128 old_r = a, r = b;
    i128 old_x = 1, x = 0;
    i128 old_y = 0, y = 1;
    while (r != 0) {
        i128 q = old_r / r;
        i128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * x;
        old_x = x;
        x = t;
        t = old_y - q * y;
        old_y = y;
        y = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {narrow(old_r, "bezout: gcd overflows"),
            narrow(old_x, "bezout: coefficient overflows"),
            narrow(old_y, "bezout: coefficient overflows")};
}

Int mod_inverse(Int a, Int b) {
    if (b < 2) throw std::domain_error("mod_inverse: modulus must be >= 2");
    Int ar = mod_floor(a, b);
    BezoutTriple t = bezout(ar, b);
    if (t.d != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return mod_floor(t.x, b);
}

int jacobi(Int a, Int b) {
    if (b < 1 || parity(b) == 0)
        throw std::domain_error("jacobi: denominator must be odd and positive");
    Int x = mod_floor(a, b);
    Int y = b;
    int sign = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            Int m = y % 8;
            if (m == 3 || m == 5) sign = -sign;
        }
        std::swap(x, y);
        if (x % 4 == 3 && y % 4 == 3) sign = -sign;
        x %= y;
    }
    return y == 1 ? sign : 0;
}

int parity(Int x) {
    return static_cast<int>(((x % 2) + 2) % 2);
}

} // namespace talbot::nt
