// exact_phase.hpp - angles kept as exact rational multiples of pi.
//
// An ExactPhase is the angle pi*num/den with den >= 1, the fraction
// reduced, and num normalized into [0, 2*den), so angles live on
// [0, 2*pi) and equal canonical forms mean equal phases. Closed-form
// phase identities are checked on this representation; floating point
// enters only at unit().

#pragma once

#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "talbot/numtheory.hpp"

namespace talbot {

using Complex = std::complex<double>;

class ExactPhase {
public:
    ExactPhase() = default;

    ExactPhase(nt::Int num, nt::Int den) {
        i128 n = num, d = den;
        canonicalize(n, d);
        num_ = static_cast<nt::Int>(n);
        den_ = static_cast<nt::Int>(d);
    }

    nt::Int num() const { return num_; }
    nt::Int den() const { return den_; }

    ExactPhase operator+(const ExactPhase& other) const {
        i128 g = gcd128(den_, other.den_);
        i128 lcm = i128(den_) / g * other.den_;
        i128 n = i128(num_) * (lcm / den_) + i128(other.num_) * (lcm / other.den_);
        i128 d = lcm;
        canonicalize(n, d);
        ExactPhase r;
        r.num_ = static_cast<nt::Int>(n);
        r.den_ = static_cast<nt::Int>(d);
        return r;
    }

    // Conjugate angle (negation mod 2*pi).
    ExactPhase operator-() const {
        i128 n = -i128(num_), d = den_;
        canonicalize(n, d);
        ExactPhase r;
        r.num_ = static_cast<nt::Int>(n);
        r.den_ = static_cast<nt::Int>(d);
        return r;
    }

    ExactPhase plus_pi() const { return *this + ExactPhase(1, 1); }

    bool operator==(const ExactPhase&) const = default;

    double radians() const {
        return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    }

    Complex unit() const { return std::polar(1.0, radians()); }

private:
    using i128 = __int128;

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static void canonicalize(i128& n, i128& d) {
        if (d == 0) throw std::domain_error("ExactPhase: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        i128 two_d = 2 * d;
        n %= two_d;
        if (n < 0) n += two_d;
        if (n == 0) d = 1;
        if (n > std::numeric_limits<nt::Int>::max() || d > std::numeric_limits<nt::Int>::max())
            throw std::overflow_error("ExactPhase: value does not fit in 64 bits");
    }

    nt::Int num_ = 0;
    nt::Int den_ = 1;
};

// pi * sign * coeff * n^2 / den, reduced mod 2*pi in integer arithmetic.
inline ExactPhase quadratic_phase(nt::Int coeff, nt::Int n, nt::Int den, int sign) {
    if (den < 1) throw std::domain_error("quadratic_phase: denominator must be positive");
    nt::Int two_den = nt::checked_mul(2, den);
    nt::Int r = nt::mul_mod(coeff, nt::mul_mod(n, n, two_den), two_den);
    return ExactPhase(sign < 0 ? -r : r, den);
}

} // namespace talbot
