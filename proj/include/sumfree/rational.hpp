#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sumfree {

// Exact rational on int64 with __int128 intermediates; throws on overflow.
struct Rational {
    long long num = 0;
    long long den = 1;  // always > 0, gcd(num, den) = 1

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }
    static Rational of(long long n) { return Rational(n, 1); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rational reduce128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lim = __int128(INT64_MAX);
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num = (long long)n;
        r.den = (long long)d;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return reduce128(__int128(a.num) * b.den + __int128(b.num) * a.den,
                         __int128(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return reduce128(__int128(a.num) * b.den - __int128(b.num) * a.den,
                         __int128(a.den) * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return reduce128(__int128(a.num) * b.num, __int128(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::invalid_argument("rational: divide by zero");
        return reduce128(__int128(a.num) * b.den, __int128(a.den) * b.num);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return __int128(a.num) * b.den < __int128(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return __int128(a.num) * b.den <= __int128(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    // canonical "p/q" form, denominator always present
    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace sumfree
