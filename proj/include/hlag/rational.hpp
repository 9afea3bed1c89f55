#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hlag {

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("64-bit overflow in " + std::to_string(a) + " * " +
                                  std::to_string(b));
    return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("64-bit overflow in " + std::to_string(a) + " + " +
                                  std::to_string(b));
    return out;
}

}  // namespace detail

/// Exact fraction on 64-bit parts, kept in lowest terms with den > 0.
/// Arithmetic that would leave the 64-bit range throws std::overflow_error.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = detail::checked_mul(num, -1);
            den = detail::checked_mul(den, -1);
        }
        std::int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t g = std::gcd(a.den, b.den);
        std::int64_t lhs = detail::checked_mul(a.num, b.den / g);
        std::int64_t rhs = detail::checked_mul(b.num, a.den / g);
        return Rational(detail::checked_add(lhs, rhs), detail::checked_mul(a.den, b.den / g));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num, b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Rational(detail::checked_mul(a.num / g1, b.num / g2),
                        detail::checked_mul(a.den / g2, b.den / g1));
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (a - b).num < 0;
    }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace hlag
