#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hlag/rational.hpp"

namespace hlag {

/// C(n,k) in checked 64-bit arithmetic. Returns 0 when k > n and throws
/// std::overflow_error when the result does not fit in an unsigned 64-bit
/// integer (a wrapped value is never returned).
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;  // exact at each step: C(n-k+i, i)
        if (acc > UINT64_MAX)
            throw std::overflow_error("binomial(" + std::to_string(n) + "," +
                                      std::to_string(k) + ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

namespace detail {

/// True iff C(n,k) > limit, evaluated without 64-bit overflow.
inline bool binomial_exceeds(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
    if (k > n) return false;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > limit) return true;
    }
    return acc > limit;
}

}  // namespace detail

/// 0-based colexicographic rank of a strictly increasing tuple of 1-based
/// vertex ids: sum over positions of C(a_i - 1, i).
inline std::uint64_t colex_rank(std::span<const int> set) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] < 1 || (i > 0 && set[i] <= set[i - 1]))
            throw std::invalid_argument(
                "colex_rank: tuple must be strictly increasing with entries >= 1");
        rank += binomial(static_cast<std::uint64_t>(set[i]) - 1, i + 1);
    }
    return rank;
}

inline std::uint64_t colex_rank(const std::vector<int>& set) {
    return colex_rank(std::span<const int>(set));
}

/// Inverse of colex_rank for r-element tuples (greedy from the top
/// coordinate down).
inline std::vector<int> colex_unrank(std::uint64_t rank, int r) {
    if (r < 1) throw std::invalid_argument("colex_unrank: r must be >= 1");
    std::vector<int> out(static_cast<std::size_t>(r));
    std::uint64_t rem = rank;
    for (int i = r; i >= 1; --i) {
        std::uint64_t a = static_cast<std::uint64_t>(i);  // C(i-1, i) = 0
        while (!detail::binomial_exceeds(a, static_cast<std::uint64_t>(i), rem)) ++a;
        out[static_cast<std::size_t>(i - 1)] = static_cast<int>(a);
        rem -= binomial(a - 1, static_cast<std::uint64_t>(i));
    }
    return out;
}

/// Generalized binomial C(s,r) = s(s-1)...(s-r+1)/r! for real s.
inline double binomial_real(double s, int r) {
    if (r < 0) throw std::invalid_argument("binomial_real: r must be >= 0");
    double prod = 1.0;
    for (int j = 0; j < r; ++j) prod *= (s - j) / (j + 1);
    return prod;
}

/// The unique real s >= r-1 with C(s,r) = m. The falling-factorial product
/// is strictly increasing on [r-1, inf), so plain bisection converges
/// unconditionally; the bracket is [r-1, r-1 + r*m^(1/r) + 1], the budget
/// 200 iterations, the target 1e-12 absolute in s.
inline double binomial_inverse_real(std::uint64_t m, int r) {
    if (m < 1) throw std::invalid_argument("binomial_inverse_real: m must be >= 1");
    if (r < 2) throw std::invalid_argument("binomial_inverse_real: r must be >= 2");
    double lo = r - 1.0;
    double hi = r - 1.0 + r * std::pow(static_cast<double>(m), 1.0 / r) + 1.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (binomial_real(mid, r) < static_cast<double>(m))
            lo = mid;
        else
            hi = mid;
    }
    double s = 0.5 * (lo + hi);
    // integer roots are exact: snap when C(round(s), r) = m holds in integers
    double snapped = std::round(s);
    if (std::abs(s - snapped) < 1e-9 && snapped >= r && snapped < 9.0e18 &&
        binomial(static_cast<std::uint64_t>(snapped), static_cast<std::uint64_t>(r)) == m)
        return snapped;
    return s;
}

/// lambda([t-1]^{(r)}) = C(t-1,r) / (t-1)^r as an exact rational.
inline Rational plateau_value(int r, int t) {
    if (r < 2 || t < r)
        throw std::invalid_argument("plateau_value: need t >= r >= 2, got r=" +
                                    std::to_string(r) + " t=" + std::to_string(t));
    std::uint64_t num = binomial(static_cast<std::uint64_t>(t) - 1,
                                 static_cast<std::uint64_t>(r));
    if (num > static_cast<std::uint64_t>(INT64_MAX))
        throw std::overflow_error("plateau_value: numerator exceeds 64-bit signed range");
    std::int64_t den = 1;
    for (int j = 0; j < r; ++j) den = detail::checked_mul(den, t - 1);
    return Rational(static_cast<std::int64_t>(num), den);
}

/// The edge counts m for which lambda(C_{r,m}) equals plateau_value(r,t):
/// [C(t-1,r), C(t,r) - C(t-2,r-2)].
inline std::pair<std::uint64_t, std::uint64_t> plateau_range(int r, int t) {
    if (r < 2 || t < r)
        throw std::invalid_argument("plateau_range: need t >= r >= 2, got r=" +
                                    std::to_string(r) + " t=" + std::to_string(t));
    std::uint64_t lo = binomial(static_cast<std::uint64_t>(t) - 1,
                                static_cast<std::uint64_t>(r));
    std::uint64_t hi = binomial(static_cast<std::uint64_t>(t),
                                static_cast<std::uint64_t>(r)) -
                       binomial(static_cast<std::uint64_t>(t) - 2,
                                static_cast<std::uint64_t>(r) - 2);
    return {lo, hi};
}

/// The t with C(t-1,r) <= m < C(t,r).
inline int plateau_index(int r, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("plateau_index: m must be >= 1");
    if (r < 2) throw std::invalid_argument("plateau_index: r must be >= 2");
    int t = r;
    while (binomial(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(r)) <= m) ++t;
    return t;
}

}  // namespace hlag
