#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "hlag/lagrangian.hpp"

namespace hlag {

/// lambda(H) <= m s^{-r} for any r-graph H with m edges, where C(s,r) = m.
inline double smooth_upper_bound(std::uint64_t m, int r) {
    double s = binomial_inverse_real(m, r);
    return static_cast<double>(m) * std::pow(s, -r);
}

struct ColexLambda {
    double value = 0.0;
    int t = 0;  // C(t-1,r) <= m < C(t,r)
    std::optional<Rational> exact;               // set on the plateau path
    std::optional<LagrangianEstimate> estimate;  // set on the numeric path
};

/// lambda(C_{r,m}): the exact plateau rational when m lies in
/// plateau_range(r,t), otherwise the multistart value on C_{r,m}.
inline ColexLambda colex_lambda(int r, std::uint64_t m,
                                const MultistartOptions& opt = {}) {
    if (r < 2) throw std::invalid_argument("colex_lambda: r must be >= 2");
    if (m < 1) throw std::invalid_argument("colex_lambda: m must be >= 1");
    ColexLambda out;
    out.t = plateau_index(r, m);
    auto [lo, hi] = plateau_range(r, out.t);
    (void)lo;  // lo <= m by the choice of t
    if (m <= hi) {
        Rational q = plateau_value(r, out.t);
        out.exact = q;
        out.value = q.to_double();
        return out;
    }
    Hypergraph g = colex_initial_segment(r, m);
    out.estimate = lagrangian(g, opt);
    out.value = out.estimate->value;
    return out;
}

inline std::uint64_t theorem7_eta(int t) {
    return static_cast<std::uint64_t>(
        std::ceil(4.0 * std::cbrt(static_cast<double>(t) * t)));
}

struct BoundReport {
    std::uint64_t m = 0;
    int t = 0;  // C(t-1,3) <= m < C(t,3)
    double lambda_colex = 0.0;
    std::optional<Rational> lambda_colex_exact;
    double smooth_bound = 0.0;
    std::uint64_t eta = 0;  // ceil(4 t^{2/3})
    double rhs_theorem7 = 0.0;
    bool small_t_fallback = false;  // t < 8: rhs is C(t,3)/t^3
};

/// The r=3 upper-bound package for one m: lambda(C_{3,m}), the smooth
/// bound, and the shifted-colex right-hand side lambda(C_{3,m+eta}) with
/// eta = ceil(4 t^{2/3}) for t >= 8; below t = 8 the fallback C(t,3)/t^3.
inline BoundReport theorem7_rhs(std::uint64_t m, const MultistartOptions& opt = {}) {
    BoundReport rep;
    rep.m = m;
    rep.t = plateau_index(3, m);
    ColexLambda cl = colex_lambda(3, m, opt);
    rep.lambda_colex = cl.value;
    rep.lambda_colex_exact = cl.exact;
    rep.smooth_bound = smooth_upper_bound(m, 3);
    rep.eta = theorem7_eta(rep.t);
    if (rep.t >= 8) {
        rep.rhs_theorem7 = colex_lambda(3, m + rep.eta, opt).value;
    } else {
        rep.small_t_fallback = true;
        std::int64_t t3 = detail::checked_mul(detail::checked_mul(rep.t, rep.t), rep.t);
        rep.rhs_theorem7 =
            Rational(static_cast<std::int64_t>(binomial(rep.t, 3)), t3).to_double();
    }
    return rep;
}

struct RemarkBound {
    bool applicable = false;
    int t = 0;            // smallest t with C(t,3) >= m
    std::uint64_t l = 0;  // C(t,3) - m
    std::uint64_t offset = 0;  // ceil(4 l^{2/3})
    double value = 0.0;        // lambda(C_{3, m + offset})
    std::string reason;        // set when not applicable
};

/// Refined bound near complete graphs: for m = C(t,3) - l with
/// 0 < l < (t-2) + 4 t^{2/3}, returns lambda(C_{3, m + ceil(4 l^{2/3})}).
inline RemarkBound remark_rhs(std::uint64_t m, const MultistartOptions& opt = {}) {
    if (m < 1) throw std::invalid_argument("remark_rhs: m must be >= 1");
    RemarkBound out;
    int t = 3;
    while (binomial(static_cast<std::uint64_t>(t), 3) < m) ++t;
    out.t = t;
    out.l = binomial(static_cast<std::uint64_t>(t), 3) - m;
    double window = (t - 2) + 4.0 * std::cbrt(static_cast<double>(t) * t);
    if (out.l == 0) {
        out.reason = "l = 0: m is itself a binomial C(t,3)";
        return out;
    }
    if (static_cast<double>(out.l) >= window) {
        out.reason = "l = " + std::to_string(out.l) + " is outside (0, " +
                     std::to_string(window) + ")";
        return out;
    }
    out.offset = static_cast<std::uint64_t>(
        std::ceil(4.0 * std::cbrt(static_cast<double>(out.l) * out.l)));
    out.value = colex_lambda(3, m + out.offset, opt).value;
    out.applicable = true;
    return out;
}

}  // namespace hlag
