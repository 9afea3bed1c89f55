#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlag/hypergraph.hpp"
#include "hlag/rational.hpp"

namespace hlag {

/// A legal weighting: n nonnegative reals summing to 1 (within 1e-12).
using Weighting = std::vector<double>;

/// Entries at or below this are treated as zero when reading off supports.
inline constexpr double kSupportTrim = 1e-12;

/// splitmix64. Every random draw in the library flows from this generator,
/// so runs are reproducible from a single 64-bit seed.
struct SplitMix64 {
    std::uint64_t state = 0;
    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in (0, 1].
    double next_unit() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }
};

inline void check_weight_length(const Weighting& x, int n, const char* who) {
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument(std::string(who) + ": weighting has length " +
                                    std::to_string(x.size()) + ", expected n=" +
                                    std::to_string(n));
}

inline void check_legal_weighting(const Weighting& x, int n, const char* who) {
    check_weight_length(x, n, who);
    double sum = 0.0;
    for (double v : x) {
        if (v < 0.0)
            throw std::invalid_argument(std::string(who) + ": negative weight " +
                                        std::to_string(v));
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(who) + ": weights sum to " +
                                    std::to_string(sum) + ", expected 1");
}

/// w(G,x) = sum over edges of the product of incident weights, accumulated
/// in colex edge order. Only the length of x is checked, so the same
/// routine evaluates the raw polynomial off the simplex.
inline double weight_poly(const Hypergraph& g, const Weighting& x) {
    check_weight_length(x, g.n, "weight_poly");
    double total = 0.0;
    for (const Edge& e : g.edges) {
        double p = 1.0;
        for (int v : e) p *= x[static_cast<std::size_t>(v - 1)];
        total += p;
    }
    return total;
}

/// Entry i is w(G_i, x), the link weight of vertex i. Satisfies the Euler
/// identity sum_i x_i w(G_i,x) = r w(G,x).
inline std::vector<double> link_weights(const Hypergraph& g, const Weighting& x) {
    check_weight_length(x, g.n, "link_weights");
    std::vector<double> lw(static_cast<std::size_t>(g.n), 0.0);
    for (const Edge& e : g.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            double p = 1.0;
            for (std::size_t j = 0; j < e.size(); ++j)
                if (j != i) p *= x[static_cast<std::size_t>(e[j] - 1)];
            lw[static_cast<std::size_t>(e[i] - 1)] += p;
        }
    }
    return lw;
}

/// Interior stationarity certificate: max over the support of
/// |w(G_i,x) - r w(G,x)|. Zero exactly at points whose support link
/// weights are all equal (and then equal to r w by the Euler identity).
inline double kkt_residual(const Hypergraph& g, const Weighting& x) {
    check_legal_weighting(x, g.n, "kkt_residual");
    std::vector<double> lw = link_weights(g, x);
    double w = weight_poly(g, x);
    double res = 0.0;
    for (int v = 0; v < g.n; ++v)
        if (x[static_cast<std::size_t>(v)] > kSupportTrim)
            res = std::max(res, std::abs(lw[static_cast<std::size_t>(v)] - g.r * w));
    return res;
}

enum class Method { replicator, multistart, grid, closed_form };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::replicator: return "replicator";
        case Method::multistart: return "multistart";
        case Method::grid: return "grid";
        case Method::closed_form: return "closed-form";
    }
    return "?";
}

struct LagrangianEstimate {
    double value = 0.0;
    Weighting weighting;
    double kkt_residual = 0.0;
    Method method = Method::replicator;
    long iterations = 0;
    int support_size = 0;
    bool converged = false;
    bool degenerate_start = false;
};

inline int support_size(const Weighting& x) {
    int count = 0;
    for (double v : x)
        if (v > kSupportTrim) ++count;
    return count;
}

/// Growth-transform ascent x_i <- x_i w(G_i,x) / (r w(G,x)). The weight
/// polynomial is non-decreasing along iterates; stops once the residual
/// falls to tol or the budget runs out. A start with w(G,x0) = 0 is
/// returned unchanged with the degenerate flag set.
inline LagrangianEstimate replicator_ascent(const Hypergraph& g, Weighting x,
                                            long max_iters, double tol) {
    check_legal_weighting(x, g.n, "replicator_ascent");
    if (max_iters < 1)
        throw std::invalid_argument("replicator_ascent: max_iters must be >= 1");

    LagrangianEstimate est;
    est.method = Method::replicator;

    double w = weight_poly(g, x);
    if (w <= 0.0) {
        est.weighting = std::move(x);
        est.value = 0.0;
        est.degenerate_start = true;
        est.support_size = support_size(est.weighting);
        std::vector<double> lw = link_weights(g, est.weighting);
        for (int v = 0; v < g.n; ++v)
            if (est.weighting[static_cast<std::size_t>(v)] > kSupportTrim)
                est.kkt_residual =
                    std::max(est.kkt_residual, std::abs(lw[static_cast<std::size_t>(v)]));
        return est;
    }

    long it = 0;
    double res = 0.0;
    for (;;) {
        std::vector<double> lw = link_weights(g, x);
        res = 0.0;
        for (int v = 0; v < g.n; ++v)
            if (x[static_cast<std::size_t>(v)] > kSupportTrim)
                res = std::max(res, std::abs(lw[static_cast<std::size_t>(v)] - g.r * w));
        if (res <= tol) {
            est.converged = true;
            break;
        }
        if (it >= max_iters) break;
        double scale = 1.0 / (g.r * w);
        double sum = 0.0;
        for (int v = 0; v < g.n; ++v) {
            x[static_cast<std::size_t>(v)] *= lw[static_cast<std::size_t>(v)] * scale;
            sum += x[static_cast<std::size_t>(v)];
        }
        for (double& v : x) v /= sum;
        w = weight_poly(g, x);
        ++it;
    }

    est.value = w;
    est.weighting = std::move(x);
    est.kkt_residual = res;
    est.iterations = it;
    est.support_size = support_size(est.weighting);
    return est;
}

struct MultistartOptions {
    int seeds = 32;            // random starts beyond the deterministic ones
    std::uint64_t seed = 0;    // splitmix64 stream
    double tol = 1e-10;        // kkt residual target
    long max_iters = 100000;   // per replicator run
    std::vector<Weighting> extra_starts;  // e.g. warm starts; must be legal
};

namespace detail {

inline Weighting uniform_weighting(int n) {
    return Weighting(static_cast<std::size_t>(n), 1.0 / n);
}

inline Weighting uniform_on(const std::vector<int>& verts, int n) {
    Weighting x(static_cast<std::size_t>(n), 0.0);
    for (int v : verts) x[static_cast<std::size_t>(v - 1)] = 1.0 / verts.size();
    return x;
}

}  // namespace detail

/// Best-of multistart: uniform, two support heuristics, a degree-weighted
/// start, `seeds` random exponential starts, and any caller-given warm
/// starts. Each run is replicator ascent followed by one trim of entries
/// below 1e-12 and a re-ascent. Ties keep the earliest start.
inline LagrangianEstimate lagrangian(const Hypergraph& g,
                                     const MultistartOptions& opt = {}) {
    if (g.edges.empty())
        throw std::invalid_argument("lagrangian: hypergraph has no edges");
    if (opt.seeds < 0) throw std::invalid_argument("lagrangian: seeds must be >= 0");

    std::vector<int> degree(static_cast<std::size_t>(g.n), 0);
    for (const Edge& e : g.edges)
        for (int v : e) ++degree[static_cast<std::size_t>(v - 1)];

    std::vector<Weighting> starts;
    starts.push_back(detail::uniform_weighting(g.n));

    std::vector<int> covered;
    for (int v = 1; v <= g.n; ++v)
        if (degree[static_cast<std::size_t>(v - 1)] > 0) covered.push_back(v);
    if (static_cast<int>(covered.size()) < g.n)
        starts.push_back(detail::uniform_on(covered, g.n));
    if (static_cast<int>(covered.size()) > g.r) {
        // drop one lowest-degree vertex (largest id on ties)
        int drop = covered.front();
        for (int v : covered)
            if (degree[static_cast<std::size_t>(v - 1)] <=
                degree[static_cast<std::size_t>(drop - 1)])
                drop = v;
        std::vector<int> rest;
        for (int v : covered)
            if (v != drop) rest.push_back(v);
        starts.push_back(detail::uniform_on(rest, g.n));
    }
    {
        Weighting x(static_cast<std::size_t>(g.n), 0.0);
        double total = static_cast<double>(g.r) * g.edges.size();
        for (int v = 0; v < g.n; ++v)
            x[static_cast<std::size_t>(v)] = degree[static_cast<std::size_t>(v)] / total;
        starts.push_back(std::move(x));
    }

    SplitMix64 rng(opt.seed);
    for (int k = 0; k < opt.seeds; ++k) {
        Weighting x(static_cast<std::size_t>(g.n));
        double sum = 0.0;
        for (double& v : x) {
            v = -std::log(rng.next_unit());
            sum += v;
        }
        if (sum <= 0.0) {
            x = detail::uniform_weighting(g.n);
        } else {
            for (double& v : x) v /= sum;
        }
        starts.push_back(std::move(x));
    }
    for (const Weighting& x : opt.extra_starts) {
        check_legal_weighting(x, g.n, "lagrangian extra start");
        starts.push_back(x);
    }

    LagrangianEstimate best;
    best.value = -1.0;
    for (const Weighting& start : starts) {
        LagrangianEstimate run = replicator_ascent(g, start, opt.max_iters, opt.tol);
        // trim numerical dust off the support, then repair by re-ascending
        bool trimmed = false;
        Weighting x = run.weighting;
        double mass = 0.0;
        for (double& v : x) {
            if (v <= kSupportTrim && v != 0.0) {
                v = 0.0;
                trimmed = true;
            }
            mass += v;
        }
        if (trimmed && mass > 0.0) {
            for (double& v : x) v /= mass;
            LagrangianEstimate rerun = replicator_ascent(g, std::move(x), opt.max_iters,
                                                         opt.tol);
            rerun.iterations += run.iterations;
            if (rerun.value >= run.value) run = std::move(rerun);
        }
        if (run.value > best.value) best = std::move(run);
    }

    best.method = Method::multistart;
    best.value = weight_poly(g, best.weighting);
    best.support_size = support_size(best.weighting);
    return best;
}

struct GridCertificate {
    int k = 0;
    Weighting best_point;
    double best_value = 0.0;
};

/// Exhaustive lower bound: evaluates w over every lattice weighting p/k
/// with p a composition of k into n parts, keeping the first maximizer
/// found. Rejects instances with more than 1e8 compositions.
inline GridCertificate grid_lower_bound(const Hypergraph& g, int k) {
    if (k < 1) throw std::invalid_argument("grid_lower_bound: k must be >= 1");
    if (g.n < 1) throw std::invalid_argument("grid_lower_bound: graph has no vertices");
    if (detail::binomial_exceeds(static_cast<std::uint64_t>(k) + g.n - 1,
                                 static_cast<std::uint64_t>(g.n) - 1, 100000000ULL))
        throw std::invalid_argument(
            "grid_lower_bound: C(" + std::to_string(k + g.n - 1) + "," +
            std::to_string(g.n - 1) + ") compositions exceed the 1e8 budget");

    std::vector<int> flat;
    flat.reserve(g.edges.size() * static_cast<std::size_t>(g.r));
    for (const Edge& e : g.edges)
        for (int v : e) flat.push_back(v - 1);

    GridCertificate cert;
    cert.k = k;
    cert.best_value = -1.0;
    Weighting x(static_cast<std::size_t>(g.n), 0.0);
    const double inv_k = 1.0 / k;
    const std::size_t r = static_cast<std::size_t>(g.r);

    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == g.n - 1) {
            x[static_cast<std::size_t>(idx)] = left * inv_k;
            double total = 0.0;
            for (std::size_t e = 0; e < flat.size(); e += r) {
                double p = 1.0;
                for (std::size_t j = 0; j < r; ++j)
                    p *= x[static_cast<std::size_t>(flat[e + j])];
                total += p;
            }
            if (total > cert.best_value) {
                cert.best_value = total;
                cert.best_point = x;
            }
            return;
        }
        for (int p = left; p >= 0; --p) {
            x[static_cast<std::size_t>(idx)] = p * inv_k;
            rec(idx + 1, left - p);
        }
    };
    rec(0, k);
    return cert;
}

/// Exact maximum clique order of a 2-graph (branch and bound with a greedy
/// coloring bound).
inline int clique_number(const Hypergraph& g2) {
    if (g2.r != 2)
        throw std::invalid_argument("clique_number: requires a 2-uniform hypergraph");
    if (g2.n > 32) throw std::invalid_argument("clique_number: supports n <= 32");
    if (g2.n == 0) return 0;

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g2.n), 0);
    for (const Edge& e : g2.edges) {
        adj[static_cast<std::size_t>(e[0] - 1)] |= 1u << (e[1] - 1);
        adj[static_cast<std::size_t>(e[1] - 1)] |= 1u << (e[0] - 1);
    }

    int best = 1;  // any single vertex is a clique

    // greedy coloring; returns vertices sorted by color with per-vertex bounds
    auto color_sort = [&](const std::vector<int>& verts)
        -> std::pair<std::vector<int>, std::vector<int>> {
        std::vector<std::uint32_t> classes;
        std::vector<int> color(verts.size(), 0);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            std::size_t c = 0;
            while (c < classes.size() &&
                   (classes[c] & adj[static_cast<std::size_t>(verts[i])]))
                ++c;
            if (c == classes.size()) classes.push_back(0);
            classes[c] |= 1u << verts[i];
            color[i] = static_cast<int>(c) + 1;
        }
        std::vector<std::size_t> order(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
        std::vector<int> ordered, bounds;
        for (std::size_t i : order) {
            ordered.push_back(verts[i]);
            bounds.push_back(color[i]);
        }
        return {std::move(ordered), std::move(bounds)};
    };

    std::function<void(const std::vector<int>&, const std::vector<int>&, int)> expand =
        [&](const std::vector<int>& verts, const std::vector<int>& bound, int size) {
            for (std::size_t i = verts.size(); i-- > 0;) {
                if (size + bound[i] <= best) return;
                int v = verts[i];
                std::vector<int> next;
                for (std::size_t j = 0; j < i; ++j)
                    if (adj[static_cast<std::size_t>(v)] & (1u << verts[j]))
                        next.push_back(verts[j]);
                if (next.empty()) {
                    best = std::max(best, size + 1);
                    continue;
                }
                auto [ordered, bounds] = color_sort(next);
                expand(ordered, bounds, size + 1);
            }
        };

    std::vector<int> all(static_cast<std::size_t>(g2.n));
    for (int v = 0; v < g2.n; ++v) all[static_cast<std::size_t>(v)] = v;
    auto [ordered, bounds] = color_sort(all);
    expand(ordered, bounds, 0);
    return best;
}

/// lambda of a 2-graph in closed form: (1/2)(1 - 1/omega).
inline Rational motzkin_straus_lambda(const Hypergraph& g2) {
    if (g2.r != 2)
        throw std::invalid_argument("motzkin_straus_lambda: requires a 2-uniform hypergraph");
    if (g2.edges.empty())
        throw std::invalid_argument("motzkin_straus_lambda: graph has no edges");
    int omega = clique_number(g2);
    return Rational(omega - 1, 2LL * omega);
}

}  // namespace hlag
