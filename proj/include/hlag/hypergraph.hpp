#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hlag/combinatorics.hpp"

namespace hlag {

using Edge = std::vector<int>;

namespace detail {

/// Colex comparison of equal-size strictly increasing tuples:
/// A < B iff max(A triangle B) lies in B, i.e. reversed-lexicographic order.
inline bool colex_less(const Edge& a, const Edge& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace detail

/// r-uniform hypergraph on vertex set [n]. The edge list is duplicate-free,
/// each edge strictly increasing, and the list sorted by colex rank. Values
/// are immutable once built; every operation returns a fresh graph.
struct Hypergraph {
    int r = 0;
    int n = 0;
    std::vector<Edge> edges;

    /// Canonicalizes (sorts within edges and across edges) and validates.
    static Hypergraph create(int r, int n, std::vector<Edge> edges) {
        if (r < 1) throw std::invalid_argument("Hypergraph: r must be >= 1");
        if (n < 0) throw std::invalid_argument("Hypergraph: n must be >= 0");
        for (Edge& e : edges) {
            if (static_cast<int>(e.size()) != r)
                throw std::invalid_argument("Hypergraph: edge of size " +
                                            std::to_string(e.size()) + ", expected r=" +
                                            std::to_string(r));
            std::sort(e.begin(), e.end());
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 1 || e[i] > n)
                    throw std::invalid_argument("Hypergraph: vertex " + std::to_string(e[i]) +
                                                " outside [1," + std::to_string(n) + "]");
                if (i > 0 && e[i] == e[i - 1])
                    throw std::invalid_argument("Hypergraph: repeated vertex " +
                                                std::to_string(e[i]) + " in an edge");
            }
        }
        std::sort(edges.begin(), edges.end(), detail::colex_less);
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1])
                throw std::invalid_argument("Hypergraph: duplicate edge");
        Hypergraph g;
        g.r = r;
        g.n = n;
        g.edges = std::move(edges);
        return g;
    }

    /// K_t^{(r)}: all r-subsets of [t].
    static Hypergraph complete(int r, int t) {
        if (t < r) throw std::invalid_argument("complete: need t >= r");
        std::uint64_t m = binomial(static_cast<std::uint64_t>(t),
                                   static_cast<std::uint64_t>(r));
        std::vector<Edge> edges;
        edges.reserve(m);
        for (std::uint64_t idx = 0; idx < m; ++idx) edges.push_back(colex_unrank(idx, r));
        Hypergraph g;
        g.r = r;
        g.n = t;
        g.edges = std::move(edges);
        return g;
    }

    std::size_t edge_count() const { return edges.size(); }

    bool contains(const Edge& e) const {
        return std::binary_search(edges.begin(), edges.end(), e, detail::colex_less);
    }

    bool operator==(const Hypergraph&) const = default;
};

/// C_{r,m}: the first m r-sets in colex order. The vertex count is the
/// largest id that appears, i.e. the top of the last edge.
inline Hypergraph colex_initial_segment(int r, std::uint64_t m) {
    if (r < 1) throw std::invalid_argument("colex_initial_segment: r must be >= 1");
    if (m < 1) throw std::invalid_argument("colex_initial_segment: m must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t idx = 0; idx < m; ++idx) edges.push_back(colex_unrank(idx, r));
    Hypergraph g;
    g.r = r;
    g.n = edges.back().back();
    g.edges = std::move(edges);
    return g;
}

namespace detail {

inline std::vector<int> sorted_vertex_set(std::span<const int> s, int n,
                                          const char* who) {
    std::vector<int> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] < 1 || out[i] > n)
            throw std::invalid_argument(std::string(who) + ": vertex " +
                                        std::to_string(out[i]) + " outside [1," +
                                        std::to_string(n) + "]");
        if (i > 0 && out[i] == out[i - 1])
            throw std::invalid_argument(std::string(who) + ": repeated vertex " +
                                        std::to_string(out[i]));
    }
    return out;
}

}  // namespace detail

/// Link of a vertex set S (|S| < r): the (r-|S|)-graph with edges
/// {A : A union S in E(G)}. Vertex count is preserved.
inline Hypergraph link(const Hypergraph& g, std::span<const int> s) {
    std::vector<int> sv = detail::sorted_vertex_set(s, g.n, "link");
    if (static_cast<int>(sv.size()) >= g.r)
        throw std::invalid_argument("link: |S| = " + std::to_string(sv.size()) +
                                    " must be < r = " + std::to_string(g.r));
    std::vector<Edge> out;
    for (const Edge& e : g.edges) {
        if (std::includes(e.begin(), e.end(), sv.begin(), sv.end())) {
            Edge a;
            std::set_difference(e.begin(), e.end(), sv.begin(), sv.end(),
                                std::back_inserter(a));
            out.push_back(std::move(a));
        }
    }
    return Hypergraph::create(g.r - static_cast<int>(sv.size()), g.n, std::move(out));
}

inline Hypergraph link(const Hypergraph& g, std::initializer_list<int> s) {
    return link(g, std::span<const int>(s.begin(), s.size()));
}

/// Complement link: the (r-|S|)-graph with edges
/// {A subset of [n] \ S : A union S not in E(G)}.
inline Hypergraph complement_link(const Hypergraph& g, std::span<const int> s) {
    std::vector<int> sv = detail::sorted_vertex_set(s, g.n, "complement_link");
    int k = g.r - static_cast<int>(sv.size());
    if (k < 1)
        throw std::invalid_argument("complement_link: |S| = " + std::to_string(sv.size()) +
                                    " must be < r = " + std::to_string(g.r));
    std::vector<int> ground;
    for (int v = 1; v <= g.n; ++v)
        if (!std::binary_search(sv.begin(), sv.end(), v)) ground.push_back(v);
    std::vector<Edge> out;
    if (static_cast<int>(ground.size()) >= k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int from) {
            if (pos == pick.size()) {
                Edge full(pick.begin(), pick.end());
                full.insert(full.end(), sv.begin(), sv.end());
                std::sort(full.begin(), full.end());
                if (!g.contains(full)) out.emplace_back(pick.begin(), pick.end());
                return;
            }
            for (int i = from; i < static_cast<int>(ground.size()); ++i) {
                pick[pos] = ground[static_cast<std::size_t>(i)];
                rec(pos + 1, i + 1);
            }
        };
        rec(0, 0);
    }
    return Hypergraph::create(k, g.n, std::move(out));
}

inline Hypergraph complement_link(const Hypergraph& g, std::initializer_list<int> s) {
    return complement_link(g, std::span<const int>(s.begin(), s.size()));
}

/// E_{i\j}: members of E_i \ E_j that avoid j, as an (r-1)-graph.
inline Hypergraph link_difference(const Hypergraph& g, int i, int j) {
    if (i == j) throw std::invalid_argument("link_difference: i and j must differ");
    Hypergraph li = link(g, {i});
    Hypergraph lj = link(g, {j});
    std::vector<Edge> out;
    for (const Edge& a : li.edges) {
        if (std::binary_search(a.begin(), a.end(), j)) continue;
        if (!lj.contains(a)) out.push_back(a);
    }
    return Hypergraph::create(g.r - 1, g.n, std::move(out));
}

/// Removes vertex i and every edge through it; the remaining vertices are
/// relabeled onto [n-1] preserving order.
inline Hypergraph delete_vertex(const Hypergraph& g, int i) {
    if (i < 1 || i > g.n)
        throw std::invalid_argument("delete_vertex: vertex " + std::to_string(i) +
                                    " outside [1," + std::to_string(g.n) + "]");
    std::vector<Edge> out;
    for (const Edge& e : g.edges) {
        if (std::binary_search(e.begin(), e.end(), i)) continue;
        Edge f = e;
        for (int& v : f)
            if (v > i) --v;
        out.push_back(std::move(f));
    }
    return Hypergraph::create(g.r, g.n - 1, std::move(out));
}

struct PairCoverage {
    bool covers_all = true;
    std::optional<std::pair<int, int>> witness;  // colex-least uncovered pair
};

/// Does every 2-subset of [n] lie in some edge?
inline PairCoverage covers_pairs(const Hypergraph& g) {
    std::vector<char> covered(static_cast<std::size_t>(g.n) * g.n, 0);
    for (const Edge& e : g.edges)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                covered[static_cast<std::size_t>(e[i] - 1) * g.n + (e[j] - 1)] = 1;
    for (int b = 2; b <= g.n; ++b)
        for (int a = 1; a < b; ++a)
            if (!covered[static_cast<std::size_t>(a - 1) * g.n + (b - 1)])
                return {false, std::make_pair(a, b)};
    return {true, std::nullopt};
}

/// One compression step C_ij: every edge through j but not i slides to i
/// unless the slid edge is already present. Edge count is preserved.
inline Hypergraph compress_ij(const Hypergraph& g, int i, int j) {
    if (i >= j) throw std::invalid_argument("compress_ij: need i < j, got i=" +
                                            std::to_string(i) + " j=" + std::to_string(j));
    if (i < 1 || j > g.n)
        throw std::invalid_argument("compress_ij: vertices must lie in [1," +
                                    std::to_string(g.n) + "]");
    std::vector<Edge> out;
    out.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        bool has_j = std::binary_search(e.begin(), e.end(), j);
        bool has_i = std::binary_search(e.begin(), e.end(), i);
        if (has_j && !has_i) {
            Edge f = e;
            std::replace(f.begin(), f.end(), j, i);
            std::sort(f.begin(), f.end());
            out.push_back(g.contains(f) ? e : std::move(f));
        } else {
            out.push_back(e);
        }
    }
    return Hypergraph::create(g.r, g.n, std::move(out));
}

/// True iff C_ij(E) = E for every i < j.
inline bool is_left_compressed(const Hypergraph& g) {
    for (const Edge& e : g.edges) {
        for (int j : e) {
            for (int i = 1; i < j; ++i) {
                if (std::binary_search(e.begin(), e.end(), i)) continue;
                Edge f = e;
                std::replace(f.begin(), f.end(), j, i);
                std::sort(f.begin(), f.end());
                if (!g.contains(f)) return false;
            }
        }
    }
    return true;
}

/// Iterates compress_ij over all pairs until no step changes the edge set.
inline Hypergraph compress_full(const Hypergraph& g) {
    Hypergraph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i < cur.n; ++i) {
            for (int j = i + 1; j <= cur.n; ++j) {
                Hypergraph next = compress_ij(cur, i, j);
                if (next.edges != cur.edges) {
                    cur = std::move(next);
                    changed = true;
                }
            }
        }
    }
    return cur;
}

struct EnumerateOptions {
    bool cover_pairs = false;   // keep only graphs covering every pair of [t]
    bool full_support = false;  // keep only graphs using all t vertices
};

/// Enumerates every left-compressed m-edge r-graph with edges inside [t],
/// in a deterministic DFS order (the colex segment comes first). Left-
/// compressed families are exactly the down-sets of the componentwise
/// domination order on sorted r-tuples, so the walk decides elements in
/// colex order (a linear extension) and admits an element only once all of
/// its immediate predecessors are in. Returns the number of graphs yielded.
inline std::uint64_t enumerate_left_compressed(
    int r, std::uint64_t m, int t, const EnumerateOptions& opts,
    const std::function<void(const Hypergraph&)>& yield) {
    if (r < 1) throw std::invalid_argument("enumerate_left_compressed: r must be >= 1");
    if (t < r) throw std::invalid_argument("enumerate_left_compressed: t must be >= r");
    if (m < 1) throw std::invalid_argument("enumerate_left_compressed: m must be >= 1");
    std::uint64_t total = binomial(static_cast<std::uint64_t>(t),
                                   static_cast<std::uint64_t>(r));
    if (m > total) return 0;  // no candidates, not an error
    const std::size_t count = static_cast<std::size_t>(total);

    std::vector<Edge> elems(count);
    for (std::size_t idx = 0; idx < count; ++idx) elems[idx] = colex_unrank(idx, r);
    // immediate predecessors in the domination order (one coordinate lowered)
    std::vector<std::vector<std::uint32_t>> preds(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        for (int v : elems[idx]) {
            if (v - 1 < 1) continue;
            if (std::binary_search(elems[idx].begin(), elems[idx].end(), v - 1)) continue;
            Edge f = elems[idx];
            std::replace(f.begin(), f.end(), v, v - 1);
            std::sort(f.begin(), f.end());
            preds[idx].push_back(static_cast<std::uint32_t>(colex_rank(f)));
        }
    }

    std::vector<char> in(count, 0);
    std::uint64_t yielded = 0;
    auto emit = [&]() {
        std::vector<Edge> edges;
        edges.reserve(m);
        for (std::size_t idx = 0; idx < count; ++idx)
            if (in[idx]) edges.push_back(elems[idx]);
        Hypergraph g;
        g.r = r;
        g.n = t;
        g.edges = std::move(edges);
        if (opts.full_support) {
            std::vector<char> used(static_cast<std::size_t>(t) + 1, 0);
            for (const Edge& e : g.edges)
                for (int v : e) used[static_cast<std::size_t>(v)] = 1;
            for (int v = 1; v <= t; ++v)
                if (!used[static_cast<std::size_t>(v)]) return;
        }
        if (opts.cover_pairs && !covers_pairs(g).covers_all) return;
        ++yielded;
        yield(g);
    };

    std::function<void(std::size_t, std::uint64_t)> dfs = [&](std::size_t k,
                                                              std::uint64_t have) {
        if (have == m) {
            emit();
            return;
        }
        if (k == count || have + (count - k) < m) return;
        bool can_take = true;
        for (std::uint32_t p : preds[k])
            if (!in[p]) {
                can_take = false;
                break;
            }
        if (can_take) {
            in[k] = 1;
            dfs(k + 1, have + 1);
            in[k] = 0;
        }
        dfs(k + 1, have);
    };
    dfs(0, 0);
    return yielded;
}

/// Convenience wrapper collecting the stream into a vector.
inline std::vector<Hypergraph> left_compressed_family(int r, std::uint64_t m, int t,
                                                      const EnumerateOptions& opts = {}) {
    std::vector<Hypergraph> out;
    enumerate_left_compressed(r, m, t, opts,
                              [&](const Hypergraph& g) { out.push_back(g); });
    return out;
}

// ---------------------------------------------------------------------------
// Edge-list file format
//
//   line 1: "r n m"
//   next m lines: r vertex ids (1-based), single-space separated
//   lines beginning with '#' are ignored; a trailing newline is required;
//   edges are canonicalized on load.
// ---------------------------------------------------------------------------

inline Hypergraph read_edge_list(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (text.empty()) throw std::runtime_error("edge list: empty input");
    if (text.back() != '\n')
        throw std::runtime_error("edge list: missing trailing newline");
    std::istringstream lines(text);
    std::string line;
    int r = 0, n = 0;
    std::uint64_t m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream fields(line);
        if (!have_header) {
            long long rv, nv, mv;
            if (!(fields >> rv >> nv >> mv) || !(fields >> std::ws).eof())
                throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                         ": expected header 'r n m', got '" + line + "'");
            if (rv < 1 || nv < 0 || mv < 0)
                throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                         ": header values out of range in '" + line + "'");
            r = static_cast<int>(rv);
            n = static_cast<int>(nv);
            m = static_cast<std::uint64_t>(mv);
            have_header = true;
            continue;
        }
        Edge e;
        int v;
        while (fields >> v) e.push_back(v);
        if (!fields.eof())
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": non-integer token in '" + line + "'");
        if (e.empty()) {
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": blank line inside edge data");
        }
        if (static_cast<int>(e.size()) != r)
            throw std::runtime_error("edge list line " + std::to_string(lineno) + ": " +
                                     std::to_string(e.size()) + " ids, expected r=" +
                                     std::to_string(r));
        edges.push_back(std::move(e));
    }
    if (!have_header) throw std::runtime_error("edge list: no header line");
    if (edges.size() != m)
        throw std::runtime_error("edge list: header claims m=" + std::to_string(m) +
                                 " edges, file has " + std::to_string(edges.size()));
    try {
        return Hypergraph::create(r, n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("edge list: ") + e.what());
    }
}

inline void write_edge_list(std::ostream& out, const Hypergraph& g) {
    out << g.r << ' ' << g.n << ' ' << g.edges.size() << '\n';
    for (const Edge& e : g.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
}

}  // namespace hlag
