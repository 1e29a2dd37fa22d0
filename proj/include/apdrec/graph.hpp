#pragma once

// The immersed-graph data model: vertex coordinates with a simple undirected
// edge set, lower-star filter values, and a seeded random generator producing
// general-position instances.

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apdrec/geometry.hpp"

namespace apdrec {

struct ParseError : Error {
    using Error::Error;
};

struct GpViolationError : Error {
    GpReport report;
    GpViolationError(std::string msg, GpReport r) : Error(std::move(msg)), report(std::move(r)) {}
};

struct GenerationFailureError : Error {
    using Error::Error;
};

// A graph immersed in R^d: index-identified vertices plus a simple undirected
// edge set stored as lexicographically sorted (i, j) pairs with i < j.
// Treated as immutable once built.
struct ImmersedGraph {
    int dimension = 0;
    std::vector<Point> vertices;
    std::vector<std::pair<int, int>> edges;

    int n() const { return static_cast<int>(vertices.size()); }
    int m() const { return static_cast<int>(edges.size()); }

    // Structural invariants: simple graph, in-range indices, consistent dimension.
    void validate_structure() const {
        if (dimension < 2) throw ParseError("graph dimension must be at least 2");
        for (const Point& p : vertices) {
            if (p.dim() != dimension) throw ParseError("vertex dimension mismatch");
        }
        for (const auto& [i, j] : edges) {
            if (i == j) throw ParseError("self-loop edge");
            if (i < 0 || j < 0 || i >= n() || j >= n()) throw ParseError("edge index out of range");
            if (i > j) throw ParseError("edge endpoints must be ordered i < j");
        }
        for (size_t k = 0; k + 1 < edges.size(); ++k) {
            if (edges[k] == edges[k + 1]) throw ParseError("duplicate edge");
            if (edges[k] > edges[k + 1]) throw ParseError("edges must be sorted");
        }
    }
};

inline std::vector<std::pair<int, int>> normalize_edges(std::vector<std::pair<int, int>> edges) {
    for (auto& [i, j] : edges)
        if (i > j) std::swap(i, j);
    std::sort(edges.begin(), edges.end());
    return edges;
}

// A simplex of the filtration: a vertex (dim 0, index u) or an edge (dim 1, u < v).
struct Simplex {
    int dim = 0;
    int u = -1;
    int v = -1;

    friend bool operator==(const Simplex&, const Simplex&) = default;
};

// A simplex together with its lower-star height: s.v for a vertex, the max of
// the endpoint heights for an edge.
struct FilterValue {
    Simplex simplex;
    double height = 0.0;
};

// All filter values of the lower-star filtration in direction s, sorted
// ascending by height with vertices preceding cofacing edges at equal height
// and index order breaking the remaining ties.
inline std::vector<FilterValue> lower_star_heights(const ImmersedGraph& g, const Direction& s) {
    std::vector<FilterValue> out;
    out.reserve(static_cast<size_t>(g.n() + g.m()));
    std::vector<double> vh(static_cast<size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) {
        vh[static_cast<size_t>(i)] = dot(s, g.vertices[static_cast<size_t>(i)]);
        out.push_back({Simplex{0, i, -1}, vh[static_cast<size_t>(i)]});
    }
    for (const auto& [i, j] : g.edges) {
        const double h = std::max(vh[static_cast<size_t>(i)], vh[static_cast<size_t>(j)]);
        out.push_back({Simplex{1, i, j}, h});
    }
    std::sort(out.begin(), out.end(), [](const FilterValue& a, const FilterValue& b) {
        if (a.height != b.height) return a.height < b.height;
        if (a.simplex.dim != b.simplex.dim) return a.simplex.dim < b.simplex.dim;
        if (a.simplex.u != b.simplex.u) return a.simplex.u < b.simplex.u;
        return a.simplex.v < b.simplex.v;
    });
    return out;
}

namespace detail {

// Reproducible uniform double in [0, 1); avoids the library distribution,
// whose output is implementation-defined.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Vertex indices that participate in any general-position violation, under
// the generator tolerances: heights along every axis and projected
// collinearity at `coarse`, affine independence at `fine` (the coarse bound is
// unsatisfiable for affine volumes at the corpus sizes this library targets).
inline std::vector<int> gp_offenders(std::span<const Point> pts, double coarse, double fine) {
    const int n = static_cast<int>(pts.size());
    const int d = pts[0].dim();
    std::vector<char> bad(static_cast<size_t>(n), 0);
    bool any = false;

    const GpReport report = check_general_position(pts, GpTolerances{fine, coarse, coarse});
    if (!report.all_ok()) {
        any = true;
        for (const auto& tuple : report.witnesses)
            for (int i : tuple) bad[static_cast<size_t>(i)] = 1;
    }

    // Stricter requirement for vertex reconstruction: unique heights along
    // every coordinate axis, not just e2.
    std::vector<int> order(static_cast<size_t>(n));
    for (int axis = 0; axis < d; ++axis) {
        if (axis == 1) continue;  // e2 already covered above
        for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return pts[static_cast<size_t>(a)].coords[static_cast<size_t>(axis)] <
                   pts[static_cast<size_t>(b)].coords[static_cast<size_t>(axis)];
        });
        for (int i = 0; i + 1 < n; ++i) {
            const int a = order[static_cast<size_t>(i)], b = order[static_cast<size_t>(i + 1)];
            if (pts[static_cast<size_t>(b)].coords[static_cast<size_t>(axis)] -
                    pts[static_cast<size_t>(a)].coords[static_cast<size_t>(axis)] <=
                coarse) {
                bad[static_cast<size_t>(a)] = bad[static_cast<size_t>(b)] = 1;
                any = true;
            }
        }
    }

    std::vector<int> out;
    if (!any) return out;
    for (int i = 0; i < n; ++i)
        if (bad[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

}  // namespace detail

// Deterministic random GP instance: n vertices uniform in [0,1]^d, resampled
// until the general-position checks pass, and m edges drawn uniformly without
// replacement.
inline ImmersedGraph generate_gp_graph(int n, int m, int d, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (d < 2) throw std::invalid_argument("dimension must be at least 2");
    const long max_edges = static_cast<long>(n) * (n - 1) / 2;
    if (m < 0 || static_cast<long>(m) > max_edges)
        throw std::invalid_argument("edge count exceeds n(n-1)/2");

    constexpr double kCoarseTol = 1e-6;
    constexpr double kAffineTol = 1e-9;
    constexpr int kMaxRounds = 500;

    std::mt19937_64 rng(seed);
    auto sample_point = [&] {
        std::vector<double> c(static_cast<size_t>(d));
        for (double& x : c) x = detail::uniform01(rng);
        return Point(std::move(c));
    };

    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(sample_point());

    bool ok = false;
    for (int round = 0; round < kMaxRounds; ++round) {
        const auto offenders = detail::gp_offenders(pts, kCoarseTol, kAffineTol);
        if (offenders.empty()) {
            ok = true;
            break;
        }
        for (int i : offenders) pts[static_cast<size_t>(i)] = sample_point();
    }
    if (!ok)
        throw GenerationFailureError(
            "could not reach general position; n too large for the tolerance at this dimension");

    // Partial Fisher-Yates pick of m edge slots among all n(n-1)/2 pairs.
    std::vector<std::pair<int, int>> all;
    all.reserve(static_cast<size_t>(max_edges));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    std::vector<std::pair<int, int>> chosen;
    chosen.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        const size_t pick = static_cast<size_t>(k) +
                            static_cast<size_t>(detail::uniform01(rng) *
                                                static_cast<double>(all.size() - static_cast<size_t>(k)));
        std::swap(all[static_cast<size_t>(k)], all[pick]);
        chosen.push_back(all[static_cast<size_t>(k)]);
    }
    std::sort(chosen.begin(), chosen.end());

    ImmersedGraph g{d, std::move(pts), std::move(chosen)};
    g.validate_structure();
    return g;
}

}  // namespace apdrec
