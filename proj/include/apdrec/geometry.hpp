#pragma once

// Points, directions and planar angle arithmetic for graphs immersed in R^d,
// plus the general-position checks and the tilt/basis construction that make
// directional height queries unambiguous.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apdrec {

inline constexpr double kDefaultEps = 1e-9;
inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kAngleTol = 1e-12;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroProjectionError : Error {
    using Error::Error;
};
struct TiedAngleError : Error {
    using Error::Error;
};
struct DegenerateInputError : Error {
    using Error::Error;
};
struct DependentDirectionsError : Error {
    using Error::Error;
};

// A point of R^d, d >= 2, all coordinates finite.
struct Point {
    std::vector<double> coords;

    Point() = default;
    explicit Point(std::vector<double> c) : coords(std::move(c)) { validate(); }
    Point(std::initializer_list<double> c) : coords(c) { validate(); }

    int dim() const { return static_cast<int>(coords.size()); }
    double operator[](int i) const { return coords[static_cast<size_t>(i)]; }

    void validate() const {
        if (coords.size() < 2)
            throw DegenerateInputError("point needs at least 2 coordinates");
        for (double c : coords)
            if (!std::isfinite(c)) throw DegenerateInputError("point coordinate not finite");
    }

    friend bool operator==(const Point&, const Point&) = default;
};

// A unit vector of R^d (Euclidean norm within 1e-12 of 1).
struct Direction {
    std::vector<double> coords;

    explicit Direction(std::vector<double> c) : coords(std::move(c)) {
        if (coords.size() < 2)
            throw DegenerateInputError("direction needs at least 2 coordinates");
        double n2 = 0.0;
        for (double v : coords) n2 += v * v;
        if (std::abs(std::sqrt(n2) - 1.0) > kUnitNormTol)
            throw DegenerateInputError("direction is not a unit vector");
    }

    // Scales an arbitrary nonzero vector onto the unit sphere.
    static Direction normalized(std::vector<double> c) {
        double n2 = 0.0;
        for (double v : c) n2 += v * v;
        if (n2 == 0.0) throw DegenerateInputError("cannot normalize the zero vector");
        const double inv = 1.0 / std::sqrt(n2);
        for (double& v : c) v *= inv;
        // One Newton touch-up keeps the norm within the unit tolerance.
        double m2 = 0.0;
        for (double v : c) m2 += v * v;
        const double fix = 1.0 / std::sqrt(m2);
        for (double& v : c) v *= fix;
        return Direction(std::move(c));
    }

    // The i-th standard basis vector of R^d (0-based axis index).
    static Direction axis(int i, int d, double sign = 1.0) {
        std::vector<double> c(static_cast<size_t>(d), 0.0);
        c[static_cast<size_t>(i)] = sign;
        return Direction(std::move(c));
    }

    // A direction in the (e1,e2)-plane at the given planar angle, zero-padded to R^d.
    static Direction planar(double radians, int d) {
        std::vector<double> c(static_cast<size_t>(d), 0.0);
        c[0] = std::cos(radians);
        c[1] = std::sin(radians);
        return Direction(std::move(c));
    }

    int dim() const { return static_cast<int>(coords.size()); }
    double operator[](int i) const { return coords[static_cast<size_t>(i)]; }

    Direction operator-() const {
        std::vector<double> c(coords);
        for (double& v : c) v = -v;
        return Direction(std::move(c));
    }

    friend bool operator==(const Direction&, const Direction&) = default;
};

inline double dot(const Direction& s, const Point& p) {
    double acc = 0.0;
    for (size_t i = 0; i < s.coords.size(); ++i) acc += s.coords[i] * p.coords[i];
    return acc;
}

inline double dot(const Direction& a, const Direction& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.coords.size(); ++i) acc += a.coords[i] * b.coords[i];
    return acc;
}

// Angle in radians against the positive e1 axis after projection, in [0, 2*pi).
struct Angle {
    double radians = 0.0;

    friend auto operator<=>(const Angle&, const Angle&) = default;
};

inline Angle normalize_angle(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return Angle{r};
}

// Orthogonal projection onto the plane of the first two coordinates.
inline std::array<double, 2> project_xy(const Point& p) {
    return {p.coords[0], p.coords[1]};
}

// Angle of the projected vector (dx, dy) with the positive e1 axis, in [0, 2*pi).
inline Angle planar_angle(double dx, double dy) {
    if (dx == 0.0 && dy == 0.0)
        throw ZeroProjectionError("vector projects to the origin; projected points coincide");
    double a = std::atan2(dy, dx);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return Angle{a};
}

inline Angle planar_angle(const Point& from, const Point& to) {
    return planar_angle(to.coords[0] - from.coords[0], to.coords[1] - from.coords[1]);
}

// Report of the three general-position conditions: affine independence of all
// (d+1)-subsets, no collinear projected triple, pairwise-distinct e2 heights.
struct GpReport {
    bool affine_ok = true;
    bool projection_ok = true;
    bool unique_height_ok = true;
    std::vector<std::vector<int>> witnesses;

    bool all_ok() const { return affine_ok && projection_ok && unique_height_ok; }
};

// Per-condition tolerances; the single-eps overload sets all three equal.
struct GpTolerances {
    double affine = kDefaultEps;
    double projection = kDefaultEps;
    double height = kDefaultEps;
};

namespace detail {

// |det| of the d x d matrix whose rows are pts[sub[1..d]] - pts[sub[0]],
// by Gaussian elimination with partial pivoting.
inline double affine_volume(std::span<const Point> pts, std::span<const int> sub) {
    const size_t d = static_cast<size_t>(pts[0].dim());
    std::vector<double> m(d * d);
    for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c)
            m[r * d + c] = pts[static_cast<size_t>(sub[r + 1])].coords[c] -
                           pts[static_cast<size_t>(sub[0])].coords[c];
    double det = 1.0;
    for (size_t col = 0; col < d; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < d; ++r)
            if (std::abs(m[r * d + col]) > std::abs(m[piv * d + col])) piv = r;
        if (m[piv * d + col] == 0.0) return 0.0;
        if (piv != col)
            for (size_t c = col; c < d; ++c) std::swap(m[piv * d + c], m[col * d + c]);
        det *= m[col * d + col];
        for (size_t r = col + 1; r < d; ++r) {
            const double f = m[r * d + col] / m[col * d + col];
            for (size_t c = col; c < d; ++c) m[r * d + c] -= f * m[col * d + c];
        }
    }
    return std::abs(det);
}

// Twice the area of the projected triangle (a, b, c).
inline double projected_triangle_area2(const Point& a, const Point& b, const Point& c) {
    const double ux = b.coords[0] - a.coords[0], uy = b.coords[1] - a.coords[1];
    const double vx = c.coords[0] - a.coords[0], vy = c.coords[1] - a.coords[1];
    return std::abs(ux * vy - uy * vx);
}

// Visits all k-subsets of {0..n-1} until the callback returns false.
template <typename F>
inline void for_each_subset(int n, int k, F&& f) {
    if (k > n) return;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        if (!f(std::span<const int>(idx))) return;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

inline constexpr size_t kMaxWitnesses = 256;

}  // namespace detail

// Validates the three general-position conditions on a vertex set.
// Returns a report rather than throwing; witnesses list offending index tuples.
inline GpReport check_general_position(std::span<const Point> pts, const GpTolerances& tol) {
    if (pts.empty()) throw DegenerateInputError("empty point set");
    const int n = static_cast<int>(pts.size());
    const int d = pts[0].dim();
    for (const Point& p : pts)
        if (p.dim() != d) throw DegenerateInputError("mixed point dimensions");

    GpReport report;

    detail::for_each_subset(n, d + 1, [&](std::span<const int> sub) {
        if (detail::affine_volume(pts, sub) <= tol.affine) {
            report.affine_ok = false;
            report.witnesses.emplace_back(sub.begin(), sub.end());
        }
        return report.witnesses.size() < detail::kMaxWitnesses;
    });

    detail::for_each_subset(n, 3, [&](std::span<const int> sub) {
        const auto& a = pts[static_cast<size_t>(sub[0])];
        const auto& b = pts[static_cast<size_t>(sub[1])];
        const auto& c = pts[static_cast<size_t>(sub[2])];
        if (detail::projected_triangle_area2(a, b, c) <= tol.projection) {
            report.projection_ok = false;
            report.witnesses.emplace_back(sub.begin(), sub.end());
        }
        return report.witnesses.size() < 2 * detail::kMaxWitnesses;
    });

    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pts[static_cast<size_t>(a)].coords[1] < pts[static_cast<size_t>(b)].coords[1]; });
    for (int i = 0; i + 1 < n; ++i) {
        const int a = order[static_cast<size_t>(i)], b = order[static_cast<size_t>(i + 1)];
        if (pts[static_cast<size_t>(b)].coords[1] - pts[static_cast<size_t>(a)].coords[1] <= tol.height) {
            report.unique_height_ok = false;
            report.witnesses.push_back({std::min(a, b), std::max(a, b)});
        }
    }
    return report;
}

inline GpReport check_general_position(std::span<const Point> pts, double eps = kDefaultEps) {
    return check_general_position(pts, GpTolerances{eps, eps, eps});
}

// Minimum apex angle over all ordered vertex triples, found per apex from the
// cyclic gaps of the sorted directions (adjacent pairs realize the minimum).
inline Angle min_triple_angle(std::span<const Point> pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 3) throw DegenerateInputError("need at least 3 points for a triple angle");
    double best = kTwoPi;
    std::vector<double> angles;
    angles.reserve(static_cast<size_t>(n) - 1);
    for (int v = 0; v < n; ++v) {
        angles.clear();
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            angles.push_back(planar_angle(pts[static_cast<size_t>(v)], pts[static_cast<size_t>(u)]).radians);
        }
        std::sort(angles.begin(), angles.end());
        for (size_t i = 0; i < angles.size(); ++i) {
            const double next = (i + 1 < angles.size()) ? angles[i + 1] : angles[0] + kTwoPi;
            const double gap = next - angles[i];
            best = std::min(best, std::min(gap, kTwoPi - gap));
        }
    }
    return Angle{best};
}

// Indices of `candidates`, sorted clockwise around `center` (strictly
// decreasing planar angle, largest angle first).
inline std::vector<int> radial_cw_order(const Point& center, std::span<const Point> pts,
                                        std::span<const int> candidates,
                                        double angle_tol = kAngleTol) {
    std::vector<std::pair<double, int>> keyed;
    keyed.reserve(candidates.size());
    for (int c : candidates)
        keyed.emplace_back(planar_angle(center, pts[static_cast<size_t>(c)]).radians, c);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (size_t i = 0; i + 1 < keyed.size(); ++i)
        if (keyed[i].first - keyed[i + 1].first <= angle_tol)
            throw TiedAngleError("two candidates share the planar angle about the center");
    std::vector<int> order;
    order.reserve(keyed.size());
    for (const auto& [a, c] : keyed) order.push_back(c);
    return order;
}

inline std::vector<Point> radial_cw_order(const Point& center, std::span<const Point> candidates,
                                          double angle_tol = kAngleTol) {
    std::vector<int> idx(candidates.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    const auto order = radial_cw_order(center, candidates, idx, angle_tol);
    std::vector<Point> out;
    out.reserve(order.size());
    for (int i : order) out.push_back(candidates[static_cast<size_t>(i)]);
    return out;
}

// Tilts `primary` toward `secondary` just enough that, over P,
//   (i)  strict primary-order is preserved,
//   (ii) primary-ties are broken by strict secondary-order,
//   (iii) joint ties remain ties.
// The returned direction is normalize(primary + lambda*secondary) with
// lambda = g / (2W), g the minimum positive gap between distinct primary
// heights and W the secondary height spread (lambda = 1 when degenerate).
inline Direction tilt(const Direction& primary, const Direction& secondary,
                      std::span<const Point> pts) {
    if (std::abs(dot(primary, secondary)) >= 1.0 - kUnitNormTol)
        throw DependentDirectionsError("tilt requires linearly independent directions");

    double min_gap = 0.0;
    bool has_gap = false;
    {
        std::vector<double> h;
        h.reserve(pts.size());
        for (const Point& p : pts) h.push_back(dot(primary, p));
        std::sort(h.begin(), h.end());
        for (size_t i = 0; i + 1 < h.size(); ++i) {
            const double gap = h[i + 1] - h[i];
            if (gap > 0.0 && (!has_gap || gap < min_gap)) {
                min_gap = gap;
                has_gap = true;
            }
        }
    }
    double spread = 0.0;
    if (!pts.empty()) {
        double lo = dot(secondary, pts[0]), hi = lo;
        for (const Point& p : pts) {
            const double h = dot(secondary, p);
            lo = std::min(lo, h);
            hi = std::max(hi, h);
        }
        spread = hi - lo;
    }
    const double lambda = (has_gap && spread > 0.0) ? min_gap / (2.0 * spread) : 1.0;

    std::vector<double> c(primary.coords);
    for (size_t i = 0; i < c.size(); ++i) c[i] += lambda * secondary.coords[i];
    return Direction::normalized(std::move(c));
}

// Orthonormal basis {b1, b2, e3, ..., ed} where b2 = tilt(e1, e2, P) gives all
// points of P pairwise-distinct heights and b1 completes the (e1,e2)-plane by
// the two-coordinate Gram-Schmidt step.
inline std::vector<Direction> build_basis(std::span<const Point> pts) {
    if (pts.empty()) throw DegenerateInputError("empty point set");
    const int d = pts[0].dim();
    const Direction b2 = tilt(Direction::axis(0, d), Direction::axis(1, d), pts);

    const double bx = b2.coords[0], by = b2.coords[1];
    const double scale = bx / (bx * bx + by * by);
    std::vector<double> b1c(static_cast<size_t>(d), 0.0);
    b1c[0] = 1.0 - scale * bx;
    b1c[1] = -scale * by;
    const Direction b1 = Direction::normalized(std::move(b1c));

    std::vector<Direction> basis;
    basis.reserve(static_cast<size_t>(d));
    basis.push_back(b1);
    basis.push_back(b2);
    for (int i = 2; i < d; ++i) basis.push_back(Direction::axis(i, d));
    return basis;
}

}  // namespace apdrec
