#pragma once

// Tolerance-parameterized convexity checkers: distance-spectrum gaps
// (achievable radii from a basepoint), closed-ball intersection coverage of
// the radius interval for every pair, and additive between-point existence.

#include <numeric>
#include <thread>

#include "metric_space.hpp"

namespace metriclab {

struct SpectrumReport {
    int basepoint = 0;
    std::vector<double> sorted_distances;  // all d(basepoint, .) ascending, self 0 included
    double sup = 0.0;
    double max_gap = 0.0;
    std::pair<double, double> gap_location{0.0, 0.0};
};

inline SpectrumReport spectrum(const FiniteMetricSpace& s, int x) {
    detail::check_index(s, x);
    SpectrumReport r;
    r.basepoint = x;
    r.sorted_distances.reserve(static_cast<std::size_t>(s.n()));
    for (int j = 0; j < s.n(); ++j) r.sorted_distances.push_back(s.d(x, j));
    std::sort(r.sorted_distances.begin(), r.sorted_distances.end());
    r.sup = r.sorted_distances.back();
    for (std::size_t i = 1; i < r.sorted_distances.size(); ++i) {
        double gap = r.sorted_distances[i] - r.sorted_distances[i - 1];
        if (gap > r.max_gap) {
            r.max_gap = gap;
            r.gap_location = {r.sorted_distances[i - 1], r.sorted_distances[i]};
        }
    }
    return r;
}

struct ConvexityViolation {
    std::vector<int> points;  // basepoint, or the pair (x, y)
    double value = 0.0;       // unachievable radius r, uncovered r, or minimum defect
};

struct ConvexityReport {
    std::string kind;
    double tol = 0.0;
    bool holds = false;
    std::vector<ConvexityViolation> violations;  // sorted lexicographically by points
};

// Every radius in [0, sup) from every basepoint must be within tol of an
// achieved distance, which on a finite carrier is exactly: no spectrum gap
// below (or reaching) the sup exceeds 2*tol. Violations carry the midpoints
// of the offending gaps.
inline ConvexityReport property_p_check(const FiniteMetricSpace& s, double tol) {
    if (tol < 0) throw std::invalid_argument("tol must be nonnegative");
    ConvexityReport rep;
    rep.kind = "property-P";
    rep.tol = tol;
    for (int x = 0; x < s.n(); ++x) {
        auto spec = spectrum(s, x);
        for (std::size_t i = 1; i < spec.sorted_distances.size(); ++i) {
            double lo = spec.sorted_distances[i - 1];
            double hi = spec.sorted_distances[i];
            if (hi - lo > 2 * tol) rep.violations.push_back({{x}, (lo + hi) / 2});
        }
    }
    rep.holds = rep.violations.empty();
    return rep;
}

namespace detail {

// Coverage sweep for one pair: z certifies radius r iff d(x,z) <= r + tol and
// d(y,z) <= d(x,y) - r + tol, i.e. r in the closed interval
// [d(x,z) - tol, d(x,y) - d(y,z) + tol]. With z pre-sorted by d(x,z) the
// union either reaches d(x,y) or stops at an uncovered open gap; returns the
// midpoint of the first gap, or nullopt when [0, d(x,y)] is covered.
inline std::optional<double> menger_gap(const FiniteMetricSpace& s, int x, int y, double tol,
                                        const std::vector<int>& by_dist_from_x) {
    const double dxy = s.d(x, y);
    double reach = -kInf;
    double cursor = 0.0;
    std::size_t j = 0;
    while (true) {
        while (j < by_dist_from_x.size()) {
            int z = by_dist_from_x[j];
            if (s.d(x, z) - tol > cursor) break;
            reach = std::max(reach, dxy - s.d(y, z) + tol);
            ++j;
        }
        if (reach >= dxy) return std::nullopt;
        if (reach <= cursor) {
            double next_left = j < by_dist_from_x.size() ? s.d(x, by_dist_from_x[j]) - tol : dxy;
            double lo = std::max(reach, cursor);
            return (lo + std::min(next_left, dxy)) / 2;
        }
        cursor = reach;
    }
}

}  // namespace detail

// For each pair (x, y) the closed balls B[x, r] and B[y, d(x,y) - r] must
// intersect for every r in [0, d(x,y)], up to tol. The sweep is exact
// interval arithmetic, not a grid. Work is split over basepoints when
// threads > 1; the report is identical for any thread count.
inline ConvexityReport menger_check(const FiniteMetricSpace& s, double tol, int threads = 1) {
    if (tol < 0) throw std::invalid_argument("tol must be nonnegative");
    const int n = s.n();
    threads = std::max(1, std::min(threads, n));
    std::vector<std::vector<ConvexityViolation>> per_x(static_cast<std::size_t>(n));

    auto run_range = [&](int x_begin, int x_end) {
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int x = x_begin; x < x_end; ++x) {
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return s.d(x, a) < s.d(x, b); });
            for (int y = x + 1; y < n; ++y)
                if (auto gap = detail::menger_gap(s, x, y, tol, order))
                    per_x[static_cast<std::size_t>(x)].push_back({{x, y}, *gap});
        }
    };
    if (threads == 1) {
        run_range(0, n);
    } else {
        std::vector<std::thread> pool;
        int chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int b = t * chunk, e = std::min(n, (t + 1) * chunk);
            if (b < e) pool.emplace_back(run_range, b, e);
        }
        for (auto& th : pool) th.join();
    }

    ConvexityReport rep;
    rep.kind = "menger";
    rep.tol = tol;
    for (auto& v : per_x) rep.violations.insert(rep.violations.end(), v.begin(), v.end());
    rep.holds = rep.violations.empty();
    return rep;
}

// Every pair x != y needs a strict between-point z outside {x, y} with
// |d(x,z) + d(z,y) - d(x,y)| <= tol. Violations carry the minimum defect
// found (+infinity when no candidate z exists at all, e.g. two-point spaces).
inline ConvexityReport metric_convexity_check(const FiniteMetricSpace& s, double tol) {
    if (tol < 0) throw std::invalid_argument("tol must be nonnegative");
    ConvexityReport rep;
    rep.kind = "metric-convex";
    rep.tol = tol;
    const int n = s.n();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            double best = kInf;
            for (int z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                best = std::min(best, std::abs(s.d(x, z) + s.d(z, y) - s.d(x, y)));
            }
            if (!(best <= tol)) rep.violations.push_back({{x, y}, best});
        }
    rep.holds = rep.violations.empty();
    return rep;
}

}  // namespace metriclab
