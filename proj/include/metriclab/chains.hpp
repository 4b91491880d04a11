#pragma once

// Threshold-graph connectivity at scale eps: shortest eps-chains, component
// decompositions, the chainability threshold (MST bottleneck), and
// bounded-length chainability to a finite anchor set.

#include <map>
#include <optional>
#include <queue>
#include <utility>

#include "metric_space.hpp"

namespace metriclab {

struct ChainCertificate {
    double eps = 0.0;
    std::vector<int> points;  // a_0 .. a_n with d(a_{i-1}, a_i) <= eps
    int length() const { return static_cast<int>(points.size()) - 1; }
};

// True iff the certificate is internally consistent against the space.
inline bool chain_valid(const FiniteMetricSpace& s, const ChainCertificate& c) {
    if (c.points.empty() || c.eps <= 0) return false;
    for (std::size_t i = 1; i < c.points.size(); ++i)
        if (s.d(c.points[i - 1], c.points[i]) > c.eps) return false;
    return true;
}

namespace detail {

// Level-synchronized BFS over the threshold graph d <= eps restricted to
// `allowed` (empty = all points). Each newly reached point records the
// smallest-index predecessor of the previous level, which pins down one
// deterministic shortest chain per point. Depth is capped by max_depth (<0 =
// unbounded). Returns (depth, parent) arrays, -1 where unreached.
struct BfsResult {
    std::vector<int> depth;
    std::vector<int> parent;
};

inline BfsResult threshold_bfs(const FiniteMetricSpace& s, const std::vector<int>& seeds, double eps,
                               const std::vector<char>& allowed, int max_depth) {
    const int n = s.n();
    BfsResult r{std::vector<int>(static_cast<std::size_t>(n), -1),
                std::vector<int>(static_cast<std::size_t>(n), -1)};
    std::vector<int> level;
    for (int v : seeds)
        if (r.depth[static_cast<std::size_t>(v)] < 0) {
            r.depth[static_cast<std::size_t>(v)] = 0;
            level.push_back(v);
        }
    std::sort(level.begin(), level.end());
    int depth = 0;
    while (!level.empty() && (max_depth < 0 || depth < max_depth)) {
        ++depth;
        std::vector<int> next;
        for (int j = 0; j < n; ++j) {
            if (r.depth[static_cast<std::size_t>(j)] >= 0) continue;
            if (!allowed.empty() && !allowed[static_cast<std::size_t>(j)]) continue;
            for (int i : level) {
                if (s.d(i, j) <= eps) {
                    r.depth[static_cast<std::size_t>(j)] = depth;
                    r.parent[static_cast<std::size_t>(j)] = i;
                    next.push_back(j);
                    break;  // level is ascending, so this is the smallest-index predecessor
                }
            }
        }
        level = std::move(next);
    }
    return r;
}

}  // namespace detail

inline std::optional<ChainCertificate> eps_chain(const FiniteMetricSpace& s, int x, int y, double eps) {
    detail::check_index(s, x);
    detail::check_index(s, y);
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    if (x == y) return ChainCertificate{eps, {x}};
    auto bfs = detail::threshold_bfs(s, {x}, eps, {}, -1);
    if (bfs.depth[static_cast<std::size_t>(y)] < 0) return std::nullopt;
    std::vector<int> rev;
    for (int v = y; v != -1; v = bfs.parent[static_cast<std::size_t>(v)]) rev.push_back(v);
    std::reverse(rev.begin(), rev.end());
    return ChainCertificate{eps, std::move(rev)};
}

// Partition into threshold-graph components; parts sorted internally and
// ordered by smallest member.
inline std::vector<PointSet> eps_components(const FiniteMetricSpace& s, double eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    const int n = s.n();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<PointSet> parts;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        auto bfs = detail::threshold_bfs(s, {i}, eps, {}, -1);
        PointSet part;
        for (int j = 0; j < n; ++j)
            if (bfs.depth[static_cast<std::size_t>(j)] >= 0) {
                part.push_back(j);
                seen[static_cast<std::size_t>(j)] = 1;
            }
        parts.push_back(std::move(part));
    }
    return parts;
}

// Least eps at which the space is one component: the bottleneck edge of a
// minimum spanning tree of the complete distance graph (Prim, O(n^2)).
// Always an exact matrix entry; 0 for singletons.
inline double chainability_threshold(const FiniteMetricSpace& s) {
    const int n = s.n();
    if (n <= 1) return 0.0;
    std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
    std::vector<double> best(static_cast<std::size_t>(n), kInf);
    in_tree[0] = 1;
    for (int j = 1; j < n; ++j) best[static_cast<std::size_t>(j)] = s.d(0, j);
    double bottleneck = 0.0;
    for (int round = 1; round < n; ++round) {
        int pick = -1;
        for (int j = 0; j < n; ++j)
            if (!in_tree[static_cast<std::size_t>(j)] &&
                (pick < 0 || best[static_cast<std::size_t>(j)] < best[static_cast<std::size_t>(pick)]))
                pick = j;
        bottleneck = std::max(bottleneck, best[static_cast<std::size_t>(pick)]);
        in_tree[static_cast<std::size_t>(pick)] = 1;
        for (int j = 0; j < n; ++j)
            if (!in_tree[static_cast<std::size_t>(j)])
                best[static_cast<std::size_t>(j)] = std::min(best[static_cast<std::size_t>(j)], s.d(pick, j));
    }
    return bottleneck;
}

struct ChainabilityProfile {
    double threshold = 0.0;
    std::map<double, std::vector<PointSet>> components_at;
};

inline ChainabilityProfile chainability_profile(const FiniteMetricSpace& s, const std::vector<double>& eps_list) {
    ChainabilityProfile p;
    p.threshold = chainability_threshold(s);
    for (double e : eps_list) p.components_at[e] = eps_components(s, e);
    return p;
}

enum class ChainThrough { whole_space, target_only };

struct FiniteChainabilityResult {
    bool ok = false;
    double eps = 0.0;
    int m = 0;
    PointSet centers;
    // point -> (assigned center, chain from the point ending at that center).
    // Chains shorter than m are valid as-is: stuttering zero-distance steps pad
    // any chain to length exactly m.
    std::map<int, std::pair<int, ChainCertificate>> assignment;
    std::optional<int> unreachable;  // smallest failing target point
};

inline FiniteChainabilityResult finite_chainability_check(const FiniteMetricSpace& s, const PointSet& target_raw,
                                                          double eps, int m, const PointSet& centers_raw,
                                                          ChainThrough through) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    if (m < 1) throw std::invalid_argument("chain length bound m must be >= 1");
    PointSet target = detail::normalized(s, target_raw);
    PointSet centers = detail::normalized(s, centers_raw);
    if (centers.empty()) throw std::invalid_argument("centers must be nonempty");
    if (target.empty()) throw std::invalid_argument("target must be nonempty");

    std::vector<char> allowed;
    if (through == ChainThrough::target_only) {
        allowed.assign(static_cast<std::size_t>(s.n()), 0);
        for (int v : target) allowed[static_cast<std::size_t>(v)] = 1;
        for (int v : centers) allowed[static_cast<std::size_t>(v)] = 1;
    }
    auto bfs = detail::threshold_bfs(s, centers, eps, allowed, m);

    FiniteChainabilityResult res;
    res.eps = eps;
    res.m = m;
    res.centers = centers;
    res.ok = true;
    for (int p : target) {
        if (bfs.depth[static_cast<std::size_t>(p)] < 0) {
            if (res.ok) res.unreachable = p;
            res.ok = false;
            continue;
        }
        std::vector<int> pts;
        for (int v = p; v != -1; v = bfs.parent[static_cast<std::size_t>(v)]) pts.push_back(v);
        int center = pts.back();
        res.assignment[p] = {center, ChainCertificate{eps, std::move(pts)}};
    }
    return res;
}

}  // namespace metriclab
